"""Predict connectivity, isolated vertices and diameter bounds of Sigma(G) from structure alone.

Nothing here builds Sigma(G).  The decision procedure, in order:

1. cyclic                          -> disconnected
2. p-group                         -> disconnected
3. non-soluble                     -> connected, diameter <= 5
4. soluble, derived subgroup not nilpotent -> connected, diameter <= 3
5. otherwise decompose G/Frat(G) = (V_1 x ... x V_t) x| H:
   H = C_p with t >= 1                          -> disconnected (Case3)
   H = C_p x C_p, t >= 1, C_H(V_1...V_t) = C_p  -> disconnected (Case4)
   anything else                                -> connected, diameter <= 3
   (<= 2 when H = C_p x C_p acts faithfully, exact when G is nilpotent)
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groups import (
    DEFAULT_LIMITS,
    BoundExceeded,
    GroupTable,
    Limits,
    NotTwoGeneratedError,
    PreconditionError,
    Subgroup,
    all_subgroups,
    center,
    centralizer,
    derived_subgroup,
    frattini,
    h_module_isomorphic,
    is_cyclic,
    is_elementary_abelian,
    is_nilpotent,
    is_normal,
    is_p_group,
    is_prime,
    is_soluble,
    is_two_generated,
    maximal_subgroups,
    minimal_normal_subgroups,
    prime_factors,
    quotient,
    subgroup_closure,
    subgroup_is_abelian,
    subgroup_is_cyclic,
    subgroup_table,
    sylow_subgroup,
    conjugate_subgroup,
)

CASE_TAGS = ("Cyclic", "PGroup", "Case3", "Case4",
             "ConnectedNilpotent", "ConnectedSoluble", "Connected", "Inconclusive")
DISCONNECTED_TAGS = ("Cyclic", "PGroup", "Case3", "Case4")
ISOLATION_TAGS = ("CyclicGenerators", "KleinFour", "DihedralP", "None")


@dataclass
class FrattiniQuotientDecomposition:
    """Q = W x| H with W the product of the non-central minimal normal subgroups V_j."""

    Q: GroupTable
    W: Subgroup
    H: Subgroup
    V_list: list[Subgroup]
    kernels: list[Subgroup]  # C_H(V_j)
    central: list[Subgroup] = field(default_factory=list)

    @property
    def t(self) -> int:
        return len(self.V_list)

    def centralizer_of_W(self) -> Subgroup:
        return centralizer(self.Q, self.W).intersection(self.H)

    def check(self) -> None:
        """Re-verify every structural claim from scratch."""
        Q, W, H = self.Q, self.W, self.H
        if (W.bits & H.bits) != 1 << Q.identity:
            raise AssertionError("W and H intersect nontrivially")
        if W.order * H.order != Q.order:
            raise AssertionError("WH is not the whole group")
        prod = 1
        for V in self.V_list:
            prod *= V.order
            if not is_normal(Q, V) or V.is_trivial():
                raise AssertionError("V_j is not a nontrivial normal subgroup")
            if V.issubset(center(Q)):
                raise AssertionError("V_j is central")
            if is_elementary_abelian(V) is None:
                raise AssertionError("V_j is not elementary abelian")
        if prod != W.order:
            raise AssertionError("W is not the direct product of the V_j")
        seeds = [g for V in self.V_list for g in V.generators()]
        if subgroup_closure(Q, seeds) != W:
            raise AssertionError("W is not generated by the V_j")
        if not subgroup_is_abelian(H):
            raise AssertionError("H is not abelian")
        mins = {N.bits for N in minimal_normal_subgroups(Q)}
        if not all(V.bits in mins for V in self.V_list):
            raise AssertionError("some V_j is not minimal normal")


@dataclass
class Refusal:
    reason: str

    def __bool__(self) -> bool:
        return False


@dataclass
class Verdict:
    case: str
    predicted_connected: bool | None
    predicted_diameter_bound: int | None = None
    diameter_exact: bool = False
    p: int | None = None
    t: int | None = None
    isolated_reason: str = "None"
    flags: list[str] = field(default_factory=list)
    evidence: FrattiniQuotientDecomposition | None = None
    note: str = ""

    @property
    def predicted_isolated(self) -> bool:
        return self.isolated_reason != "None"

    @property
    def inconclusive(self) -> bool:
        return self.case == "Inconclusive"

    def to_json(self) -> dict:
        out = {
            "case": self.case,
            "p": self.p,
            "t": self.t,
            "predicted_connected": self.predicted_connected,
            "predicted_diameter_bound": self.predicted_diameter_bound,
            "diameter_exact": self.diameter_exact,
            "predicted_isolated": self.predicted_isolated,
            "isolated_reason": self.isolated_reason,
            "flags": list(self.flags),
            "note": self.note,
            "evidence": None,
        }
        ev = self.evidence
        if ev is not None:
            out["evidence"] = {
                "frattini_quotient_order": ev.Q.order,
                "W": ev.W.members,
                "H": ev.H.members,
                "V": [V.members for V in ev.V_list],
                "C_H_V": [K.members for K in ev.kernels],
                "central_minimal_normals": [N.members for N in ev.central],
            }
        return out


def _require_analysable(G: GroupTable) -> None:
    if G.order == 1:
        raise PreconditionError("the trivial group is not a valid input")
    if not is_two_generated(G):
        raise NotTwoGeneratedError(f"group of order {G.order} is not 2-generated")


def decompose_frattini_quotient(Q: GroupTable, limits: Limits = DEFAULT_LIMITS,
                                reverse_complements: bool = False) -> FrattiniQuotientDecomposition | Refusal:
    """Split a Frattini-free Q as (V_1 x ... x V_t) x| H with H abelian and the V_j
    pairwise non-isomorphic, or say why that is impossible.

    ``reverse_complements`` takes the last complement found instead of the
    first; the outcome must not depend on it.
    """
    if not frattini(Q, limits).is_trivial():
        raise PreconditionError("Q must have trivial Frattini subgroup")
    Z = center(Q)
    mins = minimal_normal_subgroups(Q)
    central = [N for N in mins if N.issubset(Z)]
    noncentral = [N for N in mins if not N.issubset(Z)]
    for N in noncentral:
        if is_elementary_abelian(N) is None:
            return Refusal("a non-central minimal normal subgroup is not abelian")
    seeds = [g for N in noncentral for g in N.generators()]
    W = subgroup_closure(Q, seeds)
    prod = 1
    for N in noncentral:
        prod *= N.order
    if prod != W.order:
        return Refusal("the non-central minimal normal subgroups do not form a direct product")
    target = Q.order // W.order
    ebit = 1 << Q.identity
    complements = [S for S in all_subgroups(Q, limits) if S.order == target and S.bits & W.bits == ebit]
    if not complements:
        return Refusal("W has no complement")
    H = complements[-1] if reverse_complements else complements[0]
    if not subgroup_is_abelian(H):
        return Refusal("the complement of W is not abelian")
    for i, A in enumerate(noncentral):
        for B in noncentral[i + 1:]:
            if h_module_isomorphic(A, B, H):
                return Refusal("two non-central minimal normal subgroups are isomorphic H-modules")
    kernels = [centralizer(Q, V).intersection(H) for V in noncentral]
    return FrattiniQuotientDecomposition(Q, W, H, noncentral, kernels, central)


def predict_isolated(G: GroupTable) -> str:
    """Which family (if any) makes Sigma(G) have an isolated vertex."""
    _require_analysable(G)
    n = G.order
    if is_cyclic(G):
        return "CyclicGenerators"
    if n == 4 and all(G.power(x, 2) == G.identity for x in range(n)):
        return "KleinFour"
    if n % 2 == 0 and n > 2 and is_prime(n // 2) and n // 2 != 2:
        p = n // 2
        P = sylow_subgroup(G, p)
        if is_normal(G, P):
            for s in range(n):
                if s not in P and G.power(s, 2) == G.identity:
                    g = P.generators()[0]
                    if G.conj(g, s) == G.inv[g]:
                        return "DihedralP"
    return "None"


def nilpotent_diameter(G: GroupTable) -> int:
    """3 if exactly one Sylow subgroup is non-cyclic, else 2."""
    if not is_nilpotent(G) or is_cyclic(G) or is_p_group(G) is not None:
        raise PreconditionError("needs a nilpotent group that is neither cyclic nor a p-group")
    noncyclic = sum(1 for p in prime_factors(G.order) if not subgroup_is_cyclic(sylow_subgroup(G, p)))
    return 3 if noncyclic == 1 else 2


@dataclass
class PrimitiveVerdict:
    connected: bool
    diameter_bound: int | None
    socle: Subgroup
    complement: Subgroup


def _core(G: GroupTable, M: Subgroup) -> Subgroup:
    bits = M.bits
    for g in range(G.order):
        bits &= conjugate_subgroup(G, M, g).bits
        if bits == 1 << G.identity:
            break
    return Subgroup(G, bits)


def core_free_maximal(G: GroupTable, limits: Limits = DEFAULT_LIMITS) -> Subgroup | None:
    for M in maximal_subgroups(G, limits):
        if _core(G, M).is_trivial():
            return M
    return None


def primitive_soluble_verdict(G: GroupTable, limits: Limits = DEFAULT_LIMITS) -> PrimitiveVerdict:
    """Connectivity for a primitive soluble group: disconnected iff G = C_p or G/soc(G) = C_p."""
    _require_analysable(G)
    if not is_soluble(G):
        raise PreconditionError("group is not soluble")
    M = core_free_maximal(G, limits)
    if M is None:
        raise PreconditionError("no core-free maximal subgroup")
    mins = minimal_normal_subgroups(G)
    if len(mins) != 1:
        raise PreconditionError("a primitive soluble group has a unique minimal normal subgroup")
    N = mins[0]
    if N.bits & M.bits != 1 << G.identity or N.order * M.order != G.order:
        raise PreconditionError("socle is not complemented by the core-free maximal subgroup")
    disconnected = is_prime(G.order) or is_prime(G.order // N.order)
    return PrimitiveVerdict(not disconnected, None if disconnected else 3, N, M)


def classify(G: GroupTable, limits: Limits = DEFAULT_LIMITS) -> Verdict:
    _require_analysable(G)
    isolated = predict_isolated(G)
    p = is_p_group(G)
    flags = []
    if is_cyclic(G):
        flags.append("Cyclic")
    if p is not None:
        flags.append("PGroup")
    if flags:
        return Verdict(flags[0], False, p=p, isolated_reason=isolated, flags=flags)
    if not is_soluble(G):
        return Verdict("Connected", True, 5, isolated_reason=isolated,
                       note="non-soluble")
    if not is_nilpotent(subgroup_table(derived_subgroup(G))[0]):
        return Verdict("ConnectedSoluble", True, 3, isolated_reason=isolated,
                       note="derived subgroup is not nilpotent")
    try:
        F = frattini(G, limits)
        Q = quotient(G, F).target if not F.is_trivial() else G
        dec = decompose_frattini_quotient(Q, limits)
    except BoundExceeded as exc:
        return Verdict("Inconclusive", None, isolated_reason=isolated, note=str(exc))
    if dec:
        t, H = dec.t, dec.H
        hp = is_p_group(subgroup_table(H)[0]) if H.order > 1 else None
        if t >= 1 and is_prime(H.order):
            return Verdict("Case3", False, p=H.order, t=t, isolated_reason=isolated,
                           flags=["Case3"], evidence=dec)
        if t >= 1 and hp is not None and H.order == hp * hp and not subgroup_is_cyclic(H):
            CW = dec.centralizer_of_W()
            if CW.order == hp:
                return Verdict("Case4", False, p=hp, t=t, isolated_reason=isolated,
                               flags=["Case4"], evidence=dec)
            if CW.is_trivial():
                return Verdict("ConnectedSoluble", True, 2, p=hp, t=t, isolated_reason=isolated,
                               evidence=dec, note="H = C_p x C_p acting faithfully")
    note = "" if dec else dec.reason
    evidence = dec if dec else None
    if is_nilpotent(G):
        d = nilpotent_diameter(G)
        return Verdict("ConnectedNilpotent", True, d, diameter_exact=True,
                       isolated_reason=isolated, evidence=evidence, note=note)
    return Verdict("ConnectedSoluble", True, 3, isolated_reason=isolated, evidence=evidence, note=note)
