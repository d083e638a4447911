"""Constructors for the group families used in the corpus, and the descriptor format.

A descriptor is a JSON-able dict::

    {"name": "D7", "construction": {"kind": "dihedral", "n": 7}}

with optional ``"two_generated": false`` for entries that exist to exercise
the rejection path, and free-form ``"tags"``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from importlib import resources
from typing import Sequence

import numpy as np

from .fields import FieldError, FieldTable, field
from .groups import (
    DEFAULT_LIMITS,
    BoundExceeded,
    GroupTable,
    InvalidGroupError,
    Limits,
    PermSpec,
    PreconditionError,
    build_from_permutations,
    is_prime,
)


def _check_bound(order: int, limits: Limits) -> None:
    if order > limits.max_elements:
        raise BoundExceeded(f"group of order {order} exceeds max_elements={limits.max_elements}")


def cyclic(n: int, limits: Limits = DEFAULT_LIMITS) -> GroupTable:
    _check_bound(n, limits)
    r = np.arange(n)
    return GroupTable((r[:, None] + r[None, :]) % n, identity=0,
                      labels=[str(i) for i in range(n)], provenance=f"C{n}")


def dihedral(n: int, limits: Limits = DEFAULT_LIMITS) -> GroupTable:
    """Dihedral group of order 2n; index a*n + k stands for s^a r^k."""
    _check_bound(2 * n, limits)
    mul = np.empty((2 * n, 2 * n), dtype=np.int64)
    for a, k, b, l in itertools.product(range(2), range(n), range(2), range(n)):
        # r^k s = s r^-k
        kk = -k if b else k
        mul[a * n + k, b * n + l] = ((a + b) % 2) * n + (kk + l) % n
    labels = [f"r^{k}" for k in range(n)] + [f"sr^{k}" for k in range(n)]
    labels[0], labels[n] = "e", "s"
    return GroupTable(mul, identity=0, labels=labels, provenance=f"D{n}")


def direct_product(A: GroupTable, B: GroupTable, limits: Limits = DEFAULT_LIMITS) -> GroupTable:
    """A x B with index a*|B| + b."""
    nA, nB = A.order, B.order
    _check_bound(nA * nB, limits)
    ia = np.repeat(np.arange(nA), nB)
    ib = np.tile(np.arange(nB), nA)
    mul = A.array[ia[:, None], ia[None, :]] * nB + B.array[ib[:, None], ib[None, :]]
    labels = [f"({A.labels[a]},{B.labels[b]})" for a, b in zip(ia, ib)]
    return GroupTable(mul, identity=A.identity * nB + B.identity, labels=labels,
                      provenance=f"({A.provenance} x {B.provenance})",
                      meta={"factors": (nA, nB)})


def abelian(invariants: Sequence[int], limits: Limits = DEFAULT_LIMITS) -> GroupTable:
    if not invariants:
        raise InvalidGroupError("at least one invariant factor is required")
    G = cyclic(invariants[0], limits)
    for m in invariants[1:]:
        G = direct_product(G, cyclic(m, limits), limits)
    G.provenance = "x".join(f"C{m}" for m in invariants)
    return G


def quaternion8() -> GroupTable:
    # basis units 1,i,j,k with signs; index = 4*sign + unit
    unit_mul = {  # (u, v) -> (sign, w)
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }
    mul = np.empty((8, 8), dtype=np.int64)
    for x, y in itertools.product(range(8), repeat=2):
        s, w = unit_mul[(x % 4, y % 4)]
        mul[x, y] = 4 * ((x // 4 + y // 4 + s) % 2) + w
    names = ["1", "i", "j", "k"]
    labels = names + ["-" + u for u in names]
    return GroupTable(mul, identity=0, labels=labels, provenance="Q8")


def metacyclic(m: int, n: int, r: int, limits: Limits = DEFAULT_LIMITS) -> GroupTable:
    """C_m x| C_n = <a, b | a^m, b^n, b a b^-1 = a^r>; index j*m + i is a^i b^j."""
    if np.gcd(r, m) != 1 or pow(r, n, m) != 1 % m:
        raise InvalidGroupError(f"r={r} does not define an action of C{n} on C{m}")
    _check_bound(m * n, limits)
    N = m * n
    i = np.arange(N) % m
    j = np.arange(N) // m
    rj = np.array([pow(r, int(jj), m) for jj in range(n)])
    # (a^i b^j)(a^k b^l) = a^(i + k r^j) b^(j + l)
    new_i = (i[:, None] + i[None, :] * rj[j][:, None]) % m
    new_j = (j[:, None] + j[None, :]) % n
    labels = [f"a^{a}b^{b}" for a, b in zip(i, j)]
    return GroupTable(new_j * m + new_i, identity=0, labels=labels, provenance=f"C{m}:C{n}(r={r})")


def sym(n: int, limits: Limits = DEFAULT_LIMITS) -> GroupTable:
    if n > 5:
        raise BoundExceeded("symmetric groups are provided up to degree 5")
    if n <= 1:
        return build_from_permutations(PermSpec(max(n, 1), ((0,),)), limits, provenance=f"S{n}")
    cyc = tuple(list(range(1, n)) + [0])
    swap = tuple([1, 0] + list(range(2, n)))
    return build_from_permutations(PermSpec(n, (cyc, swap)), limits, provenance=f"S{n}")


def alt(n: int, limits: Limits = DEFAULT_LIMITS) -> GroupTable:
    if n > 6:
        raise BoundExceeded("alternating groups are provided up to degree 6")
    if n <= 2:
        return build_from_permutations(PermSpec(max(n, 1), (tuple(range(max(n, 1))),)), limits,
                                       provenance=f"A{n}")
    gens = []
    for k in range(2, n):
        g = list(range(n))
        g[0], g[1], g[k] = 1, k, 0  # the 3-cycle (0 1 k)
        gens.append(tuple(g))
    return build_from_permutations(PermSpec(n, tuple(gens)), limits, provenance=f"A{n}")


def matrix_group_on_vectors(p: int, matrices: Sequence[Sequence[Sequence[int]]]) -> PermSpec:
    """Permutation action of 2x2 matrices over GF(p) on the nonzero vectors (row vectors, v -> vA)."""
    vecs = [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]
    pos = {v: i for i, v in enumerate(vecs)}
    gens = []
    for A in matrices:
        img = []
        for a, b in vecs:
            img.append(pos[((a * A[0][0] + b * A[1][0]) % p, (a * A[0][1] + b * A[1][1]) % p)])
        gens.append(tuple(img))
    return PermSpec(len(vecs), tuple(gens))


# scalar semidirect products


@dataclass(frozen=True)
class ScalarSemidirectSpec:
    """(V_1 x ... x V_t) x| H with H = C_p^r (r <= 2) acting on V_j = GF(q_j) by scalars.

    ``scalars[j][i]`` is alpha_j(h_i), the field element (encoded as in
    :mod:`sigmagraph.fields`) by which the i-th generator of H acts on V_j.
    Multiplication is ``(v, h)(v', h') = (v + alpha(h) v', h h')``, so
    conjugation ``h v h^-1`` multiplies v by alpha(h).
    """

    p: int
    h_rank: int
    fields: tuple[int, ...]
    scalars: tuple[tuple[int, ...], ...]

    def validate(self) -> None:
        if not is_prime(self.p):
            raise InvalidGroupError(f"p={self.p} is not prime")
        if self.h_rank not in (1, 2):
            raise InvalidGroupError("H must have rank 1 or 2")
        if len(self.fields) != len(self.scalars) or not self.fields:
            raise InvalidGroupError("need one scalar row per field, and at least one field")
        for j, (q, row) in enumerate(zip(self.fields, self.scalars)):
            try:
                F = field(q)
            except FieldError as exc:
                raise InvalidGroupError(f"V_{j + 1}: {exc}") from None
            if len(row) != self.h_rank:
                raise InvalidGroupError(f"V_{j + 1}: expected {self.h_rank} scalars")
            for a in row:
                if not 0 < a < q:
                    raise InvalidGroupError(f"V_{j + 1}: scalar {a} is not a nonzero element of GF({q})")
                if self.p % F.mult_order(a):
                    raise InvalidGroupError(f"V_{j + 1}: scalar {a} has order not dividing {self.p}")
            if all(a == F.one for a in row):
                raise InvalidGroupError(f"V_{j + 1}: trivial action")
            if not _scalar_irreducible(F, row):
                raise InvalidGroupError(f"V_{j + 1}: GF({q}) is reducible under the given scalars")
        for j, k in itertools.combinations(range(len(self.fields)), 2):
            if scalar_modules_isomorphic(self.fields[j], self.scalars[j], self.fields[k], self.scalars[k]):
                raise InvalidGroupError(f"V_{j + 1} and V_{k + 1} are isomorphic H-modules")

    @property
    def t(self) -> int:
        return len(self.fields)

    def to_json(self) -> dict:
        return {"kind": "scalar_semidirect", "p": self.p, "h_rank": self.h_rank,
                "fields": list(self.fields), "scalars": [list(r) for r in self.scalars]}


def _scalar_irreducible(F: FieldTable, scalars: Sequence[int]) -> bool:
    # the submodule generated by 1 is the subring generated by the scalars;
    # every other nonzero v generates v times that ring
    span = {F.one}
    frontier = [F.one]
    while frontier:
        nxt = []
        for x in frontier:
            cands = [F.mul[x][a] for a in scalars] + [F.add[x][y] for y in span]
            for c in cands:
                if c not in span:
                    span.add(c)
                    nxt.append(c)
        frontier = nxt
    span.add(F.zero)
    return len(span) == F.q


def scalar_modules_isomorphic(q1: int, s1: Sequence[int], q2: int, s2: Sequence[int]) -> bool:
    """One-dimensional scalar modules are isomorphic iff some field automorphism
    carries one scalar tuple onto the other."""
    if q1 != q2:
        return False
    F = field(q1)
    cur = list(s1)
    for _ in range(F.degree):
        if cur == list(s2):
            return True
        cur = [F.frobenius(a) for a in cur]
    return False


def scalar_semidirect(spec: ScalarSemidirectSpec, limits: Limits = DEFAULT_LIMITS) -> GroupTable:
    spec.validate()
    Fs = [field(q) for q in spec.fields]
    p, r = spec.p, spec.h_rank
    wsize = int(np.prod(spec.fields))
    hsize = p ** r
    N = wsize * hsize
    _check_bound(N, limits)
    idx = np.arange(N)
    w_idx, h_idx = idx % wsize, idx // wsize
    coords_v = []
    rem = w_idx.copy()
    for q in spec.fields:
        coords_v.append(rem % q)
        rem = rem // q
    h_exps = [(h_idx // p ** i) % p for i in range(r)]
    # alpha_j(h) for every h index
    alpha = []
    for F, row in zip(Fs, spec.scalars):
        table = []
        for hi in range(hsize):
            a = F.one
            for i in range(r):
                a = F.mul[a][F.power(row[i], (hi // p ** i) % p)]
            table.append(a)
        alpha.append(np.array(table))
    new_w = np.zeros((N, N), dtype=np.int64)
    stride = 1
    for F, v, al, q in zip(Fs, coords_v, alpha, spec.fields):
        add, mul = np.array(F.add), np.array(F.mul)
        scaled = mul[al[h_idx][:, None], v[None, :]]
        new_w += add[v[:, None], scaled] * stride
        stride *= q
    new_h = np.zeros((N, N), dtype=np.int64)
    for i in range(r):
        new_h += ((h_exps[i][:, None] + h_exps[i][None, :]) % p) * p ** i
    mul_table = new_h * wsize + new_w
    coords = [(tuple(int(v[x]) for v in coords_v), tuple(int(e[x]) for e in h_exps)) for x in range(N)]
    labels = ["(" + ",".join(map(str, vs)) + "|" + ",".join(map(str, es)) + ")" for vs, es in coords]
    return GroupTable(mul_table, identity=0, labels=labels,
                      provenance=f"scalar_semidirect(p={p}, r={r}, q={list(spec.fields)})",
                      meta={"scalar_semidirect": spec, "coords": coords})


def corona_generation_test(G: GroupTable, g1: int, g2: int) -> bool:
    """Decide <g1, g2> = G for a scalar semidirect product from coordinates alone.

    True iff the H-parts generate H and, for every j, the 2x2 matrix
    [[1 - alpha_j(h1), 1 - alpha_j(h2)], [v_1j, v_2j]] is nonsingular over GF(q_j).
    """
    spec = G.meta.get("scalar_semidirect")
    if spec is None:
        raise PreconditionError("group was not built by scalar_semidirect")
    (v1, e1), (v2, e2) = G.meta["coords"][g1], G.meta["coords"][g2]
    p, r = spec.p, spec.h_rank
    span = {tuple((a * x + b * y) % p for x, y in zip(e1, e2)) for a in range(p) for b in range(p)}
    if len(span) != p ** r:
        return False
    for j, q in enumerate(spec.fields):
        F = field(q)
        row = spec.scalars[j]

        def alpha(e):
            a = F.one
            for i in range(r):
                a = F.mul[a][F.power(row[i], e[i])]
            return a

        c1 = F.sub(F.one, alpha(e1))
        c2 = F.sub(F.one, alpha(e2))
        det = F.sub(F.mul[c1][v2[j]], F.mul[c2][v1[j]])
        if det == F.zero:
            return False
    return True


# descriptors


def build_group(construction: dict, limits: Limits = DEFAULT_LIMITS) -> GroupTable:
    """Build a GroupTable from the ``construction`` part of a descriptor."""
    kind = construction.get("kind")
    c = construction
    if kind == "cyclic":
        return cyclic(int(c["n"]), limits)
    if kind == "dihedral":
        return dihedral(int(c["n"]), limits)
    if kind == "abelian":
        return abelian([int(m) for m in c["invariants"]], limits)
    if kind == "quaternion8":
        return quaternion8()
    if kind == "sym":
        return sym(int(c["n"]), limits)
    if kind == "alt":
        return alt(int(c["n"]), limits)
    if kind == "metacyclic":
        return metacyclic(int(c["m"]), int(c["n"]), int(c["r"]), limits)
    if kind == "perm":
        gens = tuple(tuple(int(x) for x in g) for g in c["generators"])
        return build_from_permutations(PermSpec(int(c["degree"]), gens), limits)
    if kind == "table":
        G = GroupTable(c["mul"], labels=c.get("labels"), provenance="table")
        G.check(limits.assoc_check_order)
        return G
    if kind == "direct_product":
        factors = [build_group(f, limits) for f in c["factors"]]
        if len(factors) < 2:
            raise InvalidGroupError("direct_product needs at least two factors")
        G = factors[0]
        for F in factors[1:]:
            G = direct_product(G, F, limits)
        return G
    if kind == "scalar_semidirect":
        spec = ScalarSemidirectSpec(p=int(c["p"]), h_rank=int(c["h_rank"]),
                                    fields=tuple(int(q) for q in c["fields"]),
                                    scalars=tuple(tuple(int(a) for a in row) for row in c["scalars"]))
        return scalar_semidirect(spec, limits)
    raise InvalidGroupError(f"unknown construction kind {kind!r}")


def build_from_descriptor(desc: dict, limits: Limits = DEFAULT_LIMITS) -> GroupTable:
    if "construction" not in desc:
        raise InvalidGroupError("descriptor has no 'construction'")
    G = build_group(desc["construction"], limits)
    G.provenance = desc.get("name", G.provenance)
    return G


def _d(name, kind, tags=(), two_generated=True, **params):
    out = {"name": name, "construction": {"kind": kind, **params}}
    if tags:
        out["tags"] = list(tags)
    if not two_generated:
        out["two_generated"] = False
    return out


def _ss(p, fields, scalars):
    return {"kind": "scalar_semidirect", "p": p, "h_rank": len(scalars[0]),
            "fields": list(fields), "scalars": [list(r) for r in scalars]}


def builtin_descriptors() -> list[dict]:
    """The bundled verification corpus, in manifest order."""
    out: list[dict] = []
    for n in range(2, 64):
        out.append(_d(f"C{n}", "cyclic", ["cyclic"], n=n))
    for n in range(3, 32):
        out.append(_d(f"D{n}", "dihedral", ["dihedral"], n=n))
    for a in range(2, 8):
        for b in range(a, 64 // a + 1, a):
            if a * b <= 63:
                out.append(_d(f"C{a}xC{b}", "abelian", ["abelian"], invariants=[a, b]))
    out += [
        _d("Q8", "quaternion8", ["order8"]),
        _d("C2xC2xC2", "abelian", ["order8", "abelian"], two_generated=False, invariants=[2, 2, 2]),
        _d("C2xC2xC4", "abelian", ["abelian"], two_generated=False, invariants=[2, 2, 4]),
        _d("C2xC2xC6", "abelian", ["abelian"], two_generated=False, invariants=[2, 2, 6]),
        _d("C3xC3xC3", "abelian", ["abelian"], two_generated=False, invariants=[3, 3, 3]),
    ]
    # Frattini-free instances of the two disconnected shapes, and Z = 1 relatives
    m1_3, m1_5, m1_7 = 2, 4, 6
    out += [
        _d("Case3_p2_t1", **_ss(2, [3], [[m1_3]]), tags=["case3", "scalar"]),
        _d("Case3_p2_t2", **_ss(2, [3, 5], [[m1_3], [m1_5]]), tags=["case3", "scalar"]),
        _d("Case3_p2_t3", **_ss(2, [3, 5, 7], [[m1_3], [m1_5], [m1_7]]), tags=["case3", "scalar", "large"]),
        _d("Case3_p3_t1", **_ss(3, [4], [[2]]), tags=["case3", "scalar"]),
        _d("Case3_p3_t1_F7", **_ss(3, [7], [[2]]), tags=["case3", "scalar"]),
        _d("Case3_p3_t2", **_ss(3, [4, 7], [[2], [2]]), tags=["case3", "scalar", "large"]),
        _d("Case3_p3_t3", **_ss(3, [4, 7, 7], [[2], [2], [4]]), tags=["case3", "scalar", "large"]),
        _d("Case3_p7_t1", **_ss(7, [8], [[2]]), tags=["case3", "scalar"]),
        _d("Case4_p2_t1", **_ss(2, [3], [[m1_3, 1]]), tags=["case4", "scalar"]),
        _d("Case4_p2_t2", **_ss(2, [3, 5], [[m1_3, 1], [m1_5, 1]]), tags=["case4", "scalar"]),
        _d("Case4_p2_t3", **_ss(2, [3, 5, 7], [[m1_3, 1], [m1_5, 1], [m1_7, 1]]),
           tags=["case4", "scalar", "large"]),
        _d("Case4_p3_t1", **_ss(3, [4], [[2, 1]]), tags=["case4", "scalar"]),
        _d("Case4_p3_t2", **_ss(3, [4, 7], [[2, 1], [2, 1]]), tags=["case4", "scalar", "large"]),
        _d("Z1_p2_t2", **_ss(2, [3, 3], [[m1_3, 1], [1, m1_3]]), tags=["scalar", "centerless"]),
        _d("Z1_p2_t3", **_ss(2, [3, 3, 5], [[m1_3, 1], [1, m1_3], [m1_5, m1_5]]),
           tags=["scalar", "centerless", "large"]),
        _d("Z1_p3_t2", **_ss(3, [4, 4], [[2, 1], [1, 2]]), tags=["scalar", "centerless", "large"]),
    ]
    # groups whose Frattini subgroup is nontrivial but whose Frattini quotient has a disconnected shape
    out += [
        _d("Dic3", "metacyclic", ["frattini"], m=3, n=4, r=2),
        _d("C3:C8", "metacyclic", ["frattini"], m=3, n=8, r=2),
        _d("C5:C8", "metacyclic", ["frattini"], m=5, n=8, r=4),
        _d("C7:C9", "metacyclic", ["frattini"], m=7, n=9, r=2),
        _d("C4xS3", "direct_product", ["frattini"],
           factors=[{"kind": "cyclic", "n": 4}, {"kind": "sym", "n": 3}]),
        _d("SL(2,3)", "perm", ["frattini"],
           **_perm(matrix_group_on_vectors(3, [[[1, 1], [0, 1]], [[0, 2], [1, 0]]]))),
        _d("C3xS3", "direct_product", ["mixed"],
           factors=[{"kind": "cyclic", "n": 3}, {"kind": "sym", "n": 3}]),
        _d("C3xA4", "direct_product", ["mixed"],
           factors=[{"kind": "cyclic", "n": 3}, {"kind": "alt", "n": 4}]),
        _d("C2xA4", "direct_product", ["mixed"],
           factors=[{"kind": "cyclic", "n": 2}, {"kind": "alt", "n": 4}]),
        _d("S3xS3", "direct_product", ["mixed"],
           factors=[{"kind": "sym", "n": 3}, {"kind": "sym", "n": 3}]),
        _d("D4xC3", "direct_product", ["coprime"],
           factors=[{"kind": "dihedral", "n": 4}, {"kind": "cyclic", "n": 3}]),
    ]
    # primitive soluble
    out += [
        _d("F20", "metacyclic", ["primitive"], m=5, n=4, r=2),
        _d("A4", "alt", ["primitive"], n=4),
        _d("C7:C3", "metacyclic", ["primitive"], m=7, n=3, r=2),
        _d("AGL(1,7)", "metacyclic", ["primitive"], m=7, n=6, r=3),
        _d("S4", "sym", ["primitive"], n=4),
        _d("S3", "sym", ["primitive"], n=3),
    ]
    # coprime direct products
    out += [
        _d("C2xC2xC3", "direct_product", ["coprime"],
           factors=[{"kind": "abelian", "invariants": [2, 2]}, {"kind": "cyclic", "n": 3}]),
        _d("C2xC2xC3xC3", "direct_product", ["coprime"],
           factors=[{"kind": "abelian", "invariants": [2, 2]}, {"kind": "abelian", "invariants": [3, 3]}]),
        _d("C2xC2xC5", "direct_product", ["coprime"],
           factors=[{"kind": "abelian", "invariants": [2, 2]}, {"kind": "cyclic", "n": 5}]),
        _d("C3xC3xC2", "direct_product", ["coprime"],
           factors=[{"kind": "abelian", "invariants": [3, 3]}, {"kind": "cyclic", "n": 2}]),
        _d("Q8xC3", "direct_product", ["coprime"],
           factors=[{"kind": "quaternion8"}, {"kind": "cyclic", "n": 3}]),
        _d("S3xC5", "direct_product", ["coprime"],
           factors=[{"kind": "sym", "n": 3}, {"kind": "cyclic", "n": 5}]),
        _d("S3xC7", "direct_product", ["coprime"],
           factors=[{"kind": "sym", "n": 3}, {"kind": "cyclic", "n": 7}]),
        _d("D5xC3", "direct_product", ["coprime"],
           factors=[{"kind": "dihedral", "n": 5}, {"kind": "cyclic", "n": 3}]),
        _d("A4xC5", "direct_product", ["coprime"],
           factors=[{"kind": "alt", "n": 4}, {"kind": "cyclic", "n": 5}]),
        _d("C7:C3xC2", "direct_product", ["coprime"],
           factors=[{"kind": "metacyclic", "m": 7, "n": 3, "r": 2}, {"kind": "cyclic", "n": 2}]),
        _d("S3xS3xC5", "direct_product", ["coprime", "large"],
           factors=[{"kind": "sym", "n": 3}, {"kind": "sym", "n": 3}, {"kind": "cyclic", "n": 5}]),
        _d("C2xC2xC3xC3xC5", "direct_product", ["coprime", "large"],
           factors=[{"kind": "abelian", "invariants": [2, 2]}, {"kind": "abelian", "invariants": [3, 3]},
                    {"kind": "cyclic", "n": 5}]),
    ]
    # non-soluble
    out += [
        _d("A5", "alt", ["nonsoluble"], n=5),
        _d("S5", "sym", ["nonsoluble", "large"], n=5),
        _d("PSL(2,7)", "perm", ["nonsoluble", "large"], degree=7,
           generators=[[1, 2, 3, 4, 5, 6, 0], [0, 3, 2, 1, 5, 4, 6]]),
    ]
    return out


def _perm(spec: PermSpec) -> dict:
    return {"degree": spec.degree, "generators": [list(g) for g in spec.generators]}


def corpus_manifest() -> list[dict]:
    """The shipped manifest (``data/corpus.json``)."""
    text = resources.files("sigmagraph").joinpath("data/corpus.json").read_text()
    return json.loads(text)


def manifest_entry(name: str) -> dict:
    for d in corpus_manifest():
        if d["name"] == name:
            return d
    raise KeyError(name)
