"""Finite groups as dense Cayley tables, plus the subgroup machinery built on them.

Elements are indices ``0..n-1`` into a multiplication table.  Subgroups are
bitsets (plain Python ints) over those indices, which keeps closures,
intersections and containment tests cheap.
"""

from __future__ import annotations

import hashlib
import itertools
import struct
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

import numpy as np


class GroupError(Exception):
    """Base class for errors raised by the group machinery."""


class InvalidGroupError(GroupError):
    """A table or permutation failed validation."""


class BoundExceeded(GroupError):
    """A configured size limit was hit; the computation was abandoned."""


class NotNormalError(GroupError):
    pass


class PreconditionError(GroupError):
    pass


class NotTwoGeneratedError(PreconditionError):
    pass


class SearchExhausted(GroupError):
    """An exhaustive search that is guaranteed to succeed did not.

    Seeing this means there is a bug somewhere, not a property of the input.
    """


@dataclass(frozen=True)
class Limits:
    max_elements: int = 5000
    max_lattice_order: int = 360
    max_subgroups: int = 20000
    assoc_check_order: int = 200


DEFAULT_LIMITS = Limits()


def iter_bits(bits: int):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def bits_of(indices: Iterable[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


class GroupTable:
    """A finite group given by its multiplication table.

    ``mul[x][y]`` is the index of ``x*y``.  Instances are treated as
    immutable; ``_cache`` only memoises deterministic derived data.
    """

    def __init__(self, mul, identity: int | None = None, labels: Sequence[str] | None = None,
                 provenance: str = "table", meta: dict | None = None):
        arr = np.asarray(mul, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise InvalidGroupError(f"multiplication table must be square and non-empty, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            raise InvalidGroupError("table entries out of range")
        if identity is None:
            ar = np.arange(n)
            hits = np.flatnonzero((arr == ar).all(axis=1))
            if len(hits) == 0:
                raise InvalidGroupError("no identity element")
            identity = int(hits[0])
        self.order = n
        self.array = arr
        self.mul: list[list[int]] = arr.tolist()
        self.identity = identity
        inv = [-1] * n
        for x in range(n):
            row = self.mul[x]
            for y in range(n):
                if row[y] == identity:
                    inv[x] = y
                    break
        if -1 in inv:
            raise InvalidGroupError("some element has no right inverse")
        self.inv = inv
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        if len(self.labels) != n:
            raise InvalidGroupError("label count does not match order")
        self.provenance = provenance
        self.meta = dict(meta or {})
        self._cache: dict = {}

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"GroupTable(order={self.order}, provenance={self.provenance!r})"

    @property
    def all_bits(self) -> int:
        return (1 << self.order) - 1

    def check(self, assoc_bound: int = DEFAULT_LIMITS.assoc_check_order) -> None:
        """Raise InvalidGroupError unless the table is a group table.

        Associativity is checked exhaustively only when the order is at most
        ``assoc_bound``; above that it is trusted to the constructor.
        """
        M, n, e = self.array, self.order, self.identity
        ar = np.arange(n)
        if not (np.sort(M, axis=1) == ar).all():
            raise InvalidGroupError("rows are not permutations (not a Latin square)")
        if not (np.sort(M, axis=0) == ar[:, None]).all():
            raise InvalidGroupError("columns are not permutations (not a Latin square)")
        if not ((M[e] == ar).all() and (M[:, e] == ar).all()):
            raise InvalidGroupError("identity law fails")
        if not (M[ar, self.inv] == e).all():
            raise InvalidGroupError("inverse law fails")
        if n <= assoc_bound:
            block = max(1, 2_000_000 // (n * n))
            for start in range(0, n, block):
                xs = slice(start, min(n, start + block))
                left = M[M[xs]]          # (x*y)*z
                right = M[xs][:, M]      # x*(y*z)
                if not (left == right).all():
                    raise InvalidGroupError("associativity fails")

    # canonical serialisation

    def canonical_bytes(self) -> bytes:
        fmt = "<u2" if self.order < 65536 else "<u4"
        header = struct.pack("<IB", self.order, 2 if fmt == "<u2" else 4)
        return header + self.array.astype(fmt).tobytes(order="C")

    def content_hash(self) -> str:
        return hashlib.sha256(self.canonical_bytes()).hexdigest()

    @classmethod
    def from_canonical_bytes(cls, data: bytes, provenance: str = "deserialized") -> GroupTable:
        n, width = struct.unpack_from("<IB", data)
        fmt = "<u2" if width == 2 else "<u4"
        body = np.frombuffer(data, dtype=fmt, offset=5)
        if body.size != n * n:
            raise InvalidGroupError("serialized table has wrong length")
        return cls(body.reshape(n, n), provenance=provenance)

    # elementwise helpers

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mul[y][x]
            k += 1
        return k

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv[x], -k
        out, base = self.identity, x
        while k:
            if k & 1:
                out = self.mul[out][base]
            base = self.mul[base][base]
            k >>= 1
        return out

    def conj(self, x: int, g: int) -> int:
        """x^g = g^-1 x g."""
        return self.mul[self.mul[self.inv[g]][x]][g]

    def commutator(self, x: int, y: int) -> int:
        """[x, y] = x^-1 y^-1 x y."""
        m, inv = self.mul, self.inv
        return m[m[m[inv[x]][inv[y]]][x]][y]

    def is_abelian(self) -> bool:
        return bool((self.array == self.array.T).all())


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup of ``parent`` stored as a bitset of element indices."""

    parent: GroupTable
    bits: int
    gens: tuple[int, ...] = field(default=(), compare=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and other.parent is self.parent and other.bits == self.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __contains__(self, x: int) -> bool:
        return bool(self.bits >> x & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, members={self.members[:8]}{'...' if self.order > 8 else ''})"

    @property
    def order(self) -> int:
        return self.bits.bit_count()

    @property
    def members(self) -> list[int]:
        return list(iter_bits(self.bits))

    def issubset(self, other: Subgroup) -> bool:
        return self.bits & ~other.bits == 0

    def is_trivial(self) -> bool:
        return self.bits == 1 << self.parent.identity

    def is_whole(self) -> bool:
        return self.bits == self.parent.all_bits

    def intersection(self, other: Subgroup) -> Subgroup:
        return Subgroup(self.parent, self.bits & other.bits)

    def generators(self) -> tuple[int, ...]:
        if self.gens or self.is_trivial():
            return self.gens
        return generating_set(self)

    def check(self) -> None:
        G = self.parent
        if G.identity not in self:
            raise InvalidGroupError("subgroup misses the identity")
        mem = self.members
        for x in mem:
            if G.inv[x] not in self:
                raise InvalidGroupError("subgroup not closed under inverses")
            row = G.mul[x]
            for y in mem:
                if not self.bits >> row[y] & 1:
                    raise InvalidGroupError("subgroup not closed under products")
        if G.order % self.order:
            raise InvalidGroupError(f"subgroup order {self.order} does not divide {G.order}")


@dataclass(frozen=True)
class PermSpec:
    degree: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.generators:
            raise InvalidGroupError("at least one generator is required")
        for g in self.generators:
            if len(g) != self.degree or sorted(g) != list(range(self.degree)):
                raise InvalidGroupError(f"not a permutation of 0..{self.degree - 1}: {g}")


@dataclass(frozen=True)
class QuotientMap:
    source: GroupTable
    target: GroupTable
    projection: tuple[int, ...]
    kernel: Subgroup

    def check(self) -> None:
        S, T, pr = self.source, self.target, self.projection
        P = np.asarray(pr)
        if not (P[S.array] == T.array[P[:, None], P[None, :]]).all():
            raise InvalidGroupError("projection is not a homomorphism")
        if set(pr) != set(range(T.order)):
            raise InvalidGroupError("projection is not surjective")
        ker = bits_of(x for x in range(S.order) if pr[x] == T.identity)
        if ker != self.kernel.bits or S.order != T.order * self.kernel.order:
            raise InvalidGroupError("kernel does not match the projection")


def cycle_label(perm: Sequence[int]) -> str:
    seen, parts = set(), []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = perm[j]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def build_from_permutations(spec: PermSpec, limits: Limits = DEFAULT_LIMITS,
                            provenance: str | None = None) -> GroupTable:
    """Close the generators under composition and tabulate the result.

    Elements are numbered in breadth-first order from the identity, trying
    generators in the order given.  The product ``x*y`` applies ``x`` first.
    """
    d = spec.degree
    ident = tuple(range(d))
    elems = [ident]
    index = {ident: 0}
    for cur in elems:
        for g in spec.generators:
            prod = tuple(g[c] for c in cur)
            if prod not in index:
                if len(elems) >= limits.max_elements:
                    raise BoundExceeded(f"permutation closure exceeds max_elements={limits.max_elements}")
                index[prod] = len(elems)
                elems.append(prod)
    n = len(elems)
    P = np.array(elems, dtype=np.int64).reshape(n, d)
    mul = np.empty((n, n), dtype=np.int64)
    if d == 0 or d ** d < 2 ** 62:
        w = d ** np.arange(d, dtype=np.int64)
        codes = P @ w
        order = np.argsort(codes)
        sorted_codes = codes[order]
        for x in range(n):
            pc = P[:, P[x]] @ w
            mul[x] = order[np.searchsorted(sorted_codes, pc)]
    else:
        for x in range(n):
            for y, row in enumerate(P[:, P[x]]):
                mul[x, y] = index[tuple(row.tolist())]
    labels = [cycle_label(p) for p in elems]
    G = GroupTable(mul, identity=0, labels=labels,
                   provenance=provenance or f"perm(degree={d}, gens={len(spec.generators)})")
    G.meta["permutations"] = elems
    return G


# closures


def _closure(G: GroupTable, base_members: list[int], base_bits: int, gens: Sequence[int]) -> int:
    """Bitset of <base, gens>, built one right coset of base at a time."""
    mul = G.mul
    bits = base_bits
    reps = [G.identity]
    for r in reps:
        row = mul[r]
        for s in gens:
            x = row[s]
            if not bits >> x & 1:
                reps.append(x)
                for h in base_members:
                    bits |= 1 << mul[h][x]
    return bits


def trivial_subgroup(G: GroupTable) -> Subgroup:
    return Subgroup(G, 1 << G.identity)


def whole_group(G: GroupTable) -> Subgroup:
    key = "whole"
    if key not in G._cache:
        G._cache[key] = Subgroup(G, G.all_bits, gens=generating_set(Subgroup(G, G.all_bits)))
    return G._cache[key]


def subgroup_closure(G: GroupTable, seeds: Iterable[int], base: Subgroup | None = None) -> Subgroup:
    """Smallest subgroup containing ``seeds`` (and ``base`` when given)."""
    seeds = [s for s in seeds]
    for s in seeds:
        if not 0 <= s < G.order:
            raise PreconditionError(f"seed {s} is not an element index")
    if base is None:
        base = trivial_subgroup(G)
    new = [s for s in dict.fromkeys(seeds) if s not in base]
    if not new:
        return base
    base_gens = list(base.generators())
    gens = base_gens + new
    bits = _closure(G, base.members, base.bits, gens)
    # drop redundant generators so downstream closures stay cheap
    return Subgroup(G, bits, gens=tuple(_prune_gens(G, gens, bits)))


def _prune_gens(G: GroupTable, gens: Sequence[int], target: int) -> list[int]:
    if len(gens) <= 2:
        return list(gens)
    out: list[int] = []
    cur = 1 << G.identity
    for g in gens:
        if not cur >> g & 1:
            out.append(g)
            cur = _closure(G, [G.identity], 1 << G.identity, out)
            if cur == target:
                break
    return out


def generating_set(H: Subgroup) -> tuple[int, ...]:
    """Greedy generating set: scan members in index order, keep those not yet reached."""
    G = H.parent
    gens: list[int] = []
    cur = 1 << G.identity
    cur_members = [G.identity]
    for x in H.members:
        if not cur >> x & 1:
            gens.append(x)
            cur = _closure(G, cur_members, cur, gens)
            cur_members = list(iter_bits(cur))
            if cur == H.bits:
                break
    return tuple(gens)


def is_generating_pair(G: GroupTable, x: int, y: int) -> bool:
    return _closure(G, [G.identity], 1 << G.identity, (x, y)) == G.all_bits


def cyclic_subgroup(G: GroupTable, x: int) -> Subgroup:
    bits, y = 1 << G.identity, x
    while y != G.identity:
        bits |= 1 << y
        y = G.mul[y][x]
    return Subgroup(G, bits, gens=(x,) if x != G.identity else ())


def subgroup_table(H: Subgroup) -> tuple[GroupTable, list[int]]:
    """H as a standalone GroupTable; returns the table and the embedding list."""
    G = H.parent
    key = ("subtable", H.bits)
    if key in G._cache:
        return G._cache[key]
    emb = H.members
    pos = {x: i for i, x in enumerate(emb)}
    mul = [[pos[G.mul[a][b]] for b in emb] for a in emb]
    T = GroupTable(mul, identity=pos[G.identity], labels=[G.labels[x] for x in emb],
                   provenance=f"subgroup of order {len(emb)} in {G.provenance}")
    G._cache[key] = (T, emb)
    return T, emb


# lattice


def all_subgroups(G: GroupTable, limits: Limits = DEFAULT_LIMITS) -> list[Subgroup]:
    """Every subgroup exactly once, ordered by (order, bitset).

    Breadth-first extension from the trivial subgroup: each known H is
    extended by one element from every double coset HgH outside H.
    """
    # limits are checked even on a cache hit so results depend only on (G, limits)
    if G.order > limits.max_lattice_order:
        raise BoundExceeded(f"order {G.order} exceeds max_lattice_order={limits.max_lattice_order} for subgroup enumeration")
    if "lattice" in G._cache:
        if len(G._cache["lattice"]) > limits.max_subgroups:
            raise BoundExceeded(f"more than max_subgroups={limits.max_subgroups} subgroups")
        return G._cache["lattice"]
    mul = G.mul
    triv = trivial_subgroup(G)
    found: dict[int, Subgroup] = {triv.bits: triv}
    queue = [triv]
    for H in queue:
        hm = H.members
        hgens = list(H.gens)
        covered = H.bits
        for g in range(G.order):
            if covered >> g & 1:
                continue
            for h in hm:
                covered |= 1 << mul[h][g]
                covered |= 1 << mul[g][h]
            bits = _closure(G, hm, H.bits, hgens + [g])
            if bits not in found:
                if len(found) >= limits.max_subgroups:
                    raise BoundExceeded(f"more than max_subgroups={limits.max_subgroups} subgroups")
                K = Subgroup(G, bits, gens=tuple(hgens + [g]))
                found[bits] = K
                queue.append(K)
    out = sorted(found.values(), key=lambda S: (S.order, S.bits))
    G._cache["lattice"] = out
    return out


def maximal_subgroups(G: GroupTable, limits: Limits = DEFAULT_LIMITS) -> list[Subgroup]:
    lattice = all_subgroups(G, limits)
    if "maximals" in G._cache:
        return G._cache["maximals"]
    proper = [S for S in lattice if not S.is_whole()]
    maxes: list[Subgroup] = []
    for M in sorted(proper, key=lambda S: -S.order):
        if not any(M.bits & ~X.bits == 0 for X in maxes):
            maxes.append(M)
    order = {S.bits: i for i, S in enumerate(lattice)}
    maxes.sort(key=lambda S: order[S.bits])
    G._cache["maximals"] = maxes
    return maxes


def frattini(G: GroupTable, limits: Limits = DEFAULT_LIMITS) -> Subgroup:
    maxes = maximal_subgroups(G, limits)
    if not maxes:
        return whole_group(G)
    bits = reduce(lambda a, b: a & b, (M.bits for M in maxes))
    return Subgroup(G, bits)


def center(G: GroupTable) -> Subgroup:
    M = G.array
    bits = bits_of(int(x) for x in np.flatnonzero((M == M.T).all(axis=1)))
    return Subgroup(G, bits)


def centralizer(G: GroupTable, S: Subgroup | Iterable[int]) -> Subgroup:
    gens = S.generators() if isinstance(S, Subgroup) else list(S)
    M = G.array
    mask = np.ones(G.order, dtype=bool)
    for s in gens:
        mask &= M[:, s] == M[s, :]
    return Subgroup(G, bits_of(int(x) for x in np.flatnonzero(mask)))


def normalizer(G: GroupTable, H: Subgroup) -> Subgroup:
    gens = H.generators()
    bits = 0
    for g in range(G.order):
        if all(G.conj(h, g) in H for h in gens):
            bits |= 1 << g
    return Subgroup(G, bits)


def commutator_subgroup(G: GroupTable, A: Subgroup, B: Subgroup) -> Subgroup:
    """[A, B]; the generating set of commutators is closed under conjugation
    when A and B are normal, so a plain closure suffices."""
    comm = G.commutator
    seeds = {comm(a, b) for a in A.members for b in B.members}
    return subgroup_closure(G, sorted(seeds))


def derived_subgroup(G: GroupTable) -> Subgroup:
    if "derived" not in G._cache:
        W = whole_group(G)
        G._cache["derived"] = commutator_subgroup(G, W, W)
    return G._cache["derived"]


def is_normal(G: GroupTable, H: Subgroup) -> bool:
    hg = H.generators()
    return all(G.conj(h, g) in H for g in whole_group(G).gens for h in hg)


def normal_closure(G: GroupTable, seeds: Iterable[int]) -> Subgroup:
    gg = whole_group(G).gens
    H = subgroup_closure(G, seeds)
    while True:
        extra = [G.conj(h, g) for g in gg for h in H.generators()]
        K = subgroup_closure(G, extra, base=H)
        if K == H:
            return H
        H = K


def conjugacy_classes(G: GroupTable) -> list[list[int]]:
    if "classes" in G._cache:
        return G._cache["classes"]
    seen = 0
    out = []
    for x in range(G.order):
        if seen >> x & 1:
            continue
        cls = sorted({G.conj(x, g) for g in range(G.order)})
        seen |= bits_of(cls)
        out.append(cls)
    G._cache["classes"] = out
    return out


def normal_subgroups(G: GroupTable) -> list[Subgroup]:
    """All normal subgroups, as joins of normal closures of conjugacy classes.

    Does not need the full lattice, so it works above the enumeration bound.
    """
    if "normals" in G._cache:
        return G._cache["normals"]
    atoms = {}
    for cls in conjugacy_classes(G):
        N = normal_closure(G, [cls[0]])
        atoms.setdefault(N.bits, N)
    found = dict(atoms)
    found.setdefault(1 << G.identity, trivial_subgroup(G))
    frontier = list(found.values())
    atom_list = list(atoms.values())
    while frontier:
        nxt = []
        for N in frontier:
            for A in atom_list:
                if A.bits & ~N.bits == 0:
                    continue
                J = subgroup_closure(G, A.generators(), base=N)
                if J.bits not in found:
                    found[J.bits] = J
                    nxt.append(J)
        frontier = nxt
    out = sorted(found.values(), key=lambda S: (S.order, S.bits))
    G._cache["normals"] = out
    return out


def minimal_normal_subgroups(G: GroupTable) -> list[Subgroup]:
    nontriv = [N for N in normal_subgroups(G) if not N.is_trivial()]
    return [N for N in nontriv if not any(M.bits != N.bits and M.bits & ~N.bits == 0 for M in nontriv)]


def socle(G: GroupTable) -> Subgroup:
    seeds = [g for N in minimal_normal_subgroups(G) for g in N.generators()]
    return subgroup_closure(G, seeds)


# predicates


def prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n > 1 and prime_factors(n) == [n]


def is_cyclic(G: GroupTable) -> bool:
    if "cyclic" not in G._cache:
        G._cache["cyclic"] = any(G.element_order(x) == G.order for x in range(G.order))
    return G._cache["cyclic"]


def is_p_group(G: GroupTable) -> int | None:
    """The prime p if |G| is a power of p, else None (also None for |G| = 1)."""
    ps = prime_factors(G.order)
    return ps[0] if len(ps) == 1 else None


def is_elementary_abelian(H: Subgroup) -> int | None:
    """The prime p if H is a nontrivial elementary abelian p-group."""
    G = H.parent
    mem = H.members
    ps = prime_factors(H.order)
    if len(ps) != 1:
        return None
    p = ps[0]
    for x in mem:
        if G.power(x, p) != G.identity:
            return None
        for y in mem:
            if G.mul[x][y] != G.mul[y][x]:
                return None
    return p


def lower_central_series(G: GroupTable) -> list[Subgroup]:
    W = whole_group(G)
    series = [W]
    while True:
        nxt = commutator_subgroup(G, series[-1], W)
        if nxt == series[-1]:
            return series
        series.append(nxt)


def derived_series(G: GroupTable) -> list[Subgroup]:
    series = [whole_group(G)]
    while True:
        D = commutator_subgroup(G, series[-1], series[-1])
        if D == series[-1]:
            return series
        series.append(D)


def is_nilpotent(G: GroupTable) -> bool:
    if "nilpotent" not in G._cache:
        G._cache["nilpotent"] = lower_central_series(G)[-1].is_trivial()
    return G._cache["nilpotent"]


def is_soluble(G: GroupTable) -> bool:
    if "soluble" not in G._cache:
        G._cache["soluble"] = derived_series(G)[-1].is_trivial()
    return G._cache["soluble"]


def is_two_generated(G: GroupTable) -> bool:
    if "two_generated" in G._cache:
        return G._cache["two_generated"]
    if is_cyclic(G):
        result = True
    else:
        result = find_generating_pair(G) is not None
    G._cache["two_generated"] = result
    return result


def find_generating_pair(G: GroupTable) -> tuple[int, int] | None:
    """First generating pair in (x, y) order, skipping partners already known to fail."""
    full = G.all_bits
    for x in range(G.order):
        dead = 0
        for y in range(x, G.order):
            if dead >> y & 1:
                continue
            bits = _closure(G, [G.identity], 1 << G.identity, (x, y))
            if bits == full:
                return x, y
            dead |= bits
    return None


def subgroup_is_cyclic(H: Subgroup) -> bool:
    G = H.parent
    return any(G.element_order(x) == H.order for x in H.members)


def subgroup_is_abelian(H: Subgroup) -> bool:
    G = H.parent
    gens = H.generators()
    return all(G.mul[a][b] == G.mul[b][a] for a in gens for b in gens)


# Sylow and Fitting


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def sylow_subgroup(G: GroupTable, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown greedily as a maximal p-subgroup."""
    key = ("sylow", p)
    if key in G._cache:
        return G._cache[key]
    target = p_part(G.order, p)
    P = trivial_subgroup(G)
    for x in range(G.order):
        if P.order == target:
            break
        if x in P or p_part(G.element_order(x), p) != G.element_order(x):
            continue
        K = subgroup_closure(G, [x], base=P)
        if p_part(K.order, p) == K.order:
            P = K
    if P.order != target:
        raise GroupError(f"greedy p-subgroup has order {P.order}, expected {target}")
    G._cache[key] = P
    return P


def conjugate_subgroup(G: GroupTable, H: Subgroup, g: int) -> Subgroup:
    return Subgroup(G, bits_of(G.conj(h, g) for h in H.members))


def p_core(G: GroupTable, p: int) -> Subgroup:
    """O_p(G): the intersection of all Sylow p-subgroups."""
    P = sylow_subgroup(G, p)
    bits = P.bits
    for g in range(G.order):
        C = conjugate_subgroup(G, P, g)
        if C.order != P.order:
            raise GroupError("conjugate Sylow subgroup has the wrong order")
        bits &= C.bits
    return Subgroup(G, bits)


def fitting(G: GroupTable) -> Subgroup:
    seeds = []
    for p in prime_factors(G.order):
        seeds.extend(p_core(G, p).generators())
    return subgroup_closure(G, seeds)


# quotients


def quotient(G: GroupTable, N: Subgroup) -> QuotientMap:
    if not is_normal(G, N):
        raise NotNormalError("quotient requires a normal subgroup")
    mul = G.mul
    nm = N.members
    proj = [-1] * G.order
    reps: list[int] = []
    for x in range(G.order):
        if proj[x] != -1:
            continue
        idx = len(reps)
        reps.append(x)
        for k in nm:
            proj[mul[x][k]] = idx
    tmul = [[proj[mul[a][b]] for b in reps] for a in reps]
    labels = [G.labels[r] if N.is_trivial() else f"{G.labels[r]}N" for r in reps]
    T = GroupTable(tmul, identity=proj[G.identity], labels=labels,
                   provenance=f"{G.provenance} / normal subgroup of order {N.order}")
    return QuotientMap(G, T, tuple(proj), N)


# module isomorphism


def _basis(H: Subgroup) -> list[int]:
    return list(generating_set(H))


def h_module_isomorphic(V1: Subgroup, V2: Subgroup, H: Subgroup) -> bool:
    """Whether V1 and V2 are isomorphic as modules for H acting by conjugation.

    Searches every group isomorphism V1 -> V2 (choices of basis images).
    """
    G = V1.parent
    p1, p2 = is_elementary_abelian(V1), is_elementary_abelian(V2)
    if p1 is None or p2 is None:
        raise PreconditionError("modules must be elementary abelian")
    hg = H.generators()
    for V in (V1, V2):
        if not all(G.conj(v, h) in V for h in hg for v in V.generators()):
            raise PreconditionError("H does not normalise the module")
    if not all(G.mul[a][b] == G.mul[b][a] for a in V1.generators() for b in V2.generators()):
        raise PreconditionError("modules do not centralise each other")
    if V1.order != V2.order or p1 != p2:
        return False
    if V1 == V2:
        return True
    p = p1
    basis = _basis(V1)
    k = len(basis)
    coords: dict[int, tuple[int, ...]] = {}
    for exps in itertools.product(range(p), repeat=k):
        x = G.identity
        for b, e in zip(basis, exps):
            x = G.mul[x][G.power(b, e)]
        coords[x] = exps

    def image(imgs: Sequence[int], v: int) -> int:
        y = G.identity
        for b, e in zip(imgs, coords[v]):
            y = G.mul[y][G.power(b, e)]
        return y

    v2 = V2.members

    def extend(imgs: list[int], span: int):
        if len(imgs) == k:
            yield list(imgs)
            return
        for c in v2:
            if span >> c & 1:
                continue
            new_span = bits_of(G.mul[s][G.power(c, e)] for s in iter_bits(span) for e in range(p))
            imgs.append(c)
            yield from extend(imgs, new_span)
            imgs.pop()

    for imgs in extend([], 1 << G.identity):
        if all(image(imgs, G.conj(b, h)) == G.conj(image(imgs, b), h) for h in hg for b in basis):
            return True
    return False


# Gaschutz lifting


def gaschutz_lift(G: GroupTable, N: Subgroup, x: int, y: int) -> tuple[int, int]:
    """Lift a generating pair of G/N to a generating pair of G inside the cosets xN, yN."""
    if not is_normal(G, N):
        raise NotNormalError("N must be normal")
    if subgroup_closure(G, [x, y], base=N).bits != G.all_bits:
        raise PreconditionError("<x, y>N is not the whole group")
    if not is_two_generated(G):
        raise PreconditionError("G is not 2-generated")
    nm = N.members
    for a in nm:
        xa = G.mul[x][a]
        for b in nm:
            if is_generating_pair(G, xa, G.mul[y][b]):
                return xa, G.mul[y][b]
    raise SearchExhausted(f"no lift of ({x}, {y}) modulo a normal subgroup of order {N.order}")
