"""Generating graph, its complement on V(G), and the intersection graph.

Graphs are stored as bitset adjacency rows over local vertex positions
``0..m-1``; ``vertices[i]`` maps a position back to an element index (or to
a subgroup's position in the lattice, for the intersection graph).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .groups import (
    DEFAULT_LIMITS,
    GroupTable,
    Limits,
    NotTwoGeneratedError,
    PreconditionError,
    all_subgroups,
    cyclic_subgroup,
    frattini,
    is_cyclic,
    is_p_group,
    is_two_generated,
    iter_bits,
    maximal_subgroups,
)


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple[int, ...]
    adj: tuple[int, ...]
    labels: tuple[str, ...] = ()
    name: str = ""

    @property
    def n(self) -> int:
        return len(self.vertices)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def neighbors(self, i: int) -> list[int]:
        return list(iter_bits(self.adj[i]))

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def edges(self):
        for i, row in enumerate(self.adj):
            for j in iter_bits(row >> (i + 1)):
                yield i, i + 1 + j

    def position(self, vertex_id: int) -> int:
        return self.vertices.index(vertex_id)

    def check(self) -> None:
        m = self.n
        if len(self.adj) != m:
            raise ValueError("row count does not match vertex count")
        for i, row in enumerate(self.adj):
            if row >> m:
                raise ValueError(f"row {i} has bits beyond the vertex range")
            if row >> i & 1:
                raise ValueError(f"self-loop at {i}")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"edge {i}-{j} is not symmetric")


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


@dataclass(frozen=True)
class ComponentDecomposition:
    """Components numbered by their smallest vertex position."""

    component_of: tuple[int, ...]
    sizes: tuple[int, ...]
    diameters: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.sizes)

    @property
    def connected(self) -> bool:
        return self.count == 1

    @property
    def diameter(self) -> int | None:
        """Diameter of a connected graph; None when disconnected or empty."""
        return self.diameters[0] if self.connected else None

    def diameter_text(self) -> str:
        if self.count == 0:
            return "no vertices"
        return str(self.diameter) if self.connected else "infinite"


# generating pairs


def _pair_row(mul, identity: int, n: int, x: int, lower_known: int) -> int:
    """Bitset of y with <x, y> = G; positions already in ``lower_known`` are skipped."""
    full = (1 << n) - 1
    ebits = 1 << identity
    e = [identity]
    xpows = [identity]
    z = x
    while z != identity:
        xpows.append(z)
        z = mul[z][x]
    row = 0
    decided = lower_known
    for y in range(n):
        if decided >> y & 1:
            continue
        bits = _closure_raw(mul, e, ebits, (x, y))
        if bits == full:
            # <x, x^a y^k> = <x, y^k> = <x, y> when k is prime to |y|
            ypows = [(1, y)]
            z = mul[y][y]
            while z != y:
                ypows.append((len(ypows) + 1, z))
                z = mul[z][y]
            oy = len(ypows)
            mark = 0
            for k, yk in ypows:
                if _gcd(k, oy) == 1:
                    for xa in xpows:
                        mark |= 1 << mul[xa][yk]
                        mark |= 1 << mul[yk][xa]
            row |= mark
            decided |= mark
        else:
            decided |= bits
    return row


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _closure_raw(mul, base_members, base_bits, gens):
    bits = base_bits
    reps = [base_members[0]]
    for r in reps:
        row = mul[r]
        for s in gens:
            y = row[s]
            if not bits >> y & 1:
                reps.append(y)
                for h in base_members:
                    bits |= 1 << mul[h][y]
    return bits


def _rows_worker(args):
    mul, identity, xs = args
    n = len(mul)
    return [_pair_row(mul, identity, n, x, 0) for x in xs]


def generating_pair_rows(G: GroupTable, workers: int = 1) -> tuple[int, ...]:
    """Symmetric bit matrix: bit y of row x is set iff <x, y> = G (diagonal included).

    With ``workers > 1`` rows are split into contiguous blocks computed in
    separate processes; the result does not depend on the split.
    """
    if "genpairs" in G._cache:
        return G._cache["genpairs"]
    n, mul = G.order, G.mul
    if workers > 1 and n > 1:
        size = -(-n // workers)
        blocks = [list(range(s, min(n, s + size))) for s in range(0, n, size)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_rows_worker, [(mul, G.identity, b) for b in blocks]))
        rows = tuple(r for part in parts for r in part)
    else:
        out = [0] * n
        for x in range(n):
            lower = (1 << x) - 1
            out[x] |= _pair_row(mul, G.identity, n, x, lower)
            for y in iter_bits(out[x] >> (x + 1)):
                out[x + 1 + y] |= 1 << x
        rows = tuple(out)
    G._cache["genpairs"] = rows
    return rows


def generating_pair_rows_via_maximals(G: GroupTable, limits: Limits = DEFAULT_LIMITS) -> tuple[int, ...]:
    """Same matrix by a second route: x, y generate iff no maximal subgroup holds both."""
    maxes = maximal_subgroups(G, limits)
    mask = [0] * G.order
    for i, M in enumerate(maxes):
        for x in M.members:
            mask[x] |= 1 << i
    rows = []
    for x in range(G.order):
        mx = mask[x]
        rows.append(sum(1 << y for y in range(G.order) if not mx & mask[y]))
    return tuple(rows)


def vertex_set_V(G: GroupTable) -> list[int]:
    """Elements x with <x, y> = G for some y != x."""
    rows = generating_pair_rows(G)
    return [x for x in range(G.order) if rows[x] & ~(1 << x)]


def _compress(bits: int, pos: dict[int, int]) -> int:
    out = 0
    for x in iter_bits(bits):
        p = pos.get(x)
        if p is not None:
            out |= 1 << p
    return out


def generating_graph(G: GroupTable) -> SimpleGraph:
    rows = generating_pair_rows(G)
    adj = tuple(r & ~(1 << x) for x, r in enumerate(rows))
    return SimpleGraph(tuple(range(G.order)), adj, tuple(G.labels), name="Gamma")


def delta_graph(G: GroupTable) -> SimpleGraph:
    V = vertex_set_V(G)
    pos = {x: i for i, x in enumerate(V)}
    rows = generating_pair_rows(G)
    adj = tuple(_compress(rows[x] & ~(1 << x), pos) for x in V)
    return SimpleGraph(tuple(V), adj, tuple(G.labels[x] for x in V), name="Delta")


def sigma_graph(G: GroupTable) -> SimpleGraph:
    """Non-generating graph with universal vertices removed, on vertex set V(G)."""
    if "sigma" in G._cache:
        return G._cache["sigma"]
    if G.order == 1:
        raise PreconditionError("the trivial group has no non-generating graph")
    if not is_two_generated(G):
        raise NotTwoGeneratedError(f"group of order {G.order} is not 2-generated")
    V = vertex_set_V(G)
    m = len(V)
    pos = {x: i for i, x in enumerate(V)}
    rows = generating_pair_rows(G)
    full = (1 << m) - 1
    adj = tuple(full & ~_compress(rows[x], pos) & ~(1 << i) for i, x in enumerate(V))
    g = SimpleGraph(tuple(V), adj, tuple(G.labels[x] for x in V), name="Sigma")
    G._cache["sigma"] = g
    return g


# components and distances


def bfs_layers(g: SimpleGraph, src: int) -> list[int]:
    """Bitsets of the vertices at distance 0, 1, 2, ... from ``src``."""
    seen = frontier = 1 << src
    layers = [frontier]
    adj = g.adj
    while True:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)
        frontier = nxt


def distance(g: SimpleGraph, a: int, b: int) -> int | None:
    for d, layer in enumerate(bfs_layers(g, a)):
        if layer >> b & 1:
            return d
    return None


def components_and_diameters(g: SimpleGraph) -> ComponentDecomposition:
    m = g.n
    uf = UnionFind(m)
    for i, j in g.edges():
        uf.union(i, j)
    roots: dict[int, int] = {}
    comp = []
    for v in range(m):
        comp.append(roots.setdefault(uf.find(v), len(roots)))
    members = [0] * len(roots)
    for v, c in enumerate(comp):
        members[c] |= 1 << v
    diams = [0] * len(roots)
    for v in range(m):
        layers = bfs_layers(g, v)
        reach = 0
        for layer in layers:
            reach |= layer
        if reach != members[comp[v]]:
            raise AssertionError("BFS reach disagrees with union-find component")
        diams[comp[v]] = max(diams[comp[v]], len(layers) - 1)
    sizes = tuple(b.bit_count() for b in members)
    return ComponentDecomposition(tuple(comp), sizes, tuple(diams))


def isolated_vertices(g: SimpleGraph) -> list[int]:
    return [g.vertices[i] for i, row in enumerate(g.adj) if row == 0]


# intersection graph and duality


def intersection_graph(G: GroupTable, limits: Limits = DEFAULT_LIMITS) -> SimpleGraph:
    """Vertices: nontrivial proper subgroups (ids are lattice positions); edges: nontrivial meets."""
    lattice = all_subgroups(G, limits)
    ids = [i for i, S in enumerate(lattice) if not S.is_trivial() and not S.is_whole()]
    ebit = 1 << G.identity
    adj = []
    for a, i in enumerate(ids):
        bi = lattice[i].bits
        row = 0
        for b, j in enumerate(ids):
            if a != b and (bi & lattice[j].bits) != ebit:
                row |= 1 << b
        adj.append(row)
    labels = tuple(f"H{i}(order {lattice[i].order})" for i in ids)
    return SimpleGraph(tuple(ids), tuple(adj), labels, name="Intersection")


@dataclass
class DualityReport:
    applicable: bool
    reason: str = ""
    sigma_components: int = 0
    intersection_components: int = 0
    diameter_pairs: list[tuple[int, int]] = field(default_factory=list)
    passed: bool = False

    def to_json(self) -> dict:
        return {"applicable": self.applicable, "reason": self.reason,
                "sigma_components": self.sigma_components,
                "intersection_components": self.intersection_components,
                "diameter_pairs": [list(p) for p in self.diameter_pairs], "passed": self.passed}


def duality_check(G: GroupTable, limits: Limits = DEFAULT_LIMITS) -> DualityReport:
    """Compare components of Sigma(G) and I(G) when V(G) is every non-identity element.

    Components are matched through x -> <x>: the component of x in Sigma(G)
    is paired with the component of the cyclic subgroup <x> in I(G).
    """
    V = vertex_set_V(G)
    missing = [x for x in range(G.order) if x != G.identity and x not in set(V)]
    if G.identity in V or missing:
        why = "identity lies in V(G)" if G.identity in V else \
            f"{len(missing)} non-identity elements lie in no generating pair"
        return DualityReport(applicable=False, reason=why)
    sigma = sigma_graph(G)
    inter = intersection_graph(G, limits)
    cs = components_and_diameters(sigma)
    ci = components_and_diameters(inter)
    lattice = all_subgroups(G, limits)
    lat_pos = {S.bits: i for i, S in enumerate(lattice)}
    inter_pos = {sid: k for k, sid in enumerate(inter.vertices)}
    mapping: dict[int, set[int]] = {}
    for k, x in enumerate(sigma.vertices):
        C = cyclic_subgroup(G, x)
        mapping.setdefault(cs.component_of[k], set()).add(ci.component_of[inter_pos[lat_pos[C.bits]]])
    single = all(len(v) == 1 for v in mapping.values())
    image = [next(iter(v)) for v in mapping.values()] if single else []
    bijective = single and len(set(image)) == ci.count == cs.count
    pairs = [(cs.diameters[c], ci.diameters[next(iter(mapping[c]))]) for c in sorted(mapping)]
    ok = bijective and all(abs(a - b) <= 1 for a, b in pairs)
    return DualityReport(True, "", cs.count, ci.count, pairs, ok)


def multipartite_structure_check(G: GroupTable, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Whether Sigma(G) is complete multipartite with parts M_i minus Frattini, over all p+1 maximals."""
    p = is_p_group(G)
    if p is None or is_cyclic(G) or not is_two_generated(G):
        raise PreconditionError("needs a non-cyclic 2-generated p-group")
    F = frattini(G, limits)
    maxes = maximal_subgroups(G, limits)
    if len(maxes) != p + 1:
        return False
    parts = [M.bits & ~F.bits for M in maxes]
    union = 0
    for b in parts:
        if union & b:
            return False
        union |= b
    if union != G.all_bits & ~F.bits:
        return False
    sigma = sigma_graph(G)
    if set(sigma.vertices) != set(iter_bits(union)):
        return False
    part_of = {x: i for i, b in enumerate(parts) for x in iter_bits(b)}
    for i, x in enumerate(sigma.vertices):
        for j, y in enumerate(sigma.vertices):
            if i != j and sigma.has_edge(i, j) != (part_of[x] == part_of[y]):
                return False
    return True


# export


def to_dot(g: SimpleGraph, name: str = "G") -> str:
    def q(s: str) -> str:
        return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = [f"graph {q(name)} {{"]
    for i, vid in enumerate(g.vertices):
        label = g.labels[i] if g.labels else str(vid)
        lines.append(f"  v{vid} [label={q(label)}];")
    for i, j in g.edges():
        lines.append(f"  v{g.vertices[i]} -- v{g.vertices[j]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def adjacency_hex(rows, width: int) -> list[str]:
    digits = max(1, -(-width // 4))
    return [format(r, f"0{digits}x") for r in rows]


def rows_from_hex(lines: list[str]) -> tuple[int, ...]:
    return tuple(int(s, 16) for s in lines)
