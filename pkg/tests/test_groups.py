import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import BIG_LIMITS, corpus, corpus_group
from sigmagraph.families import abelian, cyclic, dihedral, quaternion8, sym
from sigmagraph.groups import (
    DEFAULT_LIMITS,
    BoundExceeded,
    GroupTable,
    InvalidGroupError,
    Limits,
    NotNormalError,
    PermSpec,
    PreconditionError,
    Subgroup,
    all_subgroups,
    build_from_permutations,
    center,
    centralizer,
    cyclic_subgroup,
    derived_subgroup,
    fitting,
    frattini,
    gaschutz_lift,
    h_module_isomorphic,
    is_cyclic,
    is_generating_pair,
    is_nilpotent,
    is_normal,
    is_p_group,
    is_soluble,
    is_two_generated,
    maximal_subgroups,
    minimal_normal_subgroups,
    normal_subgroups,
    quotient,
    socle,
    subgroup_closure,
    subgroup_table,
    sylow_subgroup,
)


def perm_index(G, perm):
    return G.meta["permutations"].index(tuple(perm))


def S3():
    return build_from_permutations(PermSpec(3, ((1, 0, 2), (1, 2, 0))))


# construction


def test_s3_from_permutations():
    G = S3()
    assert G.order == 6
    G.check()
    assert G.identity == 0 and G.meta["permutations"][0] == (0, 1, 2)


def test_a5_from_permutations():
    G = build_from_permutations(PermSpec(5, ((1, 2, 3, 4, 0), (0, 1, 3, 4, 2))))
    assert G.order == 60
    assert len(oracles.closure(G.mul, G.identity, (1, 2))) == 60
    assert not is_soluble(G)


def test_trivial_group_from_permutations():
    G = build_from_permutations(PermSpec(1, ((0,),)))
    assert G.order == 1
    assert frattini(G).is_whole()


def test_invalid_permutation_rejected():
    with pytest.raises(InvalidGroupError):
        PermSpec(3, ((0, 0, 1),))
    with pytest.raises(InvalidGroupError):
        PermSpec(3, ())


def test_closure_over_element_bound():
    spec = PermSpec(5, ((1, 2, 3, 4, 0), (1, 0, 2, 3, 4)))
    with pytest.raises(BoundExceeded, match="max_elements"):
        build_from_permutations(spec, Limits(max_elements=100))


def test_permutation_product_applies_left_factor_first():
    G = S3()
    perms = G.meta["permutations"]
    for x in range(6):
        for y in range(6):
            composed = tuple(perms[y][perms[x][i]] for i in range(3))
            assert perms[G.mul[x][y]] == composed


def test_non_latin_table_rejected():
    bad = [[0, 1, 2], [1, 2, 0], [2, 2, 1]]
    with pytest.raises(InvalidGroupError):
        GroupTable(bad).check()


def test_non_associative_latin_square_rejected():
    # a loop of order 5 that is Latin with identity 0 but not associative
    loop = [[0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0]]
    assert not oracles.is_associative(loop)
    with pytest.raises(InvalidGroupError, match="associ"):
        GroupTable(loop).check()


def test_canonical_roundtrip():
    G = quaternion8()
    H = GroupTable.from_canonical_bytes(G.canonical_bytes())
    assert np.array_equal(G.array, H.array)
    assert G.content_hash() == H.content_hash()
    assert cyclic(8).content_hash() != G.content_hash()


# closure and generation


def test_closure_examples():
    C6 = cyclic(6)
    assert subgroup_closure(C6, [1]).is_whole()
    G = S3()
    t = perm_index(G, (1, 0, 2))
    assert subgroup_closure(G, [t]).order == 2
    assert subgroup_closure(G, [t, perm_index(G, (1, 2, 0))]).is_whole()
    assert subgroup_closure(G, []).is_trivial()


def test_generating_pair_examples():
    assert is_generating_pair(cyclic(4), 1, 0)
    V = abelian([2, 2])
    assert is_generating_pair(V, 1, 2)
    Q = quaternion8()
    i, j = Q.labels.index("i"), Q.labels.index("j")
    assert is_generating_pair(Q, i, j)


@given(st.sampled_from(["S4", "D6", "Q8", "C3xA4", "F20", "C2xC2xC3"]), st.data())
def test_closure_idempotent_and_monotone(name, data):
    G = corpus_group(name)
    seeds = data.draw(st.sets(st.integers(0, G.order - 1), max_size=3))
    more = data.draw(st.sets(st.integers(0, G.order - 1), max_size=2))
    S = subgroup_closure(G, seeds)
    assert subgroup_closure(G, S.members) == S
    assert S.issubset(subgroup_closure(G, seeds | more))
    assert S.members == sorted(oracles.closure(G.mul, G.identity, tuple(seeds)))


# lattice


def test_lattice_examples():
    assert [S.order for S in all_subgroups(cyclic(6))] == [1, 2, 3, 6]
    assert len(all_subgroups(S3())) == 6
    assert len(all_subgroups(abelian([2, 2]))) == 5


def test_lattice_order_is_deterministic():
    subs = all_subgroups(corpus_group("S4"))
    keys = [(S.order, S.bits) for S in subs]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


@pytest.mark.parametrize("d", corpus(360), ids=lambda d: d["name"])
def test_lattice_recount(d):
    G = corpus_group(d["name"])
    ours = {frozenset(S.members) for S in all_subgroups(G)}
    assert ours == oracles.subgroups(G)


def test_lattice_bounds():
    with pytest.raises(BoundExceeded, match="max_lattice_order"):
        all_subgroups(sym(5), Limits(max_lattice_order=100))
    with pytest.raises(BoundExceeded, match="max_subgroups"):
        all_subgroups(sym(4), Limits(max_subgroups=10))


def test_maximal_examples():
    assert len(maximal_subgroups(abelian([3, 3]))) == 4
    assert [M.order for M in maximal_subgroups(cyclic(4))] == [2]
    assert sorted(M.order for M in maximal_subgroups(S3())) == [2, 2, 2, 3]


def test_frattini_examples():
    assert frattini(cyclic(4)).members == [0, 2]
    assert frattini(S3()).is_trivial()
    Q = quaternion8()
    assert frattini(Q) == center(Q)
    assert sorted(Q.labels[x] for x in frattini(Q).members) == ["-1", "1"]


@pytest.mark.parametrize("d", corpus(60, two_generated=None), ids=lambda d: d["name"])
def test_frattini_matches_oracle(d):
    G = corpus_group(d["name"])
    assert frattini(G).bits == sum(1 << x for x in oracles.frattini(G))


@pytest.mark.parametrize("name", ["Q8", "D4", "C4xC4", "Dic3", "C3:C8", "SL(2,3)", "C4xS3", "C2xA4"])
def test_frattini_is_the_set_of_non_generators(name):
    G = corpus_group(name)
    F = frattini(G)
    assert is_normal(G, F)
    assert F.bits == sum(1 << x for x in oracles.frattini(G))
    gen = [[oracles.generates(G, x, y) for y in range(G.order)] for x in range(G.order)]
    nongen = []
    for g in range(G.order):
        if all(gen[x][y] or len(oracles.closure(G.mul, G.identity, (x, y, g))) < G.order
               for x in range(G.order) for y in range(G.order)):
            nongen.append(g)
    assert F.members == nongen


# characteristic subgroups and predicates


def test_derived_center_centralizer():
    assert derived_subgroup(S3()).order == 3
    Q = quaternion8()
    assert center(Q).order == 2
    D6 = dihedral(6)
    C3 = subgroup_closure(D6, [2])
    assert C3.order == 3
    Cen = centralizer(D6, C3)
    assert Cen.order == 6 and is_cyclic_subgroup(Cen)


def is_cyclic_subgroup(S):
    return any(cyclic_subgroup(S.parent, x) == S for x in S.members)


def test_predicates():
    assert not is_nilpotent(S3())
    assert is_p_group(quaternion8()) == 2
    assert is_p_group(S3()) is None
    assert not is_two_generated(abelian([2, 2, 2]))
    assert is_two_generated(sym(4))
    assert is_cyclic(cyclic(9)) and not is_cyclic(abelian([3, 3]))
    assert is_soluble(sym(4)) and not is_soluble(corpus_group("A5"))


def test_sylow_fitting_socle():
    G = S3()
    assert sylow_subgroup(G, 3).order == 3
    assert fitting(G).order == 3
    assert socle(G).order == 3
    assert len(minimal_normal_subgroups(G)) == 1
    S4 = corpus_group("S4")
    assert fitting(S4).order == 4
    assert sylow_subgroup(S4, 2).order == 8


@pytest.mark.parametrize("name", ["S4", "SL(2,3)", "C3xA4", "D6", "Q8xC3", "F20", "C5:C8"])
def test_normal_subgroups_against_lattice(name):
    G = corpus_group(name)
    ours = {N.bits for N in normal_subgroups(G)}
    expected = {S.bits for S in all_subgroups(G) if is_normal(G, S)}
    assert ours == expected
    naive = {sum(1 << x for x in S) for S in oracles.subgroups(G) if oracles.is_normal(G, S)}
    assert ours == naive


# quotients


def test_quotient_examples():
    G = S3()
    Q = quotient(G, derived_subgroup(G))
    Q.check()
    assert Q.target.order == 2
    Q8 = quaternion8()
    q = quotient(Q8, center(Q8))
    assert q.target.order == 4 and q.target.is_abelian()
    assert all(q.target.element_order(x) <= 2 for x in range(4))
    same = quotient(G, Subgroup(G, 1 << G.identity))
    assert sorted(same.projection) == list(range(6))


def test_quotient_rejects_non_normal():
    G = S3()
    with pytest.raises(NotNormalError):
        quotient(G, subgroup_closure(G, [perm_index(G, (1, 0, 2))]))


def test_quotient_canonical_coset_order():
    G = dihedral(6)
    N = subgroup_closure(G, [3])
    q = quotient(G, N)
    reps = [min(x for x in range(G.order) if q.projection[x] == c) for c in range(q.target.order)]
    assert reps == sorted(reps)


# modules


def _two_c3_with_flip(invert_second):
    # C3 on {0,1,2} and C3 on {3,4,5}; h inverts the first, and the second if asked
    h = (0, 2, 1, 3, 5, 4) if invert_second else (0, 2, 1, 3, 4, 5)
    G = build_from_permutations(PermSpec(6, ((1, 2, 0, 3, 4, 5), (0, 1, 2, 4, 5, 3), h)))
    V1 = subgroup_closure(G, [perm_index(G, (1, 2, 0, 3, 4, 5))])
    V2 = subgroup_closure(G, [perm_index(G, (0, 1, 2, 4, 5, 3))])
    H = subgroup_closure(G, [perm_index(G, h)])
    return G, V1, V2, H


def test_h_module_isomorphism_examples():
    G, V1, V2, H = _two_c3_with_flip(invert_second=False)
    assert G.order == 18
    assert h_module_isomorphic(V1, V1, H)
    assert not h_module_isomorphic(V1, V2, H)
    _, V1, V2, H = _two_c3_with_flip(invert_second=True)
    assert h_module_isomorphic(V1, V2, H)


def test_h_module_isomorphism_preconditions():
    G = corpus_group("S4")
    H = sylow_subgroup(G, 3)
    with pytest.raises(PreconditionError):
        h_module_isomorphic(H, H, sylow_subgroup(G, 2))


def test_h_module_isomorphism_detects_frobenius_twist():
    # GF(4) with w acting as w versus as w^2 = frobenius(w): isomorphic modules
    from sigmagraph.families import ScalarSemidirectSpec, scalar_modules_isomorphic
    assert scalar_modules_isomorphic(4, [2], 4, [3])
    assert not scalar_modules_isomorphic(7, [2], 7, [4])
    with pytest.raises(InvalidGroupError, match="isomorphic"):
        ScalarSemidirectSpec(3, 1, (4, 4), ((2,), (3,))).validate()


# Gaschutz


def test_gaschutz_examples():
    G = S3()
    N = derived_subgroup(G)
    t = perm_index(G, (1, 0, 2))
    a, b = gaschutz_lift(G, N, t, G.identity)
    assert is_generating_pair(G, a, b)
    assert G.mul[G.inv[t]][a] in N and b in N
    C6 = cyclic(6)
    assert gaschutz_lift(C6, Subgroup(C6, 1), 1, 0) == (1, 0)
    V = abelian([2, 2])
    N = subgroup_closure(V, [1])
    a, b = gaschutz_lift(V, N, 2, 0)
    assert is_generating_pair(V, a, b)


def test_gaschutz_preconditions():
    G = S3()
    with pytest.raises(PreconditionError):
        gaschutz_lift(G, Subgroup(G, 1), G.identity, G.identity)
    with pytest.raises(NotNormalError):
        gaschutz_lift(G, subgroup_closure(G, [perm_index(G, (1, 0, 2))]), 1, 2)


# primitive soluble groups: vertex membership of hn depends only on h


@pytest.mark.parametrize("name", ["S3", "D5", "D7", "A4", "S4", "F20", "C7:C3", "AGL(1,7)"])
def test_primitive_vertex_criterion(name):
    from sigmagraph.classifier import core_free_maximal
    from sigmagraph.graphs import vertex_set_V
    G = corpus_group(name)
    H = core_free_maximal(G)
    (N,) = minimal_normal_subgroups(G)
    assert N.order * H.order == G.order
    VG = set(vertex_set_V(G))
    HT, emb = subgroup_table(H)
    VH = {emb[x] for x in vertex_set_V(HT)}
    for h in H.members:
        if h == G.identity:
            continue
        for n in N.members:
            assert (G.mul[h][n] in VG) == (h in VH)


def test_default_limits():
    assert DEFAULT_LIMITS.max_elements == 5000
    assert DEFAULT_LIMITS.max_lattice_order == 360
    assert DEFAULT_LIMITS.max_subgroups == 20000
    assert BIG_LIMITS.max_lattice_order > 588
