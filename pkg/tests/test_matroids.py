import itertools
import random

import pytest

from dualities import gf2
from dualities import matroids as M
from dualities.algebras import det_rational

U23 = M.make_matroid([1, 2, 3], [[1, 2], [1, 3], [2, 3]])
U24 = M.named_matroid("uniform", (2, 4))
FANO = M.named_matroid("fano")
MK4 = M.named_matroid("mk4")


# ---------------------------------------------------------------------------
# independent oracles


def naive_isomorphic(m1, m2):
    """Try every ground bijection; no pruning, no shared code path."""
    if len(m1.ground) != len(m2.ground):
        return False
    b2 = set(m2.bases)
    for perm in itertools.permutations(m2.ground):
        mapping = dict(zip(m1.ground, perm))
        if {frozenset(mapping[e] for e in b) for b in m1.bases} == b2:
            return True
    return False


def forest_rank(edges, vertex_count, subset):
    """Union-find rank of an edge subset: edges minus cycles."""
    parent = list(range(vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    rank = 0
    for ei in subset:
        u, v = edges[ei]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            rank += 1
    return rank


def spanning_tree_count(vertex_count, edges):
    """Matrix-tree theorem: determinant of a reduced Laplacian."""
    lap = [[0] * vertex_count for _ in range(vertex_count)]
    for u, v in edges:
        if u == v:
            continue
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    reduced = [row[1:] for row in lap[1:]]
    return int(det_rational(reduced))


def gf2_representable(m):
    """Build the fundamental-circuit representation over GF(2) against a
    fixed basis and verify every subset rank; a matroid is binary exactly
    when this representation works."""
    if m.rank == 0:
        return True
    b0 = m.bases[0]
    belems = sorted(b0)
    unit = {e: 1 << i for i, e in enumerate(belems)}
    basis_set = set(m.bases)
    cols = {}
    for e in m.ground:
        if e in unit:
            cols[e] = unit[e]
        else:
            col = 0
            for b in belems:
                if (b0 - {b}) | {e} in basis_set:
                    col |= unit[b]
            cols[e] = col
    for k in range(len(m.ground) + 1):
        for sub in itertools.combinations(m.ground, k):
            if m.rank_of(sub) != gf2.rank_of_rows([cols[e] for e in sub]):
                return False
    return True


def all_matroids(n):
    """Every labeled matroid on ground 1..n, by brute-force validation."""
    ground = tuple(range(1, n + 1))
    out = []
    for r in range(n + 1):
        subsets = list(itertools.combinations(ground, r))
        for bits in range(1, 1 << len(subsets)):
            fam = [subsets[i] for i in range(len(subsets)) if bits >> i & 1]
            try:
                out.append(M.make_matroid(ground, fam))
            except M.MatroidError:
                pass
    return out


def naive_transversal(m):
    """Unpruned search over all rank-tuples of subsets of the non-loops."""
    r = m.rank
    nonloops = sorted(set(m.ground) - m.loops)
    if r == 0:
        return True
    basis_set = set(m.bases)

    def has_sdr(tup, sets):
        for perm in itertools.permutations(range(r)):
            if all(tup[k] in sets[perm[k]] for k in range(r)):
                return True
        return False

    pool = []
    for bits in range(1, 1 << len(nonloops)):
        pool.append(frozenset(nonloops[i] for i in range(len(nonloops)) if bits >> i & 1))
    for sets in itertools.combinations_with_replacement(pool, r):
        ok = True
        for tup in itertools.combinations(nonloops, r):
            if has_sdr(tup, sets) != (frozenset(tup) in basis_set):
                ok = False
                break
        if ok:
            return True
    return False


def random_graphic_matroid(rng, max_edges=9):
    from dualities import graphs

    nv = rng.randint(2, 6)
    edges = [(rng.randrange(v), v) for v in range(1, nv)]
    while len(edges) < rng.randint(nv - 1, max_edges):
        u, v = rng.randrange(nv), rng.randrange(nv)
        edges.append((min(u, v), max(u, v)))
    return graphs.cycle_matroid(graphs.Multigraph(nv, tuple(edges)))


# ---------------------------------------------------------------------------
# construction and validation


def test_make_uniform_accepted():
    assert U23.rank == 2
    assert len(U23.bases) == 3


def test_make_fano_accepted():
    assert len(FANO.bases) == 28
    assert FANO.rank == 3
    for line in M.FANO_LINES:
        assert frozenset(line) not in set(FANO.bases)


def test_containment_violation():
    with pytest.raises(M.ContainmentViolation) as exc:
        M.make_matroid([1, 2], [[1], [1, 2]])
    assert exc.value.small == frozenset({1})
    assert exc.value.large == frozenset({1, 2})


def test_empty_bases():
    with pytest.raises(M.EmptyBases):
        M.make_matroid([1, 2], [])


def test_exchange_failure():
    with pytest.raises(M.ExchangeFailure) as exc:
        M.make_matroid([1, 2, 3], [[1], [2, 3]])
    assert exc.value.element in exc.value.first


def test_element_not_in_ground():
    with pytest.raises(M.ElementNotInGround):
        M.make_matroid([1, 2], [[1, 5]])


def test_ground_too_large():
    with pytest.raises(M.GroundTooLarge):
        M.make_matroid(range(13), [list(range(13))])


def test_empty_matroid_is_valid():
    m = M.make_matroid([], [[]])
    assert m.rank == 0
    assert m.dual() == m


# ---------------------------------------------------------------------------
# duality


def test_dual_u23():
    assert U23.dual() == M.make_matroid([1, 2, 3], [[1], [2], [3]])


def test_dual_involution_fano():
    assert FANO.dual().dual() == FANO


def test_dual_fano_complements():
    fd = FANO.dual()
    assert len(fd.bases) == 28
    assert all(len(b) == 4 for b in fd.bases)
    assert fd.rank == 4


def test_dual_result_revalidates():
    for m in (U23, U24, FANO, MK4):
        d = m.dual()
        assert M.make_matroid(d.ground, d.bases) == d


def test_dual_basis_size_complement():
    for m in (U23, U24, FANO, MK4):
        d = m.dual()
        assert all(len(b) == len(m.ground) - m.rank for b in d.bases)


# ---------------------------------------------------------------------------
# rank


def test_rank_of_fano_full():
    assert FANO.rank_of(FANO.ground) == 3


def test_rank_of_single():
    assert U24.rank_of([1]) == 1


def test_rank_of_triangle_in_mk4():
    # K4 edge order: (0,1),(0,2),(0,3),(1,2),(1,3),(2,3); the triangle on
    # vertices 0,1,2 uses edges 0, 1, 3
    from dualities.graphs import named_graph

    k4 = named_graph("k4")
    triangle = [0, 1, 3]
    assert {k4.edges[i] for i in triangle} == {(0, 1), (0, 2), (1, 2)}
    assert MK4.rank_of(triangle) == 2
    assert forest_rank(k4.edges, 4, triangle) == 2


def test_rank_of_errors():
    with pytest.raises(M.ElementNotInGround):
        U24.rank_of([9])


def test_rank_submodularity_exhaustive():
    mats = [U24, MK4, M.named_matroid("uniform", (3, 6))]
    rng = random.Random(11)
    mats += [random_graphic_matroid(rng, max_edges=6) for _ in range(3)]
    for m in mats:
        ground = m.ground
        subsets = [
            frozenset(c)
            for k in range(len(ground) + 1)
            for c in itertools.combinations(ground, k)
        ]
        for a in subsets:
            for b in subsets:
                assert m.rank_of(a | b) + m.rank_of(a & b) <= m.rank_of(a) + m.rank_of(b)


# ---------------------------------------------------------------------------
# minors


def test_fano_delete_is_mk4():
    m = FANO.delete(7)
    ok, bij = M.is_isomorphic(m, MK4)
    assert ok
    assert naive_isomorphic(m, MK4)
    image = {frozenset(bij[e] for e in b) for b in m.bases}
    assert image == set(MK4.bases)


def test_fano_contract_structure():
    c = FANO.contract(1)
    # definition-level oracle: bases are B - 1 for each basis containing 1
    expected = {b - {1} for b in FANO.bases if 1 in b}
    assert set(c.bases) == expected
    assert c.rank == 2 and len(c.bases) == 12
    parallel_pairs = [
        p for p in itertools.combinations(c.ground, 2) if c.rank_of(p) == 1
    ]
    assert len(parallel_pairs) == 3


def test_minor_commutation():
    a = U24.delete(1).contract(2)
    b = U24.contract(2).delete(1)
    assert a == b


def test_minor_interleave_matches_joint():
    # stepwise delete/contract in any order equals the joint call, with
    # elements contracted while loops counted as deletions
    rng = random.Random(5)
    for _ in range(20):
        m = random_graphic_matroid(rng, max_edges=7)
        elems = list(m.ground)
        rng.shuffle(elems)
        dels, contrs = [], []
        result = m
        for e in elems[:3]:
            if rng.random() < 0.5:
                result = result.minor(deletions=[e])
                dels.append(e)
            else:
                (dels if e in result.loops else contrs).append(e)
                result = result.minor(contractions=[e])
        assert result == m.minor(deletions=dels, contractions=contrs)


def test_minor_overlap_error():
    with pytest.raises(M.OverlappingSets):
        U24.minor(deletions=[1], contractions=[1])


def test_dependent_contraction_error():
    with pytest.raises(M.DependentContraction):
        U24.minor(contractions=[1, 2, 3])


def test_loop_contraction_equals_deletion():
    m = M.make_matroid([1, 2], [[1]])  # 2 is a loop
    assert m.minor(contractions=[2]) == m.minor(deletions=[2])


def test_coloop_deletion_recomputes():
    m = M.make_matroid([1, 2], [[1, 2]])  # both coloops
    d = m.delete(1)
    assert d == M.make_matroid([2], [[2]])


def test_minor_results_revalidate():
    for e in FANO.ground:
        for mm in (FANO.delete(e), FANO.contract(e)):
            assert M.make_matroid(mm.ground, mm.bases) == mm


# ---------------------------------------------------------------------------
# isomorphism


def test_u24_isomorphic_to_dual():
    ok, bij = M.is_isomorphic(U24, U24.dual())
    assert ok and bij is not None
    assert naive_isomorphic(U24, U24.dual())


def test_fano_not_isomorphic_to_dual():
    ok, bij = M.is_isomorphic(FANO, FANO.dual())
    assert not ok and bij is None


def test_fano_cyclic_relabel():
    mapping = {i: i % 7 + 1 for i in range(1, 8)}
    ok, _ = M.is_isomorphic(M.relabel(FANO, mapping), FANO)
    assert ok


def test_isomorphism_respects_nonisomorphic_same_profile():
    # same size, rank, and basis count, different structure
    m1 = M.make_matroid([1, 2, 3, 4], [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4]])
    u = M.make_matroid([1, 2, 3, 4], list(itertools.combinations([1, 2, 3, 4], 2))[:5])
    assert M.is_isomorphic(m1, u)[0] == naive_isomorphic(m1, u)


def test_isomorphism_random_agrees_with_naive():
    rng = random.Random(23)
    for _ in range(15):
        m1 = random_graphic_matroid(rng, max_edges=5)
        m2 = random_graphic_matroid(rng, max_edges=5)
        assert M.is_isomorphic(m1, m2)[0] == naive_isomorphic(m1, m2)
        # and a relabeled copy is always found
        shuffled = list(m1.ground)
        rng.shuffle(shuffled)
        m3 = M.relabel(m1, dict(zip(m1.ground, shuffled)))
        assert M.is_isomorphic(m1, m3)[0]


# ---------------------------------------------------------------------------
# minor containment


def test_has_minor_reflexive():
    found, wit = M.has_minor(U24, U24)
    assert found and wit == ((), ())


def test_fano_has_no_u24_minor():
    found, _ = M.has_minor(FANO, U24)
    assert not found


def test_mk5_has_mk4_minor_with_verified_witness():
    mk5 = M.named_matroid("mk5")
    found, (dels, contrs) = M.has_minor(mk5, MK4)
    assert found
    mm = mk5.minor(deletions=dels, contractions=contrs)
    assert M.is_isomorphic(mm, MK4)[0]


def test_has_minor_too_big_target():
    assert M.has_minor(U24, M.named_matroid("uniform", (2, 5))) == (False, None)


# ---------------------------------------------------------------------------
# named matroids


def test_uniform_counts():
    assert len(U24.bases) == 6


def test_mk5_by_matrix_tree():
    mk5 = M.named_matroid("mk5")
    assert mk5.rank == 4 and len(mk5.ground) == 10
    k5_edges = list(itertools.combinations(range(5), 2))
    assert len(mk5.bases) == spanning_tree_count(5, k5_edges) == 125


def test_mk33_by_matrix_tree():
    mk33 = M.named_matroid("mk33")
    edges = [(u, v) for u in range(3) for v in range(3, 6)]
    assert len(mk33.bases) == spanning_tree_count(6, edges) == 81


def test_named_errors():
    with pytest.raises(M.UnknownName):
        M.named_matroid("nonesuch")
    with pytest.raises(M.BadParams):
        M.named_matroid("uniform", (5, 3))
    with pytest.raises(M.BadParams):
        M.named_matroid("fano", (1,))


def test_parse_named():
    assert M.parse_named("uniform:2,4") == U24
    assert M.parse_named("fano") == FANO


# ---------------------------------------------------------------------------
# direct sums


def test_direct_sum_free():
    u11 = M.named_matroid("uniform", (1, 1))
    other = M.relabel(u11, {1: 2})
    s = M.direct_sum(u11, other)
    assert s == M.make_matroid([1, 2], [[1, 2]])


def test_direct_sum_dual_distributes():
    m1 = U23
    m2 = M.relabel(M.named_matroid("uniform", (1, 2)), {1: 4, 2: 5})
    lhs = M.direct_sum(m1, m2).dual()
    rhs = M.direct_sum(m1.dual(), m2.dual())
    assert lhs == rhs


def test_direct_sum_dual_distributes_random():
    rng = random.Random(61)
    for _ in range(10):
        m1 = random_graphic_matroid(rng, max_edges=5)
        m2 = random_graphic_matroid(rng, max_edges=5)
        offset = max(m1.ground) + 1
        m2 = M.relabel(m2, {e: e + offset for e in m2.ground})
        assert M.direct_sum(m1, m2).dual() == M.direct_sum(m1.dual(), m2.dual())


def test_direct_sum_disjoint_required():
    with pytest.raises(M.GroundNotDisjoint):
        M.direct_sum(U23, U23)


def test_two_disjoint_triangles():
    from dualities import graphs

    g = graphs.Multigraph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))
    cm = graphs.cycle_matroid(g)
    c3 = graphs.cycle_matroid(graphs.named_graph("triangle"))
    left = c3
    right = M.relabel(c3, {0: 3, 1: 4, 2: 5})
    assert cm == M.direct_sum(left, right)


# ---------------------------------------------------------------------------
# classification


def test_classify_u24():
    rep = M.classify(U24)
    assert not rep.binary
    assert "U(2,4)" in rep.witnesses["binary"]
    assert not rep.graphic and not rep.regular
    assert rep.transversal is True


def test_classify_mk4():
    rep = M.classify(MK4)
    assert rep.binary and rep.regular and rep.graphic and rep.cographic
    assert "edges" in rep.witnesses["graphic"]


def test_classify_ground_too_large():
    with pytest.raises(M.GroundTooLarge):
        M.classify(M.named_matroid("uniform", (2, 11)))


def test_classify_transversal_skipped_above_seven():
    rep = M.classify(M.named_matroid("mk5"))
    assert rep.transversal is None
    assert "skipped" in rep.witnesses["transversal"]
    assert rep.graphic and not rep.cographic


def test_matroid_counts_match_known_sequence():
    # numbers of matroids on n elements up to isomorphism: 1, 2, 4, 8, 17, 38
    expected = [1, 2, 4, 8, 17, 38]
    for n in range(6):
        mats = all_matroids(n)
        classes = []
        for m in mats:
            if not any(M.is_isomorphic(m, c)[0] for c in classes):
                classes.append(m)
        assert len(classes) == expected[n]


def test_binary_matches_gf2_oracle_exhaustive_small():
    for n in range(0, 5):
        for m in all_matroids(n):
            assert (not M.has_minor(m, U24)[0]) == gf2_representable(m), m


def test_binary_matches_gf2_oracle_n5():
    mats = all_matroids(5)
    assert len(mats) > 100
    for m in mats:
        assert (not M.has_minor(m, U24)[0]) == gf2_representable(m), m


# ---------------------------------------------------------------------------
# duality axioms


def test_duality_axioms_fano():
    rep = M.check_duality_axioms(FANO)
    assert rep.all_ok
    assert set(rep.delete_contract_ok) == set(FANO.ground)


def test_duality_axioms_u24():
    assert M.check_duality_axioms(U24).all_ok


def test_duality_axioms_single_element():
    assert M.check_duality_axioms(M.named_matroid("uniform", (1, 1))).all_ok


def test_duality_axioms_with_loops_and_coloops():
    m = M.make_matroid([1, 2, 3], [[1]])  # 2, 3 loops; 1 coloop
    assert M.check_duality_axioms(m).all_ok


def test_duality_axioms_random_graphic():
    rng = random.Random(77)
    for _ in range(10):
        assert M.check_duality_axioms(random_graphic_matroid(rng)).all_ok


# ---------------------------------------------------------------------------
# transversal search


def verify_presentation(m, pres):
    r = m.rank
    basis_set = set(m.bases)
    nonloops = sorted(set(m.ground) - m.loops)
    for tup in itertools.combinations(nonloops, r):
        found = any(
            all(tup[k] in pres[p[k]] for k in range(r))
            for p in itertools.permutations(range(r))
        )
        assert found == (frozenset(tup) in basis_set)


def test_transversal_uniform():
    pres, _ = M.transversal_presentation(U24)
    assert pres is not None
    verify_presentation(U24, pres)


def test_fano_contraction_not_transversal():
    # rank 2 with three nontrivial parallel classes cannot be transversal
    pres, _ = M.transversal_presentation(FANO.contract(1))
    assert pres is None


def test_transversal_agrees_with_naive():
    rng = random.Random(9)
    mats = [U23, U24, M.make_matroid([1, 2, 3], [[1], [2]]), MK4.contract(0)]
    for _ in range(6):
        mats.append(random_graphic_matroid(rng, max_edges=5))
    for m in mats:
        if len(m.ground) - len(m.loops) > 5 or m.rank > 3:
            continue
        pres, _ = M.transversal_presentation(m)
        assert (pres is not None) == naive_transversal(m), m
        if pres is not None:
            verify_presentation(m, pres)


# ---------------------------------------------------------------------------
# formats


def test_text_roundtrip():
    for m in (U23, FANO, MK4):
        assert M.parse_matroid(m.to_text()) == m


def test_json_roundtrip():
    import json

    for m in (U23, FANO):
        assert M.parse_matroid(json.dumps(m.to_json_dict())) == m


def test_parse_comments_and_errors():
    text = "# a comment\nground: 1 2 3\nbasis: 1 2\nbasis: 1 3\nbasis: 2 3\n"
    assert M.parse_matroid(text) == U23
    with pytest.raises(M.MatroidError):
        M.parse_matroid("basis: 1 2\n")
    with pytest.raises(M.MatroidError):
        M.parse_matroid("junk\n")


def test_relabel_errors():
    with pytest.raises(M.MatroidError):
        M.relabel(U23, {1: 5})
    with pytest.raises(M.MatroidError):
        M.relabel(U23, {1: 5, 2: 5, 3: 6})
