"""Root systems, Weyl elements, and noncrossing partition lattices."""
import itertools

import pytest

from thicklat.linalg import int_mat_mul
from thicklat.quiver_rep import default_orientation
from thicklat.root_system import (
    DynkinType,
    NcElement,
    NcLattice,
    WeylElement,
    build_root_system,
    catalan_number,
    coxeter_element,
    enumerate_nc,
    is_noncrossing_partition,
    nc_join,
    nc_leq,
    nc_meet,
    nc_to_set_partition,
    reflection,
    reflection_factorization,
    reflection_length,
    simple_reflection,
)

POSITIVE_ROOT_COUNTS = {
    "A1": 1,
    "A2": 3,
    "A3": 6,
    "A4": 10,
    "D4": 12,
    "D5": 20,
    "E6": 36,
}

CATALAN = {
    "A1": 2,
    "A2": 5,
    "A3": 14,
    "A4": 42,
    "D4": 50,
    "D5": 182,
    "E6": 833,
    "E7": 4160,
    "E8": 25080,
}


def nc_lattice(name: str) -> NcLattice:
    dynkin = DynkinType.parse(name)
    rs = build_root_system(dynkin)
    c = coxeter_element(rs, default_orientation(dynkin))
    return NcLattice(rs, c)


def test_dynkin_parsing_and_validation():
    assert str(DynkinType.parse("a3")) == "A3"
    assert DynkinType.parse("E6").rank == 6
    for bad in ("Z3", "A0", "D3", "E5", "E9", "A", "7"):
        with pytest.raises(ValueError):
            DynkinType.parse(bad)


def test_diagram_edges_shapes():
    assert DynkinType.parse("A4").diagram_edges() == ((1, 2), (2, 3), (3, 4))
    assert DynkinType.parse("D4").diagram_edges() == ((1, 2), (2, 3), (2, 4))
    assert DynkinType.parse("E6").diagram_edges() == (
        (1, 3),
        (2, 4),
        (3, 4),
        (4, 5),
        (5, 6),
    )


@pytest.mark.parametrize("name,count", sorted(POSITIVE_ROOT_COUNTS.items()))
def test_positive_root_counts(name, count):
    rs = build_root_system(DynkinType.parse(name))
    assert len(rs.positive_roots) == count
    # roots come sorted by height then lexicographically, simples first
    heights = [sum(r) for r in rs.positive_roots]
    assert heights == sorted(heights)
    assert set(rs.positive_roots[: rs.rank]) == set(rs.simple_roots())


@pytest.mark.parametrize("name,value", sorted(CATALAN.items()))
def test_catalan_formula(name, value):
    dynkin = DynkinType.parse(name)
    assert catalan_number(dynkin) == value
    # cross-check against the defining product
    h = dynkin.coxeter_number()
    numerator = 1
    denominator = 1
    for d in dynkin.degrees():
        numerator *= h + d
        denominator *= d
    assert numerator % denominator == 0
    assert numerator // denominator == value


@pytest.mark.parametrize("name", ["A2", "A3", "D4"])
def test_reflection_length_against_group_bfs(name):
    """Brute-force oracle: true word length over all reflections, by BFS."""
    rs = build_root_system(DynkinType.parse(name))
    refls = [reflection(rs, r) for r in rs.positive_roots]
    identity = WeylElement(
        tuple(
            tuple(1 if i == j else 0 for j in range(rs.rank))
            for i in range(rs.rank)
        )
    )
    lengths = {identity.mat: 0}
    frontier = [identity]
    while frontier:
        nxt = []
        for w in frontier:
            for t in refls:
                prod = WeylElement(int_mat_mul(t.mat, w.mat))
                if prod.mat not in lengths:
                    lengths[prod.mat] = lengths[w.mat] + 1
                    nxt.append(prod)
        frontier = nxt
    # the whole group was generated and every length matches the rank formula
    for mat, length in lengths.items():
        assert reflection_length(WeylElement(mat)) == length


def test_reflections_are_involutions_and_permute_roots():
    rs = build_root_system(DynkinType.parse("D4"))
    for root in rs.positive_roots:
        t = reflection(rs, root)
        assert reflection_length(t) == 1
        square = WeylElement(int_mat_mul(t.mat, t.mat))
        assert square.is_identity()
        assert rs.is_root_permutation(t)
        # t sends its own root to the negative
        assert t.apply(root) == tuple(-x for x in root)


def test_coxeter_element_sink_first_convention():
    dynkin = DynkinType.parse("A2")
    rs = build_root_system(dynkin)
    quiver = default_orientation(dynkin)  # arrow 1 -> 2, sink is 2
    c = coxeter_element(rs, quiver)
    s1, s2 = simple_reflection(rs, 1), simple_reflection(rs, 2)
    assert c.mat == int_mat_mul(s2.mat, s1.mat)
    assert reflection_length(c) == 2
    # the opposite orientation gives the other Coxeter element
    from thicklat.quiver_rep import Quiver

    reversed_quiver = Quiver(dynkin, ((2, 1),))
    c_rev = coxeter_element(rs, reversed_quiver)
    assert c_rev.mat == int_mat_mul(s1.mat, s2.mat)
    assert c.mat != c_rev.mat


@pytest.mark.parametrize("name", sorted(set(CATALAN) - {"E7", "E8"}))
def test_enumerate_nc_counts(name):
    lattice = nc_lattice(name)
    assert len(lattice) == CATALAN[name]


def test_enumerate_nc_is_deterministic():
    a = nc_lattice("A3").elements
    b = nc_lattice("A3").elements
    assert [e.w.mat for e in a] == [e.w.mat for e in b]


def test_nc_element_rejects_outsiders():
    dynkin = DynkinType.parse("A3")
    rs = build_root_system(dynkin)
    c = coxeter_element(rs, default_orientation(dynkin))
    inside = {e.w.mat for e in enumerate_nc(rs, c)}
    refls = [reflection(rs, r) for r in rs.positive_roots]
    rejected = 0
    for t, u in itertools.product(refls, repeat=2):
        w = WeylElement(int_mat_mul(t.mat, u.mat))
        if w.mat in inside:
            NcElement(w, c)  # should not raise
        else:
            with pytest.raises(ValueError):
                NcElement(w, c)
            rejected += 1
    assert rejected > 0


@pytest.mark.parametrize("name", ["A3", "D4"])
def test_nc_partial_order_axioms(name):
    lattice = nc_lattice(name)
    elems = lattice.elements
    n = len(elems)
    for i in range(n):
        assert lattice.leq(i, i)
    for i in range(n):
        for j in range(n):
            if i != j and lattice.leq(i, j):
                assert not lattice.leq(j, i)
                assert elems[i].length < elems[j].length
    for i in range(n):
        for j in range(n):
            if not lattice.leq(i, j):
                continue
            for k in range(n):
                if lattice.leq(j, k):
                    assert lattice.leq(i, k)


@pytest.mark.parametrize("name", ["A3", "D4"])
def test_nc_lattice_laws(name):
    lattice = nc_lattice(name)
    n = len(lattice)
    join = [[lattice.join(i, j) for j in range(n)] for i in range(n)]
    meet = [[lattice.meet(i, j) for j in range(n)] for i in range(n)]
    bottom, top = lattice.bottom(), lattice.top()
    for i in range(n):
        assert join[i][i] == i and meet[i][i] == i
        assert join[i][bottom] == i and meet[i][top] == i
        assert join[i][top] == top and meet[i][bottom] == bottom
        for j in range(n):
            assert join[i][j] == join[j][i]
            assert meet[i][j] == meet[j][i]
            # absorption
            assert meet[i][join[i][j]] == i
            assert join[i][meet[i][j]] == i
            # compatibility with the order
            assert lattice.leq(i, join[i][j]) and lattice.leq(meet[i][j], i)
            if lattice.leq(i, j):
                assert join[i][j] == j and meet[i][j] == i
    for i, j, k in itertools.product(range(n), repeat=3):
        assert join[join[i][j]][k] == join[i][join[j][k]]
        assert meet[meet[i][j]][k] == meet[i][meet[j][k]]


def test_nc_meet_join_helpers_agree_with_lattice():
    lattice = nc_lattice("A3")
    elems = lattice.elements
    for u, w in itertools.product(elems[:7], elems[:7]):
        i, j = lattice.index[u], lattice.index[w]
        assert nc_join(u, w, elems) == elems[lattice.join(i, j)]
        assert nc_meet(u, w, elems) == elems[lattice.meet(i, j)]
        assert nc_leq(u, w) == lattice.leq(i, j)


def test_covers_are_transitive_reduction():
    lattice = nc_lattice("A3")
    n = len(lattice)
    covers = set(lattice.covers())
    for i in range(n):
        for j in range(n):
            strict = i != j and lattice.leq(i, j)
            between = any(
                k != i and k != j and lattice.leq(i, k) and lattice.leq(k, j)
                for k in range(n)
            )
            assert ((i, j) in covers) == (strict and not between)
    # covers raise length by exactly one
    for i, j in covers:
        assert lattice.elements[j].length == lattice.elements[i].length + 1


@pytest.mark.parametrize("name,points", [("A1", 2), ("A2", 3), ("A3", 4)])
def test_type_a_set_partitions(name, points):
    lattice = nc_lattice(name)
    seen = set()
    for element in lattice.elements:
        blocks = nc_to_set_partition(element)
        seen.add(blocks)
        covered = sorted(x for b in blocks for x in b)
        assert covered == list(range(1, points + 1))
        assert is_noncrossing_partition(blocks)
        # block count tracks the reflection length
        assert len(blocks) == points - element.length
    assert len(seen) == len(lattice)


def test_type_a_order_is_refinement_order():
    lattice = nc_lattice("A3")
    parts = [nc_to_set_partition(e) for e in lattice.elements]

    def refines(p, q):
        return all(any(set(b) <= set(c) for c in q) for b in p)

    n = len(lattice)
    for i in range(n):
        for j in range(n):
            assert lattice.leq(i, j) == refines(parts[i], parts[j])


def test_is_noncrossing_partition_detects_crossings():
    assert is_noncrossing_partition(((1, 3), (2, 4))) is False
    assert is_noncrossing_partition(((1, 4), (2, 3))) is True
    assert is_noncrossing_partition(((1, 2, 3, 4),)) is True


@pytest.mark.parametrize("name", ["A2", "A3", "D4"])
def test_reflection_factorization_properties(name):
    rs = build_root_system(DynkinType.parse(name))
    lattice = nc_lattice(name)
    refls = [reflection(rs, r) for r in rs.positive_roots]
    for element in lattice.elements:
        factors = reflection_factorization(rs, element.w)
        assert len(factors) == element.length
        prod = WeylElement(
            tuple(
                tuple(1 if i == j else 0 for j in range(rs.rank))
                for i in range(rs.rank)
            )
        )
        # leftmost factor first: w = t_{i1} t_{i2} ... t_{ik}
        for idx in factors:
            prod = WeylElement(int_mat_mul(prod.mat, refls[idx].mat))
        assert prod.mat == element.w.mat


def test_reflection_factorization_is_lex_minimal():
    """Oracle: exhaustive search over all shortest reflection words."""
    rs = build_root_system(DynkinType.parse("A3"))
    lattice = nc_lattice("A3")
    refls = [reflection(rs, r) for r in rs.positive_roots]
    nrefl = len(refls)
    for element in lattice.elements:
        k = element.length
        best = None
        for word in itertools.product(range(nrefl), repeat=k):
            prod_mat = None
            for idx in word:
                prod_mat = (
                    refls[idx].mat
                    if prod_mat is None
                    else int_mat_mul(prod_mat, refls[idx].mat)
                )
            if k == 0:
                prod_mat = tuple(
                    tuple(1 if i == j else 0 for j in range(rs.rank))
                    for i in range(rs.rank)
                )
            if prod_mat == element.w.mat and (best is None or word < best):
                best = word
        assert reflection_factorization(rs, element.w) == best


def test_coxeter_element_rejects_wrong_diagram():
    dynkin = DynkinType.parse("A3")
    rs = build_root_system(dynkin)

    class FakeQuiver:
        arrows = ((1, 2), (1, 3))  # not the A3 diagram

    with pytest.raises(ValueError):
        coxeter_element(rs, FakeQuiver())
