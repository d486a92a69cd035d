"""Koszul complexes: polynomial arithmetic, homology, module tensoring."""
import random
from fractions import Fraction
from math import comb

import pytest

from thicklat.koszul import (
    FreeComplex,
    Poly,
    PolyRing,
    RationalPoint,
    cone_of_scalar,
    evaluate,
    homology_dims,
    koszul_complex,
    koszul_tensor_module,
    tensor,
    unit_complex,
)
from thicklat.quiver_rep import default_orientation, tree_module
from thicklat.root_system import DynkinType

RING = PolyRing(("x", "y"))
X = Poly.variable(RING, "x")
Y = Poly.variable(RING, "y")


def random_poly(ring, rng, nterms=3, degree=2):
    terms = []
    for _ in range(nterms):
        exps = tuple(rng.randint(0, degree) for _ in ring.variables)
        coeff = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        terms.append((exps, coeff))
    return Poly(ring, tuple(terms))


def random_point(rng, nvars, avoid_origin=False):
    while True:
        coords = tuple(
            Fraction(rng.randint(-8, 8), rng.randint(1, 8))
            for _ in range(nvars)
        )
        if not avoid_origin or any(c != 0 for c in coords):
            return RationalPoint(coords)


# ---------------------------------------------------------------------------
# polynomials


def test_poly_ring_laws_on_random_elements():
    rng = random.Random(2024)
    zero = Poly.zero(RING)
    one = Poly.const(RING, 1)
    for _ in range(40):
        f = random_poly(RING, rng)
        g = random_poly(RING, rng)
        h = random_poly(RING, rng)
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f + zero == f
        assert f * one == f
        assert f - f == zero
        assert f * zero == zero


def test_poly_evaluation_is_a_ring_homomorphism():
    rng = random.Random(9)
    for _ in range(30):
        f = random_poly(RING, rng)
        g = random_poly(RING, rng)
        pt = random_point(rng, 2)
        assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)
        assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
        assert (-f).evaluate(pt) == -f.evaluate(pt)


def test_poly_string_rendering():
    assert str(Poly.zero(RING)) == "0"
    assert str(X) == "x"
    f = X * X - Poly.const(RING, Fraction(3, 4)) * Y
    assert str(f) == "x^2 - 3/4*y"
    assert str(Poly.const(RING, -2)) == "-2"


def test_poly_rejects_foreign_ring():
    other = PolyRing(("z",))
    with pytest.raises(ValueError):
        X + Poly.variable(other, "z")
    with pytest.raises(ValueError):
        Poly.variable(RING, "z")


def test_rational_point_validation():
    pt = RationalPoint(("1/2", 3))
    assert pt.coordinates == (Fraction(1, 2), Fraction(3))
    with pytest.raises(ValueError):
        X.evaluate(RationalPoint((1,)))  # wrong arity


# ---------------------------------------------------------------------------
# complexes


def test_unit_and_cone_shapes():
    assert unit_complex(RING).rank_map() == {0: 1}
    cone = cone_of_scalar(RING, X)
    assert cone.rank_map() == {0: 1, 1: 1}
    assert cone.diff_map()[1] == ((X,),)


def test_free_complex_rejects_nonsquaring_differential():
    ranks = ((0, 1), (1, 1), (2, 1))
    one = Poly.const(RING, 1)
    with pytest.raises(ValueError):
        FreeComplex(RING, ranks, ((1, ((one,),)), (2, ((one,),))))


def test_free_complex_rejects_bad_shapes():
    with pytest.raises(ValueError):
        FreeComplex(RING, ((0, 2), (1, 1)), ((1, ((X,),)),))


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_koszul_ranks_are_binomial(r):
    ring = PolyRing(tuple(f"x{i}" for i in range(r)))
    gens = [Poly.variable(ring, f"x{i}") for i in range(r)]
    complex_ = koszul_complex(ring, gens)
    assert complex_.rank_map() == {n: comb(r, n) for n in range(r + 1)}


def test_tensor_is_associative_up_to_homology():
    a = cone_of_scalar(RING, X)
    b = cone_of_scalar(RING, Y)
    c = cone_of_scalar(RING, X + Y)
    left = tensor(tensor(a, b), c)
    right = tensor(a, tensor(b, c))
    assert left.rank_map() == right.rank_map()
    rng = random.Random(31)
    points = [RationalPoint((0, 0))] + [random_point(rng, 2) for _ in range(5)]
    for pt in points:
        assert homology_dims(evaluate(left, pt)) == homology_dims(
            evaluate(right, pt)
        )


def test_tensor_commutes_up_to_homology():
    a = cone_of_scalar(RING, X * Y - Poly.const(RING, 1))
    b = cone_of_scalar(RING, X + Y)
    rng = random.Random(12)
    for _ in range(5):
        pt = random_point(rng, 2)
        assert homology_dims(evaluate(tensor(a, b), pt)) == homology_dims(
            evaluate(tensor(b, a), pt)
        )


# ---------------------------------------------------------------------------
# homology


def test_koszul_homology_at_origin():
    complex_ = koszul_complex(RING, (X, Y))
    dims = homology_dims(evaluate(complex_, RationalPoint((0, 0))))
    assert dims == {0: 1, 1: 2, 2: 1}


def test_koszul_acyclic_off_the_common_zero_locus():
    complex_ = koszul_complex(RING, (X, Y))
    rng = random.Random(77)
    for _ in range(20):
        pt = random_point(rng, 2, avoid_origin=True)
        dims = homology_dims(evaluate(complex_, pt))
        assert all(v == 0 for v in dims.values())
    # a point killing one generator but not the other is still acyclic
    dims = homology_dims(evaluate(complex_, RationalPoint((0, 5))))
    assert all(v == 0 for v in dims.values())


def test_cone_of_unit_is_acyclic_everywhere():
    complex_ = cone_of_scalar(RING, Poly.const(RING, 1))
    rng = random.Random(4)
    for _ in range(5):
        pt = random_point(rng, 2)
        assert all(
            v == 0 for v in homology_dims(evaluate(complex_, pt)).values()
        )
    assert all(
        v == 0
        for v in homology_dims(
            evaluate(complex_, RationalPoint((0, 0)))
        ).values()
    )


def test_repeated_generator_detects_zero_locus():
    complex_ = koszul_complex(RING, (X, X))
    at_zero = homology_dims(evaluate(complex_, RationalPoint((0, 7))))
    assert at_zero == {0: 1, 1: 2, 2: 1}
    away = homology_dims(evaluate(complex_, RationalPoint((1, 0))))
    assert all(v == 0 for v in away.values())


def test_euler_characteristic_vanishes():
    rng = random.Random(18)
    complex_ = koszul_complex(RING, (X * Y, X + Y))
    for _ in range(10):
        pt = random_point(rng, 2)
        dims = homology_dims(evaluate(complex_, pt))
        assert sum((-1) ** n * d for n, d in dims.items()) == 0


def test_single_generator_homology():
    complex_ = koszul_complex(RING, (X,))
    dims = homology_dims(evaluate(complex_, RationalPoint((0, 3))))
    assert dims == {0: 1, 1: 1}


# ---------------------------------------------------------------------------
# tensoring with a module


def test_module_tensor_at_origin_and_off_locus():
    complex_ = koszul_complex(RING, (X, Y))
    quiver = default_orientation(DynkinType.parse("A2"))
    module = tree_module(quiver, (1, 1))
    vectors = koszul_tensor_module(complex_, module, RationalPoint((0, 0)))
    assert vectors == ((0, (1, 1)), (1, (2, 2)), (2, (1, 1)))
    rng = random.Random(6)
    for _ in range(10):
        pt = random_point(rng, 2, avoid_origin=True)
        vectors = koszul_tensor_module(complex_, module, pt)
        assert all(v == (0, 0) for _, v in vectors)


def test_module_tensor_scales_with_dimension_vector():
    complex_ = koszul_complex(RING, (X, Y))
    quiver = default_orientation(DynkinType.parse("D4"))
    module = tree_module(quiver, (1, 2, 1, 1))
    vectors = koszul_tensor_module(complex_, module, RationalPoint((0, 0)))
    expected = {0: 1, 1: 2, 2: 1}
    assert vectors == tuple(
        (n, tuple(expected[n] * d for d in module.dim)) for n in range(3)
    )


def test_module_tensor_vectors_are_exact_multiples():
    complex_ = koszul_complex(RING, (X - Poly.const(RING, 1), Y))
    quiver = default_orientation(DynkinType.parse("A3"))
    module = tree_module(quiver, (0, 1, 1))
    rng = random.Random(14)
    points = [RationalPoint((1, 0))] + [random_point(rng, 2) for _ in range(5)]
    for pt in points:
        for _, vec in koszul_tensor_module(complex_, module, pt):
            ratios = {
                v // d for v, d in zip(vec, module.dim) if d
            }
            assert len(ratios) == 1
            multiple = next(iter(ratios))
            assert vec == tuple(multiple * d for d in module.dim)
