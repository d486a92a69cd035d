"""Exact linear algebra: integer rank, field operations, rref, solving."""
import random
from fractions import Fraction

import pytest

from thicklat.linalg import (
    GF,
    QQ,
    int_identity,
    int_mat_inverse,
    int_mat_mul,
    int_rank,
    kron,
    left_nullspace,
    mat_mul,
    nullspace,
    rank,
    rref,
    solve,
)


def fraction_rank(rows):
    """Independent rank oracle: plain Gaussian elimination over Fraction."""
    mat = [[Fraction(x) for x in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        r += 1
        if r == nrows:
            break
    return r


def random_int_matrix(rng, nrows, ncols, low=-5, high=5):
    return [[rng.randint(low, high) for _ in range(ncols)] for _ in range(nrows)]


def test_int_rank_matches_fraction_elimination():
    rng = random.Random(20240915)
    for _ in range(120):
        nrows = rng.randint(1, 6)
        ncols = rng.randint(1, 6)
        mat = random_int_matrix(rng, nrows, ncols)
        assert int_rank(mat) == fraction_rank(mat)


def test_int_rank_low_rank_products():
    rng = random.Random(7)
    for _ in range(40):
        n, k, m = rng.randint(2, 5), rng.randint(1, 2), rng.randint(2, 5)
        a = random_int_matrix(rng, n, k)
        b = random_int_matrix(rng, k, m)
        prod = int_mat_mul(a, b)
        assert int_rank(prod) == fraction_rank(prod) <= k


def test_int_mat_inverse_round_trip():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 4)
        mat = int_identity(n)
        mat = [list(row) for row in mat]
        for _ in range(6):
            i, j = rng.randrange(n), rng.randrange(n)
            if i == j:
                continue
            c = rng.randint(-2, 2)
            for col in range(n):
                mat[i][col] += c * mat[j][col]
        inv = int_mat_inverse(mat)
        assert int_mat_mul(mat, inv) == int_identity(n)
        assert int_mat_mul(inv, mat) == int_identity(n)


def test_int_mat_inverse_rejects_singular():
    with pytest.raises(ValueError):
        int_mat_inverse([[1, 2], [2, 4]])


@pytest.mark.parametrize("p", [2, 3, 5, 7, 13])
def test_gf_field_axioms(p):
    field = GF(p)
    elems = list(field.elements())
    assert len(elems) == p
    for a in elems:
        assert field.add(a, field.zero) == a
        assert field.mul(a, field.one) == a
        assert field.add(a, field.neg(a)) == field.zero
        if a != field.zero:
            assert field.mul(a, field.inv(a)) == field.one
            # Fermat: a^(p-1) = 1
            power = field.one
            for _ in range(p - 1):
                power = field.mul(power, a)
            assert power == field.one
    for a in elems:
        for b in elems:
            assert field.add(a, b) == (a + b) % p
            assert field.mul(a, b) == (a * b) % p
            assert field.sub(a, b) == (a - b) % p


def test_gf_requires_prime():
    for bad in (0, 1, 4, 6, 9, 100):
        with pytest.raises(ValueError):
            GF(bad)


def test_rational_field_ops():
    assert QQ.char == 0
    a, b = Fraction(3, 4), Fraction(-2, 5)
    assert QQ.add(a, b) == a + b
    assert QQ.mul(a, b) == a * b
    assert QQ.inv(a) == Fraction(4, 3)
    with pytest.raises(ZeroDivisionError):
        QQ.inv(QQ.zero)


@pytest.mark.parametrize("field", [GF(2), GF(5), QQ])
def test_rref_and_rank_properties(field):
    rng = random.Random(99)
    for _ in range(60):
        nrows = rng.randint(1, 5)
        ncols = rng.randint(1, 5)
        mat = [
            [field.from_int(rng.randint(-4, 4)) for _ in range(ncols)]
            for _ in range(nrows)
        ]
        reduced, pivots = rref(field, mat)
        r = rank(field, mat)
        assert len(pivots) == r
        # pivot columns carry unit vectors
        for k, col in enumerate(pivots):
            for i in range(len(reduced)):
                expect = field.one if i == k else field.zero
                assert reduced[i][col] == expect
        # rank of the transpose agrees
        transpose = [list(col) for col in zip(*mat)] if mat[0] else []
        if transpose:
            assert rank(field, transpose) == r
        # nullity complements rank
        null = nullspace(field, mat, ncols=ncols)
        assert len(null) == ncols - r
        for vec in null:
            for row in mat:
                acc = field.zero
                for x, y in zip(row, vec):
                    acc = field.add(acc, field.mul(x, y))
                assert acc == field.zero
        lnull = left_nullspace(field, mat, nrows=nrows)
        assert len(lnull) == nrows - r
        for vec in lnull:
            for j in range(ncols):
                acc = field.zero
                for i in range(nrows):
                    acc = field.add(acc, field.mul(vec[i], mat[i][j]))
                assert acc == field.zero


@pytest.mark.parametrize("field", [GF(3), QQ])
def test_solve_consistent_and_inconsistent(field):
    rng = random.Random(5)
    for _ in range(40):
        nrows = rng.randint(1, 4)
        ncols = rng.randint(1, 4)
        a = [
            [field.from_int(rng.randint(-3, 3)) for _ in range(ncols)]
            for _ in range(nrows)
        ]
        x = [
            [field.from_int(rng.randint(-3, 3))] for _ in range(ncols)
        ]
        b = mat_mul(field, a, x)
        sol = solve(field, a, b)
        assert sol is not None
        assert mat_mul(field, a, sol) == tuple(tuple(row) for row in b)
    # x + y = 0 and x + y = 1 cannot both hold
    assert solve(field, [[1, 1], [1, 1]], [[field.zero], [field.one]]) is None


def test_kron_rank_is_multiplicative():
    rng = random.Random(17)
    for _ in range(25):
        ar, ac = rng.randint(1, 3), rng.randint(1, 3)
        br, bc = rng.randint(1, 3), rng.randint(1, 3)
        a = [[Fraction(rng.randint(-3, 3)) for _ in range(ac)] for _ in range(ar)]
        b = [[Fraction(rng.randint(-3, 3)) for _ in range(bc)] for _ in range(br)]
        product = kron(a, b)
        assert rank(QQ, product) == rank(QQ, a) * rank(QQ, b)


def test_mat_mul_matches_int_mat_mul():
    rng = random.Random(3)
    for _ in range(20):
        n, k, m = rng.randint(1, 4), rng.randint(1, 4), rng.randint(1, 4)
        a = random_int_matrix(rng, n, k)
        b = random_int_matrix(rng, k, m)
        over_q = mat_mul(QQ, a, b)
        assert [[int(x) for x in row] for row in over_q] == [
            list(row) for row in int_mat_mul(a, b)
        ]
