"""Koszul complexes over rational polynomial rings.

Complexes are graded homologically: differentials lower the degree by
one, and the cone on a scalar f sits in degrees 1 and 0.  All
coefficients are exact rationals; evaluation at a rational point gives
a complex of Fraction matrices whose homology is computed by exact
elimination.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .linalg import QQ, kron, rank
from .quiver_rep import TreeModule


@dataclass(frozen=True)
class PolyRing:
    """A polynomial ring over the rationals with named variables."""

    variables: tuple[str, ...]

    def __post_init__(self):
        variables = tuple(str(v) for v in self.variables)
        object.__setattr__(self, "variables", variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        for v in variables:
            if not v.isidentifier():
                raise ValueError(f"bad variable name {v!r}")

    @property
    def nvars(self) -> int:
        return len(self.variables)


@dataclass(frozen=True)
class Poly:
    """A polynomial: sorted (exponents, coefficient) terms, extras
    stripped."""

    ring: PolyRing
    terms: tuple

    def __post_init__(self):
        merged: dict = {}
        for raw_exps, raw_c in self.terms:
            exps = tuple(int(e) for e in raw_exps)
            if len(exps) != self.ring.nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps!r}")
            merged[exps] = merged.get(exps, Fraction(0)) + Fraction(raw_c)
        cleaned = tuple((e, c) for e, c in merged.items() if c != 0)
        object.__setattr__(self, "terms", tuple(sorted(cleaned)))

    @staticmethod
    def const(ring: PolyRing, value) -> "Poly":
        return Poly(ring, (((0,) * ring.nvars, Fraction(value)),))

    @staticmethod
    def zero(ring: PolyRing) -> "Poly":
        return Poly(ring, ())

    @staticmethod
    def variable(ring: PolyRing, name: str) -> "Poly":
        if name not in ring.variables:
            raise ValueError(f"unknown variable {name!r}")
        exps = tuple(
            1 if v == name else 0 for v in ring.variables
        )
        return Poly(ring, ((exps, Fraction(1)),))

    def _combine(self, other: "Poly", sign: int) -> "Poly":
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")
        acc: dict = dict(self.terms)
        for exps, c in other.terms:
            acc[exps] = acc.get(exps, Fraction(0)) + sign * c
        return Poly(self.ring, tuple(acc.items()))

    def __add__(self, other: "Poly") -> "Poly":
        return self._combine(other, 1)

    def __sub__(self, other: "Poly") -> "Poly":
        return self._combine(other, -1)

    def __neg__(self) -> "Poly":
        return Poly(self.ring, tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other: "Poly") -> "Poly":
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")
        acc: dict = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                key = tuple(a + b for a, b in zip(e1, e2))
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
        return Poly(self.ring, tuple(acc.items()))

    def scale(self, value) -> "Poly":
        v = Fraction(value)
        return Poly(self.ring, tuple((e, c * v) for e, c in self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, point) -> Fraction:
        coords = _point_coords(self.ring, point)
        total = Fraction(0)
        for exps, c in self.terms:
            value = c
            for x, e in zip(coords, exps):
                value *= x**e
            total += value
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exps, c in reversed(self.terms):
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.variables, exps)
                if e
            ]
            if not factors or abs(c) != 1:
                factors.insert(0, str(abs(c)))
            body = "*".join(factors)
            chunks.append(("- " if c < 0 else "+ ") + body)
        first = chunks[0].removeprefix("+ ")
        if first.startswith("- "):
            first = "-" + first[2:]
        return " ".join([first] + chunks[1:])


@dataclass(frozen=True)
class RationalPoint:
    """A point with exact rational coordinates."""

    coordinates: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "coordinates", tuple(Fraction(x) for x in self.coordinates)
        )


def _point_coords(ring: PolyRing, point):
    coords = point.coordinates if isinstance(point, RationalPoint) else tuple(point)
    coords = tuple(Fraction(x) for x in coords)
    if len(coords) != ring.nvars:
        raise ValueError(
            f"point has {len(coords)} coordinates, ring has {ring.nvars} variables"
        )
    return coords


def _poly_matmul(ring, a, b):
    rows = len(a)
    inner = len(b)
    cols = len(b[0]) if inner else 0
    zero = Poly.zero(ring)
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = zero
            for k in range(inner):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class FreeComplex:
    """A bounded complex of free modules with polynomial differentials.

    ranks maps degree -> rank; diffs[n] is the matrix of d_n: C_n ->
    C_{n-1}, with shape ranks[n-1] x ranks[n].  d o d = 0 is checked
    symbolically on construction.
    """

    ring: PolyRing
    ranks: tuple
    diffs: tuple

    def __post_init__(self):
        ranks = dict(self.ranks)
        diffs = dict(self.diffs)
        object.__setattr__(self, "ranks", tuple(sorted(ranks.items())))
        object.__setattr__(self, "diffs", tuple(sorted(diffs.items())))
        for n, mat in diffs.items():
            expect_rows = ranks.get(n - 1, 0)
            expect_cols = ranks.get(n, 0)
            if len(mat) != expect_rows or any(
                len(row) != expect_cols for row in mat
            ):
                raise ValueError(f"differential at degree {n} has wrong shape")
        for n, mat in diffs.items():
            below = diffs.get(n - 1)
            if below is None:
                continue
            square = _poly_matmul(self.ring, below, mat)
            if any(not x.is_zero() for row in square for x in row):
                raise ValueError(f"d o d != 0 between degrees {n} and {n - 2}")

    def rank_map(self) -> dict:
        return dict(self.ranks)

    def diff_map(self) -> dict:
        return dict(self.diffs)

    def degrees(self) -> tuple:
        return tuple(sorted(n for n, r in self.ranks if r))


def unit_complex(ring: PolyRing) -> FreeComplex:
    """The ring itself, concentrated in degree 0."""
    return FreeComplex(ring, ((0, 1),), ())


def cone_of_scalar(ring: PolyRing, f: Poly) -> FreeComplex:
    """The two term complex R -> R given by multiplication by f, with
    the source placed in degree 1."""
    if f.ring != ring:
        raise ValueError("polynomial from a different ring")
    return FreeComplex(ring, ((0, 1), (1, 1)), ((1, ((f,),)),))


def tensor(c: FreeComplex, d: FreeComplex) -> FreeComplex:
    """Tensor product of complexes with Koszul signs.

    Degree n collects the blocks C_i (x) D_j with i + j = n, ordered by
    ascending i; the differential is d_C (x) 1 + (-1)^i 1 (x) d_D.
    """
    if c.ring != d.ring:
        raise ValueError("complexes over different rings")
    ring = c.ring
    cr, dr = c.rank_map(), d.rank_map()
    cd, dd = c.diff_map(), d.diff_map()
    zero = Poly.zero(ring)

    def blocks(n):
        return [
            (i, n - i)
            for i in sorted(cr)
            if cr.get(i, 0) and dr.get(n - i, 0)
        ]

    degrees = sorted(
        {i + j for i in cr for j in dr if cr[i] and dr[j]}
    )
    ranks = {n: sum(cr[i] * dr[j] for i, j in blocks(n)) for n in degrees}
    diffs = {}
    for n in degrees:
        if n - 1 not in ranks:
            continue
        src = blocks(n)
        dst = blocks(n - 1)
        dst_offsets = {}
        off = 0
        for i, j in dst:
            dst_offsets[(i, j)] = off
            off += cr[i] * dr[j]
        rows = ranks[n - 1]
        cols = ranks[n]
        mat = [[zero] * cols for _ in range(rows)]

        def paste(r0, c0, block):
            for rr, row in enumerate(block):
                for cc, val in enumerate(row):
                    if not val.is_zero():
                        mat[r0 + rr][c0 + cc] = mat[r0 + rr][c0 + cc] + val

        col_off = 0
        for i, j in src:
            width = cr[i] * dr[j]
            if (i - 1, j) in dst_offsets and i in cd:
                ident = [
                    [Poly.const(ring, 1 if a == b else 0) for b in range(dr[j])]
                    for a in range(dr[j])
                ]
                paste(
                    dst_offsets[(i - 1, j)],
                    col_off,
                    _kron_poly(ring, cd[i], ident),
                )
            if (i, j - 1) in dst_offsets and j in dd:
                ident = [
                    [Poly.const(ring, 1 if a == b else 0) for b in range(cr[i])]
                    for a in range(cr[i])
                ]
                signed = [
                    [x if i % 2 == 0 else -x for x in row] for row in dd[j]
                ]
                paste(
                    dst_offsets[(i, j - 1)],
                    col_off,
                    _kron_poly(ring, ident, signed),
                )
            col_off += width
        diffs[n] = tuple(tuple(row) for row in mat)
    return FreeComplex(ring, tuple(ranks.items()), tuple(diffs.items()))


def _kron_poly(ring, a, b):
    """Kronecker product of polynomial matrices."""
    if not a or not b:
        return ()
    out = []
    for arow in a:
        for brow in b:
            row = []
            for x in arow:
                for y in brow:
                    row.append(x * y)
            out.append(tuple(row))
    return tuple(out)


def koszul_complex(ring: PolyRing, gens) -> FreeComplex:
    """The Koszul complex on a sequence of polynomials: the tensor
    product of the cones on each one."""
    gens = tuple(gens)
    out = unit_complex(ring)
    for f in gens:
        out = tensor(out, cone_of_scalar(ring, f))
    ranks = out.rank_map()
    for n in range(len(gens) + 1):
        if ranks.get(n, 0) != comb(len(gens), n):
            raise RuntimeError("Koszul ranks are not binomial")
    return out


@dataclass(frozen=True)
class EvaluatedComplex:
    """A complex of exact rational matrices; d o d = 0 revalidated."""

    ranks: tuple
    diffs: tuple

    def __post_init__(self):
        ranks = dict(self.ranks)
        diffs = dict(self.diffs)
        object.__setattr__(self, "ranks", tuple(sorted(ranks.items())))
        object.__setattr__(self, "diffs", tuple(sorted(diffs.items())))
        for n, mat in diffs.items():
            below = diffs.get(n - 1)
            if below is None or not mat or not below:
                continue
            prod = [
                [
                    sum(
                        (below[i][k] * mat[k][j] for k in range(len(mat))),
                        Fraction(0),
                    )
                    for j in range(len(mat[0]))
                ]
                for i in range(len(below))
            ]
            if any(x != 0 for row in prod for x in row):
                raise ValueError("d o d != 0 after evaluation")

    def rank_map(self) -> dict:
        return dict(self.ranks)

    def diff_map(self) -> dict:
        return dict(self.diffs)


def evaluate(complex_: FreeComplex, point) -> EvaluatedComplex:
    """Evaluate every differential entry at a rational point."""
    diffs = {}
    for n, mat in complex_.diff_map().items():
        diffs[n] = tuple(
            tuple(x.evaluate(point) for x in row) for row in mat
        )
    return EvaluatedComplex(complex_.ranks, tuple(diffs.items()))


def homology_dims(evaluated: EvaluatedComplex) -> dict:
    """Dimension of homology at each degree with a nonzero term."""
    ranks = evaluated.rank_map()
    diffs = evaluated.diff_map()

    def matrix_rank(n):
        mat = diffs.get(n)
        if mat is None or not mat or not mat[0]:
            return 0
        return rank(QQ, mat)

    out = {}
    for n in sorted(ranks):
        if ranks[n] == 0:
            continue
        out[n] = ranks[n] - matrix_rank(n) - matrix_rank(n + 1)
        if out[n] < 0:
            raise RuntimeError("negative homology dimension")
    return out


def koszul_tensor_module(
    complex_: FreeComplex, module: TreeModule, point
) -> tuple:
    """Homology dimension vectors of the evaluated complex tensored with
    a tree module, per degree.

    Per vertex v the degree n space is C_n (x) M_v and the differential
    acts as d (x) identity; the arrow maps commute with it, so homology
    is computed vertexwise.  Each resulting vector must be an integer
    multiple of the module's dimension vector, which is asserted.
    """
    evaluated = evaluate(complex_, point)
    ranks = evaluated.rank_map()
    diffs = evaluated.diff_map()
    nverts = module.quiver.rank
    out = []
    for n in sorted(ranks):
        if ranks[n] == 0:
            continue
        vec = []
        for v in range(nverts):
            dv = module.dim[v]
            if dv == 0:
                vec.append(0)
                continue
            ident = tuple(
                tuple(Fraction(1 if i == j else 0) for j in range(dv))
                for i in range(dv)
            )

            def vertex_rank(k):
                mat = diffs.get(k)
                if mat is None or not mat or not mat[0]:
                    return 0
                return rank(QQ, kron(mat, ident))

            vec.append(ranks[n] * dv - vertex_rank(n) - vertex_rank(n + 1))
        out.append((n, tuple(vec)))
    for n, vec in out:
        multiples = {
            value // dv
            for value, dv in zip(vec, module.dim)
            if dv
        }
        ok = len(multiples) == 1 and all(
            value == next(iter(multiples)) * dv
            for value, dv in zip(vec, module.dim)
        )
        if not ok:
            raise RuntimeError(
                f"homology vector {vec} is not a multiple of {module.dim}"
            )
    return tuple(out)
