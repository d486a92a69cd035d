"""Exact linear algebra over the rationals and prime fields.

Matrices are tuples (or lists) of rows.  Rational entries are ints or
fractions.Fraction; prime-field entries are ints reduced mod p.  Nothing
here ever touches a float.
"""
from __future__ import annotations

from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class GF:
    """The prime field with p elements, for p <= 97.

    Elements are plain ints in range(p).
    """

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"field order {p} is not prime")
        if p > 97:
            raise ValueError(f"field order {p} exceeds the supported bound 97")
        self.p = p

    @property
    def char(self) -> int:
        return self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def elements(self):
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class RationalField:
    """The field of rationals; elements are ints or Fractions."""

    __slots__ = ()

    @property
    def char(self) -> int:
        return 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / Fraction(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


# ---------------------------------------------------------------------------
# integer matrices (used for Weyl group elements)

def int_mat_mul(a, b):
    """Product of two integer matrices given as tuples of row tuples."""
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )

def int_mat_vec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)

def int_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def int_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination.

    One-step Bareiss updates keep every intermediate entry an integer;
    the divisions below are exact.
    """
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pval = m[rank][col]
        for r in range(rank + 1, nrows):
            factor = m[r][col]
            row = m[r]
            top = m[rank]
            for c in range(col, ncols):
                row[c] = (row[c] * pval - top[c] * factor) // prev
        prev = pval
        rank += 1
        if rank == nrows:
            break
    return rank


def int_mat_inverse(mat):
    """Inverse of an integer matrix with determinant +-1.

    Raises ValueError if the matrix is singular or the inverse is not
    integral.
    """
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        pval = aug[col][col]
        aug[col] = [x / pval for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv = []
    for r in range(n):
        row = []
        for c in range(n, 2 * n):
            x = aug[r][c]
            if x.denominator != 1:
                raise ValueError("inverse is not integral")
            row.append(int(x))
        inv.append(tuple(row))
    return tuple(inv)


# ---------------------------------------------------------------------------
# field-parameterized elimination

def mat_mul(field, a, b):
    bt = list(zip(*b))
    out = []
    for row in a:
        orow = []
        for col in bt:
            acc = field.zero
            for x, y in zip(row, col):
                acc = field.add(acc, field.mul(x, y))
            orow.append(acc)
        out.append(tuple(orow))
    return tuple(out)


def rref(field, rows):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != field.zero), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = field.inv(m[rank][col])
        m[rank] = [field.mul(inv, x) for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != field.zero:
                f = m[r][col]
                m[r] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    return m, pivots


def rank(field, rows) -> int:
    return len(rref(field, rows)[1])


def nullspace(field, rows, ncols=None):
    """Basis of the right kernel, as a list of column vectors (tuples).

    ncols must be given when rows is empty.
    """
    if rows:
        ncols = len(rows[0])
    elif ncols is None:
        raise ValueError("ncols required for a matrix with no rows")
    red, pivots = rref(field, rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [field.zero] * ncols
        vec[free] = field.one
        for r, p in enumerate(pivots):
            vec[p] = field.neg(red[r][free])
        basis.append(tuple(vec))
    return basis


def left_nullspace(field, rows, nrows=None):
    """Basis of the left kernel, as a list of row vectors (tuples)."""
    n = len(rows) if rows else nrows
    if n is None:
        raise ValueError("nrows required for a matrix with no rows")
    if rows and rows[0]:
        transposed = list(zip(*rows))
    else:
        transposed = []
    return nullspace(field, transposed, ncols=n)


def solve(field, a, b):
    """Solve a @ x = b for matrices; returns x or None if inconsistent.

    a has shape (m, n), b has shape (m, k); x has shape (n, k).
    """
    m = len(a)
    n = len(a[0]) if m else 0
    k = len(b[0]) if b else 0
    aug = [list(a[i]) + list(b[i]) for i in range(m)]
    red, pivots = rref(field, aug)
    for r in range(len(pivots)):
        if pivots[r] >= n:
            return None
    for r in range(len(pivots), m):
        if any(x != field.zero for x in red[r][n:]):
            return None
    x = [[field.zero] * k for _ in range(n)]
    for r, p in enumerate(pivots):
        x[p] = list(red[r][n:])
    return tuple(tuple(row) for row in x)


def kron(a, b):
    """Kronecker product of matrices over ints / Fractions."""
    if not a or not a[0]:
        return ()
    brows = len(b)
    bcols = len(b[0]) if b else 0
    out = []
    for arow in a:
        for i in range(brows):
            row = []
            for x in arow:
                row.extend(x * y for y in b[i])
            out.append(tuple(row))
    return tuple(out)
