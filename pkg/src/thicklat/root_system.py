"""Simply laced root systems and noncrossing partition lattices.

Roots are integer vectors in the basis of simple roots.  Weyl group
elements are integer matrices acting on those coordinates.  The
noncrossing partition lattice for a Coxeter element c is the interval
[e, c] in the absolute order: u <= w iff reflection lengths add up
along u, u^-1 w, w.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import int_identity, int_mat_inverse, int_mat_mul, int_rank

LETTERS = ("A", "D", "E")


@dataclass(frozen=True)
class DynkinType:
    """A simply laced Dynkin type: A_n (n>=1), D_n (n>=4), E_6, E_7, E_8.

    >>> DynkinType.parse("D4").diagram_edges()
    ((1, 2), (2, 3), (2, 4))
    """

    letter: str
    rank: int

    def __post_init__(self):
        if self.letter not in LETTERS:
            raise ValueError(f"unknown Dynkin letter {self.letter!r}")
        if self.letter == "A" and self.rank < 1:
            raise ValueError("type A requires rank >= 1")
        if self.letter == "D" and self.rank < 4:
            raise ValueError("type D requires rank >= 4")
        if self.letter == "E" and self.rank not in (6, 7, 8):
            raise ValueError("type E requires rank 6, 7 or 8")

    @staticmethod
    def parse(text: str) -> "DynkinType":
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise ValueError(f"cannot parse Dynkin type {text!r}")
        return DynkinType(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.letter}{self.rank}"

    def vertices(self) -> range:
        return range(1, self.rank + 1)

    def diagram_edges(self) -> tuple[tuple[int, int], ...]:
        """Edges of the Dynkin diagram as sorted vertex pairs."""
        n = self.rank
        if self.letter == "A":
            edges = [(i, i + 1) for i in range(1, n)]
        elif self.letter == "D":
            edges = [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
        else:
            chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
            edges = [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
            edges.append((2, 4))
        return tuple(sorted(tuple(sorted(e)) for e in edges))

    def degrees(self) -> tuple[int, ...]:
        """Degrees of the fundamental invariants."""
        n = self.rank
        if self.letter == "A":
            return tuple(range(2, n + 2))
        if self.letter == "D":
            return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
        return {
            6: (2, 5, 6, 8, 9, 12),
            7: (2, 6, 8, 10, 12, 14, 18),
            8: (2, 8, 12, 14, 18, 20, 24, 30),
        }[n]

    def coxeter_number(self) -> int:
        return max(self.degrees())


def catalan_number(dynkin: DynkinType) -> int:
    """The Coxeter-Catalan number prod_i (h + d_i) / d_i."""
    h = dynkin.coxeter_number()
    value = Fraction(1)
    for d in dynkin.degrees():
        value *= Fraction(h + d, d)
    if value.denominator != 1:
        raise RuntimeError("Catalan product did not come out integral")
    return int(value)


class WeylElement:
    """A Weyl group element as an integer matrix in the root basis.

    Hashable; reflection length and the inverse matrix are computed
    once and cached.
    """

    __slots__ = ("mat", "_inv", "_length")

    def __init__(self, mat, inv=None):
        self.mat = tuple(tuple(int(x) for x in row) for row in mat)
        self._inv = inv
        self._length = None

    @property
    def rank(self) -> int:
        return len(self.mat)

    def inverse_mat(self):
        if self._inv is None:
            self._inv = int_mat_inverse(self.mat)
        return self._inv

    def inverse(self) -> "WeylElement":
        return WeylElement(self.inverse_mat(), inv=self.mat)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(int_mat_mul(self.mat, other.mat))

    def apply(self, vector):
        return tuple(sum(x * y for x, y in zip(row, vector)) for row in self.mat)

    def is_identity(self) -> bool:
        return self.mat == int_identity(len(self.mat))

    def __eq__(self, other):
        return isinstance(other, WeylElement) and other.mat == self.mat

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        return f"WeylElement({self.mat!r})"


def reflection_length(w: WeylElement) -> int:
    """Minimal number of reflections whose product is w.

    Equals the codimension of the fixed space, computed exactly by
    fraction-free elimination on mat - I.
    """
    if w._length is None:
        n = len(w.mat)
        shifted = [
            [w.mat[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)
        ]
        w._length = int_rank(shifted)
    return w._length


@dataclass(frozen=True)
class RootSystem:
    """A root system of the given type, in simple-root coordinates."""

    dynkin: DynkinType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.dynkin.rank

    def simple_roots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(1 if i == j else 0 for j in range(self.rank))
            for i in range(self.rank)
        )

    def root_index(self, root) -> int:
        try:
            return self.positive_roots.index(tuple(root))
        except ValueError:
            raise ValueError(f"{root!r} is not a positive root") from None

    def is_root_permutation(self, w: WeylElement) -> bool:
        """Whether w permutes the set of roots (positive and negative)."""
        roots = set(self.positive_roots)
        roots.update(tuple(-x for x in r) for r in self.positive_roots)
        return all(w.apply(r) in roots for r in roots)


def build_root_system(dynkin: DynkinType) -> RootSystem:
    """Construct the root system by closing the simple roots under
    simple reflections.

    >>> len(build_root_system(DynkinType.parse("A2")).positive_roots)
    3
    """
    n = dynkin.rank
    cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in dynkin.diagram_edges():
        cartan[a - 1][b - 1] = -1
        cartan[b - 1][a - 1] = -1
    roots = {tuple(1 if i == j else 0 for j in range(n)) for i in range(n)}
    frontier = list(roots)
    while frontier:
        fresh = []
        for v in frontier:
            for j in range(n):
                pairing = sum(cartan[j][k] * v[k] for k in range(n))
                w = tuple(v[k] - (pairing if k == j else 0) for k in range(n))
                if w not in roots and all(x >= 0 for x in w):
                    roots.add(w)
                    fresh.append(w)
        frontier = fresh
    ordered = tuple(sorted(roots, key=lambda r: (sum(r), r)))
    return RootSystem(
        dynkin, tuple(tuple(row) for row in cartan), ordered
    )


def reflection(rs: RootSystem, root) -> WeylElement:
    """The reflection in a positive root, as a matrix on root coordinates."""
    root = tuple(root)
    if root not in rs.positive_roots:
        raise ValueError(f"{root!r} is not a positive root of {rs.dynkin}")
    n = rs.rank
    pairing = [sum(rs.cartan[i][k] * root[k] for k in range(n)) for i in range(n)]
    mat = [
        [(1 if i == j else 0) - root[i] * pairing[j] for j in range(n)]
        for i in range(n)
    ]
    return WeylElement(mat)


def simple_reflection(rs: RootSystem, vertex: int) -> WeylElement:
    return reflection(rs, tuple(1 if i == vertex - 1 else 0 for i in range(rs.rank)))


def coxeter_element(rs: RootSystem, arrows) -> WeylElement:
    """Coxeter element for an orientation of the Dynkin diagram.

    arrows is an iterable of (source, target) vertex pairs covering the
    diagram.  Simple reflections are multiplied sink first: vertices are
    peeled off in sink order, ties broken by smallest label, and the
    reflection of the first peeled vertex is the leftmost factor.  For
    A2 oriented 1 -> 2 this yields s2 * s1.
    """
    arrows = tuple(tuple(a) for a in getattr(arrows, "arrows", arrows))
    edges = tuple(sorted(tuple(sorted(a)) for a in arrows))
    if edges != rs.dynkin.diagram_edges():
        raise ValueError(
            f"orientation {arrows!r} is not an orientation of the {rs.dynkin} diagram"
        )
    remaining = set(rs.dynkin.vertices())
    order = []
    while remaining:
        sinks = [
            v
            for v in sorted(remaining)
            if not any(s == v and t in remaining for s, t in arrows)
        ]
        if not sinks:
            raise ValueError("orientation has a cycle")
        order.append(sinks[0])
        remaining.discard(sinks[0])
    mat = int_identity(rs.rank)
    for v in reversed(order):
        mat = int_mat_mul(simple_reflection(rs, v).mat, mat)
    c = WeylElement(mat)
    if reflection_length(c) != rs.rank:
        raise RuntimeError("Coxeter element does not have full reflection length")
    return c


class NcElement:
    """An element of the noncrossing partition lattice NC(W, c).

    Wraps a Weyl element w known to lie in the absolute-order interval
    [e, c]; the defining length identity is revalidated on construction.
    """

    __slots__ = ("w", "c")

    def __init__(self, w: WeylElement, c: WeylElement, _checked: bool = False):
        self.w = w
        self.c = c
        if not _checked:
            rest = WeylElement(int_mat_mul(w.inverse_mat(), c.mat))
            if reflection_length(w) + reflection_length(rest) != reflection_length(c):
                raise ValueError("element is not below the Coxeter element")

    @property
    def length(self) -> int:
        return reflection_length(self.w)

    def __eq__(self, other):
        return (
            isinstance(other, NcElement)
            and other.w.mat == self.w.mat
            and other.c.mat == self.c.mat
        )

    def __hash__(self):
        return hash((self.w.mat, self.c.mat))

    def __repr__(self):
        return f"NcElement({self.w.mat!r})"


def enumerate_nc(rs: RootSystem, c: WeylElement) -> tuple[NcElement, ...]:
    """All elements of [e, c] in absolute order, found by breadth-first
    search multiplying by reflections one length step at a time.

    Returned in canonical order: lexicographic on flattened matrices.
    """
    n = rs.rank
    if reflection_length(c) != n:
        raise ValueError("c does not have full reflection length")
    refls = [reflection(rs, r) for r in rs.positive_roots]
    ident = int_identity(n)
    length_memo: dict[tuple, int] = {}

    def length_of(mat) -> int:
        cached = length_memo.get(mat)
        if cached is None:
            shifted = [
                [mat[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)
            ]
            cached = length_memo[mat] = int_rank(shifted)
        return cached

    found: dict[tuple, tuple] = {ident: ident}
    level = {ident: ident}
    for step in range(n):
        nxt: dict[tuple, tuple] = {}
        for wmat, winv in level.items():
            for t in refls:
                cand = int_mat_mul(wmat, t.mat)
                if cand in found or cand in nxt:
                    continue
                if length_of(cand) != step + 1:
                    continue
                cand_inv = int_mat_mul(t.mat, winv)
                if length_of(int_mat_mul(cand_inv, c.mat)) != n - step - 1:
                    continue
                nxt[cand] = cand_inv
        found.update(nxt)
        level = nxt
    elements = [
        NcElement(WeylElement(mat, inv=inv), c, _checked=True)
        for mat, inv in found.items()
    ]
    elements.sort(key=lambda e: e.w.mat)
    return tuple(elements)


def _require_same_context(u: NcElement, w: NcElement):
    if u.c.mat != w.c.mat:
        raise ValueError("elements live under different Coxeter elements")


def nc_leq(u: NcElement, w: NcElement) -> bool:
    """Absolute-order comparison inside [e, c]."""
    _require_same_context(u, w)
    rest = WeylElement(int_mat_mul(u.w.inverse_mat(), w.w.mat))
    return u.length + reflection_length(rest) == w.length


def nc_meet(u: NcElement, w: NcElement, nc_set) -> NcElement:
    """Greatest lower bound, found by scanning the enumerated lattice."""
    _require_same_context(u, w)
    lower = [x for x in nc_set if nc_leq(x, u) and nc_leq(x, w)]
    best = [x for x in lower if all(nc_leq(y, x) for y in lower)]
    if len(best) != 1:
        raise RuntimeError("meet is not unique; lattice property violated")
    return best[0]


def nc_join(u: NcElement, w: NcElement, nc_set) -> NcElement:
    """Least upper bound, found by scanning the enumerated lattice."""
    _require_same_context(u, w)
    upper = [x for x in nc_set if nc_leq(u, x) and nc_leq(w, x)]
    best = [x for x in upper if all(nc_leq(x, y) for y in upper)]
    if len(best) != 1:
        raise RuntimeError("join is not unique; lattice property violated")
    return best[0]


def _type_a_permutation(u: NcElement) -> dict[int, int]:
    """The permutation of {1..n+1} given by a type A Weyl element."""
    mat = u.w.mat
    n = len(mat)
    perm: dict[int, int] = {}
    for i in range(1, n + 1):
        col = tuple(mat[r][i - 1] for r in range(n))
        ambient = [0] * (n + 1)
        for k in range(n + 1):
            prev = col[k - 1] if k >= 1 else 0
            cur = col[k] if k < n else 0
            ambient[k] = cur - prev
        plus = [k + 1 for k, x in enumerate(ambient) if x == 1]
        minus = [k + 1 for k, x in enumerate(ambient) if x == -1]
        if len(plus) != 1 or len(minus) != 1:
            raise RuntimeError("matrix does not act as a permutation")
        for key, val in ((i, plus[0]), (i + 1, minus[0])):
            if perm.setdefault(key, val) != val:
                raise RuntimeError("inconsistent permutation extraction")
    return perm


def nc_to_set_partition(u: NcElement) -> tuple[tuple[int, ...], ...]:
    """Cycle partition of {1..rank+1} for a type A element.

    Blocks are sorted ascending, and listed by smallest member.
    """
    perm = _type_a_permutation(u)
    n = len(u.w.mat)
    seen: set[int] = set()
    blocks = []
    for start in range(1, n + 2):
        if start in seen:
            continue
        block = [start]
        seen.add(start)
        cur = perm[start]
        while cur != start:
            block.append(cur)
            seen.add(cur)
            cur = perm[cur]
        blocks.append(tuple(sorted(block)))
    blocks.sort(key=lambda b: b[0])
    return tuple(blocks)


def _blocks_cross(first, second) -> bool:
    return any(
        a1 < b1 < a2 < b2
        for a1 in first
        for a2 in first
        for b1 in second
        for b2 in second
    )


def is_noncrossing_partition(blocks) -> bool:
    """Whether no two blocks interleave as a < b < a' < b'."""
    for i, blk in enumerate(blocks):
        for other in blocks[i + 1 :]:
            if _blocks_cross(blk, other) or _blocks_cross(other, blk):
                return False
    return True


class NcLattice:
    """The enumerated interval [e, c] with its order structure.

    Elements are kept in canonical order (lexicographic on flattened
    matrices); comparisons are cached as up-set and down-set bitmasks.
    """

    def __init__(self, rs: RootSystem, c: WeylElement, elements=None):
        self.rs = rs
        self.c = c
        self.elements = (
            tuple(elements) if elements is not None else enumerate_nc(rs, c)
        )
        self.index = {e: i for i, e in enumerate(self.elements)}
        self._up: list[int] | None = None
        self._down: list[int] | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def _masks(self):
        if self._up is None:
            n = len(self.elements)
            up = [0] * n
            down = [0] * n
            for i, u in enumerate(self.elements):
                for j, w in enumerate(self.elements):
                    if nc_leq(u, w):
                        up[i] |= 1 << j
                        down[j] |= 1 << i
            self._up = up
            self._down = down
        return self._up, self._down

    def leq(self, i: int, j: int) -> bool:
        up, _ = self._masks()
        return bool((up[i] >> j) & 1)

    def bottom(self) -> int:
        return next(i for i, e in enumerate(self.elements) if e.length == 0)

    def top(self) -> int:
        n = self.rs.rank
        return next(i for i, e in enumerate(self.elements) if e.length == n)

    def covers(self) -> tuple[tuple[int, int], ...]:
        """Cover pairs (lower, higher): comparable with nothing strictly
        between."""
        up, down = self._masks()
        out = []
        for i in range(len(self.elements)):
            for j in range(len(self.elements)):
                if i == j or not self.leq(i, j):
                    continue
                between = up[i] & down[j] & ~(1 << i) & ~(1 << j)
                if between == 0:
                    out.append((i, j))
        return tuple(out)

    def join(self, i: int, j: int) -> int:
        up, _ = self._masks()
        common = up[i] & up[j]
        for k in range(len(self.elements)):
            if (common >> k) & 1 and (common & up[k]) == common:
                return k
        raise RuntimeError("join does not exist; lattice property violated")

    def meet(self, i: int, j: int) -> int:
        _, down = self._masks()
        common = down[i] & down[j]
        for k in range(len(self.elements)):
            if (common >> k) & 1 and (common & down[k]) == common:
                return k
        raise RuntimeError("meet does not exist; lattice property violated")


def reflection_factorization(rs: RootSystem, w: WeylElement) -> tuple[int, ...]:
    """Lexicographically first minimal factorization into reflections.

    Returns indices into rs.positive_roots; the leftmost factor comes
    first.  Greedy: always take the smallest reflection index that drops
    the length.
    """
    refls = [reflection(rs, r) for r in rs.positive_roots]
    out = []
    cur = w
    while reflection_length(cur) > 0:
        for i, t in enumerate(refls):
            nxt = WeylElement(int_mat_mul(t.mat, cur.mat))
            if reflection_length(nxt) == reflection_length(cur) - 1:
                out.append(i)
                cur = nxt
                break
        else:
            raise RuntimeError("no length-decreasing reflection found")
    return tuple(out)
