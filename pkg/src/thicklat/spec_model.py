"""Lattices of poset maps into a noncrossing partition lattice.

A specialization-closed function assigns to every point of a finite
poset a noncrossing partition, monotonely: smaller points get smaller
partitions.  Under the pointwise order these functions form a lattice;
so do all unconstrained functions.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import product

from .root_system import NcLattice

DEFAULT_SIZE_GUARD = 100_000


class SizeGuardError(ValueError):
    """Raised before enumerating a function space that is too large."""


def size_guard_limit() -> int:
    """The enumeration cap, overridable via THICKLAT_SIZE_GUARD."""
    raw = os.environ.get("THICKLAT_SIZE_GUARD")
    if raw is None:
        return DEFAULT_SIZE_GUARD
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"THICKLAT_SIZE_GUARD={raw!r} is not an integer") from exc


@dataclass(frozen=True)
class FinitePoset:
    """A finite poset on named elements.

    leq is the full reflexive-transitive relation as (lower, higher)
    pairs; validated on construction.
    """

    elements: tuple[str, ...]
    leq: frozenset

    def __post_init__(self):
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        rel = frozenset((str(a), str(b)) for a, b in self.leq)
        object.__setattr__(self, "leq", rel)
        names = set(elems)
        if len(names) != len(elems):
            raise ValueError("duplicate poset elements")
        for a, b in rel:
            if a not in names or b not in names:
                raise ValueError(f"relation {(a, b)!r} uses unknown elements")
        for x in elems:
            if (x, x) not in rel:
                raise ValueError(f"relation is not reflexive at {x!r}")
        for a, b in rel:
            if a != b and (b, a) in rel:
                raise ValueError(f"antisymmetry fails on {a!r}, {b!r}")
            for c in elems:
                if (b, c) in rel and (a, c) not in rel:
                    raise ValueError(f"transitivity fails on {a!r}, {b!r}, {c!r}")

    @staticmethod
    def from_covers(elements, covers) -> "FinitePoset":
        """Build from cover pairs (lower, higher) by transitive closure."""
        elements = tuple(str(x) for x in elements)
        rel = {(x, x) for x in elements}
        rel.update((str(a), str(b)) for a, b in covers)
        changed = True
        while changed:
            changed = False
            for a, b in list(rel):
                for c, d in list(rel):
                    if b == c and (a, d) not in rel:
                        rel.add((a, d))
                        changed = True
        return FinitePoset(elements, frozenset(rel))

    def less(self, a: str, b: str) -> bool:
        """Strictly below: a is a proper specialization source of b."""
        return a != b and (a, b) in self.leq

    def lower_covers(self, x: str) -> tuple[str, ...]:
        below = [a for a in self.elements if a != x and (a, x) in self.leq]
        return tuple(
            a
            for a in below
            if not any(b != a and (a, b) in self.leq for b in below)
        )

    def topological(self) -> tuple[str, ...]:
        """Elements ordered so that lower ones come first."""
        remaining = list(self.elements)
        out = []
        while remaining:
            for x in remaining:
                if not any(y != x and (y, x) in self.leq for y in remaining):
                    out.append(x)
                    remaining.remove(x)
                    break
            else:
                raise RuntimeError("poset order is cyclic?")
        return tuple(out)


def poset_point() -> FinitePoset:
    return FinitePoset.from_covers(("p0",), ())


def poset_chain(n: int) -> FinitePoset:
    if n < 1:
        raise ValueError("chain length must be at least 1")
    names = tuple(f"p{i}" for i in range(n))
    return FinitePoset.from_covers(
        names, tuple((f"p{i}", f"p{i+1}") for i in range(n - 1))
    )


def poset_antichain(n: int) -> FinitePoset:
    if n < 1:
        raise ValueError("antichain size must be at least 1")
    return FinitePoset.from_covers(tuple(f"p{i}" for i in range(n)), ())


def poset_diamond() -> FinitePoset:
    return FinitePoset.from_covers(
        ("p0", "p1", "p2", "p3"),
        (("p0", "p1"), ("p0", "p2"), ("p1", "p3"), ("p2", "p3")),
    )


@dataclass(frozen=True)
class SpecFunction:
    """A function from poset points to noncrossing partitions.

    values[i] is an index into lattice.elements, aligned with
    poset.elements; the lattice itself is compared by identity.
    """

    poset: FinitePoset
    lattice: NcLattice = field(compare=False)
    values: tuple[int, ...] = ()

    def value_index(self, point: str) -> int:
        return self.values[self.poset.elements.index(point)]

    def value_of(self, point: str):
        return self.lattice.elements[self.value_index(point)]

    def as_dict(self) -> dict:
        return {
            p: self.lattice.elements[v]
            for p, v in zip(self.poset.elements, self.values)
        }


def is_specialization_closed(fn: SpecFunction) -> bool:
    """Whether the assigned partitions grow along the poset order."""
    pos = {p: i for i, p in enumerate(fn.poset.elements)}
    return all(
        fn.lattice.leq(fn.values[pos[a]], fn.values[pos[b]])
        for a, b in fn.poset.leq
        if a != b
    )


@dataclass(frozen=True)
class FunctionLattice:
    """A set of functions under the pointwise order, with cover pairs
    (lower index, higher index)."""

    poset: FinitePoset
    lattice: NcLattice = field(compare=False)
    members: tuple[SpecFunction, ...] = ()
    covers: tuple[tuple[int, int], ...] = ()

    def leq_members(self, i: int, j: int) -> bool:
        return all(
            self.lattice.leq(a, b)
            for a, b in zip(self.members[i].values, self.members[j].values)
        )


def _guard(count: int, guard: int | None):
    limit = size_guard_limit() if guard is None else guard
    if count > limit:
        raise SizeGuardError(
            f"{count} functions exceed the size guard {limit}; "
            "raise THICKLAT_SIZE_GUARD to proceed"
        )


def all_functions(
    poset: FinitePoset, nc: NcLattice, guard: int | None = None
) -> FunctionLattice:
    """Every function from the poset into the lattice, pointwise order.

    Covers in a product of lattices change exactly one coordinate by a
    lattice cover, so they are read off the factor's cover list.
    """
    npts = len(poset.elements)
    _guard(len(nc) ** npts if npts else 1, guard)
    members = [
        SpecFunction(poset, nc, values)
        for values in product(range(len(nc)), repeat=npts)
    ]
    index = {fn.values: i for i, fn in enumerate(members)}
    nc_covers = nc.covers()
    cover_up: dict[int, list[int]] = {}
    for lo, hi in nc_covers:
        cover_up.setdefault(lo, []).append(hi)
    covers = []
    for i, fn in enumerate(members):
        for pos in range(npts):
            for hi in cover_up.get(fn.values[pos], ()):
                nxt = list(fn.values)
                nxt[pos] = hi
                covers.append((i, index[tuple(nxt)]))
    covers.sort()
    return FunctionLattice(poset, nc, tuple(members), tuple(covers))


def _monotone_value_tuples(poset: FinitePoset, nc: NcLattice, limit: int):
    """Yield value index tuples of monotone functions, assigning points
    in topological order and intersecting upper sets."""
    up, _ = nc._masks()
    order = poset.topological()
    pos = {p: i for i, p in enumerate(poset.elements)}
    order_pos = [pos[p] for p in order]
    lower_in_order = [
        [idx for idx, a in enumerate(order[:k]) if poset.less(a, order[k])]
        for k in range(len(order))
    ]
    full_mask = (1 << len(nc)) - 1
    found = 0
    values = [0] * len(poset.elements)

    def rec(k: int):
        nonlocal found
        if k == len(order):
            found += 1
            if found > limit:
                raise SizeGuardError(
                    f"monotone functions exceed the size guard {limit}; "
                    "raise THICKLAT_SIZE_GUARD to proceed"
                )
            yield tuple(values)
            return
        allowed = full_mask
        for a in lower_in_order[k]:
            allowed &= up[values[order_pos[a]]]
        for v in range(len(nc)):
            if (allowed >> v) & 1:
                values[order_pos[k]] = v
                yield from rec(k + 1)
    yield from rec(0)


def monotone_functions(
    poset: FinitePoset, nc: NcLattice, guard: int | None = None
) -> FunctionLattice:
    """The lattice of monotone (specialization-closed) functions.

    Covers are found from below: raise one point's value to a cover,
    propagate joins upward to restore monotonicity, and keep the
    minimal results.
    """
    limit = size_guard_limit() if guard is None else guard
    tuples = sorted(_monotone_value_tuples(poset, nc, limit))
    members = [SpecFunction(poset, nc, v) for v in tuples]
    index = {v: i for i, v in enumerate(tuples)}
    nc_covers = nc.covers()
    cover_up: dict[int, list[int]] = {}
    for lo, hi in nc_covers:
        cover_up.setdefault(lo, []).append(hi)
    npts = len(poset.elements)
    pairs_leq = [
        [poset.less(a, b) for b in poset.elements] for a in poset.elements
    ]
    covers = []
    for i, vals in enumerate(tuples):
        candidates = set()
        for pos in range(npts):
            for hi in cover_up.get(vals[pos], ()):
                out = list(vals)
                for q in range(npts):
                    if q == pos or pairs_leq[pos][q]:
                        out[q] = nc.join(out[q], hi)
                candidates.add(tuple(out))
        candidates.discard(vals)
        minimal = [
            t
            for t in candidates
            if not any(
                o != t
                and all(nc.leq(a, b) for a, b in zip(o, t))
                for o in candidates
            )
        ]
        for t in minimal:
            covers.append((i, index[t]))
    covers.sort()
    return FunctionLattice(poset, nc, tuple(members), tuple(covers))


def smashing_count(poset: FinitePoset, nc: NcLattice, guard: int | None = None) -> int:
    """Number of monotone functions, without building cover data."""
    limit = size_guard_limit() if guard is None else guard
    return sum(1 for _ in _monotone_value_tuples(poset, nc, limit))


# ---------------------------------------------------------------------------
# lattice isomorphism on cover digraphs

def _as_cover_digraph(obj):
    if isinstance(obj, FunctionLattice):
        return len(obj.members), tuple(obj.covers)
    if isinstance(obj, NcLattice):
        return len(obj), obj.covers()
    n, covers = obj
    return int(n), tuple((int(a), int(b)) for a, b in covers)


def lattice_iso(a, b):
    """An isomorphism between two lattices given by their cover
    digraphs, or None.

    Accepts FunctionLattice, NcLattice, or a plain (node_count, covers)
    pair.  Returns a list mapping a-indices to b-indices.
    """
    na, ea = _as_cover_digraph(a)
    nb, eb = _as_cover_digraph(b)
    if na != nb or len(ea) != len(eb):
        return None

    def neighbor_data(n, edges):
        ups = [set() for _ in range(n)]
        downs = [set() for _ in range(n)]
        for lo, hi in edges:
            ups[lo].add(hi)
            downs[hi].add(lo)
        return ups, downs

    ups_a, downs_a = neighbor_data(na, ea)
    ups_b, downs_b = neighbor_data(nb, eb)

    def refine(n, ups, downs):
        color = [(len(ups[i]), len(downs[i])) for i in range(n)]
        for _ in range(n):
            fresh = [
                (
                    color[i],
                    tuple(sorted(color[j] for j in ups[i])),
                    tuple(sorted(color[j] for j in downs[i])),
                )
                for i in range(n)
            ]
            canon = {c: k for k, c in enumerate(sorted(set(fresh)))}
            nxt = [canon[f] for f in fresh]
            if nxt == color:
                break
            color = nxt
        return color

    col_a = refine(na, ups_a, downs_a)
    col_b = refine(nb, ups_b, downs_b)
    if sorted(col_a) != sorted(col_b):
        return None
    mapping = [-1] * na
    used = [False] * nb
    order = sorted(range(na), key=lambda i: col_a.count(col_a[i]))

    def backtrack(k: int) -> bool:
        if k == na:
            return True
        i = order[k]
        for j in range(nb):
            if used[j] or col_a[i] != col_b[j]:
                continue
            ok = True
            for i2 in ups_a[i]:
                if mapping[i2] != -1 and mapping[i2] not in ups_b[j]:
                    ok = False
                    break
            if ok:
                for i2 in downs_a[i]:
                    if mapping[i2] != -1 and mapping[i2] not in downs_b[j]:
                        ok = False
                        break
            if ok:
                for i2 in range(na):
                    if mapping[i2] == -1:
                        continue
                    if i2 in ups_a[i] or i2 in downs_a[i]:
                        continue
                    if mapping[i2] in ups_b[j] or mapping[i2] in downs_b[j]:
                        ok = False
                        break
            if not ok:
                continue
            mapping[i] = j
            used[j] = True
            if backtrack(k + 1):
                return True
            mapping[i] = -1
            used[j] = False
        return False

    if not backtrack(0):
        return None
    return mapping
