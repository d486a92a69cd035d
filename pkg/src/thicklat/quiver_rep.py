"""Quiver representations over exact fields.

A quiver here is always an orientation of a simply laced Dynkin
diagram.  Indecomposable representations are realized as tree modules:
every structure matrix has entries 0 or 1.  They are produced by
reflection functors starting from a simple representation, with kernel
bases rescaled and sign-normalized at every step.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd

from . import linalg
from .linalg import QQ, nullspace, rref, solve
from .root_system import DynkinType, build_root_system

DimVector = tuple[int, ...]


class TreeModuleError(RuntimeError):
    """Raised when the 0/1 normal form of a tree module cannot be reached."""


@dataclass(frozen=True)
class Quiver:
    """An orientation of a Dynkin diagram.

    arrows are (source, target) vertex pairs, kept in sorted order.
    """

    dynkin: DynkinType
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        arrows = tuple(sorted((int(s), int(t)) for s, t in self.arrows))
        object.__setattr__(self, "arrows", arrows)
        edges = tuple(sorted(tuple(sorted(a)) for a in arrows))
        if edges != self.dynkin.diagram_edges():
            raise ValueError(
                f"arrows {arrows!r} do not orient the {self.dynkin} diagram"
            )

    @property
    def rank(self) -> int:
        return self.dynkin.rank

    def vertices(self) -> range:
        return self.dynkin.vertices()


def default_orientation(dynkin: DynkinType) -> Quiver:
    """Each diagram edge oriented from the smaller to the larger label."""
    return Quiver(dynkin, dynkin.diagram_edges())


def euler_form(quiver: Quiver, d: DimVector, e: DimVector) -> int:
    """<d, e> = sum_v d_v e_v - sum_{a: s->t} d_s e_t.

    For representations M, N with these dimension vectors this equals
    dim Hom(M, N) - dim Ext1(M, N).
    """
    total = sum(x * y for x, y in zip(d, e))
    for s, t in quiver.arrows:
        total -= d[s - 1] * e[t - 1]
    return total


@lru_cache(maxsize=None)
def _root_system_for(dynkin: DynkinType):
    return build_root_system(dynkin)


def indecomposable_dims(quiver: Quiver) -> tuple[DimVector, ...]:
    """Dimension vectors of the indecomposables: the positive roots,
    ordered by height then lexicographically."""
    return _root_system_for(quiver.dynkin).positive_roots


@dataclass(frozen=True)
class TreeModule:
    """An indecomposable representation with all matrix entries 0 or 1.

    maps[i] is the matrix of arrows[i], of shape dim[target] x dim[source],
    acting on column vectors.
    """

    quiver: Quiver
    dim: DimVector
    maps: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        if len(self.dim) != self.quiver.rank:
            raise ValueError("dimension vector has wrong length")
        if len(self.maps) != len(self.quiver.arrows):
            raise ValueError("one matrix per arrow required")
        for (s, t), mat in zip(self.quiver.arrows, self.maps):
            if len(mat) != self.dim[t - 1] or any(
                len(row) != self.dim[s - 1] for row in mat
            ):
                raise ValueError(f"matrix for arrow {(s, t)} has wrong shape")
            if any(x not in (0, 1) for row in mat for x in row):
                raise ValueError("tree module entries must be 0 or 1")

    def map_for(self, arrow) -> tuple[tuple[int, ...], ...]:
        return self.maps[self.quiver.arrows.index(tuple(arrow))]


@dataclass(frozen=True)
class FieldRep:
    """A representation over an explicit field.

    Entries are field elements: ints for GF(p), ints or Fractions over
    the rationals.
    """

    field: object
    quiver: Quiver
    dim: DimVector
    maps: tuple[tuple[tuple, ...], ...]

    @property
    def total_dim(self) -> int:
        return sum(self.dim)


def base_change(module: TreeModule, field) -> FieldRep:
    """Reinterpret the 0/1 matrices of a tree module over a field."""
    maps = tuple(
        tuple(tuple(field.from_int(x) for x in row) for row in mat)
        for mat in module.maps
    )
    return FieldRep(field, module.quiver, module.dim, maps)


# ---------------------------------------------------------------------------
# tree modules via reflection functors

def _primitive_int_vector(vec):
    """Scale an exact rational vector to a primitive integer vector with
    positive leading entry."""
    fr = [Fraction(x) for x in vec]
    denom = 1
    for x in fr:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x != 0), 1)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def _reflect_at_sink(arrows, dims, maps, v):
    """One reflection functor step at a sink v.

    arrows: tuple of (s, t); maps: dict arrow -> matrix (rows of ints).
    Returns (new_arrows, new_dims, new_maps) with arrows at v reversed
    and the new vertex space the kernel of the stacked arrival map.
    """
    in_arrows = sorted(a for a in arrows if a[1] == v)
    if any(a[0] == v for a in arrows):
        raise RuntimeError(f"vertex {v} is not a sink")
    blocks = [(a, dims[a[0] - 1]) for a in in_arrows]
    width = sum(w for _, w in blocks)
    rows = []
    for r in range(dims[v - 1]):
        row = []
        for a, w in blocks:
            row.extend(maps[a][r])
        rows.append(row)
    kernel = [
        _primitive_int_vector(vec) for vec in nullspace(QQ, rows, ncols=width)
    ]
    new_dims = list(dims)
    new_dims[v - 1] = len(kernel)
    new_maps = {a: m for a, m in maps.items() if a not in in_arrows}
    new_arrows = [a for a in arrows if a not in in_arrows]
    offset = 0
    for a, w in blocks:
        u = a[0]
        rev = (v, u)
        block = tuple(
            tuple(vec[offset + r] for vec in kernel) for r in range(w)
        )
        new_maps[rev] = block
        new_arrows.append(rev)
        offset += w
    return tuple(sorted(new_arrows)), tuple(new_dims), new_maps


def _normalize_signs(dims, maps):
    """Flip basis-vector signs per vertex so every entry lands in {0, 1}.

    The flip parities satisfy one parity constraint per nonzero entry;
    solved by union-find with parity.  Raises TreeModuleError when an
    entry exceeds +-1 or the constraints conflict.
    """
    nodes = [(v, i) for v, d in enumerate(dims, start=1) for i in range(d)]
    parent = {k: k for k in nodes}
    parity = {k: 0 for k in nodes}

    def find(x):
        path = []
        while parent[x] != x:
            path.append(x)
            x = parent[x]
        p = 0
        for y in reversed(path):
            p ^= parity[y]
            parent[y] = x
            parity[y] = p
        return x

    def rel(x):
        find(x)
        return parity[x] if parent[x] != x else 0

    def union(x, y, want):
        rx, ry = find(x), find(y)
        px = parity[x] if parent[x] != x else 0
        py = parity[y] if parent[y] != y else 0
        if rx == ry:
            if (px ^ py) != want:
                raise TreeModuleError("sign constraints conflict")
            return
        parent[ry] = rx
        parity[ry] = px ^ py ^ want

    for a, mat in maps.items():
        s, t = a
        for i, row in enumerate(mat):
            for j, x in enumerate(row):
                if x == 0:
                    continue
                if abs(x) != 1:
                    raise TreeModuleError(f"entry {x} not reachable from 0/1")
                union((t, i), (s, j), 1 if x < 0 else 0)

    flip = {k: rel(k) for k in nodes}
    fixed = {}
    for a, mat in maps.items():
        s, t = a
        fixed[a] = tuple(
            tuple(
                x * (-1 if (flip[(t, i)] ^ flip[(s, j)]) else 1)
                for j, x in enumerate(row)
            )
            for i, row in enumerate(mat)
        )
    return fixed


def _source_order(quiver: Quiver) -> list[int]:
    """Topological order of the vertices, sources first, smallest label
    breaking ties."""
    remaining = set(quiver.vertices())
    order = []
    while remaining:
        sources = [
            v
            for v in sorted(remaining)
            if not any(t == v and s in remaining for s, t in quiver.arrows)
        ]
        if not sources:
            raise ValueError("orientation has a cycle")
        order.append(sources[0])
        remaining.discard(sources[0])
    return order


def _simple_reflection_of_dim(cartan, dim, v):
    pairing = sum(cartan[v - 1][k] * dim[k] for k in range(len(dim)))
    return tuple(
        x - (pairing if k == v - 1 else 0) for k, x in enumerate(dim)
    )


@lru_cache(maxsize=None)
def tree_module(quiver: Quiver, dim: DimVector) -> TreeModule:
    """The indecomposable representation with the given dimension vector,
    presented with 0/1 matrices.

    dim must be a positive root of the quiver's type.  The module is
    built by running reflection functors back from a simple
    representation along an admissible source order.  For the handful of
    exceptional-type roots where the reflected kernel bases cannot be
    sign-normalized, it is glued instead as the middle term of a unit
    cocycle extension of two smaller tree modules, which keeps every
    entry in {0, 1}.
    """
    dim = tuple(int(x) for x in dim)
    rs = _root_system_for(quiver.dynkin)
    if dim not in rs.positive_roots:
        raise ValueError(f"{dim!r} is not a positive root of {quiver.dynkin}")
    try:
        return _tree_module_by_reflections(quiver, dim)
    except TreeModuleError:
        return _tree_module_by_gluing(quiver, dim)


def _tree_module_by_reflections(quiver: Quiver, dim: DimVector) -> TreeModule:
    rs = _root_system_for(quiver.dynkin)
    order = _source_order(quiver)
    n = quiver.rank
    bound = n * (quiver.dynkin.coxeter_number() + 2)

    seq = []
    orientations = [quiver.arrows]
    current = dim
    idx = 0
    while True:
        v = order[idx % n]
        if current == tuple(1 if k == v - 1 else 0 for k in range(n)):
            break
        current = _simple_reflection_of_dim(rs.cartan, current, v)
        if any(x < 0 for x in current):
            raise RuntimeError("dimension vector left the positive cone")
        seq.append(v)
        flipped = tuple(
            sorted((t, s) if v in (s, t) else (s, t) for s, t in orientations[-1])
        )
        orientations.append(flipped)
        idx += 1
        if idx > bound:
            raise RuntimeError("reflection sequence failed to terminate")

    arrows = orientations[-1]
    dims = current
    maps = {
        a: tuple((0,) * dims[a[0] - 1] for _ in range(dims[a[1] - 1]))
        for a in arrows
    }
    for j in range(len(seq) - 1, -1, -1):
        v = seq[j]
        arrows, dims, maps = _reflect_at_sink(arrows, dims, maps, v)
        maps = _normalize_signs(dims, maps)
        if arrows != orientations[j]:
            raise RuntimeError("orientation bookkeeping went wrong")
    if dims != dim:
        raise RuntimeError("reflection functors produced the wrong dimensions")
    ordered = tuple(maps[a] for a in quiver.arrows)
    return TreeModule(quiver, dims, ordered)


def _tree_module_by_gluing(quiver: Quiver, dim: DimVector) -> TreeModule:
    """Middle term of a unit cocycle extension between smaller roots.

    Searches, in canonical root order, for positive roots b + c = dim
    whose modules are Hom-orthogonal with a one dimensional extension
    space Ext1(M_c, M_b) and none the other way; the block matrix
    construction then stays over {0, 1}.
    """
    rs = _root_system_for(quiver.dynkin)
    roots = set(rs.positive_roots)
    for beta in rs.positive_roots:
        gamma = tuple(x - y for x, y in zip(dim, beta))
        if gamma not in roots:
            continue
        sub = base_change(tree_module(quiver, beta), QQ)
        quot = base_change(tree_module(quiver, gamma), QQ)
        if hom_dim(sub, quot) or hom_dim(quot, sub):
            continue
        if ext_dim(sub, quot) or ext_dim(quot, sub) != 1:
            continue
        cocycle = ext_cocycle_basis(quot, sub)[0]
        middle = extension_middle(quot, sub, cocycle)
        maps = tuple(
            tuple(tuple(_as_unit_int(x) for x in row) for row in mat)
            for mat in middle.maps
        )
        return TreeModule(quiver, middle.dim, maps)
    raise TreeModuleError(
        f"no gluing pair of roots found for {dim!r} over {quiver.dynkin}"
    )


def _as_unit_int(x) -> int:
    value = Fraction(x)
    if value.denominator != 1 or int(value) not in (0, 1):
        raise TreeModuleError(f"extension entry {x!r} is not 0 or 1")
    return int(value)


# ---------------------------------------------------------------------------
# Hom and Ext over a field

def _mat_mul_shaped(field, a, b, rows, inner, cols):
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = field.zero
            for k in range(inner):
                acc = field.add(acc, field.mul(a[i][k], b[k][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _vertex_offsets(dims_m, dims_n):
    offsets = []
    total = 0
    for dm, dn in zip(dims_m, dims_n):
        offsets.append(total)
        total += dm * dn
    return offsets, total


def hom_basis(m: FieldRep, n: FieldRep):
    """Basis of Hom(m, n) as tuples of per-vertex matrices."""
    if m.quiver != n.quiver or m.field != n.field:
        raise ValueError("representations live over different data")
    field = m.field
    offsets, total = _vertex_offsets(m.dim, n.dim)
    rows = []
    for ai, (s, t) in enumerate(m.quiver.arrows):
        ma, na = m.maps[ai], n.maps[ai]
        ds, dt = m.dim[s - 1], m.dim[t - 1]
        es, et = n.dim[s - 1], n.dim[t - 1]
        for i in range(et):
            for j in range(ds):
                row = [field.zero] * total
                for k in range(dt):
                    row[offsets[t - 1] + i * m.dim[t - 1] + k] = field.add(
                        row[offsets[t - 1] + i * m.dim[t - 1] + k], ma[k][j]
                    )
                for l in range(es):
                    row[offsets[s - 1] + l * m.dim[s - 1] + j] = field.sub(
                        row[offsets[s - 1] + l * m.dim[s - 1] + j], na[i][l]
                    )
                rows.append(row)
    basis = nullspace(field, rows, ncols=total)
    out = []
    for vec in basis:
        per_vertex = []
        for v in range(m.quiver.rank):
            dm, dn = m.dim[v], n.dim[v]
            off = offsets[v]
            per_vertex.append(
                tuple(
                    tuple(vec[off + i * dm + j] for j in range(dm))
                    for i in range(dn)
                )
            )
        out.append(tuple(per_vertex))
    return out


def hom_dim(m: FieldRep, n: FieldRep) -> int:
    """dim Hom(m, n), the nullity of the intertwining system."""
    return len(hom_basis(m, n))


def ext_dim(m: FieldRep, n: FieldRep) -> int:
    """dim Ext1(m, n) = dim Hom(m, n) - <dim m, dim n>."""
    value = hom_dim(m, n) - euler_form(m.quiver, m.dim, n.dim)
    if value < 0:
        raise RuntimeError("negative Ext dimension; hereditary identity broken")
    return value


def morphism_from_coeffs(field, basis, coeffs):
    """Linear combination of hom_basis elements, as per-vertex matrices."""
    if not basis:
        raise ValueError("empty basis")
    nverts = len(basis[0])
    out = []
    for v in range(nverts):
        rows = len(basis[0][v])
        cols = len(basis[0][v][0]) if rows else 0
        mat = [[field.zero] * cols for _ in range(rows)]
        for c, elem in zip(coeffs, basis):
            if c == field.zero:
                continue
            bm = elem[v]
            for i in range(rows):
                for j in range(cols):
                    mat[i][j] = field.add(mat[i][j], field.mul(c, bm[i][j]))
        out.append(tuple(tuple(r) for r in mat))
    return tuple(out)


def kernel_rep(phi, m: FieldRep) -> FieldRep:
    """Kernel of a morphism phi out of m, as a subrepresentation of m."""
    field = m.field
    bases = []
    for v in range(m.quiver.rank):
        bases.append(nullspace(field, phi[v], ncols=m.dim[v]))
    return _sub_rep_on_bases(m, bases)


def cokernel_rep(phi, n: FieldRep) -> FieldRep:
    """Cokernel of phi: m -> n, presented on left-kernel coordinates."""
    field = n.field
    quotient_rows = []
    new_dim = []
    for v in range(n.quiver.rank):
        q = linalg.left_nullspace(field, phi[v], nrows=n.dim[v])
        quotient_rows.append(q)
        new_dim.append(len(q))
    maps = []
    for ai, (s, t) in enumerate(n.quiver.arrows):
        qs, qt = quotient_rows[s - 1], quotient_rows[t - 1]
        na = n.maps[ai]
        # rows of qt @ na lie in the row space of qs; solve for the matrix
        rhs = _mat_mul_shaped(
            field, qt, na, len(qt), n.dim[t - 1], n.dim[s - 1]
        )
        if len(qs) == 0:
            maps.append(tuple(() for _ in range(len(qt))))
            continue
        sol = solve(
            field,
            list(zip(*qs)),
            list(zip(*rhs)) if rhs else [[] for _ in range(n.dim[s - 1])],
        )
        if sol is None:
            raise RuntimeError("cokernel maps are not induced; not a morphism?")
        maps.append(tuple(zip(*sol)) if sol else tuple(() for _ in qt))
    fixed = []
    for ai, (s, t) in enumerate(n.quiver.arrows):
        mat = maps[ai]
        fixed.append(
            tuple(tuple(row) for row in mat)
            if new_dim[t - 1]
            else tuple()
        )
    return FieldRep(field, n.quiver, tuple(new_dim), tuple(fixed))


def _sub_rep_on_bases(m: FieldRep, bases) -> FieldRep:
    """Representation induced on per-vertex column bases of invariant
    subspaces of m."""
    field = m.field
    new_dim = tuple(len(b) for b in bases)
    maps = []
    for ai, (s, t) in enumerate(m.quiver.arrows):
        bs, bt = bases[s - 1], bases[t - 1]
        ma = m.maps[ai]
        image_cols = []
        for vec in bs:
            col = [
                _dot(field, ma[i], vec) for i in range(m.dim[t - 1])
            ]
            image_cols.append(col)
        if not bt:
            if any(any(x != field.zero for x in col) for col in image_cols):
                raise RuntimeError("subspaces are not invariant")
            maps.append(tuple())
            continue
        bt_mat = list(zip(*bt))
        rhs = list(zip(*image_cols)) if image_cols else [
            () for _ in range(m.dim[t - 1])
        ]
        sol = solve(field, bt_mat, rhs)
        if sol is None:
            raise RuntimeError("subspaces are not invariant")
        maps.append(tuple(tuple(row) for row in sol))
    return FieldRep(field, m.quiver, new_dim, tuple(maps))


def _dot(field, row, vec):
    acc = field.zero
    for x, y in zip(row, vec):
        acc = field.add(acc, field.mul(x, y))
    return acc


def ext_cocycle_basis(m: FieldRep, n: FieldRep):
    """Cocycles spanning Ext1(m, n): a complement of the coboundaries
    inside the per-arrow correction space.

    Returns a list of tuples of per-arrow matrices psi_a of shape
    n_dim[t] x m_dim[s].
    """
    if m.quiver != n.quiver or m.field != n.field:
        raise ValueError("representations live over different data")
    field = m.field
    quiver = m.quiver
    arrow_offsets = []
    total = 0
    for s, t in quiver.arrows:
        arrow_offsets.append(total)
        total += n.dim[t - 1] * m.dim[s - 1]
    phi_offsets, phi_total = _vertex_offsets(m.dim, n.dim)
    coboundary_cols = []
    for col in range(phi_total):
        vert = max(v for v in range(quiver.rank) if phi_offsets[v] <= col)
        local = col - phi_offsets[vert]
        dm = m.dim[vert]
        i, j = divmod(local, dm)
        out = [field.zero] * total
        for ai, (s, t) in enumerate(quiver.arrows):
            ma, na = m.maps[ai], n.maps[ai]
            base = arrow_offsets[ai]
            if t - 1 == vert:
                for jj in range(m.dim[s - 1]):
                    out[base + i * m.dim[s - 1] + jj] = field.add(
                        out[base + i * m.dim[s - 1] + jj], ma[j][jj]
                    )
            if s - 1 == vert:
                for ii in range(n.dim[t - 1]):
                    out[base + ii * m.dim[s - 1] + j] = field.sub(
                        out[base + ii * m.dim[s - 1] + j], na[ii][i]
                    )
        coboundary_cols.append(out)
    if coboundary_cols:
        _, pivot_coords = rref(field, [list(v) for v in coboundary_cols])
    else:
        pivot_coords = []
    # unit vectors at non-pivot coordinates complement the coboundary image
    pivot_set = set(pivot_coords)
    chosen = [c for c in range(total) if c not in pivot_set]
    expected = total - len(pivot_coords)
    basis = []
    for coord in chosen:
        per_arrow = []
        for ai, (s, t) in enumerate(quiver.arrows):
            rows = n.dim[t - 1]
            cols = m.dim[s - 1]
            base = arrow_offsets[ai]
            per_arrow.append(
                tuple(
                    tuple(
                        field.one
                        if base + i * cols + j == coord
                        else field.zero
                        for j in range(cols)
                    )
                    for i in range(rows)
                )
            )
        basis.append(tuple(per_arrow))
    if len(basis) != expected:
        raise RuntimeError("failed to span a complement of the coboundaries")
    return basis


def extension_middle(m: FieldRep, n: FieldRep, cocycle) -> FieldRep:
    """Middle term of the extension of m by n given by a cocycle.

    Vertex spaces are n_v (+) m_v; the arrow matrices are block upper
    triangular with the cocycle in the corner.
    """
    field = m.field
    quiver = m.quiver
    dims = tuple(nv + mv for nv, mv in zip(n.dim, m.dim))
    maps = []
    for ai, (s, t) in enumerate(quiver.arrows):
        na, ma, psi = n.maps[ai], m.maps[ai], cocycle[ai]
        es, et = n.dim[s - 1], n.dim[t - 1]
        ds, dt = m.dim[s - 1], m.dim[t - 1]
        rows = []
        for i in range(et):
            rows.append(tuple(na[i]) + tuple(psi[i]))
        for i in range(dt):
            rows.append(tuple(field.zero for _ in range(es)) + tuple(ma[i]))
        maps.append(tuple(rows))
    return FieldRep(field, quiver, dims, tuple(maps))


# ---------------------------------------------------------------------------
# Krull-Schmidt decomposition

def _mat_power(field, mat, size, exponent):
    result = tuple(
        tuple(field.one if i == j else field.zero for j in range(size))
        for i in range(size)
    )
    base = mat
    e = exponent
    while e:
        if e & 1:
            result = _mat_mul_shaped(field, result, base, size, size, size)
        base = _mat_mul_shaped(field, base, base, size, size, size)
        e >>= 1
    return result


def _column_space_basis(field, mat, size):
    cols = list(zip(*mat)) if mat else []
    if not cols:
        return []
    _, pivots = rref(field, mat)
    # pivots of the row-reduced matrix mark independent columns
    return [tuple(mat[r][c] for r in range(size)) for c in pivots]


def _fitting_split(rep: FieldRep, phi):
    """Try to split rep along the stable kernel/image of phi.

    Returns (kernel_rep, image_rep) or None when phi is nilpotent or
    invertible.
    """
    field = rep.field
    exponent = 1
    while (1 << exponent) < max(rep.total_dim, 2):
        exponent += 1
    ker_bases = []
    im_bases = []
    ker_total = 0
    im_total = 0
    for v in range(rep.quiver.rank):
        size = rep.dim[v]
        if size == 0:
            ker_bases.append([])
            im_bases.append([])
            continue
        power = _mat_power(field, phi[v], size, 1 << exponent)
        kb = nullspace(field, power, ncols=size)
        ib = _column_space_basis(field, power, size)
        if len(kb) + len(ib) != size:
            raise RuntimeError("stable kernel and image do not fill the space")
        ker_bases.append(kb)
        im_bases.append(ib)
        ker_total += len(kb)
        im_total += len(ib)
    if ker_total == 0 or im_total == 0:
        return None
    return (
        _sub_rep_on_bases(rep, ker_bases),
        _sub_rep_on_bases(rep, im_bases),
    )


def _splitter_candidates(field, basis_size):
    """Deterministic stream of coefficient vectors to probe for a
    Fitting splitter: basis elements first, then everything."""
    for i in range(basis_size):
        vec = [field.zero] * basis_size
        vec[i] = field.one
        yield tuple(vec)
    if field.char:
        for combo in product(field.elements(), repeat=basis_size):
            yield tuple(combo)
    else:
        height = 1
        while height <= 64:
            values = [Fraction(k) for k in range(-height, height + 1)]
            for combo in product(values, repeat=basis_size):
                if max((abs(x) for x in combo), default=Fraction(0)) == height:
                    yield tuple(combo)
            height += 1


def decompose_dims(rep: FieldRep) -> tuple[DimVector, ...]:
    """Dimension vectors of the indecomposable summands, sorted, with
    multiplicity.

    Splits along Fitting decompositions of endomorphisms until every
    piece has a one dimensional endomorphism ring.
    """
    if rep.total_dim == 0:
        return ()
    basis = hom_basis(rep, rep)
    if len(basis) == 1:
        return (rep.dim,)
    field = rep.field
    for coeffs in _splitter_candidates(field, len(basis)):
        if all(c == field.zero for c in coeffs):
            continue
        phi = morphism_from_coeffs(field, basis, coeffs)
        split = _fitting_split(rep, phi)
        if split is not None:
            left, right = split
            return tuple(
                sorted(decompose_dims(left) + decompose_dims(right))
            )
    raise RuntimeError("no Fitting splitter found for a decomposable module")
