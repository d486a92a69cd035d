"""Command line interface.

Subcommands: nc (noncrossing partition lattices), thick (wide
subcategory enumeration and the bijection check), specfn (lattices of
functions from a finite poset), figures (reference diagram golden
files), koszul (Koszul homology at rational points).

Output is byte deterministic: JSON is dumped with sorted keys and a
trailing newline, DOT statements are emitted in sorted order, and node
identifiers serialize mathematical content rather than enumeration
indices.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .figures import (
    FIGURE1_COVERS,
    FIGURE1_NODES,
    FIGURE2_COVERS,
    FIGURE2_NODE_COUNT,
)
from .koszul import (
    Poly,
    PolyRing,
    RationalPoint,
    evaluate,
    homology_dims,
    koszul_complex,
    koszul_tensor_module,
)
from .linalg import GF
from .quiver_rep import Quiver, TreeModuleError, default_orientation, tree_module
from .root_system import (
    DynkinType,
    NcLattice,
    build_root_system,
    coxeter_element,
    nc_to_set_partition,
    reflection_factorization,
)
from .spec_model import (
    FinitePoset,
    SizeGuardError,
    all_functions,
    lattice_iso,
    monotone_functions,
    poset_antichain,
    poset_chain,
    poset_diamond,
    poset_point,
)
from .thick_enum import enumerate_thick, verify_bijection, wide_to_nc

SCHEMA_VERSION = "1"


# ---------------------------------------------------------------------------
# polynomial parsing

class PolynomialSyntaxError(ValueError):
    """A parse failure, carrying the 1-based column of the offense."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column


_SYMBOLS = set("+-*/^()")


def _tokenize_poly(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, i + 1))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i + 1))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i + 1))
            i = j
            continue
        raise PolynomialSyntaxError(f"unexpected character {ch!r}", i + 1)
    tokens.append(("end", "", len(text) + 1))
    return tokens


def parse_polynomial(ring: PolyRing, text: str) -> Poly:
    """Parse `+ - * ^` expressions with integer or rational coefficients.

    Juxtaposition is rejected: every product needs an explicit `*`.
    """
    tokens = _tokenize_poly(text)
    pos = 0

    def peek():
        return tokens[pos]

    def advance():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_expr() -> Poly:
        sign = 1
        while peek()[0] in ("+", "-"):
            if advance()[0] == "-":
                sign = -sign
        acc = parse_term().scale(sign)
        while peek()[0] in ("+", "-"):
            op = advance()[0]
            sign = 1 if op == "+" else -1
            while peek()[0] in ("+", "-"):
                if advance()[0] == "-":
                    sign = -sign
            acc = acc + parse_term().scale(sign)
        return acc

    def parse_term() -> Poly:
        acc = parse_factor()
        while True:
            kind, value, column = peek()
            if kind == "*":
                advance()
                acc = acc * parse_factor()
                continue
            if kind in ("int", "name", "("):
                raise PolynomialSyntaxError(
                    f"missing operator before {value!r}; "
                    "juxtaposition is not allowed",
                    column,
                )
            return acc

    def parse_factor() -> Poly:
        base = parse_base()
        if peek()[0] == "^":
            advance()
            kind, value, column = advance()
            if kind != "int":
                raise PolynomialSyntaxError(
                    "exponent must be a nonnegative integer", column
                )
            out = Poly.const(ring, 1)
            for _ in range(int(value)):
                out = out * base
            return out
        return base

    def parse_base() -> Poly:
        kind, value, column = advance()
        if kind == "int":
            numerator = int(value)
            if peek()[0] == "/":
                advance()
                dkind, dvalue, dcolumn = advance()
                if dkind != "int" or int(dvalue) == 0:
                    raise PolynomialSyntaxError(
                        "denominator must be a nonzero integer", dcolumn
                    )
                return Poly.const(ring, Fraction(numerator, int(dvalue)))
            return Poly.const(ring, numerator)
        if kind == "name":
            if value not in ring.variables:
                raise PolynomialSyntaxError(
                    f"unknown variable {value!r}", column
                )
            return Poly.variable(ring, value)
        if kind == "(":
            inner = parse_expr()
            closer = advance()
            if closer[0] != ")":
                raise PolynomialSyntaxError("expected ')'", closer[2])
            return inner
        raise PolynomialSyntaxError(
            f"expected a number, variable or '(', got {value!r}"
            if value
            else "unexpected end of input",
            column,
        )

    result = parse_expr()
    kind, value, column = peek()
    if kind != "end":
        raise PolynomialSyntaxError(f"unexpected {value!r}", column)
    return result


# ---------------------------------------------------------------------------
# shared plumbing

def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse rational number {text!r}") from None


def _parse_orientation(dynkin: DynkinType, text: str | None) -> Quiver:
    if text is None:
        return default_orientation(dynkin)
    arrows = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        parts = chunk.split(">")
        if len(parts) != 2:
            raise ValueError(f"bad arrow {chunk!r}; expected like 1>2")
        try:
            s, t = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"bad arrow {chunk!r}; expected like 1>2") from None
        if not (1 <= s <= dynkin.rank and 1 <= t <= dynkin.rank):
            raise ValueError(
                f"arrow {chunk!r} uses vertices outside 1..{dynkin.rank}"
            )
        arrows.append((s, t))
    return Quiver(dynkin, tuple(arrows))


def _orientation_echo(quiver: Quiver) -> str:
    return ",".join(f"{s}>{t}" for s, t in quiver.arrows)


def _partition_label(blocks) -> str:
    shown = [b for b in blocks if len(b) > 1] or list(blocks)
    return ",".join("(" + ",".join(str(x) for x in b) + ")" for b in shown)


def _nc_node_id(rs, dynkin: DynkinType, element) -> str:
    if dynkin.letter == "A":
        return _partition_label(nc_to_set_partition(element))
    factors = reflection_factorization(rs, element.w)
    if not factors:
        return "e"
    return "*".join(f"r{i}" for i in factors)


def _json_text(document) -> str:
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def _dot_quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot_text(node_ids, edges) -> str:
    lines = ["digraph thicklat {", "  rankdir=BT;"]
    for node in node_ids:
        lines.append(f"  {_dot_quote(node)};")
    for lo, hi in sorted(edges):
        lines.append(f"  {_dot_quote(lo)} -> {_dot_quote(hi)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _document(command: str, arguments: dict, payload: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "arguments": arguments,
        "payload": payload,
    }


def _chosen_format(args) -> str:
    if getattr(args, "count", False):
        return "count"
    return args.format


# ---------------------------------------------------------------------------
# nc

def _nc_lattice_data(dynkin: DynkinType, quiver: Quiver):
    rs = build_root_system(dynkin)
    c = coxeter_element(rs, quiver)
    lattice = NcLattice(rs, c)
    ids = [_nc_node_id(rs, dynkin, e) for e in lattice.elements]
    if len(set(ids)) != len(ids):
        raise RuntimeError("node identifiers collide")
    order = sorted(
        range(len(ids)), key=lambda i: (lattice.elements[i].length, ids[i])
    )
    nodes = [
        {"id": ids[i], "length": lattice.elements[i].length} for i in order
    ]
    if dynkin.letter == "A":
        for row, i in zip(nodes, order):
            row["blocks"] = [
                list(b) for b in nc_to_set_partition(lattice.elements[i])
            ]
    edges = sorted((ids[i], ids[j]) for i, j in lattice.covers())
    return lattice, [ids[i] for i in order], nodes, edges


def cmd_nc(args) -> int:
    dynkin = DynkinType.parse(args.type)
    quiver = _parse_orientation(dynkin, args.orientation)
    lattice, ordered_ids, nodes, edges = _nc_lattice_data(dynkin, quiver)
    fmt = _chosen_format(args)
    arguments = {
        "type": str(dynkin),
        "orientation": _orientation_echo(quiver),
        "format": fmt,
    }
    if fmt == "count":
        _write_output(f"{len(lattice)}\n", args.out)
    elif fmt == "dot":
        _write_output(_dot_text(ordered_ids, edges), args.out)
    else:
        payload = {
            "element_count": len(lattice),
            "cover_count": len(edges),
            "elements": nodes,
            "covers": [list(e) for e in edges],
        }
        _write_output(_json_text(_document("nc", arguments, payload)), args.out)
    return 0


# ---------------------------------------------------------------------------
# thick

def _dim_label(dim) -> str:
    return "(" + ",".join(str(x) for x in dim) + ")"


def _wide_id(wide) -> str:
    return "{" + ";".join(_dim_label(d) for d in wide.sorted_dims()) + "}"


def _inclusion_covers(wides):
    sets = [frozenset(w.dims) for w in wides]
    n = len(wides)
    covers = []
    for i in range(n):
        for j in range(n):
            if i == j or not sets[i] < sets[j]:
                continue
            if any(
                k != i and k != j and sets[i] < sets[k] < sets[j]
                for k in range(n)
            ):
                continue
            covers.append((i, j))
    return covers


def cmd_thick(args) -> int:
    dynkin = DynkinType.parse(args.type)
    quiver = _parse_orientation(dynkin, args.orientation)
    field = GF(args.field)
    wides = enumerate_thick(quiver, field)
    ids = [_wide_id(w) for w in wides]
    order = sorted(range(len(ids)), key=lambda i: (len(wides[i].dims), ids[i]))
    fmt = _chosen_format(args)
    arguments = {
        "type": str(dynkin),
        "orientation": _orientation_echo(quiver),
        "field": args.field,
        "format": fmt,
        "verify": bool(args.verify),
    }
    exit_code = 0
    report = None
    if args.verify:
        report = verify_bijection(quiver, field)
        if not report.ok:
            exit_code = 1
    if fmt == "count":
        _write_output(f"{len(wides)}\n", args.out)
        return exit_code
    if fmt == "dot":
        edges = sorted(
            (ids[i], ids[j]) for i, j in _inclusion_covers(wides)
        )
        _write_output(_dot_text([ids[i] for i in order], edges), args.out)
        return exit_code
    rs = build_root_system(dynkin)
    subcats = [
        {
            "id": ids[i],
            "dimension_vectors": [list(d) for d in wides[i].sorted_dims()],
            "nc_image": _nc_node_id(rs, dynkin, wide_to_nc(wides[i])),
        }
        for i in order
    ]
    payload = {"thick_count": len(wides), "subcategories": subcats}
    if report is not None:
        payload["verification"] = {
            "thick_count": report.thick_count,
            "nc_count": report.nc_count,
            "is_bijective": report.is_bijective,
            "is_order_isomorphism": report.is_order_isomorphism,
            "ok": report.ok,
            "failures": list(report.failures),
        }
    _write_output(_json_text(_document("thick", arguments, payload)), args.out)
    return exit_code


# ---------------------------------------------------------------------------
# specfn

def _parse_poset_file(path: str) -> FinitePoset:
    points: list[str] = []
    seen = set()
    relations = []

    def note(name: str, lineno: int) -> str:
        if not name or "<" in name or any(c.isspace() for c in name):
            raise ValueError(f"bad point name {name!r} on line {lineno}")
        if name not in seen:
            seen.add(name)
            points.append(name)
        return name

    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("point "):
                note(line[len("point "):].strip(), lineno)
                continue
            if "<" in line:
                left, right = line.split("<", 1)
                a = note(left.strip(), lineno)
                b = note(right.strip(), lineno)
                if a == b:
                    raise ValueError(f"point {a!r} below itself on line {lineno}")
                relations.append((a, b))
                continue
            raise ValueError(
                f"cannot parse line {lineno}: expected 'a<b' or 'point NAME'"
            )
    if not points:
        raise ValueError(f"poset file {path!r} declares no points")
    return FinitePoset.from_covers(tuple(points), tuple(relations))


def _parse_poset(spec: str) -> FinitePoset:
    if spec.startswith("@"):
        return _parse_poset_file(spec[1:])
    if spec == "point":
        return poset_point()
    if spec == "diamond":
        return poset_diamond()
    for prefix, builder in (("chain", poset_chain), ("antichain", poset_antichain)):
        if spec.startswith(prefix) and spec[len(prefix):].isdigit():
            n = int(spec[len(prefix):])
            if n < 1:
                raise ValueError(f"poset {spec!r} needs at least one point")
            return builder(n)
    raise ValueError(
        f"unknown poset {spec!r}; use point, chainN, antichainN, diamond or @file"
    )


def _function_id(fn, nc_ids) -> str:
    pairs = sorted(
        (point, nc_ids[fn.value_index(point)]) for point in fn.poset.elements
    )
    return ";".join(f"{point}={value}" for point, value in pairs)


def cmd_specfn(args) -> int:
    dynkin = DynkinType.parse(args.type)
    quiver = _parse_orientation(dynkin, args.orientation)
    poset = _parse_poset(args.poset)
    rs = build_root_system(dynkin)
    c = coxeter_element(rs, quiver)
    nc = NcLattice(rs, c)
    nc_ids = [_nc_node_id(rs, dynkin, e) for e in nc.elements]
    build = monotone_functions if args.mode == "monotone" else all_functions
    lattice = build(poset, nc)
    ids = [_function_id(fn, nc_ids) for fn in lattice.members]
    if len(set(ids)) != len(ids):
        raise RuntimeError("node identifiers collide")
    order = sorted(range(len(ids)), key=lambda i: ids[i])
    edges = sorted((ids[i], ids[j]) for i, j in lattice.covers)
    fmt = _chosen_format(args)
    arguments = {
        "type": str(dynkin),
        "orientation": _orientation_echo(quiver),
        "poset": args.poset,
        "mode": args.mode,
        "format": fmt,
    }
    if fmt == "count":
        _write_output(f"{len(lattice.members)}\n", args.out)
    elif fmt == "dot":
        _write_output(_dot_text([ids[i] for i in order], edges), args.out)
    else:
        members = [
            {
                "id": ids[i],
                "values": {
                    point: nc_ids[lattice.members[i].value_index(point)]
                    for point in poset.elements
                },
            }
            for i in order
        ]
        payload = {
            "member_count": len(lattice.members),
            "cover_count": len(edges),
            "points": list(poset.elements),
            "members": members,
            "covers": [list(e) for e in edges],
        }
        _write_output(
            _json_text(_document("specfn", arguments, payload)), args.out
        )
    return 0


# ---------------------------------------------------------------------------
# figures

def cmd_figures(args) -> int:
    os.makedirs(args.outdir, exist_ok=True)
    dynkin = DynkinType.parse("A2")
    quiver = default_orientation(dynkin)
    lattice, ordered_ids, nodes, edges = _nc_lattice_data(dynkin, quiver)

    partitions = {nc_to_set_partition(e) for e in lattice.elements}
    figure1_nodes_match = partitions == set(FIGURE1_NODES)
    computed_covers = {
        (
            nc_to_set_partition(lattice.elements[i]),
            nc_to_set_partition(lattice.elements[j]),
        )
        for i, j in lattice.covers()
    }
    figure1_covers_match = computed_covers == set(FIGURE1_COVERS)
    figure1_ok = figure1_nodes_match and figure1_covers_match

    figure1_doc = _document(
        "figures",
        {"figure": 1},
        {
            "element_count": len(lattice),
            "cover_count": len(edges),
            "elements": nodes,
            "covers": [list(e) for e in edges],
        },
    )

    rs = build_root_system(dynkin)
    nc_ids = [_nc_node_id(rs, dynkin, e) for e in lattice.elements]
    functions = monotone_functions(poset_chain(2), lattice)
    fn_ids = [_function_id(fn, nc_ids) for fn in functions.members]
    fn_order = sorted(range(len(fn_ids)), key=lambda i: fn_ids[i])
    fn_edges = sorted((fn_ids[i], fn_ids[j]) for i, j in functions.covers)
    figure2_iso = (
        len(functions.members) == FIGURE2_NODE_COUNT
        and lattice_iso(functions, (FIGURE2_NODE_COUNT, FIGURE2_COVERS))
        is not None
    )
    figure2_doc = _document(
        "figures",
        {"figure": 2},
        {
            "member_count": len(functions.members),
            "cover_count": len(fn_edges),
            "members": [fn_ids[i] for i in fn_order],
            "covers": [list(e) for e in fn_edges],
        },
    )

    outputs = {
        "figure1.dot": _dot_text(ordered_ids, edges),
        "figure1.json": _json_text(figure1_doc),
        "figure2.dot": _dot_text([fn_ids[i] for i in fn_order], fn_edges),
        "figure2.json": _json_text(figure2_doc),
    }
    for name, text in sorted(outputs.items()):
        with open(os.path.join(args.outdir, name), "w", encoding="utf-8") as f:
            f.write(text)

    summary = _document(
        "figures",
        {"outdir": args.outdir},
        {
            "files": sorted(outputs),
            "figure1_matches_reference": figure1_ok,
            "figure2_isomorphic_to_reference": figure2_iso,
        },
    )
    sys.stdout.write(_json_text(summary))
    return 0 if figure1_ok and figure2_iso else 1


# ---------------------------------------------------------------------------
# koszul

def _parse_module_spec(text: str, orientation: str | None):
    head, sep, tail = text.partition(":")
    tail = tail.strip()
    if not sep or not (tail.startswith("(") and tail.endswith(")")):
        raise ValueError(
            f"bad module {text!r}; expected like A2:(1,1)"
        )
    dynkin = DynkinType.parse(head)
    try:
        dims = tuple(int(x) for x in tail[1:-1].split(","))
    except ValueError:
        raise ValueError(f"bad dimension vector in {text!r}") from None
    if len(dims) != dynkin.rank:
        raise ValueError(
            f"dimension vector in {text!r} must have {dynkin.rank} entries"
        )
    quiver = _parse_orientation(dynkin, orientation)
    return tree_module(quiver, dims), dynkin, quiver


def cmd_koszul(args) -> int:
    variables = tuple(v.strip() for v in args.vars.split(","))
    ring = PolyRing(variables)
    gens = [parse_polynomial(ring, text) for text in args.gens.split(",")]
    coords = tuple(_parse_rational(x) for x in args.at.split(","))
    point = RationalPoint(coords)
    complex_ = koszul_complex(ring, gens)
    homology = homology_dims(evaluate(complex_, point))
    arguments = {
        "vars": ",".join(variables),
        "gens": args.gens,
        "at": ",".join(str(x) for x in coords),
    }
    payload = {
        "variables": list(variables),
        "generators": [str(g) for g in gens],
        "point": [str(x) for x in coords],
        "ranks": [[n, r] for n, r in sorted(complex_.rank_map().items())],
        "homology": [[n, homology[n]] for n in sorted(homology)],
    }
    if args.module is not None:
        module, dynkin, quiver = _parse_module_spec(args.module, args.orientation)
        arguments["module"] = args.module
        vectors = koszul_tensor_module(complex_, module, point)
        payload["module"] = {
            "type": str(dynkin),
            "orientation": _orientation_echo(quiver),
            "dimension_vector": list(module.dim),
        }
        payload["module_homology"] = [[n, list(v)] for n, v in vectors]
    _write_output(_json_text(_document("koszul", arguments, payload)), args.out)
    return 0


# ---------------------------------------------------------------------------
# entry point

def _add_common_lattice_flags(sub, with_field=False):
    sub.add_argument("--type", required=True, help="Dynkin type, like A3 or D4")
    sub.add_argument(
        "--orientation",
        default=None,
        help="arrow list like 1>2,2>3 (default: small label to large)",
    )
    if with_field:
        sub.add_argument(
            "--field", type=int, required=True, help="prime order of the field"
        )
    sub.add_argument(
        "--format", choices=("json", "dot", "count"), default="json"
    )
    sub.add_argument(
        "--count",
        action="store_true",
        help="shorthand for --format count",
    )
    sub.add_argument("--out", default=None, help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thicklat",
        description=(
            "Exact computations with noncrossing partition lattices, wide "
            "subcategories of quiver representations, and lattices of "
            "monotone functions from finite posets."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_nc = sub.add_parser("nc", help="noncrossing partition lattice")
    _add_common_lattice_flags(p_nc)
    p_nc.set_defaults(handler=cmd_nc)

    p_thick = sub.add_parser(
        "thick", help="wide subcategories and the lattice bijection"
    )
    _add_common_lattice_flags(p_thick, with_field=True)
    p_thick.add_argument(
        "--verify",
        action="store_true",
        help="check the bijection onto the noncrossing partition lattice",
    )
    p_thick.set_defaults(handler=cmd_thick)

    p_spec = sub.add_parser(
        "specfn", help="lattices of functions from a finite poset"
    )
    _add_common_lattice_flags(p_spec)
    p_spec.add_argument(
        "--poset",
        required=True,
        help="point, chainN, antichainN, diamond, or @file",
    )
    p_spec.add_argument(
        "--mode", choices=("all", "monotone"), default="monotone"
    )
    p_spec.set_defaults(handler=cmd_specfn)

    p_fig = sub.add_parser("figures", help="write reference diagram files")
    p_fig.add_argument("--outdir", default=".", help="output directory")
    p_fig.set_defaults(handler=cmd_figures)

    p_kos = sub.add_parser("koszul", help="Koszul homology at a point")
    p_kos.add_argument(
        "--vars", required=True, help="comma separated variable names"
    )
    p_kos.add_argument(
        "--gens", required=True, help="comma separated polynomials"
    )
    p_kos.add_argument(
        "--at", required=True, help="comma separated rational coordinates"
    )
    p_kos.add_argument(
        "--module",
        default=None,
        help="tensor with a tree module, like A2:(1,1)",
    )
    p_kos.add_argument(
        "--orientation",
        default=None,
        help="orientation for the module's quiver",
    )
    p_kos.add_argument("--out", default=None, help="write output to this file")
    p_kos.set_defaults(handler=cmd_koszul)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except PolynomialSyntaxError as exc:
        print(f"thicklat: error: {exc}", file=sys.stderr)
        return 2
    except SizeGuardError as exc:
        print(f"thicklat: error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, TreeModuleError) as exc:
        print(f"thicklat: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"thicklat: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
