"""Command-line front end.

Examples::

    gf2cycles count K4
    gf2cycles homology --product K3 K3
    gf2cycles deleted-square --quotient K5
    gf2cycles cells --deleted K3,3 --json
    gf2cycles audit
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import bruteforce, cells, hypergraphs, products, symmetry
from .graphs import DomainError, Graph, cycle_space_basis, named_graph
from .hypergraphs import Hypergraph2, RookGrid

EXIT_OK, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2


class SpecError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        super().__init__(f"cannot parse {text!r} at position {pos}: {msg}")
        self.pos = pos


_PREFIXES = {"K": "complete", "C": "cycle", "P": "path", "W": "wheel", "tilde": "tilde", "H": "hyper", "R": "rook"}


def parse_spec(text: str) -> Graph | Hypergraph2 | RookGrid:
    """Parse K5, K3,3, C6, P4, W5, tilde4, H5, R3^2 or @file.json."""
    if text.startswith("@"):
        return _load_json(Path(text[1:]))
    m = re.match(r"tilde|[KCPWHR]", text)
    if not m:
        raise SpecError(text, 0, f"unknown generator; expected one of {sorted(_PREFIXES)} or @file.json")
    kind = _PREFIXES[m.group()]
    pos = m.end()
    nums = []
    seps = {"complete": ",", "rook": "^"}
    while True:
        d = re.match(r"\d+", text[pos:])
        if not d:
            raise SpecError(text, pos, "expected a number")
        nums.append(int(d.group()))
        pos += d.end()
        if pos < len(text) and text[pos] == seps.get(kind) and len(nums) == 1:
            pos += 1
            continue
        break
    if pos != len(text):
        raise SpecError(text, pos, f"unexpected {text[pos]!r}")
    try:
        if kind == "complete":
            return named_graph("complete", *nums) if len(nums) == 1 else named_graph("complete_bipartite", *nums)
        if kind == "hyper":
            return hypergraphs.complete_hypergraph(nums[0])
        if kind == "rook":
            if len(nums) != 2:
                raise SpecError(text, len(text), "rook grids are written R<n>^<ell>")
            return RookGrid(*nums)
        return named_graph(kind, *nums)
    except SpecError:
        raise
    except ValueError as err:
        raise SpecError(text, 0, str(err)) from None


def _load_json(path: Path):
    data = json.loads(path.read_text())
    if "faces" in data:
        return Hypergraph2.from_json(data)
    if "edges" in data:
        return Graph.from_json(data)
    raise ValueError(f"{path}: expected an object with 'edges' or 'faces'")


def _graph(text: str) -> Graph:
    g = parse_spec(text)
    if not isinstance(g, Graph):
        raise ValueError(f"{text!r} is not a graph")
    return g


def fmt_count(k: int) -> str:
    return f"2^{k} = {2 ** k}" if k <= 63 else f"2^{k}"


def _emit(args, report: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print("\n".join(text_lines))


def _agreement(report: dict, lines: list[str], computed: int, formula: int | None) -> int:
    if formula is None:
        return EXIT_OK
    report["formula_dim"] = formula
    report["agrees"] = computed == formula
    lines.append(f"closed form: {fmt_count(formula)} ({'agrees' if computed == formula else 'DISAGREES'})")
    return EXIT_OK if computed == formula else EXIT_DISAGREE


def _edges_json(c) -> list[list[int]]:
    return [list(p) for p in c.pairs()]


# ---------------------------------------------------------------------------
# verbs


def cmd_count(args) -> int:
    obj = parse_spec(args.spec)
    if isinstance(obj, Graph):
        dim = obj.cycle_space_dim()
        oracle = (lambda: bruteforce.count_graph_cycles(obj)) if args.brute_force else None
    elif isinstance(obj, Hypergraph2):
        dim = hypergraphs.euler_report(obj).b2
        oracle = (lambda: bruteforce.count_two_cycles(obj)) if args.brute_force else None
    else:
        dim = obj.space_dim()
        oracle = (lambda: bruteforce.count_rook_cycles(obj.n, obj.ell)) if args.brute_force else None
    report, lines = {"dim": dim}, [fmt_count(dim)]
    if oracle:
        n = oracle()
        report["brute_force"] = n
        lines.append(f"brute force: {n} ({'agrees' if n == 2 ** dim else 'DISAGREES'})")
        if n != 2**dim:
            _emit(args, report, lines)
            return EXIT_DISAGREE
    _emit(args, report, lines)
    return EXIT_OK


def cmd_basis(args) -> int:
    obj = parse_spec(args.spec)
    if isinstance(obj, Graph):
        _, basis = cycle_space_basis(obj)
        items = [_edges_json(c) for c in basis]
    elif isinstance(obj, Hypergraph2):
        items = [[list(f) for f in c.faces()] for c in hypergraphs.two_cycle_basis(obj)]
    else:
        items = [[list(obj.points[i]) for i in v.ones()] for v in obj.basis()]
    _emit(args, {"dim": len(items), "basis": items}, [fmt_count(len(items))] + [json.dumps(x) for x in items])
    return EXIT_OK


def cmd_homology(args) -> int:
    K, L = _graph(args.product[0]), _graph(args.product[1])
    hs = products.boundary_space(products.box_product(K, L))
    report = {"dim": hs.quotient_dim, "z1_dim": len(hs.z1_basis), "boundary_rank": hs.boundary_rank}
    lines = [fmt_count(hs.quotient_dim)]
    if args.basis:
        report["basis"] = [_edges_json(c) for c in hs.z1_basis]
        lines += [json.dumps(x) for x in report["basis"]]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_kunneth(args) -> int:
    K, L = _graph(args.left), _graph(args.right)
    if not (K.is_connected() and L.is_connected()):
        raise DomainError("both factors must be connected")
    dim = products.boundary_space(products.box_product(K, L)).quotient_dim
    report, lines = {"dim": dim}, [fmt_count(dim)]
    code = _agreement(report, lines, dim, K.cycle_space_dim() + L.cycle_space_dim())
    _emit(args, report, lines)
    return code


def cmd_symmetric(args) -> int:
    g = _graph(args.spec)
    if args.square:
        dim = products.symmetric_square_dim(g)
        formula = products.symmetric_square_formula(g)
    else:
        if args.spec.startswith("tilde"):
            t = symmetry.part_swap(g.nverts // 2)
        elif args.spec.startswith("C"):
            t = symmetry.antipodal(g)
        else:
            raise ValueError("pass --square, or a tilde<n> or even C<n> graph")
        dim = len(symmetry.symmetric_cycle_basis(g, t))
        formula = symmetry.symmetric_formula(g, t)
    report, lines = {"dim": dim}, [fmt_count(dim)]
    code = _agreement(report, lines, dim, formula)
    _emit(args, report, lines)
    return code


def cmd_deleted_square(args) -> int:
    g = _graph(args.spec)
    d = products.deleted_box_square(g)
    z1 = d.cycle_space_dim()
    if args.quotient:
        dim = products.deleted_square_quotient_dim(g)
    else:
        dim = z1
    report = {"dim": dim, "vertices": d.graph.nverts, "edges": d.graph.nedges, "z1_dim": z1}
    _emit(args, report, [fmt_count(dim)])
    return EXIT_OK


def cmd_cells(args) -> int:
    g = _graph(args.spec)
    u = cells.CellUniverse(g, "deleted" if args.deleted else "square")
    if args.symmetric:
        n = g.nverts // 2 if args.symmetric == "txt" else None
        rep = cells.symmetric_h2(u, args.symmetric, n)
        dim, basis, formula = rep.dim, rep.basis, rep.formula_dim
    else:
        h = cells.h2_space(u)
        dim, basis, formula = h.dim, h.basis, None
        if u.mode == "square":
            formula = g.cycle_space_dim() ** 2
    report, lines = {"dim": dim, "cells": len(u)}, [fmt_count(dim)]
    code = _agreement(report, lines, dim, formula)
    if args.basis:
        report["basis"] = [[list(c) for c in b.cells()] for b in basis]
        lines += [json.dumps(x) for x in report["basis"]]
    _emit(args, report, lines)
    return code


def cmd_hypergraph(args) -> int:
    h = parse_spec(args.spec)
    if not isinstance(h, Hypergraph2):
        raise ValueError(f"{args.spec!r} is not a hypergraph")
    e = hypergraphs.euler_report(h)
    x = hypergraphs.extremal_check(h)
    report = {
        "dim": e.b2, "b0": e.b0, "b1": e.b1, "b2": e.b2, "V": e.V, "E": e.E, "F": e.F,
        "identity_holds": e.identity_holds, "extremal_case": x.case, "face_connected": x.face_connected,
    }
    lines = [
        f"2-cycles: {fmt_count(e.b2)}",
        f"b0={e.b0} b1={e.b1} b2={e.b2}  V={e.V} E={e.E} F={e.F}",
        f"b0 - b1 + b2 = {e.b0 - e.b1 + e.b2} = V - E + F",
        f"extremal case: {x.case}",
    ]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_rook(args) -> int:
    grid = parse_spec(args.spec)
    if not isinstance(grid, RookGrid):
        raise ValueError(f"{args.spec!r} is not a rook grid")
    dim = grid.space_dim()
    report, lines = {"dim": dim}, [fmt_count(dim)]
    code = _agreement(report, lines, dim, grid.claimed_dim())
    if args.brute_force:
        n = bruteforce.count_rook_cycles(grid.n, grid.ell)
        report["brute_force"] = n
        lines.append(f"brute force: {n}")
        if n != 2**dim:
            code = EXIT_DISAGREE
    _emit(args, report, lines)
    return code


def _harness_target(p: products.BoxProduct, spec: dict):
    if "special" in spec:
        args = [tuple(a) if isinstance(a, list) else a for a in spec.get("args", [])]
        return products.special_cycle(p, spec["special"], *args)
    if "walk" in spec:
        return p.walk([tuple(v) for v in spec["walk"]])
    raise ValueError("target needs 'special' or 'walk'")


def run_harness(spec: dict, mod_boundaries: bool = False) -> products.HarnessResult:
    g = _graph(spec["graph"])
    p = products.box_product(g, g)
    target = _harness_target(p, spec["target"])
    return products.span_harness(
        g,
        target,
        spec["families"],
        spec.get("ambient", "square"),
        bool(spec.get("mod_boundaries", False)) or mod_boundaries,
    )


def cmd_harness(args) -> int:
    text = args.spec
    spec = json.loads(Path(text[1:]).read_text() if text.startswith("@") else text)
    res = run_harness(spec, args.mod_boundaries)
    report = {"verdict": res.verdict, "generators": len(res.generators)}
    lines = [res.verdict]
    if args.witness:
        if res.in_span:
            report["witness"] = res.used()
            lines += res.used()
        else:
            report["witness"] = res.functional.ones()
            lines.append("functional support: " + json.dumps(res.functional.ones()))
    _emit(args, report, lines)
    return EXIT_OK


def cmd_audit(args) -> int:
    a = cells.txt_audit(args.n)
    report = {"dim": a.computed_dim, "orbit_dim": a.orbit_dim, "formula_dim": a.formula_dim, "agrees": a.agrees}
    _emit(args, report, a.lines())
    return EXIT_OK if a.agrees else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gf2cycles", description="Mod-2 cycle counts for graphs, products and hypergraphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("count", parents=[common], help="number of 1-cycles, 2-cycles or rook cycles")
    p.add_argument("spec")
    p.add_argument("--brute-force", action="store_true", help="cross-check by enumerating all subsets")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("basis", parents=[common], help="print a basis")
    p.add_argument("spec")
    p.set_defaults(fn=cmd_basis)

    p = sub.add_parser("homology", parents=[common], help="1-cycles of K box L modulo boundaries")
    p.add_argument("--product", nargs=2, metavar=("K", "L"), required=True)
    p.add_argument("--basis", action="store_true")
    p.set_defaults(fn=cmd_homology)

    p = sub.add_parser("kunneth", parents=[common], help="compare the product count with dim Z1(K) + dim Z1(L)")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(fn=cmd_kunneth)

    p = sub.add_parser("symmetric", parents=[common], help="symmetric 1-cycles")
    p.add_argument("spec")
    p.add_argument("--square", action="store_true", help="swap-symmetric cycles of K box K")
    p.set_defaults(fn=cmd_symmetric)

    p = sub.add_parser("deleted-square", parents=[common], help="1-cycles of the deleted box-square")
    p.add_argument("spec")
    p.add_argument("--quotient", action="store_true", help="count modulo boundaries")
    p.set_defaults(fn=cmd_deleted_square)

    p = sub.add_parser("cells", parents=[common], help="cell 2-cycles in K x K")
    p.add_argument("spec")
    p.add_argument("--deleted", action="store_true", help="only pairs of non-adjacent edges")
    p.add_argument("--symmetric", choices=["swap", "txt"])
    p.add_argument("--basis", action="store_true")
    p.set_defaults(fn=cmd_cells)

    p = sub.add_parser("hypergraph", parents=[common], help="Betti numbers and extremal check")
    p.add_argument("spec")
    p.set_defaults(fn=cmd_hypergraph)

    p = sub.add_parser("rook", parents=[common], help="rook cycles in [n]^ell")
    p.add_argument("spec")
    p.add_argument("--brute-force", action="store_true")
    p.set_defaults(fn=cmd_rook)

    p = sub.add_parser("harness", parents=[common], help="span query, spec as JSON or @file.json")
    p.add_argument("spec")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--mod-boundaries", action="store_true")
    p.set_defaults(fn=cmd_harness)

    p = sub.add_parser("audit", parents=[common], help="t x t symmetric 2-cycles against the closed form")
    p.add_argument("--n", type=int, default=4)
    p.set_defaults(fn=cmd_audit)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
