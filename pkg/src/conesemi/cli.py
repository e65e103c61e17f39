"""Command-line surface: JSON in, JSON (or SVG) out, byte-stable.

Cone and semigroup objects travel as JSON: a cone is
``{"type":"full","p":2}`` or ``{"type":"rays2d","rays":[[1,0],[1,1]]}``
(optionally wrapped in ``{"cone": ...}``), a semigroup is
``{"cone": ..., "gaps": [[1,1],[2,2]]}`` and a generating set is
``{"cone": ..., "generators": [[1,0],[2,1]]}``.

Results go to stdout with sorted keys and sorted point lists; diagnostics go
to stderr. Exit codes: 0 success, 1 domain error, 2 usage error. The env var
CONESEMI_CAPACITY overrides the default point-count cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import construct as construct_mod
from .errors import ConesemiError, InvalidInput
from .genexp import GeneratorInput, expand
from .geom import Cone
from .oracle import oracle_all_gapsets, oracle_member, oracle_minimals
from .render import RenderSpec, plot
from .semigroup import CSemigroup, NumericalSemigroup
from .wilf import enumerate_genus, wilf_report, wilf_sweep


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(obj) -> None:
    sys.stdout.write(_dump(obj))


def _read_json(path: str | None):
    try:
        if path is None or path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise InvalidInput(f"malformed JSON input: {e}")


def _load_semigroup(args) -> CSemigroup:
    return CSemigroup.from_obj(_read_json(args.infile))


def _load_cone(spec: str) -> Cone:
    if spec.lstrip().startswith("{"):
        try:
            return Cone.from_obj(json.loads(spec))
        except json.JSONDecodeError as e:
            raise InvalidInput(f"malformed inline cone JSON: {e}")
    with open(spec, "r", encoding="utf-8") as fh:
        return Cone.from_obj(json.load(fh))


def _parse_point(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise InvalidInput(f"expected comma-separated integers, got {text!r}")


def _parse_points(text: str) -> list[tuple[int, ...]]:
    return [_parse_point(chunk) for chunk in text.split(";") if chunk]


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InvalidInput(f"expected a rational like 7 or 16/3, got {text!r}")


# -- subcommand handlers ---------------------------------------------------------


def _cmd_validate(args) -> int:
    s = _load_semigroup(args)
    _emit({"ok": True, "genus": s.genus})
    return 0


def _cmd_gaps(args) -> int:
    obj = _read_json(args.infile)
    if "generators" not in obj or "cone" not in obj:
        raise InvalidInput("expected {'cone': ..., 'generators': ...}")
    cone = Cone.from_obj(obj["cone"])
    gens = [tuple(int(c) for c in g) for g in obj["generators"]]
    s = expand(GeneratorInput(cone, tuple(gens)))
    _emit(s.to_obj())
    return 0


def _cmd_is_csemigroup(args) -> int:
    from .genexp import is_csemigroup

    obj = _read_json(args.infile)
    cone = Cone.from_obj(obj["cone"])
    gens = [tuple(int(c) for c in g) for g in obj["generators"]]
    decision = is_csemigroup(GeneratorInput(cone, tuple(gens)))
    _emit(decision.to_obj())
    return 0


def _cmd_msg(args) -> int:
    s = _load_semigroup(args)
    _emit({"minimal_generators": [list(m) for m in s.minimal_generators]})
    return 0


def _cmd_frobenius(args) -> int:
    s = _load_semigroup(args)
    _emit({"frobenius_set": [list(f) for f in s.frobenius_set(order=args.order)]})
    return 0


def _cmd_pf(args) -> int:
    s = _load_semigroup(args)
    _emit({"pseudo_frobenius": [list(a) for a in s.pseudo_frobenius()]})
    return 0


def _cmd_apery(args) -> int:
    s = _load_semigroup(args)
    _emit({"apery_set": [list(a) for a in s.apery_set(_parse_point(args.shift))]})
    return 0


def _cmd_weights(args) -> int:
    s = _load_semigroup(args)
    _emit(s.weight_set().to_obj())
    return 0


def _cmd_elasticity(args) -> int:
    s = _load_semigroup(args)
    _emit({"quasi_elasticity": str(s.quasi_elasticity())})
    return 0


def _cmd_restrict(args) -> int:
    s = _load_semigroup(args)
    _emit(s.ray_restriction(args.ray).to_obj())
    return 0


def _cmd_construct_idemaxial(args) -> int:
    cone = _load_cone(args.cone)
    pattern = NumericalSemigroup.from_gaps(
        int(t) for t in args.pattern_gaps.split(",") if t
    )
    s = construct_mod.idemaxial(construct_mod.IdemaxialSpec(cone, pattern))
    _emit(s.to_obj())
    return 0


def _cmd_construct_elasticity(args) -> int:
    cone = _load_cone(args.cone)
    s = construct_mod.high_elasticity(cone, _parse_fraction(args.target))
    _emit(s.to_obj())
    return 0


def _cmd_construct_lower_set(args) -> int:
    cone = _load_cone(args.cone)
    s = construct_mod.lower_set_semigroup(cone, _parse_points(args.points))
    _emit(s.to_obj())
    return 0


def _cmd_pf_lines(args) -> int:
    cone = _load_cone(args.cone)
    pattern = NumericalSemigroup.from_gaps(
        int(t) for t in args.pattern_gaps.split(",") if t
    )
    report = construct_mod.pf_lines_check(construct_mod.IdemaxialSpec(cone, pattern))
    _emit(report.to_obj())
    return 0


def _cmd_wilf_report(args) -> int:
    s = _load_semigroup(args)
    _emit(wilf_report(s, order=args.order).to_obj())
    return 0


def _cmd_wilf_sweep(args) -> int:
    cone = _load_cone(args.cone)
    summary = wilf_sweep(cone, args.max_genus, order=args.order, jobs=args.jobs)
    text = _dump(summary.to_obj())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_enumerate(args) -> int:
    cone = _load_cone(args.cone)
    levels = enumerate_genus(cone, args.max_genus)
    obj: dict = {"counts": [lv.count for lv in levels]}
    if args.full:
        obj["levels"] = [
            {
                "genus": lv.genus,
                "semigroups": [[list(g) for g in s.gaps] for s in lv.semigroups],
            }
            for lv in levels
        ]
    _emit(obj)
    return 0


def _cmd_plot(args) -> int:
    s = _load_semigroup(args)
    viewport = None
    if args.viewport:
        viewport = _parse_point(args.viewport)
        if len(viewport) != 2:
            raise InvalidInput("viewport takes two bounds, e.g. 8,8")
    spec = RenderSpec(
        viewport=viewport,
        margin=args.margin,
        show_levels=args.levels,
        show_pf=args.pf,
        show_generators=args.generators,
    )
    svg = plot(s, spec)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def _cmd_oracle_member(args) -> int:
    obj = _read_json(args.infile)
    cone = Cone.from_obj(obj["cone"])
    gens = [tuple(int(c) for c in g) for g in obj["generators"]]
    result = oracle_member(cone, gens, _parse_point(args.x), args.cap)
    _emit({"member": result})
    return 0


def _cmd_oracle_minimals(args) -> int:
    s = _load_semigroup(args)
    _emit({"minimals": [list(m) for m in oracle_minimals(s, args.cap)]})
    return 0


def _cmd_oracle_gapsets(args) -> int:
    cone = _load_cone(args.cone)
    sets = oracle_all_gapsets(cone, args.genus, args.cap)
    _emit({"count": len(sets), "gap_sets": [[list(g) for g in gs] for gs in sets]})
    return 0


# -- parser ---------------------------------------------------------------------


def _add_infile(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--in",
        dest="infile",
        default=None,
        metavar="FILE",
        help="input JSON file (default: stdin)",
    )


def _add_order(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--order",
        choices=("cone", "induced"),
        default="cone",
        help="partial order used for maximality / counting (default: cone)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conesemi",
        description="Exact invariants of cofinite subsemigroups of pointed integer cones.",
        epilog="Set CONESEMI_CAPACITY to override the default enumeration cap of 10^7 points.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a semigroup JSON and report its genus")
    _add_infile(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("gaps", help="expand a generating set into its gap set")
    _add_infile(p)
    p.set_defaults(func=_cmd_gaps)

    p = sub.add_parser("check-generators", help="decide whether generators span a cofinite semigroup")
    _add_infile(p)
    p.set_defaults(func=_cmd_is_csemigroup)

    p = sub.add_parser("msg", help="minimal generating set")
    _add_infile(p)
    p.set_defaults(func=_cmd_msg)

    p = sub.add_parser("frobenius", help="maximal gaps under the chosen order")
    _add_infile(p)
    _add_order(p)
    p.set_defaults(func=_cmd_frobenius)

    p = sub.add_parser("pf", help="pseudo-Frobenius gaps")
    _add_infile(p)
    p.set_defaults(func=_cmd_pf)

    p = sub.add_parser("apery", help="Apery set relative to a member")
    _add_infile(p)
    p.add_argument("--shift", required=True, metavar="X,Y", help="nonzero member b")
    p.set_defaults(func=_cmd_apery)

    p = sub.add_parser("weights", help="weight set as its excluded levels")
    _add_infile(p)
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("elasticity", help="quasi-elasticity of the Frobenius weights")
    _add_infile(p)
    p.set_defaults(func=_cmd_elasticity)

    p = sub.add_parser("restrict", help="numerical semigroup on an extremal ray")
    _add_infile(p)
    p.add_argument("--ray", type=int, required=True, help="ray index (0-based)")
    p.set_defaults(func=_cmd_restrict)

    p = sub.add_parser("construct", help="build semigroups from recipes")
    csub = p.add_subparsers(dest="recipe", required=True)
    c = csub.add_parser("idemaxial", help="idemaxial semigroup from a pattern")
    c.add_argument("--cone", required=True, help="cone JSON file or inline JSON")
    c.add_argument("--pattern-gaps", required=True, metavar="LIST", help="e.g. 1,2,4,7")
    c.set_defaults(func=_cmd_construct_idemaxial)
    c = csub.add_parser("elasticity", help="semigroup with quasi-elasticity beyond a target")
    c.add_argument("--cone", required=True)
    c.add_argument("--target", required=True, help="rational target, e.g. 10 or 7/2")
    c.set_defaults(func=_cmd_construct_elasticity)
    c = csub.add_parser("lower-set", help="remove the lower sets of given points")
    c.add_argument("--cone", required=True)
    c.add_argument("--points", required=True, metavar="PTS", help="e.g. 1,1;10,0")
    c.set_defaults(func=_cmd_construct_lower_set)
    c = csub.add_parser("pf-lines", help="pseudo-Frobenius line report for an idemaxial pattern")
    c.add_argument("--cone", required=True)
    c.add_argument("--pattern-gaps", required=True, metavar="LIST")
    c.set_defaults(func=_cmd_pf_lines)

    p = sub.add_parser("wilf", help="Wilf-type counts and sweeps")
    wsub = p.add_subparsers(dest="action", required=True)
    w = wsub.add_parser("report", help="counts e, n, c and the margin for one semigroup")
    _add_infile(w)
    _add_order(w)
    w.set_defaults(func=_cmd_wilf_report)
    w = wsub.add_parser("sweep", help="check every semigroup up to a genus bound")
    w.add_argument("--cone", required=True)
    w.add_argument("--max-genus", type=int, required=True)
    _add_order(w)
    w.add_argument("--jobs", type=int, default=1, help="parallel workers (default 1)")
    w.add_argument("--out", default=None, metavar="FILE", help="write report JSON here")
    w.set_defaults(func=_cmd_wilf_sweep)

    p = sub.add_parser("enumerate", help="count (and list) semigroups by genus")
    p.add_argument("--cone", required=True)
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--full", action="store_true", help="include the gap sets per genus")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("plot", help="render a 2D semigroup as SVG")
    _add_infile(p)
    p.add_argument("--svg", default=None, metavar="FILE", help="output file (default: stdout)")
    p.add_argument("--margin", type=int, default=3, help="weight units beyond the gaps")
    p.add_argument("--viewport", default=None, metavar="X,Y", help="explicit bounds")
    p.add_argument("--levels", action="store_true", help="draw weight level lines")
    p.add_argument("--pf", action="store_true", help="mark pseudo-Frobenius gaps")
    p.add_argument("--generators", action="store_true", help="mark minimal generators")
    p.set_defaults(func=_cmd_plot)

    p = sub.add_parser("oracle", help="slow reference computations")
    osub = p.add_subparsers(dest="what", required=True)
    o = osub.add_parser("member", help="graded-table membership in a generated semigroup")
    _add_infile(o)
    o.add_argument("--x", required=True, metavar="X,Y")
    o.add_argument("--cap", type=int, required=True, help="weight cap for the table")
    o.set_defaults(func=_cmd_oracle_member)
    o = osub.add_parser("minimals", help="pairwise-scan minimal members")
    _add_infile(o)
    o.add_argument("--cap", type=int, required=True)
    o.set_defaults(func=_cmd_oracle_minimals)
    o = osub.add_parser("gapsets", help="all closure-valid gap sets of a genus")
    o.add_argument("--cone", required=True)
    o.add_argument("--genus", type=int, required=True)
    o.add_argument("--cap", type=int, default=None)
    o.set_defaults(func=_cmd_oracle_gapsets)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConesemiError as e:
        diag = {"error": type(e).__name__, "detail": str(e)}
        diag.update(e.payload)
        sys.stderr.write(_dump(diag))
        return 1
    except FileNotFoundError as e:
        sys.stderr.write(_dump({"error": "FileNotFound", "detail": str(e)}))
        return 1


if __name__ == "__main__":
    sys.exit(main())
