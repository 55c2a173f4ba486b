"""Batch command-line interface.

Exit codes: 0 success, 1 input parse error, 2 validation error (matroid
axioms, malformed cycles), 3 mathematical precondition failure.
Output is canonical JSON (sorted keys, fixed rendering) and byte-identical
across runs on the same inputs.
"""

import argparse
import sys

from . import bergman as bg
from . import fan as fn
from . import intersection as it
from . import matroid as mt
from . import moduli as mo
from . import serialize as sz
from .errors import (
    GroundSetMismatch,
    HasLoop,
    InvalidRank,
    NonConicalSlice,
    NotALinealitySpace,
    NotAMatroid,
    NotAQuotient,
    NotBalanced,
    NotElementaryQuotient,
    NotInjective,
    NotLinearOnFacet,
    NotPure,
    NotSubcycle,
    NotZeroDimensional,
    OutOfRange,
    PointNotOnCycle,
    SizeOverflow,
)

EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_MATH = 3

_VALIDATION_ERRORS = (NotAMatroid, InvalidRank, SizeOverflow,
                      GroundSetMismatch, NotPure, NotBalanced, OutOfRange)
_MATH_ERRORS = (HasLoop, NotAQuotient, NotElementaryQuotient, NotInjective,
                NotLinearOnFacet, PointNotOnCycle, NotALinealitySpace,
                NonConicalSlice, NotZeroDimensional, NotSubcycle)


class _Exit(Exception):
    def __init__(self, code, payload):
        self.code = code
        self.payload = payload


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_matroid(path):
    return sz.matroid_from_json(sz.load_file(path))


def _load_cycle(path):
    return sz.cycle_from_json(sz.load_file(path))


def _load_fan_or_bergman(path):
    """A fan file is used as-is; a matroid file is turned into its fan."""
    data = sz.load_file(path)
    if isinstance(data, dict) and "kind" in data:
        return bg.bergman_fan(sz.matroid_from_json(data))
    return sz.cycle_from_json(data)


def _parse_point(text, ambient):
    try:
        point = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise sz.ParseError("points must be comma-separated integers")
    if len(point) != ambient:
        raise sz.ParseError("point length does not match the ambient space")
    return point


# -- matroid subcommands ----------------------------------------------------

def _elements(mask):
    return [i + 1 for i in range(mask.bit_length()) if (mask >> i) & 1]


def cmd_matroid(args):
    if args.query == "validate":
        try:
            m = _load_matroid(args.input)
        except (NotAMatroid, HasLoop, InvalidRank, SizeOverflow) as exc:
            raise _Exit(EXIT_VALIDATION, {
                "valid": False,
                "error": type(exc).__name__,
                "witness": str(exc),
            })
        return {"valid": True, "n": m.n, "rank": m.total_rank}
    m = _load_matroid(args.input)
    if args.query == "rank":
        return {"n": m.n, "rank": m.total_rank,
                "rank_table": list(m.rank_table)}
    if args.query == "flats":
        return {"flats": [_elements(f) for f in sorted(
            m.flats(), key=lambda f: (mt.popcount(f), _elements(f)))]}
    if args.query == "chains":
        chains = sorted([_elements(f) for f in chain]
                        for chain in m.maximal_chains())
        return {"count": len(chains), "chains": chains}
    if args.query == "components":
        comps = sorted(_elements(c) for c in mt.connected_components(m))
        return {"count": len(comps), "components": comps}
    raise sz.ParseError(f"unknown query {args.query!r}")


# -- fan subcommands --------------------------------------------------------

def cmd_fan_bergman(args):
    return sz.cycle_to_json(bg.bergman_fan(_load_matroid(args.matroid)))


def cmd_fan_divisor(args):
    m, phi = sz.function_from_json(sz.load_file(args.function))
    cycle = _load_fan_or_bergman(args.fan)
    refined = bg.refine_to_fine(cycle, m)
    return sz.cycle_to_json(fn.divisor(phi, refined))


def cmd_fan_product(args):
    m = _load_matroid(args.ambient)
    c = _load_fan_or_bergman(args.left)
    d = _load_fan_or_bergman(args.right)
    return sz.cycle_to_json(it.intersect_on_matroid(m, c, d))


def cmd_fan_pullback(args):
    source, target, rows = sz.morphism_from_json(sz.load_file(args.map))
    f = it.Morphism(source, target, rows)
    cycle = _load_fan_or_bergman(args.fan)
    return sz.cycle_to_json(it.pullback(f, cycle))


def cmd_fan_star(args):
    cycle = _load_cycle(args.fan)
    p = _parse_point(args.point, cycle.ambient)
    return sz.cycle_to_json(fn.star_at(cycle, p))


def cmd_fan_degree(args):
    cycle = _load_cycle(args.fan)
    if args.projective:
        return {"degree": fn.projective_degree(cycle)}
    return {"degree": fn.degree_zero_dim(cycle)}


def cmd_fan_face_at_infinity(args):
    cycle = _load_cycle(args.fan)
    try:
        coords = sorted({int(x) - 1 for x in args.coords.split(",")})
    except ValueError:
        raise sz.ParseError("coordinates must be comma-separated integers")
    if not coords or coords[0] < 0 or coords[-1] >= cycle.ambient:
        raise sz.ParseError("coordinates out of range")
    return sz.cycle_to_json(fn.face_at_infinity(cycle, coords))


def cmd_fan_moduli(args):
    if args.degree or args.space:
        cycle = mo.moduli_mlab(args.marks, args.degree, args.space)
        return sz.cycle_to_json(cycle)
    return sz.cycle_to_json(mo.moduli_mn(args.marks).image_fan())


# -- driver -----------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="tropint",
        description="Exact tropical intersection theory on matroid fans.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_mat = sub.add_parser("matroid", help="matroid queries")
    p_mat.add_argument("query",
                       choices=["rank", "flats", "chains", "components",
                                "validate"])
    p_mat.add_argument("input")
    p_mat.add_argument("--out")
    p_mat.set_defaults(func=cmd_matroid)

    p_fan = sub.add_parser("fan", help="fan constructions")
    fan_sub = p_fan.add_subparsers(dest="subcommand", required=True)

    p = fan_sub.add_parser("bergman")
    p.add_argument("matroid")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fan_bergman)

    p = fan_sub.add_parser("divisor")
    p.add_argument("function")
    p.add_argument("fan")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fan_divisor)

    p = fan_sub.add_parser("product")
    p.add_argument("--ambient", required=True,
                   help="matroid file of the ambient fan")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fan_product)

    p = fan_sub.add_parser("pullback")
    p.add_argument("map")
    p.add_argument("fan")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fan_pullback)

    p = fan_sub.add_parser("star")
    p.add_argument("fan")
    p.add_argument("--point", required=True,
                   help="comma-separated integer coordinates")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fan_star)

    p = fan_sub.add_parser("degree")
    p.add_argument("fan")
    p.add_argument("--projective", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fan_degree)

    p = fan_sub.add_parser("face-at-infinity")
    p.add_argument("fan")
    p.add_argument("--coords", required=True,
                   help="comma-separated 1-based coordinates sent to -infinity")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fan_face_at_infinity)

    p = fan_sub.add_parser("moduli")
    p.add_argument("marks", type=int)
    p.add_argument("--degree", type=int, default=0,
                   help="number of unmarked ends (parameterised model)")
    p.add_argument("--space", type=int, default=0,
                   help="dimension of the target space (parameterised model)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fan_moduli)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        try:
            result = args.func(args)
        except sz.ParseError as exc:
            raise _Exit(EXIT_PARSE, {"error": "ParseError",
                                     "message": str(exc)})
        except _VALIDATION_ERRORS as exc:
            raise _Exit(EXIT_VALIDATION, {"error": type(exc).__name__,
                                          "message": str(exc)})
        except _MATH_ERRORS as exc:
            raise _Exit(EXIT_MATH, {"error": type(exc).__name__,
                                    "message": str(exc)})
    except _Exit as stop:
        sys.stdout.write(sz.dumps(stop.payload))
        return stop.code
    _emit(sz.dumps(result), getattr(args, "out", None))
    return 0


if __name__ == "__main__":
    sys.exit(main())
