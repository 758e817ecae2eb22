"""Command-line front end; every pipeline, JSON or text reports."""

import argparse
import json
import os
import sys
from dataclasses import dataclass

from sympy import isprime

from .exact_arith import rat_str
from .herzog_semigroup import herzog_data, herzog_to_json
from .lattice_geom import (
    IntegralPolygon,
    dilate,
    lattice_points,
    pick_counts,
    polygon_from_json,
)
from .laurent_poly import ParseError, from_json, newton_polygon, parse, serialize
from .nct_catalog import catalog_to_json, ggk_prime_family, is_nct, nct_to_json
from .negcurve_search import negcurve_to_json, scan
from .symbolic_power import ehrhart_polynomial, hilbert_numerator
from .toric_surface import DiagramContradiction, class_group, thm36_report, thm36_to_json

SCAN_CELL_BUDGET = 500


@dataclass
class Config:
    characteristic: int = 0
    format: str = "json"
    jobs: int = 1
    long: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise ValueError("characteristic must be 0 or prime")


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; 2 is reserved for diagram contradictions
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _char(text):
    value = int(text)
    if value != 0 and not isprime(value):
        raise argparse.ArgumentTypeError("characteristic must be 0 or a prime")
    return value


def _default_jobs():
    env = os.environ.get("NEGCURVE_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _load_poly(path, char):
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        phi = from_json(json.loads(text))
        if char and phi.char == 0:
            phi = phi.reduce_mod(char)
        elif phi.char != char:
            raise ValueError("file is at char %d, requested %d" % (phi.char, char))
        return phi
    return parse(text, char)


def _text_lines(doc, indent=0):
    pad = "  " * indent
    out = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            if isinstance(v, dict) or (isinstance(v, list) and v
                                       and isinstance(v[0], (dict, list))):
                out.append("%s%s:" % (pad, k))
                out.extend(_text_lines(v, indent + 1))
            else:
                out.append("%s%s: %s" % (pad, k, v))
    elif isinstance(doc, list):
        for v in doc:
            if isinstance(v, (dict, list)):
                out.append("%s-" % pad)
                out.extend(_text_lines(v, indent + 1))
            else:
                out.append("%s%s" % (pad, v))
    else:
        out.append("%s%s" % (pad, doc))
    return out


def _emit(doc, fmt):
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(_text_lines(doc)))


def cmd_herzog(args, config):
    return herzog_to_json(herzog_data(args.a, args.b, args.c))


def cmd_search(args, config):
    d_filter = None
    if args.d:
        d_filter = {int(x) for x in args.d.split(",")}
    from math import isqrt

    cells = 0
    for r in range(1, args.rmax + 1):
        top = isqrt(args.a * args.b * args.c * r * r - 1)
        cells += top if d_filter is None else len([d for d in d_filter if 1 <= d <= top])
    if cells > SCAN_CELL_BUDGET and not config.long:
        raise ValueError("%d cells to scan; pass --long to run it" % cells)
    state = {"n": 0}

    def progress(r, d):
        state["n"] += 1
        if state["n"] % 25 == 1:
            print("scan %d/%d (r=%d d=%d)" % (state["n"], cells, r, d),
                  file=sys.stderr)

    hits = scan(args.a, args.b, args.c, config.characteristic, args.rmax,
                d_filter=d_filter, jobs=config.jobs, progress=progress)
    return {
        "triple": [args.a, args.b, args.c],
        "char": config.characteristic,
        "rmax": args.rmax,
        "hits": [negcurve_to_json(rep) for _, _, rep in hits],
    }


def cmd_check_nct(args, config):
    phi = _load_poly(args.file, config.characteristic)
    return nct_to_json(is_nct(phi, args.r))


def cmd_thm36(args, config):
    phi = _load_poly(args.file, config.characteristic)
    return thm36_to_json(thm36_report(phi, args.r))


def cmd_classify(args, config):
    return catalog_to_json(args.r, config.characteristic,
                           experimental=args.experimental, jobs=config.jobs)


def cmd_ggk(args, config):
    g = ggk_prime_family(args.r)
    P = newton_polygon(g)
    B, I = pick_counts(P)
    return {
        "r": args.r,
        "polynomial": serialize(g),
        "vertices": [list(v) for v in P.vertices],
        "lattice_count": len(lattice_points(P)),
        "B": B,
        "I": I,
    }


def cmd_ehrhart(args, config):
    with open(args.file) as fh:
        P = polygon_from_json(json.load(fh))
    doc = {
        "vertices": [[rat_str(x), rat_str(y)] for x, y in P.vertices],
        "counts": [len(lattice_points(dilate(P, n)))
                   for n in range(1, args.dilate + 1)],
    }
    if isinstance(P, IntegralPolygon) and P.dim == 2:
        c2, c1, c0 = ehrhart_polynomial(P)
        doc["ehrhart"] = [rat_str(c2), rat_str(c1), rat_str(c0)]
        doc["hilbert_numerator"] = hilbert_numerator(P)
    else:
        doc["ehrhart"] = None
        doc["hilbert_numerator"] = None
        doc["note"] = "quasi-polynomial counting only for this polygon"
    return doc


def cmd_classgroup(args, config):
    rays = []
    for ray in args.rays.replace(";", " ").split():
        x, y = ray.split(",")
        rays.append((int(x), int(y)))
    cg = class_group(rays)
    return {
        "free_rank": cg.free_rank,
        "torsion": cg.torsion,
        "grading_matrix": cg.grading_matrix,
        "classes": [list(cg.class_of(j)) for j in range(len(rays))],
    }


def _build_parser():
    top = _Parser(prog="negcurve",
                  description="negative curves on blown-up toric surfaces")
    top.add_argument("--format", choices=("json", "text"), default="json")
    top.add_argument("--jobs", type=int, default=None,
                     help="parallel workers (default NEGCURVE_JOBS or cores)")
    top.add_argument("--seed", type=int, default=0)
    # the same options are accepted after the subcommand; absent ones must not
    # clobber values parsed at the top level, hence SUPPRESS
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"),
                        default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    sub = top.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("herzog", help="presentation data and triangle")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.set_defaults(func=cmd_herzog)

    p = add_parser("search", help="scan (r, d) cells for negative curves")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.add_argument("--char", type=_char, default=0)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--d", help="comma-separated degree filter")
    p.add_argument("--long", action="store_true")
    p.set_defaults(func=cmd_search)

    p = add_parser("check-nct", help="run the nct battery on a polynomial file")
    p.add_argument("file")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--char", type=_char, default=0)
    p.set_defaults(func=cmd_check_nct)

    p = add_parser("thm36", help="condition diagram for an nct")
    p.add_argument("file")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--char", type=_char, default=0)
    p.set_defaults(func=cmd_thm36)

    p = add_parser("classify", help="canonical classes at small r")
    p.add_argument("--r", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--char", type=_char, default=0)
    p.add_argument("--experimental", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = add_parser("ggk", help="tetragon kernel family member")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_ggk)

    p = add_parser("ehrhart", help="counting data for a polygon file")
    p.add_argument("file")
    p.add_argument("--dilate", type=int, default=5)
    p.set_defaults(func=cmd_ehrhart)

    p = add_parser("classgroup", help="divisor class group from rays")
    p.add_argument("rays", metavar="RAYS", help='all rays in one string: "2,-1 -2,-1 0,1"')
    p.set_defaults(func=cmd_classgroup)

    return top


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = Config(characteristic=getattr(args, "char", 0),
                        format=args.format,
                        jobs=args.jobs if args.jobs else _default_jobs(),
                        long=getattr(args, "long", False),
                        seed=args.seed)
        doc = args.func(args, config)
    except DiagramContradiction as exc:
        print("contradiction: %s" % exc, file=sys.stderr)
        return 2
    except (ParseError, ValueError, OSError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    _emit(doc, config.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
