"""Command line: ``lsegments gen|transform|verify|render``.

Exit codes: 0 success (graphs equal), 1 graph mismatch, 2 usage or id error,
3 unsupported method/input combination.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import fileio
from .fileio import FormatError, SegmentFile
from .gen import CATALOG_NAMES, gen_named, gen_random
from .model import LRep, LRepError, UnsupportedInputError
from .normalize import normalize
from .render import render_lrep, render_segments
from .transform import transform_mixed, transform_pow2
from .verify import (
    extract_graph_lrep,
    extract_graph_raw,
    extract_graph_segments,
    graphs_equal,
    resolution_stats,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _load(path, kind):
    try:
        obj = fileio.load(path)
    except (OSError, json.JSONDecodeError, FormatError) as exc:
        raise CliError(f"{path}: {exc}") from exc
    if not isinstance(obj, kind):
        raise CliError(f"{path}: expected a {'lrep' if kind is LRep else 'segs'} file")
    return obj


def cmd_gen(args) -> int:
    if args.name:
        try:
            rep = gen_named(args.name)
        except KeyError as exc:
            raise CliError(str(exc.args[0])) from exc
    else:
        rep = gen_random(args.n, args.mode, args.seed)
    fileio.save(rep, args.output)
    print(f"wrote {rep.n}-vertex {rep.mode} instance to {args.output}")
    return EXIT_OK


def cmd_transform(args) -> int:
    rep = _load(args.input, LRep)
    if not rep.canonical:
        try:
            rep = normalize(rep)
        except LRepError as exc:
            raise CliError(f"cannot normalize input: {exc}") from exc
    try:
        if args.method == "pow2":
            res = transform_pow2(rep)
            sf = SegmentFile("pow2", rep.n, tuple(res.segments), res.dilation_exponent)
        else:
            sf = SegmentFile("mixed", rep.n, tuple(transform_mixed(rep)), None)
    except UnsupportedInputError as exc:
        raise CliError(
            f"{exc}; the power-of-two construction is not known to work for mixed orientations",
            EXIT_UNSUPPORTED,
        ) from exc
    except LRepError as exc:
        raise CliError(str(exc)) from exc
    fileio.save(sf, args.output)
    print(f"wrote {len(sf.segments)} segments ({args.method}, max coordinate {sf.max_coord_bits} bits) to {args.output}")
    return EXIT_OK


def verify_files(rep: LRep, sf: SegmentFile) -> dict:
    """Compare the two graphs and collect the report dictionary."""
    g_l = extract_graph_lrep(rep) if rep.canonical else extract_graph_raw(rep)
    g_s = extract_graph_segments(list(sf.segments))
    equal, diff = graphs_equal(g_l, g_s)
    stats = resolution_stats(list(sf.segments))
    strict = None if sf.method != "pow2" or sf.dilation_exponent is None else sf.dilation_exponent == 0
    return {
        "equal": equal,
        "n": rep.n,
        "method": sf.method,
        "edges": g_l.edge_count(),
        "diff": [{"u": u, "v": v, "lrep": a, "seg": b} for u, v, a, b in diff],
        "resolution": {k: (str(v) if k in ("width", "height", "max_coord") else v) for k, v in stats.items()},
        "dilation_exponent": sf.dilation_exponent,
        "strict_bound_held": strict,
        "below_4_pow_n": stats["bits"] <= 2 * rep.n,
    }


def cmd_verify(args) -> int:
    rep = _load(args.input, LRep)
    sf = _load(args.segments, SegmentFile)
    try:
        report = verify_files(rep, sf)
    except LRepError as exc:
        raise CliError(str(exc)) from exc
    if args.report:
        Path(args.report).write_text(json.dumps(report, indent=2) + "\n")
    if report["equal"]:
        print(f"OK: {report['edges']} edges match; max coordinate {report['resolution']['bits']} bits")
        return EXIT_OK
    print(f"MISMATCH on {len(report['diff'])} pair(s):")
    for d in report["diff"]:
        print(f"  ({d['u']}, {d['v']}): lrep={str(d['lrep']).lower()} seg={str(d['seg']).lower()}")
    return EXIT_MISMATCH


def cmd_render(args) -> int:
    if args.kind == "lrep":
        svg = render_lrep(_load(args.input, LRep))
    else:
        sf = _load(args.input, SegmentFile)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            svg = render_segments(list(sf.segments), log_scale=args.log_scale)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
    Path(args.output).write_text(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lsegments", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a random or catalog L-representation")
    p.add_argument("--n", type=_positive, default=None)
    p.add_argument("--mode", choices=("pure", "mixed"), default="pure")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--name", choices=CATALOG_NAMES)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("transform", help="L-representation to segments")
    p.add_argument("--method", choices=("pow2", "mixed"), default="pow2")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="check that segments represent the same graph")
    p.add_argument("-i", "--input", required=True, help="lrep/v1 file")
    p.add_argument("-s", "--segments", required=True, help="segs/v1 file")
    p.add_argument("--report", help="write a JSON report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw either file kind as SVG")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--kind", choices=("lrep", "segments"), required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--log-scale", action="store_true")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen" and args.name is None and args.n is None:
        parser.error("gen needs --n or --name")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
