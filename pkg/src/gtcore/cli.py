"""``gtcore`` command line front end.

Exit status: 0 on success, 1 for input errors (unreadable or malformed
network files), 2 for configuration errors (bad flags, unknown property ids,
malformed thresholds).
"""

from __future__ import annotations

import argparse
import math
import statistics
import sys
from pathlib import Path

from . import formats, svg
from .boundary import default_candidates, staircase, staircase_walk
from .generator import GenSpec, generate, parse_weights
from .levels import core_levels, core_levels_mirrored
from .network import NetworkError
from .peel import CoreQuery, compute_core
from .properties import CATALOGUE, PropertyError, get_property

FORMATS = {
    ".json": "json", ".clu": "clu", ".vec": "vec", ".csv": "csv", ".net": "net", ".svg": "svg",
}


class ConfigError(Exception):
    pass


def threshold(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if math.isnan(x) or x < 0:
        raise argparse.ArgumentTypeError(f"threshold must be >= 0, got {text!r}")
    return x


def candidate_list(text: str) -> list[float]:
    return [threshold(x) for x in text.replace(";", ",").split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    ids = " ".join(CATALOGUE)
    parser = argparse.ArgumentParser(
        prog="gtcore",
        description="Generalized two-mode cores of bipartite networks.",
        epilog=f"property ids: {ids}; transforms: affine:a,b(ID), square(ID)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, thresholds=True):
        p.add_argument("-i", "--input", required=True,
                       help="network file (.net Pajek, .tsv edge list, .json)")
        p.add_argument("-o", "--output", default="-", help="output file (default stdout)")
        p.add_argument("--format", choices=sorted(set(FORMATS.values())),
                       help="output format (default from the output extension)")
        p.add_argument("--t", dest="t_path", metavar="VEC",
                       help="Pajek .vec with the node measurement (default: degree)")
        if thresholds:
            p.add_argument("--f", default="deg", help="property for mode-1 nodes")
            p.add_argument("--g", default="deg", help="property for mode-2 nodes")
            p.add_argument("--strict-directed", action="store_true",
                           help="refuse indeg/outdeg on undirected networks")

    p = sub.add_parser("core", help="compute Core(p,q;f,g)")
    common(p)
    p.add_argument("--p", type=threshold, required=True)
    p.add_argument("--q", type=threshold, required=True)

    p = sub.add_parser("levels", help="core levels with one threshold fixed")
    common(p)
    p.add_argument("--fixed", choices=("p", "q"), default="p", help="which threshold is fixed")
    p.add_argument("--p", type=threshold)
    p.add_argument("--q", type=threshold)
    p.add_argument("--sizes", help="size-vs-threshold CSV (default: <output>.sizes.csv)")
    p.add_argument("--plot", help="size-vs-threshold SVG plot")
    p.add_argument("--linear", action="store_true", help="linear axes in --plot")

    p = sub.add_parser("boundary", help="staircase border of the (p,q) region")
    common(p)
    p.add_argument("--candidates", type=candidate_list,
                   help="comma-separated p values to sweep (default: attained values)")
    p.add_argument("--exact", action="store_true",
                   help="walk the corners exactly instead of sweeping candidates")
    p.add_argument("--svg", help="also write an SVG plot here")

    p = sub.add_parser("gen", help="generate a random two-mode network")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--format", choices=("net", "json"))
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--weights", default="unit", help="unit | uniform:lo,hi | integer:lo,hi")
    p.add_argument("--model", choices=("uniform", "chung-lu"), default="uniform")
    p.add_argument("--exponents", type=candidate_list, default=[2.5, 2.5],
                   help="power-law exponents for chung-lu, as a,b")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("stats", help="basic network statistics")
    common(p, thresholds=False)
    return parser


def _format(args, allowed: tuple[str, ...]) -> str:
    fmt = args.format
    if fmt is None and args.output != "-":
        fmt = FORMATS.get(Path(args.output).suffix.lower())
    fmt = fmt or allowed[0]
    if fmt not in allowed:
        raise ConfigError(f"{args.command} cannot write {fmt}; use one of {', '.join(allowed)}")
    return fmt


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _properties(args):
    try:
        return get_property(args.f, args.strict_directed), get_property(args.g, args.strict_directed)
    except PropertyError as exc:
        raise ConfigError(str(exc)) from None


def cmd_core(args, net) -> None:
    f, g = _properties(args)
    fmt = _format(args, ("json", "clu"))
    result = compute_core(net, CoreQuery(args.p, args.q, f, g))
    text = formats.dump_json(result.to_dict()) if fmt == "json" else formats.write_clu(result.core)
    _write(args.output, text)


def cmd_levels(args, net) -> None:
    f, g = _properties(args)
    fmt = _format(args, ("vec", "json", "csv"))
    value = args.p if args.fixed == "p" else args.q
    if value is None:
        raise ConfigError(f"--fixed {args.fixed} needs --{args.fixed}")
    lv = core_levels(net, value, f, g) if args.fixed == "p" else core_levels_mirrored(net, value, f, g)
    if fmt == "vec":
        text = formats.write_vec(lv.T)
    elif fmt == "json":
        text = formats.dump_json(lv.to_dict())
    else:
        text = formats.levels_csv(lv)
    _write(args.output, text)

    sizes = args.sizes
    if sizes is None and args.output != "-":
        out = Path(args.output)
        sizes = str(out.with_name(out.stem + ".sizes.csv"))
    if sizes:
        _write(sizes, formats.sizes_csv(lv))
    if args.plot:
        free = "q" if args.fixed == "p" else "p"
        curve = [(level, s1 + s2) for level, s1, s2 in lv.size_curve()]
        _write(args.plot, svg.sizes_svg({f"{args.fixed}={value:g}, size vs {free}": curve},
                                        loglog=not args.linear))


def cmd_boundary(args, net) -> None:
    f, g = _properties(args)
    fmt = _format(args, ("csv", "svg"))
    if args.exact:
        stairs = staircase_walk(net, f, g)
    else:
        cands = args.candidates if args.candidates is not None else default_candidates(net, f)
        stairs = staircase(net, f, g, cands)
    picture = svg.staircase_svg(stairs, f.name, g.name)
    _write(args.output, formats.staircase_csv(stairs) if fmt == "csv" else picture)
    if args.svg:
        _write(args.svg, picture)


def cmd_gen(args) -> None:
    try:
        spec = GenSpec(args.n1, args.n2, args.m, parse_weights(args.weights), args.seed,
                       args.model, tuple(args.exponents))
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    fmt = _format(args, ("net", "json"))
    net = generate(spec)
    text = formats.save_pajek(net) if fmt == "net" else formats.dump_json(formats.network_to_dict(net))
    _write(args.output, text)


def cmd_stats(args, net) -> None:
    _format(args, ("json",))
    weights = [link.weight for link in net.links]
    deg = net.deg
    stats = {
        "n1": net.n1,
        "n2": net.n2,
        "m": net.m,
        "directed": net.directed,
        "max_degree": net.max_degree(),
        "max_degree1": max(deg[: net.n1], default=0),
        "max_degree2": max(deg[net.n1:], default=0),
        "weights": {
            "min": min(weights, default=0.0),
            "max": max(weights, default=0.0),
            "mean": statistics.fmean(weights) if weights else 0.0,
            "total": math.fsum(weights),
        },
    }
    _write(args.output, formats.dump_json(stats))


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            cmd_gen(args)
            return 0
        try:
            net = formats.load_network(args.input, args.t_path)
        except (NetworkError, OSError) as exc:
            print(f"gtcore: input error: {exc}", file=sys.stderr)
            return 1
        {"core": cmd_core, "levels": cmd_levels, "boundary": cmd_boundary,
         "stats": cmd_stats}[args.command](args, net)
    except (ConfigError, PropertyError) as exc:
        print(f"gtcore: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"gtcore: cannot write output: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
