"""``casimir1d`` command-line interface.

Exit status: 0 on success, 1 when verification fails or a computation
errors out, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import sys

from . import figures, maxent, verify
from .curves import CurveSet
from .errors import Casimir1DError, InvalidParameter
from .figures import RunConfig
from .modesum import BoundaryPair, CutoffFamily

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _temps(text):
    try:
        values = tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty temperature list")
    return values


def _common(p, *, temps_default=None, grid=True):
    p.add_argument("--bc", choices=["like", "unlike"], default=None)
    p.add_argument("--length", type=float, default=3.0)
    p.add_argument("--temps", type=_temps, default=temps_default,
                   help="comma-separated temperatures")
    if grid:
        p.add_argument("--points", type=int, default=201)
        p.add_argument("--xmin-fraction", type=float, default=0.02,
                       help="grid excludes [0, f*L] and [(1-f)*L, L]")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.add_argument("--cutoff", choices=["exp", "gauss"], default="exp")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="casimir1d", description=(
        "One-dimensional Casimir energies, forces and entropies (units hbar=c=kB=1)."))
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("permode", help="per-mode Planck energy, free energy and entropy vs omega")
    _common(p, temps_default=(0.0, 1.0, 2.0))
    for name, what in (("energy", "Casimir energy"), ("force", "Casimir force"),
                       ("entropy", "Casimir entropy")):
        p = sub.add_parser(name, help=f"{what} vs partition position")
        _common(p, temps_default=(0.0,))

    p = sub.add_parser("figure", help="curve data for figure 1..7")
    p.add_argument("number", type=int)
    _common(p)

    p = sub.add_parser("optimize", help="minimise the Casimir-energy spread over (c1, c2)")
    _common(p, temps_default=(1.0,), grid=False)
    p.add_argument("--delta", type=float, default=None, help="lower integration limit (default 0.05*L)")
    p.add_argument("--panels", type=int, default=64)
    p.add_argument("--search", choices=["grid", "grid-then-local"], default="grid-then-local")
    p.add_argument("--grid-points", type=int, default=maxent.GRID_POINTS)

    p = sub.add_parser("verify", help="run the oracle suite")
    p.add_argument("--cutoff", choices=["exp", "gauss"], default="exp")
    p.add_argument("--only", default=None, help="comma-separated groups: modesum,casimir,maxent")
    p.add_argument("--perturb-zp", type=float, default=None, help=argparse.SUPPRESS)
    return parser


def _config(args, command) -> RunConfig:
    return RunConfig(
        command=command,
        bc=args.bc or "like",
        length=args.length,
        temperatures=args.temps or (),
        x_points=getattr(args, "points", 201),
        x_min_fraction=getattr(args, "xmin_fraction", 0.02),
        output_format=args.format,
        output_path=args.out,
        cutoff=args.cutoff,
    )


def _emit(curves: CurveSet, cfg: RunConfig):
    if cfg.output_path:
        curves.write(cfg.output_path, cfg.output_format)
    else:
        sys.stdout.write(curves.render(cfg.output_format))


def _optimize(args) -> CurveSet:
    cfg = _config(args, "optimize")
    delta = args.delta if args.delta is not None else 0.05 * cfg.length
    rows = []
    for t in sorted(cfg.temperatures):
        mcfg = maxent.MaxEntConfig(cfg.length, t, delta, args.panels, cfg.bc)
        opt = maxent.minimize_spread(mcfg, args.search, grid_points=args.grid_points)
        rows.append((t, opt))
    return CurveSet(
        {"command": "optimize", "bc": cfg.bc.value, "length": cfg.length, "delta": delta,
         "panels": args.panels, "search": args.search},
        {
            "T": [t for t, _ in rows],
            "c1": [o.c1 for _, o in rows],
            "c2": [o.c2 for _, o in rows],
            "objective": [o.objective for _, o in rows],
            "iterations": [o.iterations for _, o in rows],
            "converged": [float(o.converged) for _, o in rows],
        },
    )


def _verify(args) -> int:
    groups = set(args.only.split(",")) if args.only else None
    family = CutoffFamily(args.cutoff)
    if args.perturb_zp is not None:
        from .casimir import perturbed_zero_point
        with perturbed_zero_point(args.perturb_zp):
            ok, results = verify.run_checks(family, groups, sys.stdout)
    else:
        ok, results = verify.run_checks(family, groups, sys.stdout)
    failed = [c.name for c, passed, _ in results if not passed]
    if failed:
        print(f"verification FAILED: {failed[0]}" + (f" (+{len(failed) - 1} more)" if len(failed) > 1 else ""),
              file=sys.stderr)
        return EXIT_FAIL
    print(f"all {len(results)} checks passed")
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _verify(args)
        if args.command == "figure":
            cfg = _config(args, "figure")
            curves = figures.emit_figure(args.number, cfg, temperatures=args.temps, bc=args.bc)
        elif args.command == "optimize":
            cfg = _config(args, "optimize")
            curves = _optimize(args)
        else:
            cfg = _config(args, args.command)
            curves = figures.run_query(cfg)
        _emit(curves, cfg)
    except InvalidParameter as exc:
        print(f"casimir1d: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Casimir1DError as exc:
        print(f"casimir1d: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
