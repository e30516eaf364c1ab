"""Command-line frontend.

Subcommands:

* ``compute``      one geometry/fluid/model point, p from q or q from p;
* ``sweep``        the same record swept along one parameter axis;
* ``convergence``  element-discretization convergence table (optionally
                   rendered as a figure);
* ``validate``     the three cross-check suites as a JSON report.

Exit codes: 0 success, 1 validation failure, 2 invalid input,
3 degenerate geometry, 4 empty sweep result.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .errors import CapflowError, DegenerateShapeError, InvalidInputError
from .fixtures import (
    CANONICAL_FLUID,
    CANONICAL_Q,
    DEFAULT_SEED,
    canonical_geometries,
    canonical_geometry,
)
from .flow_models import (
    DEFAULT_ALPHA,
    CapillaryGeometry,
    FluidProperties,
    ModelTag,
    MomentumModel,
    flow_rate_from_pressure,
    pressure_drop,
    pressure_drop_lub,
    resistance_coefficient,
)
from .geometry import CONVERGING_DIVERGING_KINDS, TubeKind
from .oracle import QuadratureConfig, convergence_series
from .validation import (
    check_lubrication_identity,
    check_oracle_agreement,
    check_straight_limit,
)

EXIT_OK = 0
EXIT_VALIDATION_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_EMPTY_SWEEP = 4

RESULT_COLUMNS = [
    "kind", "r_min", "r_max", "length", "mu", "rho",
    "alpha", "model", "q", "p", "resistance",
]

_KIND_NAMES = {k.value: k for k in TubeKind}


def _fmt(v) -> str:
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def _emit_rows(columns: list[str], rows: list[dict], fmt: str, out_path: str | None) -> None:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt(row.get(c, "")) for c in columns])
        text = buf.getvalue()
    else:
        text = json.dumps(rows, indent=2) + "\n"
    _write_text(text, out_path)


def _write_text(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_geometry_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", required=True, choices=sorted(_KIND_NAMES))
    p.add_argument("--rmin", type=float, help="minimum radius (m)")
    p.add_argument("--rmax", type=float, help="maximum radius (m)")
    p.add_argument("--r", type=float, help="radius shorthand for straight tubes (m)")
    p.add_argument("--length", type=float, required=True, help="tube length (m)")


def _add_fluid_model_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mu", type=float, required=True, help="dynamic viscosity (Pa.s)")
    p.add_argument("--rho", type=float, required=True, help="mass density (kg/m^3)")
    p.add_argument("--alpha", type=float, default=DEFAULT_ALPHA,
                   help="momentum correction factor, in (1, 2] (default 4/3)")
    p.add_argument("--model", choices=[t.value for t in ModelTag],
                   default=ModelTag.NAVIER_STOKES_1D.value)


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", help="output path (default: standard output)")


def _build_geometry(args) -> CapillaryGeometry:
    kind = _KIND_NAMES[args.kind]
    if args.r is not None:
        if args.rmin is not None or args.rmax is not None:
            raise InvalidInputError("--r conflicts with --rmin/--rmax")
        return CapillaryGeometry(kind, args.r, args.r, args.length)
    if args.rmin is None or args.rmax is None:
        raise InvalidInputError("provide --rmin and --rmax (or --r)")
    return CapillaryGeometry(kind, args.rmin, args.rmax, args.length)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="capflow",
        description="Pressure-drop/flow-rate relations for Newtonian flow "
                    "in converging-diverging capillaries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="single-point computation")
    _add_geometry_args(p_compute)
    _add_fluid_model_args(p_compute)
    grp = p_compute.add_mutually_exclusive_group(required=True)
    grp.add_argument("--q", type=float, help="volumetric flow rate (m^3/s)")
    grp.add_argument("--p", type=float, help="pressure drop (Pa)")
    _add_output_args(p_compute)

    p_sweep = sub.add_parser("sweep", help="sweep one parameter axis")
    _add_geometry_args(p_sweep)
    _add_fluid_model_args(p_sweep)
    grp = p_sweep.add_mutually_exclusive_group(required=True)
    grp.add_argument("--q", type=float)
    grp.add_argument("--p", type=float)
    p_sweep.add_argument("--axis", required=True,
                         choices=["q", "r_min", "r_max", "length", "alpha"])
    p_sweep.add_argument("--start", type=float, required=True)
    p_sweep.add_argument("--stop", type=float, required=True)
    p_sweep.add_argument("--step", type=float, required=True)
    p_sweep.add_argument("--plot", help="render p vs axis to this image path")
    _add_output_args(p_sweep)

    p_conv = sub.add_parser("convergence", help="discretization convergence table")
    _add_geometry_args(p_conv)
    _add_fluid_model_args(p_conv)
    p_conv.add_argument("--q", type=float, required=True)
    p_conv.add_argument("--elements", default="1,2,5,10,20,50,100,200",
                        help="comma-separated element counts")
    p_conv.add_argument("--averaging", choices=["endpoint", "midpoint"],
                        default="endpoint")
    p_conv.add_argument("--plot", help="render ratio vs n to this image path")
    _add_output_args(p_conv)

    p_val = sub.add_parser("validate", help="run the three validation suites")
    p_val.add_argument("--alpha", type=float, default=DEFAULT_ALPHA,
                       help="alpha for the lubrication comparison; values "
                            "other than 4/3 make that check informational")
    p_val.add_argument("--quad-tol", type=float, default=1e-10)
    p_val.add_argument("--quad-max-depth", type=int, default=60)
    p_val.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_val.add_argument("--out", help="output path (default: standard output)")
    return parser


def _result_row(geom: CapillaryGeometry, fluid: FluidProperties,
                model: MomentumModel, tag: ModelTag,
                q: float | None, p: float | None) -> dict:
    if q is not None:
        p_val = pressure_drop(geom, fluid, model, q, tag)
        q_val = q
    else:
        q_val = flow_rate_from_pressure(geom, fluid, model, p, tag)
        p_val = p
    if tag is ModelTag.LUBRICATION:
        resistance = pressure_drop_lub(geom, fluid, 1.0)
    else:
        resistance = resistance_coefficient(geom, fluid, model)
    return {
        "kind": geom.kind.value,
        "r_min": geom.r_min,
        "r_max": geom.r_max,
        "length": geom.length,
        "mu": fluid.mu,
        "rho": fluid.rho,
        "alpha": model.alpha,
        "model": tag.value,
        "q": q_val,
        "p": p_val,
        "resistance": resistance,
    }


def _cmd_compute(args) -> int:
    geom = _build_geometry(args)
    fluid = FluidProperties(mu=args.mu, rho=args.rho)
    model = MomentumModel(alpha=args.alpha)
    tag = ModelTag(args.model)
    row = _result_row(geom, fluid, model, tag, args.q, args.p)
    _emit_rows(RESULT_COLUMNS, [row], args.format, args.out)
    return EXIT_OK


def _sweep_values(start: float, stop: float, step: float) -> list[float]:
    if step <= 0 or stop < start:
        raise InvalidInputError("sweep requires step > 0 and stop >= start")
    values = []
    i = 0
    while True:
        v = start + i * step
        if v > stop * (1 + 1e-12) + 1e-300:
            break
        values.append(v)
        i += 1
    return values


def _cmd_sweep(args) -> int:
    fluid = FluidProperties(mu=args.mu, rho=args.rho)
    tag = ModelTag(args.model)
    values = _sweep_values(args.start, args.stop, args.step)
    rows = []
    n_ok = 0
    for v in values:
        params = dict(rmin=args.rmin, rmax=args.rmax, r=args.r,
                      length=args.length, alpha=args.alpha, q=args.q, p=args.p)
        if args.axis == "q":
            params["q"], params["p"] = v, None
        elif args.axis == "r_min":
            params["rmin"], params["r"] = v, None
        elif args.axis == "r_max":
            params["rmax"], params["r"] = v, None
        elif args.axis == "length":
            params["length"] = v
        else:
            params["alpha"] = v
        try:
            ns = argparse.Namespace(kind=args.kind, rmin=params["rmin"],
                                    rmax=params["rmax"], r=params["r"],
                                    length=params["length"])
            geom = _build_geometry(ns)
            model = MomentumModel(alpha=params["alpha"])
            row = _result_row(geom, fluid, model, tag, params["q"], params["p"])
            row["error"] = ""
            n_ok += 1
        except (CapflowError, ValueError) as exc:
            row = {
                "kind": args.kind, "r_min": params["rmin"], "r_max": params["rmax"],
                "length": params["length"], "mu": args.mu, "rho": args.rho,
                "alpha": params["alpha"], "model": tag.value,
                "q": "", "p": "", "resistance": "",
                "error": str(exc),
            }
        rows.append(row)
    _emit_rows(RESULT_COLUMNS + ["error"], rows, args.format, args.out)
    if args.plot and n_ok:
        xs = [r[args.axis if args.axis != "q" else "q"] for r in rows if not r["error"]]
        ys = [r["p"] for r in rows if not r["error"]]
        _render_plot(xs, ys, args.axis, "p (Pa)",
                     f"{args.kind}: pressure drop vs {args.axis}", args.plot)
    return EXIT_OK if n_ok else EXIT_EMPTY_SWEEP


def _cmd_convergence(args) -> int:
    geom = _build_geometry(args)
    fluid = FluidProperties(mu=args.mu, rho=args.rho)
    model = MomentumModel(alpha=args.alpha)
    try:
        n_list = [int(tok) for tok in args.elements.split(",") if tok.strip()]
    except ValueError as exc:
        raise InvalidInputError(f"bad --elements list: {exc}") from exc
    if not n_list:
        raise InvalidInputError("--elements must be nonempty")
    records = convergence_series(geom, fluid, model, args.q, n_list, args.averaging)
    p_analytic = records[0].p_numeric / records[0].ratio
    rows = [
        {"n": rec.n_elements, "p_numeric": rec.p_numeric,
         "p_analytic": p_analytic, "ratio": rec.ratio}
        for rec in records
    ]
    _emit_rows(["n", "p_numeric", "p_analytic", "ratio"], rows, args.format, args.out)
    if args.plot:
        _render_plot([r["n"] for r in rows], [r["ratio"] for r in rows],
                     "elements", "numeric / analytic",
                     f"{args.kind}: discretization convergence", args.plot,
                     hline=1.0)
    return EXIT_OK


def _render_plot(xs, ys, xlabel, ylabel, title, path, hline=None) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(xs, ys, marker="o", ms=3)
    if hline is not None:
        ax.axhline(hline, color="gray", lw=0.8, ls="--")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _cmd_validate(args) -> int:
    cfg = QuadratureConfig(relative_tolerance=args.quad_tol, max_depth=args.quad_max_depth)
    fluid = CANONICAL_FLUID
    model = MomentumModel()
    q = CANONICAL_Q
    geoms = canonical_geometries(include_straight=True)

    reports = [
        check_lubrication_identity(geoms, fluid, q, alpha=args.alpha),
        check_oracle_agreement(geoms, fluid, model, q, cfg),
    ]
    deltas = [1e-1, 1e-2, 1e-3, 1e-4]
    for kind in CONVERGING_DIVERGING_KINDS:
        g = canonical_geometry(kind)
        reports.append(
            check_straight_limit(kind, g.r_min, g.length, fluid, model, q, deltas)
        )

    all_passed = all(r.passed or r.informational for r in reports)
    doc = {
        "all_passed": all_passed,
        "seed": args.seed,
        "checks": [r.to_dict() for r in reports],
    }
    _write_text(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK if all_passed else EXIT_VALIDATION_FAILED


_DISPATCH = {
    "compute": _cmd_compute,
    "sweep": _cmd_sweep,
    "convergence": _cmd_convergence,
    "validate": _cmd_validate,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except DegenerateShapeError as exc:
        print(f"capflow: degenerate geometry: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (CapflowError, ValueError) as exc:
        print(f"capflow: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
