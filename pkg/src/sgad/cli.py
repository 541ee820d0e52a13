"""Command-line front end reproducing the channel figures as CSV/JSON.

Subcommands: params, evolve, channel, capacity. Each figure of the channel
family has a named preset (--figure 1..6); every preset value can be
overridden by flags. Output is deterministic: identical configurations give
byte-identical files (floats at 17 significant digits).

Exit codes: 0 success, 1 configuration error, 2 certification failure
anywhere in a sweep.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .bath import BathSpec
from .bloch_dynamics import evolve_bloch, evolve_density
from .capacity import chi_surface, classical_capacity
from .kraus_channels import (
    COMPLETENESS_TOL,
    RESIDUAL_TOL,
    DegenerateChannelError,
    ad_kraus,
    apply_channel,
    choi_matrix,
    completeness_defect,
    cp_defect,
    kraus_to_json,
    sgad_kraus,
    sgad_params,
    sgad_residuals,
    synthesize_channel,
)
from .lindblad_oracle import build_generator, integrate
from .qubit_core import pure_state

# (T, r) curve presets per figure; the swept quantity is in PARAM_FIGURES
FIGURE_CURVES = {
    1: [(1.0, 0.0), (1.0, 1.0), (3.0, 1.0)],
    2: [(0.0, 0.0), (0.0, 1.0), (5.0, 0.0), (5.0, 1.0)],
    3: [(20.0, 1.0), (5.0, 1.0), (1.0, 1.0)],
    4: [(0.0, 0.05), (2.0, 0.1), (2.0, 0.5)],
    6: [(0.0, 0.0), (5.0, 0.0), (5.0, 2.0)],
}
PARAM_FIGURES = {1: "nu", 2: "alpha", 3: "mu", 4: "p2"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # config errors exit 1, not argparse's 2
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(x):
    return f"{x:.17g}"


def _bath_flags(p):
    p.add_argument("--T", type=float, default=1.0, help="bath temperature")
    p.add_argument("--r", type=float, default=0.0, help="squeezing magnitude")
    p.add_argument("--Phi", type=float, default=0.0, help="squeezing phase")
    p.add_argument("--gamma0", type=float, default=0.05,
                   help="spontaneous emission rate")
    p.add_argument("--omega", type=float, default=1.0,
                   help="transition frequency (default 1.0; the figures do "
                        "not fix it)")


def _grid_flags(p, t0=0.0, t1=100.0, n=101):
    p.add_argument("--t0", type=float, default=t0, help="sweep start time")
    p.add_argument("--t1", type=float, default=t1, help="sweep end time")
    p.add_argument("--n", type=int, default=n, help="number of grid points")


def _out_flags(p):
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--plot", default=None, metavar="PNG",
                   help="also render the data as a figure to this PNG path")


def _time_grid(args):
    if args.t0 < 0:
        raise ValueError(f"t0 must be >= 0, got {args.t0}")
    if args.t1 <= args.t0:
        raise ValueError(f"t1 must exceed t0, got [{args.t0}, {args.t1}]")
    if args.n < 2:
        raise ValueError(f"n must be >= 2, got {args.n}")
    return np.linspace(args.t0, args.t1, args.n)


def _header_lines(args, extra=()):
    keys = ("figure", "T", "r", "Phi", "gamma0", "omega", "t0", "t1", "n",
            "t", "f", "theta0", "phi0", "oracle")
    lines = [f"# sgad {args.command} v{__version__}"]
    for key in keys:
        if hasattr(args, key) and getattr(args, key) is not None:
            lines.append(f"# {key} = {getattr(args, key)!r}")
    lines.extend(f"# {line}" for line in extra)
    return lines


def _emit(args, header, columns, rows):
    if args.format == "json":
        text = json.dumps({"header": header, "columns": columns,
                           "rows": [[_fmt(v) if isinstance(v, float) else v
                                     for v in row] for row in rows]}, indent=2)
    else:
        out = list(header)
        out.append(",".join(columns))
        for row in rows:
            out.append(",".join(_fmt(v) if isinstance(v, float) else str(v)
                               for v in row))
        text = "\n".join(out) + "\n"
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _param_row(bath, t):
    """(p1, p2, alpha, mu, nu, theta, max_residual, status) at one time."""
    try:
        params = sgad_params(bath, t)
    except DegenerateChannelError:
        lam = -np.expm1(-bath.gamma0 * t)
        return (1.0, 0.0, lam, 0.0, lam, bath.Phi, 0.0, "degenerate-ad")
    res = float(np.max(np.abs(sgad_residuals(params, bath, t))))
    status = "ok" if res <= RESIDUAL_TOL else "residual-exceeded"
    return (params.p1, params.p2, params.alpha, params.mu, params.nu,
            params.theta, res, status)


def cmd_params(args):
    ts = _time_grid(args)
    if args.figure is not None:
        if args.figure not in PARAM_FIGURES:
            raise ValueError(f"params supports figures 1-4, got {args.figure}")
        curves = FIGURE_CURVES[args.figure]
        quantity = PARAM_FIGURES[args.figure]
    else:
        curves = [(args.T, args.r)]
        quantity = "nu"
    columns = ["T", "r", "t", "p1", "p2", "alpha", "mu", "nu", "theta",
               "max_residual", "status"]
    rows, failed = [], False
    plot_data = {}
    for T, r in curves:
        bath = BathSpec(T=T, r=r, Phi=args.Phi, gamma0=args.gamma0,
                        omega=args.omega)
        series = []
        for t in ts:
            row = _param_row(bath, float(t))
            failed |= row[-1] == "residual-exceeded"
            rows.append([T, r, float(t), *row])
            series.append(row[{"p1": 0, "p2": 1, "alpha": 2, "mu": 3,
                               "nu": 4}[quantity]])
        plot_data[(T, r)] = (ts, series)
    if args.figure is not None:
        # preset curves carry their own (T, r); drop the flag echoes
        args.T = args.r = None
    _emit(args, _header_lines(args), columns, rows)
    if args.plot:
        from .plotting import plot_param_curves
        plot_param_curves(plot_data, quantity, args.plot, args.gamma0)
    return 2 if failed else 0


def cmd_evolve(args):
    ts = _time_grid(args)
    bath = BathSpec(T=args.T, r=args.r, Phi=args.Phi, gamma0=args.gamma0,
                    omega=args.omega)
    rho0 = pure_state(args.theta0, args.phi0)
    b0 = None
    columns = ["t", "x", "y", "z",
               "rho11_re", "rho10_re", "rho10_im", "rho00_re"]
    if args.oracle:
        columns.append("oracle_delta")
        gen = build_generator(bath)
        oracle_rho = rho0.copy()
        t_prev = 0.0
    rows = []
    bloch_series = []
    from .qubit_core import density_to_bloch
    b0 = density_to_bloch(rho0)
    for t in ts:
        b = evolve_bloch(b0, bath, float(t))
        rho = evolve_density(rho0, bath, float(t), picture="interaction")
        row = [float(t), float(b[0]), float(b[1]), float(b[2]),
               float(rho[0, 0].real), float(rho[0, 1].real),
               float(rho[0, 1].imag), float(rho[1, 1].real)]
        if args.oracle:
            oracle_rho = integrate(gen, oracle_rho, float(t) - t_prev)
            t_prev = float(t)
            row.append(float(np.abs(oracle_rho - rho).max()))
        rows.append(row)
        bloch_series.append(b)
    _emit(args, _header_lines(args), columns, rows)
    if args.plot:
        from .plotting import plot_evolution
        plot_evolution(ts, bloch_series, args.plot)
    return 0


def cmd_channel(args):
    if args.t < 0:
        raise ValueError(f"t must be >= 0, got {args.t}")
    bath = BathSpec(T=args.T, r=args.r, Phi=args.Phi, gamma0=args.gamma0,
                    omega=args.omega)
    k = synthesize_channel(bath, args.t)
    if k.label == "SGAD":
        res = float(np.max(np.abs(
            sgad_residuals(k.meta["params"], bath, args.t))))
    else:
        res = 0.0
    comp = completeness_defect(k)
    cp = cp_defect(choi_matrix(k))
    doc = json.loads(kraus_to_json(k))
    doc["bath"] = {"T": bath.T, "r": bath.r, "Phi": bath.Phi,
                   "gamma0": bath.gamma0, "omega": bath.omega}
    doc["t"] = args.t
    doc["validation"] = {"completeness_defect": comp, "cp_defect": cp,
                         "max_assoc_residual": res}
    text = json.dumps(doc, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    bad = (comp > COMPLETENESS_TOL or cp > COMPLETENESS_TOL
           or res > RESIDUAL_TOL)
    return 2 if bad else 0


def cmd_capacity(args):
    if args.figure == 6:
        ts = _time_grid(args)
        columns = ["t"] + [f"C_T{T:g}_r{r:g}" for T, r in FIGURE_CURVES[6]]
        rows = []
        series = {f"T={T:g}, r={r:g}": [] for T, r in FIGURE_CURVES[6]}
        for t in ts:
            row = [float(t)]
            for T, r in FIGURE_CURVES[6]:
                bath = BathSpec(T=T, r=r, Phi=args.Phi, gamma0=args.gamma0,
                                omega=args.omega)
                k = synthesize_channel(bath, float(t))
                result = classical_capacity(k, f=args.f)
                row.append(result.c)
                series[f"T={T:g}, r={r:g}"].append(result.c)
            rows.append(row)
        args.T = args.r = None  # per-curve values are in the column names
        _emit(args, _header_lines(args), columns, rows)
        if args.plot:
            from .plotting import plot_capacity_curves
            plot_capacity_curves(ts, series, args.plot)
        return 0
    # figure 5 or generic: chi surface at a single time
    if args.figure == 5:
        args.T, args.r, args.Phi, args.t = 5.0, 1.0, 0.0, 5.0
        bath = BathSpec(T=5.0, r=1.0, Phi=0.0, gamma0=args.gamma0,
                        omega=args.omega)
        t = 5.0
    elif args.figure is None:
        bath = BathSpec(T=args.T, r=args.r, Phi=args.Phi, gamma0=args.gamma0,
                        omega=args.omega)
        t = args.t
    else:
        raise ValueError(f"capacity supports figures 5 and 6, got {args.figure}")
    if t is None or t < 0:
        raise ValueError("capacity needs --t >= 0 (or --figure 5/6)")
    k = synthesize_channel(bath, t)
    thetas, phis, chi = chi_surface(k, f=args.f)
    result = classical_capacity(k, f=args.f)
    args.t0 = args.t1 = args.n = None  # surface mode takes a single time
    header = _header_lines(args, extra=[
        f"restricted_binary_capacity = {_fmt(result.c)}",
        f"argmax theta0 = {_fmt(result.theta0)}, phi0 = {_fmt(result.phi0)}",
    ])
    rows = [[float(t0), float(p0), float(chi[i, j])]
            for i, t0 in enumerate(thetas) for j, p0 in enumerate(phis)]
    _emit(args, header, ["theta0", "phi0", "chi"], rows)
    if args.plot:
        from .plotting import plot_chi_surface
        plot_chi_surface(thetas, phis, chi, args.plot)
    return 0


def build_parser():
    parser = _Parser(prog="sgad", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("params",
                       help="sweep the SGAD channel parameters over time")
    p.add_argument("--figure", type=int, default=None)
    _bath_flags(p)
    _grid_flags(p, t0=0.0, t1=150.0, n=151)
    _out_flags(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("evolve",
                       help="analytic evolution of an initial pure state")
    _bath_flags(p)
    _grid_flags(p, t0=0.0, t1=20.0, n=41)
    p.add_argument("--theta0", type=float, default=0.0)
    p.add_argument("--phi0", type=float, default=0.0)
    p.add_argument("--oracle", action="store_true",
                   help="append entrywise deltas against the RK4 oracle")
    _out_flags(p)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("channel",
                       help="serialize the Kraus set at a single time")
    _bath_flags(p)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_channel)

    p = sub.add_parser("capacity",
                       help="Holevo surface or capacity-vs-time curves")
    p.add_argument("--figure", type=int, default=None)
    _bath_flags(p)
    _grid_flags(p, t0=0.5, t1=10.0, n=20)
    p.add_argument("--t", type=float, default=None,
                   help="channel time for the surface mode")
    p.add_argument("--f", type=float, default=0.5,
                   help="probability of the first input symbol")
    _out_flags(p)
    p.set_defaults(func=cmd_capacity)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except ValueError as exc:
        sys.stderr.write(f"sgad: error: {exc}\n")
        return 1
    return code


if __name__ == "__main__":
    sys.exit(main())
