"""Command-line surface: modes, evolve, scan, validate, analytic.

Exit codes: 0 success, 1 usage or validation error, 2 internal invariant
violation, 3 oracle mismatch.  Times are reported as the dimensionless
product v*t whenever v > 0, raw t otherwise.  Energies are in units of the
hopping strength when given through --gamma.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

import numpy as np

from . import __version__, analytic
from .chain import make_params, mode_spectrum, resonance_fields
from .dynamics import TimeGrid, contraction_series, default_time_grid
from .errors import InvariantViolation, OracleMismatch
from .measures import entanglement_series, entropy_binary, eof_from_concurrence
from .output import (RunManifest, plot_evolution, plot_scan, write_csv,
                     write_json)
from .scan import ScanConfig, scan_field
from .validate import TOLERANCE, validate_many

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVARIANT = 2
EXIT_ORACLE = 3

ORACLE_CAP = 14


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the CLI contract says 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_chain_args(sub, with_b: bool = True):
    sub.add_argument("--n", type=int, required=True, help="site count")
    if with_b:
        sub.add_argument("--b", type=float, required=True,
                         help="transverse field")
    sub.add_argument("--v", type=float, default=1.0, help="hopping strength")
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--g", type=float, help="pairing strength")
    group.add_argument("--gamma", type=float, help="anisotropy g/v")


def _resolve_g(args) -> float:
    if args.g is not None:
        return args.g
    return args.gamma * args.v


def build_parser() -> _Parser:
    parser = _Parser(prog="xychain",
                     description="entanglement dynamics of cyclic XY chains")
    parser.add_argument("--version", action="version",
                        version=f"xychain {__version__}")
    parser.add_argument("--json", action="store_true",
                        help="emit JSON instead of CSV")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("modes", help="momentum modes and resonance fields")
    _add_chain_args(p)

    p = subs.add_parser("evolve", help="entanglement time series")
    _add_chain_args(p)
    p.add_argument("--t-max", type=float, default=None,
                   help="window end (default: figure-scale window)")
    p.add_argument("--dt", type=float, default=None,
                   help="time step (default: 60 samples per fastest period)")
    p.add_argument("--oracle", action="store_true",
                   help="append dense-oracle columns and deviations")
    p.add_argument("--svg", metavar="PATH", help="write an SVG plot")

    p = subs.add_parser("scan", help="transverse-field sweep of maxima")
    _add_chain_args(p, with_b=False)
    p.add_argument("--b-min", type=float, required=True)
    p.add_argument("--b-max", type=float, required=True)
    p.add_argument("--b-steps", type=int, default=601)
    p.add_argument("--t-max", type=float, default=None)
    p.add_argument("--dt", type=float, default=None)
    p.add_argument("--prominence", type=float, default=0.02,
                   help="peak prominence threshold")
    p.add_argument("--svg", metavar="PATH", help="write an SVG plot")

    p = subs.add_parser("validate", help="fast path vs brute-force oracle")
    p.add_argument("--n-list", default="2,3,4,5,6,7,8,9,10",
                   help="comma-separated site counts")
    p.add_argument("--draws", type=int, default=50)
    p.add_argument("--times", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)

    p = subs.add_parser("analytic", help="closed-form reference curves")
    asubs = p.add_subparsers(dest="analytic_command", required=True)
    for name in ("c1max-n2", "c1max-n3", "c2max-n3"):
        sp = asubs.add_parser(name)
        sp.add_argument("--s", required=True,
                        help="scaled field: value or MIN..MAX")
        sp.add_argument("--steps", type=int, default=201)
    sp = asubs.add_parser("c2-of-p-n3")
    sp.add_argument("--p", required=True, help="value or MIN..MAX in [0,2/3]")
    sp.add_argument("--steps", type=int, default=201)
    for name in ("resonance-c1", "resonance-c2-type1", "resonance-c2-type2"):
        sp = asubs.add_parser(name)
        sp.add_argument("--n", type=int, required=True)
        if name != "resonance-c1":
            sp.add_argument("--k", type=str, default=None,
                            help="half-integer mode label (default: all)")
    sp = asubs.add_parser("isotropic")
    sp.add_argument("--v", type=float, default=1.0)
    sp.add_argument("--t-max", type=float, required=True)
    sp.add_argument("--steps", type=int, default=401)
    sp = asubs.add_parser("dip-n4")
    sp.add_argument("--gamma", type=float, required=True)
    sp = asubs.add_parser("large-field")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--b", type=float, required=True)
    sp.add_argument("--g", type=float, required=True)
    return parser


def _emit(args, manifest, header, rows, footer=None, extra=None):
    if args.json:
        write_json(sys.stdout, manifest, header, rows, extra=extra)
    else:
        write_csv(sys.stdout, manifest, header, rows, footer=footer)


def cmd_modes(args) -> int:
    g = _resolve_g(args)
    params = make_params(args.n, args.b, args.v, g)
    spectrum = mode_spectrum(params)
    catalog = dict(resonance_fields(params))
    header = ["k", "omega", "lambda", "u2", "v2", "b_k"]
    rows = []
    for m in spectrum.full:
        k = Fraction(m.two_k, 2)
        bk = catalog.get(k, "")
        rows.append([f"{m.two_k}/2", m.omega, m.lam,
                     "" if m.u2 is None else m.u2,
                     "" if m.v2 is None else m.v2, bk])
    manifest = RunManifest("modes", {"n": params.n, "b": params.b,
                                     "v": params.v, "g": params.g})
    _emit(args, manifest, header, rows)
    return EXIT_OK


def _time_axis(params, times):
    if params.v > 0.0:
        return "vt", times * params.v
    return "t", times


def cmd_evolve(args) -> int:
    g = _resolve_g(args)
    params = make_params(args.n, args.b, args.v, g)
    spectrum = mode_spectrum(params)
    t_max = args.t_max
    if t_max is None:
        scale = 40.0 if params.n <= 8 else 180.0
        t_max = scale / params.v if params.v > 0 else scale / max(g, 1.0)
    if args.dt is not None:
        grid = TimeGrid(t_max=t_max, dt=args.dt)
    else:
        grid = default_time_grid(spectrum, t_max)
    times = grid.times()
    series = contraction_series(params, spectrum, times)
    ent = entanglement_series(series)
    c2_type = np.where(ent["C2"] <= 0.0, "none",
                       np.where(ent["C2_I"] >= ent["C2_II"], "I", "II"))
    e1 = np.array([entropy_binary(float(p)) for p in series["p"]])
    e2 = np.array([eof_from_concurrence(min(float(c), 1.0))
                   for c in ent["C2"]])

    label, axis = _time_axis(params, times)
    header = [label, "p", "C1", "E1", "C2", "c2_type", "E2",
              "alpha_re", "alpha_im", "beta", "p1"]
    columns = [axis, series["p"], ent["C1"], e1, ent["C2"], c2_type, e2,
               series["alpha"].real, series["alpha"].imag, series["beta"],
               series["p1"]]
    footer = None
    exit_code = EXIT_OK
    if args.oracle:
        if params.n > ORACLE_CAP:
            raise ValueError(
                f"--oracle supports n <= {ORACLE_CAP}, got {params.n}")
        from .oracle import build_hamiltonian, oracle_point
        ham = build_hamiltonian(params)
        names = ["p", "C1", "C2", "alpha_re", "alpha_im", "beta", "p1"]
        dense = {name: [] for name in names}
        for t in times:
            pt = oracle_point(ham, float(t))
            dense["p"].append(pt["p"])
            dense["C1"].append(pt["C1"])
            dense["C2"].append(pt["C2"])
            dense["alpha_re"].append(pt["alpha"].real)
            dense["alpha_im"].append(pt["alpha"].imag)
            dense["beta"].append(pt["beta"])
            dense["p1"].append(pt["p1"])
        fast = {"p": series["p"], "C1": ent["C1"], "C2": ent["C2"],
                "alpha_re": series["alpha"].real,
                "alpha_im": series["alpha"].imag,
                "beta": series["beta"], "p1": series["p1"]}
        footer = []
        worst = 0.0
        for name in names:
            arr = np.asarray(dense[name])
            header.append(name + "_oracle")
            columns.append(arr)
            d = float(np.max(np.abs(arr - fast[name]))) if len(arr) else 0.0
            worst = max(worst, d)
            footer.append(f"max_deviation_{name} = {d!r}")
        if worst > TOLERANCE:
            exit_code = EXIT_ORACLE

    rows = [[col[i] if not isinstance(col, np.ndarray) else
             _pyval(col[i]) for col in columns]
            for i in range(len(times))]
    manifest = RunManifest("evolve", {
        "n": params.n, "b": params.b, "v": params.v, "g": params.g,
        "t_max": grid.t_max, "dt": grid.dt, "samples": grid.samples,
        "time_axis": label})
    _emit(args, manifest, header, rows, footer=footer)
    if args.svg:
        plot_evolution(args.svg, axis, ent["C1"], ent["C2_I"], ent["C2_II"],
                       xlabel=label)
    return exit_code


def _pyval(x):
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, (np.str_,)):
        return str(x)
    return x


def cmd_scan(args) -> int:
    g = _resolve_g(args)
    config = ScanConfig(n=args.n, v=args.v, g=g, b_min=args.b_min,
                        b_max=args.b_max, b_steps=args.b_steps,
                        t_max=args.t_max, dt=args.dt,
                        prominence=args.prominence)
    result = scan_field(config)
    header = ["b", "C1m_sampled", "C1m_envelope", "C2m_I", "C2m_II", "p_m"]
    rows = [[float(result.b[i]), float(result.C1m_sampled[i]),
             float(result.C1m_envelope[i]), float(result.C2m_I[i]),
             float(result.C2m_II[i]), float(result.p_m[i])]
            for i in range(len(result.b))]
    footer = [f"peaks = {len(result.peaks)}"]
    peak_rows = []
    for pk in result.peaks:
        matched = "none" if pk.matched_k is None else str(pk.matched_k)
        width = "" if pk.width_estimate is None else repr(pk.width_estimate)
        footer.append(f"peak b = {pk.b_peak!r} height = {pk.height!r} "
                      f"width = {width} matched_k = {matched}")
        peak_rows.append({"b_peak": pk.b_peak, "height": pk.height,
                          "width_estimate": pk.width_estimate,
                          "matched_k": matched})
    manifest = RunManifest("scan", {
        "n": config.n, "v": config.v, "g": config.g,
        "b_min": config.b_min, "b_max": config.b_max,
        "b_steps": config.b_steps, "t_max": config.window(),
        "prominence": config.prominence})
    _emit(args, manifest, header, rows, footer=footer,
          extra={"peaks": peak_rows})
    if args.svg:
        plot_scan(args.svg, result.b, result.C1m_sampled,
                  result.C1m_envelope, result.C2m_I, result.C2m_II)
    return EXIT_OK


def cmd_validate(args) -> int:
    n_list = [int(x) for x in args.n_list.split(",") if x.strip()]
    for n in n_list:
        if n < 2 or n > ORACLE_CAP:
            raise ValueError(f"validate supports 2 <= n <= {ORACLE_CAP}")
    reports = validate_many(n_list, draws=args.draws,
                            times_per_draw=args.times, seed=args.seed)
    all_ok = True
    print(f"# xychain {__version__}")
    print(f"# command = validate")
    print(f"# n_list = {args.n_list}  draws = {args.draws}  "
          f"times = {args.times}  seed = {args.seed}")
    for rep in reports:
        devs = "  ".join(f"{q}={rep.max_deviation[q]:.3e}"
                         for q in rep.max_deviation)
        status = "ok" if rep.ok else "FAIL"
        print(f"n={rep.n:2d} [{status}] {devs}")
        print(f"      spectrum={rep.spectrum_max_deviation:.3e} "
              f"monogamy_margin={rep.monogamy_min_margin:.3e} "
              f"symmetry={rep.symmetry_max_deviation:.3e} "
              f"parity={rep.parity_max_deviation:.3e}")
        all_ok &= rep.ok
    return EXIT_OK if all_ok else EXIT_ORACLE


def _parse_range(text: str, steps: int):
    if ".." in text:
        lo, hi = text.split("..", 1)
        return np.linspace(float(lo), float(hi), steps)
    return np.array([float(text)])


def cmd_analytic(args) -> int:
    name = args.analytic_command
    if name in ("c1max-n2", "c1max-n3", "c2max-n3"):
        ss = _parse_range(args.s, args.steps)
        fn = {"c1max-n2": analytic.c1max_n2, "c1max-n3": analytic.c1max_n3,
              "c2max-n3": analytic.c2max_n3}[name]
        rows = [[float(s), fn(float(s))] for s in ss]
        manifest = RunManifest("analytic " + name, {"s": args.s})
        _emit(args, manifest, ["s", "value"], rows)
    elif name == "c2-of-p-n3":
        ps = _parse_range(args.p, args.steps)
        rows = []
        for p in ps:
            c2, kind = analytic.c2_of_p_n3(float(p))
            rows.append([float(p), c2, kind])
        manifest = RunManifest("analytic c2-of-p-n3", {"p": args.p})
        _emit(args, manifest, ["p", "C2", "type"], rows)
    elif name == "resonance-c1":
        manifest = RunManifest("analytic resonance-c1", {"n": args.n})
        _emit(args, manifest, ["n", "C1m"],
              [[args.n, analytic.resonance_limit_c1(args.n)]])
    elif name in ("resonance-c2-type1", "resonance-c2-type2"):
        n = args.n
        if args.k is not None:
            ks = [Fraction(args.k)]
        else:
            ks = [Fraction(2 * j - 1, 2) for j in range(1, n // 2 + 1)]
        rows = []
        for k in ks:
            if name == "resonance-c2-type2":
                height, positive = analytic.resonance_limit_c2_typeII(n, k)
                rows.append([str(k), height, positive])
            else:
                height, cos2lt = analytic.resonance_limit_c2_typeI(n, k)
                rows.append([str(k), height, cos2lt])
        extra_col = "positive" if name.endswith("2") else "cos_2lambda_t"
        manifest = RunManifest("analytic " + name, {"n": n})
        _emit(args, manifest, ["k", "C2m", extra_col], rows)
    elif name == "isotropic":
        ts = np.linspace(0.0, args.t_max, args.steps)
        rows = []
        for t in ts:
            p, c1, c2 = analytic.isotropic_zero_field(args.v, float(t))
            rows.append([float(t), p, c1, c2])
        manifest = RunManifest("analytic isotropic",
                               {"v": args.v, "t_max": args.t_max})
        _emit(args, manifest, ["t", "p", "C1", "C2"], rows)
    elif name == "dip-n4":
        lo, hi = analytic.dip_fields_n4(args.gamma)
        manifest = RunManifest("analytic dip-n4", {"gamma": args.gamma})
        _emit(args, manifest, ["b_lo", "b_hi"], [[lo, hi]])
    elif name == "large-field":
        c1m, c2m = analytic.asymptotic_large_field(args.n, args.b, args.g)
        manifest = RunManifest("analytic large-field",
                               {"n": args.n, "b": args.b, "g": args.g})
        _emit(args, manifest, ["C1m", "C2m"], [[c1m, c2m]])
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    commands = {"modes": cmd_modes, "evolve": cmd_evolve, "scan": cmd_scan,
                "validate": cmd_validate, "analytic": cmd_analytic}
    try:
        return commands[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"xychain: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"xychain: internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except OracleMismatch as exc:
        print(f"xychain: oracle mismatch: {exc}", file=sys.stderr)
        return EXIT_ORACLE


if __name__ == "__main__":
    sys.exit(main())
