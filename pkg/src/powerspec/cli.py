"""``powerspec`` command-line program.

Exit codes: 0 success, 2 invalid input, 3 numerical failure, 4 size cap.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .errors import PowerSpecError, ValidationError
from .hypergraph import expand, extend, generalized_power
from .power import certify_spectrum, descend_eigenpair, lift_eigenpair, power_mode, power_spectrum
from .spectral import TOL_DEDUP, graph_spectrum, hopm_radius, spectrum_dedup
from .tensor import TOL_EIG, TOL_ZERO, verify_eigenpair

COMMANDS = (
    "spectrum",
    "expand",
    "extend",
    "power",
    "power-spectrum",
    "verify",
    "lift",
    "descend",
    "certify",
    "radius",
    "check",
    "plot",
)


def parse_complex(text: str) -> complex:
    """``"RE,IM"`` or ``"RE"`` to a complex number."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1 (got {value})")
    return value


def _tolerance(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"tolerance must be positive (got {text})")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="powerspec", description="Spectra of generalized power hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, help, *, needs_input=True, s=False, k=False, lam=False, pair=False):
        p = sub.add_parser(name, help=help)
        if needs_input:
            p.add_argument("--input", required=True, help="hypergraph file (text or JSON)")
        if s:
            p.add_argument("--s", type=_positive, default=1, help="extension order (default 1)")
        if k:
            p.add_argument("--k", type=_positive, required=True, help="expansion order")
        if lam:
            p.add_argument("--lambda", dest="lam", type=parse_complex, help="eigenvalue as RE,IM")
        if pair:
            p.add_argument("--eigenpair", required=True, help="eigenpair JSON file")
        p.add_argument("--json", metavar="OUT", help="write the JSON result to OUT ('-' for stdout)")
        p.add_argument("--tol-eig", type=_tolerance, default=TOL_EIG)
        p.add_argument("--tol-zero", type=_tolerance, default=TOL_ZERO)
        p.add_argument("--tol-dedup", type=_tolerance, default=TOL_DEDUP)
        return p

    command("spectrum", "adjacency spectrum of a graph")
    command("expand", "k-expansion of a hypergraph", k=True)
    command("extend", "s-extension of a hypergraph", s=True).set_defaults(k=None)
    command("power", "generalized power hypergraph", s=True, k=True)
    for name, help in (("power-spectrum", "nonzero spectrum of the generalized power"), ("certify", "certify every class")):
        p = command(name, help, s=True, k=True)
        p.add_argument("--jobs", type=_positive, default=1, help="worker processes for subgraph spectra")
        p.add_argument("--supplied", help="JSON eigenpairs for components of uniformity 3 or more")
        p.add_argument("--plot", metavar="OUT", help="also write an SVG of the spectrum")
        p.add_argument("--seed", type=int, default=0, help="seed for eigenvector reconstruction")
    command("verify", "check an eigenpair against a hypergraph", lam=True, pair=True)
    command("lift", "lift a base eigenpair into the generalized power", s=True, k=True, lam=True, pair=True)
    command("descend", "recover a base eigenpair from the generalized power", s=True, k=True, pair=True)
    command("radius", "spectral radius by power iteration")
    p = command("check", "randomized property harness", needs_input=False)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=_positive, default=100)
    p.add_argument("--fault", choices=("skip-cleanup",), help="inject a fault to see the harness fail")
    p = command("plot", "plot the nonzero spectrum of the generalized power", s=True, k=True)
    p.add_argument("--plot", metavar="OUT", required=True, help="SVG output path")
    p.add_argument("--supplied", help="JSON eigenpairs for components of uniformity 3 or more")
    p.add_argument("--jobs", type=_positive, default=1)
    return parser


def _emit(args, text: str) -> None:
    if not args.json:
        return
    if args.json == "-":
        sys.stdout.write(text)
    else:
        Path(args.json).write_text(text)


def _say(args, line: str) -> None:
    # keep stdout clean when the JSON goes there
    print(line, file=sys.stderr if args.json == "-" else sys.stdout)


def _fmt(z: complex) -> str:
    z = complex(z)
    if abs(z.imag) < 1e-12:
        return f"{z.real:.10g}"
    return f"{z.real:.10g}{z.imag:+.10g}i"


def _supplied(args):
    return io.supplied_from_json(Path(args.supplied).read_text()) if getattr(args, "supplied", None) else None


def _run(args) -> int:
    if args.command == "check":
        from .check import run_check

        report = run_check(args.seed, args.trials, fault=args.fault)
        _say(args, report.summary())
        _emit(args, io.dumps({"seed": report.seed, "trials": report.trials, "counts": dict(sorted(report.counts.items()))}))
        return 0

    h = io.load_hypergraph(args.input)
    if getattr(args, "k", None) is not None and args.command not in ("expand",):
        power_mode(h.r, args.s, args.k)

    if args.command == "spectrum":
        sp = spectrum_dedup(graph_spectrum(h), args.tol_dedup)
        _say(args, "eigenvalues: " + ", ".join(_fmt(z) for z in sp.items))
        _emit(args, io.spectrum_to_json(sp))
    elif args.command in ("expand", "extend", "power"):
        if args.command == "expand":
            out = expand(h, args.k)
        elif args.command == "extend":
            out = extend(h, args.s)
        else:
            out = generalized_power(h, args.s, args.k)
        _say(args, f"{out.r}-uniform, {out.n} vertices, {out.m} edges")
        if args.json:
            _emit(args, io.hypergraph_to_json(out))
        else:
            sys.stdout.write(io.format_hypergraph(out))
    elif args.command in ("power-spectrum", "certify", "plot"):
        result = power_spectrum(h, args.s, args.k, supplied=_supplied(args), jobs=args.jobs, tol_dedup=args.tol_dedup)
        status = 0
        if args.command == "certify":
            report = certify_spectrum(
                h, args.s, args.k, result=result, supplied=_supplied(args), seed=args.seed,
                tol_eig=args.tol_eig, tol_zero=args.tol_zero,
            )
            for cert in report.classes:
                mark = "ok" if cert.certified else f"FAILED ({cert.error})"
                _say(args, f"c = {_fmt(cert.root_class.c)}: {mark}")
            _say(args, f"{report.passed}/{len(report.classes)} classes certified")
            status = 0 if report.all_certified else 3
        else:
            _say(args, f"mode {result.mode}, {len(result.classes)} classes of order {result.classes[0].root_class.order if result.classes else args.k}")
            for pc in result.classes:
                _say(args, f"  lam^{pc.root_class.order} = {_fmt(pc.root_class.c)}  (beta = {_fmt(pc.witness.beta)})")
        if args.plot:
            from .plot import emit_plot

            emit_plot(result.root_classes, args.plot, title=f"nonzero spectrum, s={args.s}, k={args.k}")
        _emit(args, io.report_to_json(result))
        return status
    elif args.command == "verify":
        pair = io.eigenpair_from_json(Path(args.eigenpair).read_text())
        lam = pair.lam if args.lam is None else args.lam
        p = verify_eigenpair(h, lam, pair.vector, args.tol_eig)
        _say(args, f"accepted: lambda = {_fmt(p.lam)}, residual {p.residual:.3e}")
        _emit(args, io.eigenpair_to_json(p))
    elif args.command == "lift":
        if args.lam is None:
            raise ValidationError("lift needs --lambda")
        base = io.eigenpair_from_json(Path(args.eigenpair).read_text())
        p = lift_eigenpair(h, args.s, args.k, base.lam, base.vector, args.lam, tol_eig=args.tol_eig)
        _say(args, f"lifted to {len(p.vector)} vertices, residual {p.residual:.3e}")
        _emit(args, io.eigenpair_to_json(p))
    elif args.command == "descend":
        pair = io.eigenpair_from_json(Path(args.eigenpair).read_text())
        hks = generalized_power(h, args.s, args.k)
        p = descend_eigenpair(hks, verify_eigenpair(hks, pair.lam, pair.vector, args.tol_eig), tol_eig=args.tol_eig)
        _say(args, f"beta = {_fmt(p.lam)}, residual {p.residual:.3e}")
        _emit(args, io.eigenpair_to_json(p))
    elif args.command == "radius":
        rho = hopm_radius(h)
        _say(args, f"spectral radius {rho:.12g}")
        _emit(args, io.dumps({"radius": float(rho)}))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except PowerSpecError as exc:
        print(f"powerspec {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"powerspec {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
