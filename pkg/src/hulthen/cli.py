"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 unbound-state request, 3 numerical failure.
"""
import argparse
import contextlib
import sys

from . import nu, report, wavefunctions
from .errors import NumericalError, UnboundStateError
from .model import PhysicalParams, QuantumState

EXIT_OK, EXIT_USAGE, EXIT_UNBOUND, EXIT_NUMERICAL = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--Z", type=float, default=1.0, help="atomic number (default 1)")
    common.add_argument("--precision", type=int, default=7, help="decimals for energies (default 7)")
    common.add_argument("--format", choices=("csv", "tsv"), default="csv")

    state = argparse.ArgumentParser(add_help=False)
    state.add_argument("--n", type=int, required=True, help="radial quantum number (nodes)")
    state.add_argument("--l", type=int, required=True, help="angular momentum")
    state.add_argument("--delta", type=float, required=True, help="screening parameter")

    parser = _Parser(prog="hulthen", description="Hulthén bound states via the Nikiforov-Uvarov closed form.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("energy", parents=[common, state], help="closed-form energy of one level")

    p = sub.add_parser("spectrum", parents=[common], help="all bound levels for one l")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--delta", type=float, required=True)

    p = sub.add_parser("wavefunction", parents=[common, state], help="normalized R(r) samples")
    p.add_argument("--rmax", type=float, default=None)
    p.add_argument("--points", type=int, default=4001)
    p.add_argument("--out", required=True, help="output file, '-' for stdout")

    p = sub.add_parser("table", parents=[common], help="S-state table (1) or 2p/3d table (2)")
    p.add_argument("which", type=int, choices=(1, 2))
    p.add_argument("--oracle", action="store_true", help="add the Numerov oracle column")
    p.add_argument("--out", default="-")

    p = sub.add_parser("figure", parents=[common], help="curve data: 1 effective potentials, 2 potentials, 3-4 level diagrams")
    p.add_argument("which", type=int, choices=(1, 2, 3, 4))
    p.add_argument("--out", required=True)

    sub.add_parser("verify", parents=[common, state], help="cross-check one level by every route")
    return parser


@contextlib.contextmanager
def _open_out(path):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _params(args):
    if not args.delta > 0:
        raise _UsageError("--delta must be positive")
    if not args.Z > 0:
        raise _UsageError("--Z must be positive")
    return PhysicalParams(delta=args.delta, Z=args.Z)


def _state(args):
    try:
        return QuantumState(args.n, args.l)
    except ValueError as err:
        raise _UsageError(str(err)) from err


def _dispatch(args):
    delim = "\t" if args.format == "tsv" else ","
    if args.command == "energy":
        energy = nu.energy_general(_state(args), _params(args))
        print(report.fmt_energy(energy, args.precision))
    elif args.command == "spectrum":
        if args.l < 0:
            raise _UsageError("--l must be non-negative")
        p = _params(args)
        print(delim.join(("n", "l", "N", "energy")))
        for st, energy in nu.spectrum(args.l, p):
            print(delim.join((str(st.n), str(st.l), str(st.N), report.fmt_energy(energy, args.precision))))
    elif args.command == "wavefunction":
        if args.points < 2:
            raise _UsageError("--points must be at least 2")
        wf = wavefunctions.sample(_state(args), _params(args), r_max=args.rmax, count=args.points)
        with _open_out(args.out) as fh:
            report.write_wavefunction(wf, fh, delim)
    elif args.command == "table":
        rows = report.table1(args.oracle) if args.which == 1 else report.table2(args.oracle)
        with _open_out(args.out) as fh:
            report.write_table(rows, fh, args.precision, delim)
        for row in rows:
            if not row.bound:
                print(f"{row.label} delta={row.delta:g}: past critical screening "
                      f"delta_c={row.delta_c:.7g}, no bound state", file=sys.stderr)
    elif args.command == "figure":
        with _open_out(args.out) as fh:
            report.write_curves(report.figure_data(args.which), fh, delim)
    elif args.command == "verify":
        text, ok = report.verify(_state(args), _params(args))
        print(text)
        return EXIT_OK if ok else EXIT_NUMERICAL
    return EXIT_OK


def run(argv):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args)
    except _UsageError as err:
        print(err, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    except UnboundStateError as err:
        print(f"unbound: {err}", file=sys.stderr)
        return EXIT_UNBOUND
    except NumericalError as err:
        print(f"numerical failure: {err}", file=sys.stderr)
        return EXIT_NUMERICAL


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
