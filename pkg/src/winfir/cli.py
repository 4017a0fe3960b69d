"""Command-line interface.

Frequencies on the command line and in every output are in units of pi.

Exit codes: 0 success, 1 a ``repro`` cell outside tolerance, 2 usage error.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from typing import List, Optional, Sequence

from . import published
from .errors import WinfirError
from .fir import DEFAULT_FILTER_NFFT, design_fir, filter_metrics
from .report import (
    REPORT_FIELDS,
    ReportRow,
    all_within_tolerance,
    compare_rows,
    table1_rows,
    table2_rows,
)
from .spectral import DEFAULT_NFFT, magnitude_spectrum
from .windows import WindowKind, WindowSpec, generate

EXIT_OK = 0
EXIT_TOLERANCE = 1
EXIT_USAGE = 2

_REQUIRED_PARAM = {
    WindowKind.KAISER: ("beta", "--beta"),
    WindowKind.GAUSSIAN: ("sigma", "--sigma"),
    WindowKind.LANCZOS: ("L", "--L"),
    WindowKind.DOLPH_CHEBYSHEV: ("atten", "--atten"),
}


class UsageError(Exception):
    pass


def fmt(x) -> str:
    """Shortest text that parses back to the same double; ``1.0`` prints as ``1``."""
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x)
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


def _window_kind(text: str) -> WindowKind:
    try:
        return WindowKind.parse(text)
    except WinfirError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _window_list(text: str) -> List[WindowKind]:
    return [_window_kind(part) for part in text.split(",") if part.strip()]


def build_spec(kind: WindowKind, args) -> WindowSpec:
    if kind in _REQUIRED_PARAM:
        attr, flag = _REQUIRED_PARAM[kind]
        if getattr(args, attr) is None:
            raise UsageError(f"{flag} is required for the {kind.value} window")
    params = {}
    if kind is WindowKind.KAISER:
        params["beta"] = args.beta
    elif kind is WindowKind.GAUSSIAN:
        params["sigma"] = args.sigma
    elif kind is WindowKind.LANCZOS:
        params["L"] = args.L
    elif kind is WindowKind.DOLPH_CHEBYSHEV:
        # --atten is a level in dB; its sign is ignored
        params["sidelobe_db"] = -abs(args.atten)
    return WindowSpec(kind, args.M, **params)


def write_csv(out, header: Sequence[str], rows) -> None:
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(fmt(v) for v in row) + "\n")


def write_json(out, obj) -> None:
    json.dump(obj, out, indent=1, allow_nan=False)
    out.write("\n")


def write_report(out, rows: Sequence[ReportRow], form: str) -> None:
    if form == "json":
        write_json(out, [row.as_dict() for row in rows])
    elif form == "csv":
        write_csv(out, REPORT_FIELDS, ([getattr(r, f) for f in REPORT_FIELDS] for r in rows))
    else:
        _write_table(out, rows)


def _write_table(out, rows: Sequence[ReportRow]) -> None:
    def num(x):
        return "" if x is None else f"{x:.5f}"

    header = ("window", "M", "parameters", "metric", "measured", "paper", "delta", "")
    lines = [header]
    for r in rows:
        flag = "" if r.tolerance is None else ("ok" if r.within_tolerance else "FAIL")
        lines.append(
            (
                r.window_name,
                str(r.M),
                r.parameters,
                r.metric_name,
                num(r.measured),
                num(r.paper_value),
                num(r.delta),
                flag,
            )
        )
    widths = [max(len(line[i]) for line in lines) for i in range(len(header))]
    for line in lines:
        out.write("  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() + "\n")


# -- subcommands ------------------------------------------------------------


def cmd_gen(args, out) -> int:
    window = generate(build_spec(args.window, args))
    if args.format == "json":
        write_json(out, [{"n": n, "w": w} for n, w in enumerate(window.coefficients.tolist())])
    else:
        write_csv(out, ("n", "w"), enumerate(window.coefficients.tolist()))
    return EXIT_OK


def cmd_spectrum(args, out) -> int:
    window = generate(build_spec(args.window, args))
    spectrum = magnitude_spectrum(window, args.nfft)
    pairs = zip(spectrum.omega_over_pi.tolist(), spectrum.db.tolist())
    if args.format == "json":
        write_json(out, [{"omega_over_pi": w, "db": d} for w, d in pairs])
    else:
        write_csv(out, ("omega_over_pi", "db"), pairs)
    return EXIT_OK


def cmd_compare(args, out) -> int:
    if len(args.windows) < 2:
        raise UsageError("--windows needs at least two window names")
    specs = [build_spec(kind, args) for kind in args.windows]
    write_report(out, compare_rows(specs, args.nfft), args.format)
    return EXIT_OK


def cmd_fir(args, out) -> int:
    if not (0.0 < args.cutoff < 1.0):
        raise UsageError(f"--cutoff must lie in (0, 1) (units of pi), got {args.cutoff}")
    window = generate(build_spec(args.window, args))
    filt = design_fir(window, args.cutoff * math.pi)
    metrics = filter_metrics(filt, args.nfft)
    block = [
        ("stopband_peak_db", metrics.stopband_peak_db),
        ("passband_ref_db", metrics.passband_ref_db),
        ("transition_start", metrics.transition_start),
    ]
    if args.format == "json":
        write_json(out, {"taps": filt.taps.tolist(), "metrics": dict(block)})
    else:
        write_csv(out, ("n", "h"), enumerate(filt.taps.tolist()))
        out.write("\n")
        write_csv(out, ("metric", "value"), block)
    return EXIT_OK


def cmd_repro(args, out) -> int:
    if args.table == 1:
        n_fft = published.TABLE1_NFFT if args.nfft is None else args.nfft
        rows = table1_rows(n_fft, extended=args.extended)
    else:
        n_fft = published.TABLE2_NFFT if args.nfft is None else args.nfft
        kwargs = {}
        if args.sigma is not None:
            kwargs["sigma"] = args.sigma
        if args.atten is not None:
            kwargs["sidelobe_db"] = -abs(args.atten)
        if args.beta is not None:
            kwargs["beta"] = args.beta
        rows = table2_rows(n_fft, **kwargs)
    write_report(out, rows, args.format)
    return EXIT_OK if all_within_tolerance(rows) else EXIT_TOLERANCE


# -- parser -----------------------------------------------------------------


def _params_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--beta", type=float, help="Kaiser shape parameter")
    p.add_argument("--sigma", type=float, help="Gaussian width, 0 < sigma <= 0.5")
    p.add_argument("--L", dest="L", type=int, help="Lanczos exponent")
    p.add_argument("--atten", type=float, help="Dolph-Chebyshev side-lobe level in dB")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="winfir", description="Window functions and windowed low-pass FIR design."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    params = _params_parser()

    window = argparse.ArgumentParser(add_help=False)
    window.add_argument("--window", type=_window_kind, required=True)
    window.add_argument("-M", dest="M", type=int, required=True, help="window order")

    p = sub.add_parser("gen", parents=[window, params], help="print window coefficients")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("spectrum", parents=[window, params], help="print the dB spectrum")
    p.add_argument("--nfft", type=int, default=DEFAULT_NFFT)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("compare", parents=[params], help="lobe metrics of several windows")
    p.add_argument("--windows", type=_window_list, required=True, help="comma-separated")
    p.add_argument("-M", dest="M", type=int, required=True)
    p.add_argument("--nfft", type=int, default=DEFAULT_NFFT)
    p.add_argument("--format", choices=("csv", "json", "table"), default="csv")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("fir", parents=[window, params], help="design a low-pass filter")
    p.add_argument("--cutoff", type=float, required=True, help="cutoff in units of pi")
    p.add_argument("--nfft", type=int, default=DEFAULT_FILTER_NFFT)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_fir)

    p = sub.add_parser("repro", parents=[params], help="regenerate Table 1 or Table 2")
    p.add_argument("--table", type=int, choices=(1, 2), required=True)
    p.add_argument("--nfft", type=int, default=None)
    p.add_argument("--extended", action="store_true", help="add the M=47 Hamming row")
    p.add_argument("--format", choices=("csv", "json", "table"), default="csv")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    buffer = io.StringIO()
    try:
        code = args.func(args, buffer)
    except (UsageError, WinfirError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.write(buffer.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
