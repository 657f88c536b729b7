"""Command-line frontend: ``bsv <subcommand> [flags]``.

Output is CSV (header row, one record per line) or JSON ({"meta": ..., "rows": [...]}).
Complex quantities are split into ``<name>_re`` and ``<name>_im`` columns.
Exit codes: 0 success, 1 verification or numerical failure, 2 parse error,
3 domain error.
"""
import argparse
import csv
import io
import json
import math
import os
import re
import sys

import numpy as np

from . import __version__, _backend, debranges, paley_wiener as pw, selberg, trig_circle, vanishing
from .errors import BSVError, DomainError
from .verification import SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3
DEFAULT_PRECISION = 12

_COMPLEX_RE = re.compile(
    r"^(?P<re>[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)?"
    r"(?P<im>[+-]?((\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)?i)?$"
)
_IMAG_RE = re.compile(r"^(?P<re>)(?P<im>[+-]?((\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)?i)$")


class ParseError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """Parse "a+bi", "a-bi", "bi", "a", "i", "-i" with optional whitespace."""
    if re.search(r"[\w.]\s+[\w.]", str(text)):
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")
    s = re.sub(r"\s+", "", str(text))
    # a pure imaginary token such as "-.5i" must not be split into "-.5" and "i"
    m = _IMAG_RE.match(s) or _COMPLEX_RE.match(s)
    if not s or m is None or (m.group("re") is None and m.group("im") is None):
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")
    re_part = float(m.group("re")) if m.group("re") else 0.0
    im_text = m.group("im")
    if im_text is None:
        im_part = 0.0
    else:
        body = im_text[:-1]
        im_part = float(body + "1") if body in ("", "+", "-") else float(body)
    if m.group("re") and im_text is not None and im_text[0] not in "+-":
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")
    return complex(re_part, im_part)


def parse_interval(text: str):
    parts = str(text).split(",")
    try:
        a, b = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"interval must be 'a,b': {text!r}") from None
    if not (math.isfinite(a) and math.isfinite(b)) or a > b:
        raise argparse.ArgumentTypeError(f"interval needs finite a <= b: {text!r}")
    return a, b


def parse_grid(text: str):
    """'start:stop:step', inclusive of stop when it lies on the lattice."""
    parts = str(text).split(":")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must be 'start:stop:step': {text!r}") from None
    if not step > 0 or stop < start:
        raise argparse.ArgumentTypeError(f"grid needs step > 0 and start <= stop: {text!r}")
    n = int(math.floor((stop - start) / step + 1e-9))
    if n > 10_000_000:
        raise argparse.ArgumentTypeError("grid has too many points")
    return start + step * np.arange(n + 1)


def parse_float_list(text: str):
    try:
        vals = [float(p) for p in str(text).split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers: {text!r}") from None
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def parse_complex_list(text: str):
    items = [p for p in str(text).split(";") if p.strip()]
    if not items:
        raise argparse.ArgumentTypeError("empty list")
    return [parse_complex(p) for p in items]


def positive_float(text: str):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


def parse_structure(text: str):
    """'exponential:b', 'linear' or 'linear_exponential:b,omega'."""
    name, _, args = str(text).partition(":")
    try:
        if name == "linear" and not args:
            return debranges.linear()
        if name == "exponential":
            return debranges.exponential(positive_float(args))
        if name == "linear_exponential":
            b, omega = args.split(",")
            return debranges.linear_exponential(positive_float(b), parse_complex(omega))
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(f"bad structure {text!r}: {exc}") from None
    raise argparse.ArgumentTypeError(f"unknown structure {text!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(f"{self.prog}: {message}")


def _split(name, value):
    z = complex(value)
    return {f"{name}_re": z.real, f"{name}_im": z.imag}


def _cmd_kappa(ns):
    e = pw.build_extremal(ns.alpha, ns.beta, ns.delta)
    row = {**_split("alpha", e.alpha), **_split("beta", e.beta), "delta": e.delta, "kappa": e.kappa,
           **_split("lambda1", e.lambda1), **_split("lambda2", e.lambda2)}
    return {}, [row]


def _need(ns, *names):
    missing = [n for n in names if getattr(ns, n) is None]
    if missing:
        raise ParseError("missing required flag(s): " + ", ".join("--" + m.replace("_", "-") for m in missing))


def _eval_object(ns):
    obj = ns.object
    if obj == "F":
        _need(ns, "alpha", "beta", "delta")
        return pw.build_extremal(ns.alpha, ns.beta, ns.delta).F
    _need(ns, "interval", "delta")
    base = selberg.build_selberg(ns.interval, ns.delta)
    if obj == "C":
        return base.C
    if obj == "c":
        return base.c
    if obj == "G_alpha":
        _need(ns, "alpha")
        return vanishing.build_majorant(base, (ns.alpha,), "additive")
    if obj == "C_alpha":
        _need(ns, "alpha")
        return vanishing.build_majorant(base, (ns.alpha,), "multiplicative")
    if obj == "C_multi":
        _need(ns, "points")
        return vanishing.build_majorant(base, ns.points, "multipoint")
    _need(ns, "alpha")
    return vanishing.build_minorant(base, ns.alpha, ns.mode)


def _cmd_eval(ns):
    f = _eval_object(ns)
    t = np.asarray(ns.grid, dtype=float)
    vals = np.asarray(f(t.astype(complex)), dtype=complex)
    rows = [{"t": float(x), **_split("value", v)} for x, v in zip(t, vals)]
    return {"object": ns.object}, rows


def _cmd_spectrum(ns):
    e = pw.build_extremal(ns.alpha, ns.beta, ns.delta)
    xi = np.asarray(ns.grid, dtype=float)
    closed = pw.transform_closed_form(e)(xi)
    probe = pw.probe_transform(e, xi)
    rows = [{"xi": float(x), **_split("closed", c), **_split("probe", p), "residual": abs(c - p)}
            for x, c, p in zip(xi, np.atleast_1d(closed), probe)]
    return {"kappa": e.kappa}, rows


def _cmd_selberg(ns):
    pair = selberg.build_selberg(ns.interval, ns.delta)
    exc = selberg.majorant_excess(pair, ns.tolerance)
    dfc = selberg.minorant_deficit(pair, ns.tolerance)
    a, b = ns.interval
    span = max(b - a, 1.0) + 20.0 / ns.delta
    t = np.linspace(0.5 * (a + b) - span, 0.5 * (a + b) + span, 20001)
    chi = pair.chi(t)
    C = np.real(pair.C(t))
    c = np.real(pair.c(t))
    ref = 1.0 / ns.delta
    rows = [
        {"quantity": "majorant_excess", "value": float(exc.value), "error_bound": exc.error_bound, "reference": ref},
        {"quantity": "minorant_deficit", "value": float(dfc.value), "error_bound": dfc.error_bound, "reference": ref},
        {"quantity": "min_C_minus_chi", "value": float(np.min(C - chi)), "error_bound": 0.0, "reference": 0.0},
        {"quantity": "max_c_minus_chi", "value": float(np.max(c - chi)), "error_bound": 0.0, "reference": 0.0},
    ]
    return {"interval": list(ns.interval), "delta": ns.delta}, rows


def _cmd_rho_scan(ns):
    points = ns.points if ns.points is not None else ([ns.alpha] if ns.alpha is not None else None)
    if points is None:
        raise ParseError("rho-scan needs --alpha or --points")
    scan = vanishing.rho_scan(ns.interval, tuple(points), ns.deltas, ns.mode, ns.tolerance)
    rows = [{**r, "slope": scan.slope} for r in scan.rows()]
    return {"mode": scan.mode, "slope": scan.slope}, rows


def _cmd_threshold(ns):
    u = vanishing.threshold_root()
    return {}, [{"u_star": u, "threshold_value": vanishing.threshold_function(u)}]


def _cmd_trig(ns):
    e = trig_circle.build_trig_extremal(ns.degree, ns.alpha, ns.beta)
    rows = [{"k": k, **_split("coeff", c), "mean": e.mean} for k, c in enumerate(e.p_coeffs)]
    return {"mean": e.mean}, rows


def _cmd_debranges(ns):
    data = debranges.DBKernelData(ns.structure)
    rep = debranges.db_dependence_check(data, ns.alpha)
    row = {"structure": ns.structure.descriptor, "independent": rep.independent,
           "gram_defect": rep.gram_defect}
    if rep.independent:
        ext = debranges.db_extremal_bound(data, ns.alpha, ns.beta)
        row.update({"bound": ext.bound, **_split("lambda1", ext.lambda1), **_split("lambda2", ext.lambda2)})
    else:
        row.update({"bound": None, "lambda1_re": None, "lambda1_im": None, "lambda2_re": None, "lambda2_im": None})
    return {}, [row]


def _cmd_verify(ns):
    names = list(SUITES) if ns.suite == "all" else [ns.suite]
    results = run_suites(names)
    rows = [{"suite": r.suite, "check": r.check, "residual": r.residual, "threshold": r.threshold,
             "passed": r.passed} for r in results]
    return {"passed": all(r.passed for r in results)}, rows


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", default=None, help="output path (default: standard output)")
    common.add_argument("--precision", type=int, default=None,
                        help="significant digits (default: $BSV_PRECISION or 12)")
    common.add_argument("--error-json", action="store_true", help="emit errors as JSON on standard output")

    p = _Parser(prog="bsv", description="Band-limited extremal functions with prescribed zeros.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("kappa", parents=[common], help="minimal integral and coefficients")
    s.add_argument("--alpha", type=parse_complex, required=True)
    s.add_argument("--beta", type=parse_complex, required=True)
    s.add_argument("--delta", type=positive_float, required=True)
    s.set_defaults(run=_cmd_kappa)

    s = sub.add_parser("eval", parents=[common], help="sample an object on a real grid")
    s.add_argument("--object", required=True,
                   choices=("F", "C", "c", "G_alpha", "C_alpha", "C_multi", "minorant"))
    s.add_argument("--grid", type=parse_grid, required=True)
    s.add_argument("--alpha", type=parse_complex)
    s.add_argument("--beta", type=parse_complex)
    s.add_argument("--delta", type=positive_float)
    s.add_argument("--interval", type=parse_interval)
    s.add_argument("--points", type=parse_complex_list, help="semicolon-separated complex points")
    s.add_argument("--mode", choices=vanishing.MINORANT_MODES, default="additive")
    s.set_defaults(run=_cmd_eval)

    s = sub.add_parser("spectrum", parents=[common], help="closed-form transform and probe residual")
    s.add_argument("--alpha", type=parse_complex, required=True)
    s.add_argument("--beta", type=parse_complex, required=True)
    s.add_argument("--delta", type=positive_float, required=True)
    s.add_argument("--grid", type=parse_grid, required=True)
    s.set_defaults(run=_cmd_spectrum)

    s = sub.add_parser("selberg", parents=[common], help="integral identities and grid extrema")
    s.add_argument("--interval", type=parse_interval, required=True)
    s.add_argument("--delta", type=positive_float, required=True)
    s.add_argument("--tolerance", type=positive_float, default=1e-4)
    s.set_defaults(run=_cmd_selberg)

    s = sub.add_parser("rho-scan", parents=[common], help="excess table and log-log slope")
    s.add_argument("--interval", type=parse_interval, required=True)
    s.add_argument("--alpha", type=parse_complex)
    s.add_argument("--points", type=parse_complex_list)
    s.add_argument("--deltas", type=parse_float_list, required=True)
    s.add_argument("--mode", choices=vanishing.MAJORANT_MODES, default="multiplicative")
    s.add_argument("--tolerance", type=positive_float, default=1e-6)
    s.set_defaults(run=_cmd_rho_scan)

    s = sub.add_parser("threshold", parents=[common], help="multiplicative-minorant threshold root")
    s.set_defaults(run=_cmd_threshold)

    s = sub.add_parser("trig", parents=[common], help="least-mean Laurent polynomial on the circle")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--alpha", type=parse_complex, required=True)
    s.add_argument("--beta", type=parse_complex, required=True)
    s.set_defaults(run=_cmd_trig)

    s = sub.add_parser("debranges", parents=[common], help="weighted extremal bound for a structure function")
    s.add_argument("--structure", type=parse_structure, required=True,
                   help="exponential:b | linear | linear_exponential:b,omega")
    s.add_argument("--alpha", type=parse_complex, required=True)
    s.add_argument("--beta", type=parse_complex, required=True)
    s.set_defaults(run=_cmd_debranges)

    s = sub.add_parser("verify", parents=[common], help="run self-check suites")
    s.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    s.set_defaults(run=_cmd_verify)
    return p


_FLAG_ONLY = {"--error-json", "--help", "-h", "--version"}


def _attach_values(argv):
    """Join '--flag -1,1' into '--flag=-1,1' so negative values are not read as options."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok.startswith("--") and "=" not in tok and tok not in _FLAG_ONLY and i + 1 < len(argv)
                and argv[i + 1].startswith("-") and not argv[i + 1].startswith("--")):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _round(v, digits):
    if isinstance(v, (bool, np.bool_)) or v is None or isinstance(v, str):
        return bool(v) if isinstance(v, np.bool_) else v
    if isinstance(v, (int, np.integer)):
        return int(v)
    x = float(v)
    if not math.isfinite(x):
        return None
    return float(f"{x:.{digits - 1}e}") + 0.0


def _csv_cell(v, digits):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return f"{v:.{digits - 1}e}"
    return str(v)


def render(meta, rows, fmt, digits, command):
    rows = [{k: _round(v, digits) for k, v in r.items()} for r in rows]
    if fmt == "json":
        doc = {"meta": {"command": command, "version": __version__, "backend": _backend.NAME,
                        "precision": digits, **{k: _round(v, digits) if not isinstance(v, list)
                                                 else [_round(x, digits) for x in v]
                                                 for k, v in meta.items()}},
               "rows": rows}
        return json.dumps(doc, indent=2, allow_nan=False) + "\n"
    buf = io.StringIO()
    if rows:
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(rows[0].keys()))
        for r in rows:
            w.writerow([_csv_cell(v, digits) for v in r.values()])
    return buf.getvalue()


def _precision(ns):
    if ns.precision is not None:
        p = ns.precision
    else:
        env = os.environ.get("BSV_PRECISION")
        try:
            p = int(env) if env else DEFAULT_PRECISION
        except ValueError:
            raise ParseError(f"BSV_PRECISION must be an integer, got {env!r}") from None
    if not 1 <= p <= 17:
        raise ParseError("precision must be between 1 and 17")
    return p


def _report(kind, message, code, as_json, stdout, stderr):
    if as_json:
        stdout.write(json.dumps({"error": kind, "message": message, "exit_code": code}) + "\n")
    else:
        stderr.write(f"bsv: {kind}: {message}\n")
    return code


def run(argv=None, stdout=None, stderr=None) -> int:
    """Execute one command; returns the process exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = _attach_values(list(sys.argv[1:] if argv is None else argv))
    as_json = "--error-json" in argv
    try:
        ns = build_parser().parse_args(argv)
        digits = _precision(ns)
        meta, rows = ns.run(ns)
    except ParseError as exc:
        return _report("ParseError", str(exc), EXIT_PARSE, as_json, stdout, stderr)
    except DomainError as exc:
        return _report(type(exc).__name__, str(exc), EXIT_DOMAIN, as_json, stdout, stderr)
    except BSVError as exc:
        return _report(type(exc).__name__, str(exc), EXIT_FAIL, as_json, stdout, stderr)
    text = render(meta, rows, ns.format, digits, ns.command)
    if ns.output:
        with open(ns.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    if ns.command == "verify" and not meta["passed"]:
        return EXIT_FAIL
    return EXIT_OK


def main():
    sys.exit(run())
