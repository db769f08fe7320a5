"""Command-line front end: ``regdet {eval,verify,signature,grid,regprod}``.

Complex numbers are written ``a+bi``; either part may be omitted
(``2``, ``3i``, ``1-0.5i``, ``-i``). Machine output prints every float with
17 significant digits so repeated runs are byte-identical.

Exit codes: 0 success, 1 a verified identity failed, 2 bad input,
3 domain error (e.g. a pole for ``--method alt``).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import detengine
from .ktheory import Signature
from .numberfield import IntegerPolynomial, PolynomialError, signature_from_polynomial
from .regprod import ProgressionSpec, regprod_closed, regprod_numeric
from .specfun import DomainError, EulerMaclaurinParams

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

METHODS = ("closed", "alt", "regularized")
IDENTITIES = ("periodicity", "reflection", "lerch")


class InputError(ValueError):
    pass


def _real(text: str, original: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise InputError(f"cannot parse complex number {original!r} (expected a+bi)") from None
    if not math.isfinite(value) or text.strip().lower().lstrip("+-") in ("inf", "nan", "infinity"):
        raise InputError(f"non-finite component in {original!r}")
    return value


def parse_complex(text: str) -> complex:
    """Parse ``a+bi`` style literals: ``2``, ``3i``, ``1-0.5i``, ``-i``."""
    t = text.strip().replace(" ", "")
    if not t:
        raise InputError("empty complex literal")
    if t[-1] not in "ij":
        return complex(_real(t, text), 0.0)
    body = t[:-1]
    # split at the last sign that is not leading and not an exponent sign
    cut = 0
    for i in range(len(body) - 1, 0, -1):
        if body[i] in "+-" and body[i - 1] not in "eE":
            cut = i
            break
    re_text, im_text = body[:cut], body[cut:]
    if im_text in ("", "+"):
        im = 1.0
    elif im_text == "-":
        im = -1.0
    else:
        im = _real(im_text, text)
    re_part = _real(re_text, text) if re_text else 0.0
    return complex(re_part, im)


def fmt(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r} cannot be serialized")
    return format(x, ".17g")


def dumps(obj) -> str:
    """JSON text with floats at 17 significant digits."""
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt(obj)
    if isinstance(obj, complex):
        return dumps([obj.real, obj.imag])
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _add_signature_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--r1", type=int, help="number of real places")
    p.add_argument("--r2", type=int, help="number of complex places")
    p.add_argument("--poly", help='defining polynomial, ascending coefficients, e.g. "-2,0,0,1"')


def _signature(args) -> Signature:
    poly = getattr(args, "poly", None)
    has_pair = args.r1 is not None or args.r2 is not None
    if poly is not None and has_pair:
        raise InputError("give either --r1/--r2 or --poly, not both")
    if poly is not None:
        result = signature_from_polynomial(IntegerPolynomial.parse(poly))
        print(result.warning, file=sys.stderr)
        return result.signature
    if args.r1 is None or args.r2 is None:
        raise InputError("give both --r1 and --r2 (or --poly)")
    try:
        return Signature(args.r1, args.r2)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _add_box_args(p: argparse.ArgumentParser, n_re: int, n_im: int, lo=-4.0, hi=4.0) -> None:
    p.add_argument("--re-min", type=float, default=lo)
    p.add_argument("--re-max", type=float, default=hi)
    p.add_argument("--n-re", type=int, default=n_re)
    p.add_argument("--im-min", type=float, default=lo)
    p.add_argument("--im-max", type=float, default=hi)
    p.add_argument("--n-im", type=int, default=n_im)


def _box(args) -> list:
    if args.n_re < 1 or args.n_im < 1:
        raise InputError("grid sizes must be positive")
    return detengine.lattice_grid(
        args.re_min, args.re_max, args.n_re, args.im_min, args.im_max, args.n_im
    )


def evaluate(s: complex, sig: Signature, method: str, params: EulerMaclaurinParams) -> complex:
    if method == "closed":
        return detengine.g_closed(s, sig)
    if method == "alt":
        return detengine.g_alt(s, sig)
    if method == "regularized":
        return detengine.g_regularized(s, sig, params)
    raise InputError(f"unknown method {method!r}")


def cmd_eval(args) -> int:
    sig = _signature(args)
    params = EulerMaclaurinParams.from_env()
    for text in args.s:
        s = parse_complex(text)
        value = evaluate(s, sig, args.method, params)
        record = {
            "s": s,
            "value": value,
            "method": args.method,
            "signature": [sig.r1, sig.r2],
        }
        print(dumps(record))
    return EXIT_OK


def cmd_verify(args) -> int:
    sig = _signature(args)
    grid = [parse_complex(t) for t in args.s] if args.s else _box(args)
    names = IDENTITIES if args.identity == "all" else (args.identity,)
    reports = []
    for name in names:
        if name == "periodicity":
            tol = args.tol if args.tol is not None else detengine.DEFAULT_TOLERANCE
            reports.append(detengine.check_periodicity(sig, grid, tol))
        elif name == "reflection":
            tol = args.tol if args.tol is not None else detengine.DEFAULT_TOLERANCE
            reports.append(detengine.check_reflection(sig, grid, tol))
        else:
            tol = args.tol if args.tol is not None else 1e-8
            reports.append(detengine.check_lerch(tol=tol, p=EulerMaclaurinParams.from_env()))
    payload = [r.to_dict() for r in reports]
    print(dumps(payload[0] if len(payload) == 1 else payload))
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.identity_name}: max residual {r.max_residual:.3e} (tol {r.tolerance:g})",
              file=sys.stderr)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_signature(args) -> int:
    result = signature_from_polynomial(IntegerPolynomial.parse(args.poly))
    print(result.warning, file=sys.stderr)
    sig = result.signature
    if args.json:
        print(dumps({"r1": sig.r1, "r2": sig.r2, "degree": sig.degree}))
    else:
        print(f"r1={sig.r1} r2={sig.r2}")
    return EXIT_OK


GRID_COLUMNS = ("re_s", "im_s", "re_G", "im_G", "abs_G")


def grid_rows(sig: Signature, points) -> list:
    rows = []
    for s in points:
        g = detengine.g_closed(s, sig)
        rows.append((s.real, s.imag, g.real, g.imag, abs(g)))
    return rows


def render_grid(rows, fmt_name: str) -> str:
    if fmt_name == "csv":
        lines = [",".join(GRID_COLUMNS)]
        lines += [",".join(fmt(v) for v in row) for row in rows]
        return "\n".join(lines) + "\n"
    return dumps([dict(zip(GRID_COLUMNS, row)) for row in rows]) + "\n"


def cmd_grid(args) -> int:
    sig = _signature(args)
    text = render_grid(grid_rows(sig, _box(args)), args.format)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_regprod(args) -> int:
    spec = ProgressionSpec(args.step, parse_complex(args.offset))
    out = {"step": spec.step, "offset": spec.offset}
    if args.method in ("closed", "both"):
        out["closed"] = regprod_closed(spec)
    if args.method in ("numeric", "both"):
        out["numeric"] = regprod_numeric(spec, EulerMaclaurinParams.from_env())
    print(dumps(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regdet",
        description="Regularized determinants of the Riemann operator on higher K-groups.",
        epilog="Complex literals: a+bi, e.g. 2, 3i, 1-0.5i. "
        "REGDET_EM_N / REGDET_EM_B override the Euler-Maclaurin cutoff and term count.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate G_K(s)")
    _add_signature_args(p)
    p.add_argument("--s", action="append", required=True, help="point a+bi (repeatable)")
    p.add_argument("--method", choices=METHODS, default="closed")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="check the periodicity / reflection / Lerch identities")
    _add_signature_args(p)
    p.add_argument("--identity", choices=IDENTITIES + ("all",), default="all")
    p.add_argument("--tol", type=float, default=None,
                   help="tolerance (default 1e-10, or 1e-8 for lerch)")
    p.add_argument("--s", action="append", help="explicit grid point a+bi (repeatable)")
    _add_box_args(p, 10, 20)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("signature", help="signature (r1, r2) of a defining polynomial")
    p.add_argument("--poly", required=True, help='ascending coefficients, e.g. "1,0,1"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("grid", help="tabulate G_K over a rectangular grid")
    _add_signature_args(p)
    _add_box_args(p, 9, 9)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("regprod", help="regularized product of step*k + offset, k >= 0")
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--offset", required=True)
    p.add_argument("--method", choices=("closed", "numeric", "both"), default="both")
    p.set_defaults(func=cmd_regprod)
    return parser


# options whose values may start with "-" (negative coefficients, -1+2i)
_VALUE_OPTIONS = ("--poly", "--s", "--offset")


def _attach_values(argv):
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_attach_values(sys.argv[1:] if argv is None else argv))
    try:
        return args.func(args)
    except (InputError, PolynomialError) as exc:
        print(f"regdet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"regdet: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"regdet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
