"""Command line front end: ``torsion A B`` and friends.

Exit codes: 0 ok, 1 usage or parse error, 2 singular curve, 3 the
Lutz-Nagell cross-check disagrees.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .curve import GeneralCurve, Point, ShortCurve, SingularCurveError
from .engine import TorsionResult, torsion_of_general, torsion_of_short
from .numtheory import FactorizationBudgetExceeded
from .oracle import lutz_nagell_torsion
from .tate import FINAL_ORDERS, final_polynomial

EXIT_OK, EXIT_USAGE, EXIT_SINGULAR, EXIT_MISMATCH = 0, 1, 2, 3


class ParseError(ValueError):
    def __init__(self, message: str, token: str, column: int, where: str = ""):
        super().__init__(message)
        self.token = token
        self.column = column
        self.where = where

    def __str__(self) -> str:
        loc = f"{self.where}, " if self.where else ""
        pointer = " " * self.column + "^"
        return f"{loc}column {self.column + 1}: {self.args[0]}\n  {self.token}\n  {pointer}"


_DIGITS = {10: "0123456789", 16: "0123456789abcdefABCDEF"}


def parse_number(token: str, radix: int = 10, where: str = "") -> Fraction:
    """Signed integer or ``num/den`` in the given radix; hex may carry 0x."""
    digits = _DIGITS[radix]
    i, n = 0, len(token)
    sign = 1
    if i < n and token[i] in "+-":
        sign = -1 if token[i] == "-" else 1
        i += 1
    parts = []
    for part_no in range(2):
        if radix == 16 and token[i : i + 2].lower() == "0x":
            i += 2
        start = i
        while i < n and token[i] in digits:
            i += 1
        if i == start:
            what = "digit" if i < n or part_no else "number"
            raise ParseError(f"expected a base-{radix} {what}", token, min(i, max(n - 1, 0)), where)
        parts.append(int(token[start:i], radix))
        if i < n and token[i] == "/" and part_no == 0:
            i += 1
            continue
        break
    if i != n:
        raise ParseError(f"unexpected character {token[i]!r}", token, i, where)
    if len(parts) == 2 and parts[1] == 0:
        raise ParseError("zero denominator", token, token.index("/") + 1, where)
    return sign * Fraction(parts[0], parts[1] if len(parts) == 2 else 1)


def format_number(value: Fraction, radix: int = 10) -> str:
    value = Fraction(value)
    if radix == 10:
        return str(value)
    sign = "-" if value < 0 else ""
    text = f"{sign}{abs(value.numerator):X}"
    return text if value.denominator == 1 else f"{text}/{value.denominator:X}"


@dataclass(frozen=True)
class CurveInput:
    form: str  # "short" or "long"
    values: tuple
    radix: int = 10

    def serialize(self) -> str:
        text = [format_number(v, self.radix) for v in self.values]
        return " ".join(text) if self.form == "short" else "ainv:" + ",".join(text)


def parse_curve(text: str, radix: int = 10, where: str = "") -> CurveInput:
    """One curve in the batch grammar: ``A B`` or ``ainv:a1,a2,a3,a4,a6``."""
    text = text.strip()
    if text.startswith("ainv:"):
        return parse_ainv(text[5:], radix, where)
    tokens = text.split()
    if len(tokens) != 2:
        raise ParseError(f"expected 'A B' or 'ainv:...', got {len(tokens)} field(s)", text, 0, where)
    return CurveInput("short", tuple(
        parse_number(t, radix, f"{where}{', ' if where else ''}field {k + 1}") for k, t in enumerate(tokens)
    ), radix)


def parse_ainv(text: str, radix: int = 10, where: str = "") -> CurveInput:
    fields = [t.strip() for t in text.split(",")]
    if len(fields) != 5:
        raise ParseError(f"expected 5 comma-separated coefficients, got {len(fields)}", text, 0, where)
    prefix = f"{where}, " if where else ""
    return CurveInput("long", tuple(
        parse_number(t, radix, f"{prefix}a{'12346'[k]}") for k, t in enumerate(fields)
    ), radix)


def _point_json(P: Point) -> dict:
    return {"x": str(P.x), "y": str(P.y)}


def _compute(curve: CurveInput, k_primes: int) -> tuple[TorsionResult, ShortCurve, Fraction, object]:
    if curve.form == "short":
        result, model, scale = torsion_of_short(*curve.values, k_primes=k_primes)
        return result, model, scale.u, ShortCurve(*curve.values)
    G = GeneralCurve(*curve.values)
    result, model, _ = torsion_of_general(G, k_primes=k_primes)
    return result, model, Fraction(result.trace["scaling"]), G


def process(curve: CurveInput, k_primes: int = 5, oracle: bool = False, oracle_budget: float = 30.0,
            trace: bool = False, dump_final: int | None = None) -> tuple[int, dict]:
    """Compute one record; returns (exit status, record)."""
    record: dict = {
        "input": {"form": curve.form, "coefficients": [format_number(v, curve.radix) for v in curve.values],
                  "radix": curve.radix},
    }
    start = time.perf_counter()
    try:
        result, model, u, echoed = _compute(curve, k_primes)
    except SingularCurveError:
        record["error"] = "singular curve: discriminant Δ = 0"
        return EXIT_SINGULAR, record
    assert all(echoed.contains(P) for P in result.generators)
    record.update({
        "model": {"A": str(model.A), "B": str(model.B), "u": str(u)},
        "structure": str(result.structure),
        "order": result.order,
        "generators": [_point_json(P) for P in result.generators],
        "bound": result.trace["bound"],
        "primes": result.trace["primes"],
    })
    status = EXIT_OK
    if dump_final is not None:
        F = final_polynomial(dump_final, model)
        record["final_polynomial"] = {"n": dump_final, "coefficients": [str(a) for a in reversed(F.coeffs)]}
    if oracle:
        try:
            check = lutz_nagell_torsion(model, budget=oracle_budget)
        except FactorizationBudgetExceeded as exc:
            record["oracle"] = {"warning": f"oracle skipped: {exc}"}
        else:
            agree = check.structure == result.structure
            record["oracle"] = {"structure": str(check.structure), "order": check.order, "agree": agree}
            if not agree:
                status = EXIT_MISMATCH
    if trace:
        record["trace"] = result.trace
    record["elapsed"] = round(time.perf_counter() - start, 6)
    return status, record


def render_text(record: dict) -> str:
    inp = record["input"]
    coeffs = inp["coefficients"]
    if inp["form"] == "short":
        head = f"Y^2 = X^3 + ({coeffs[0]})X + ({coeffs[1]})"
    else:
        head = "[a1,a2,a3,a4,a6] = [" + ", ".join(coeffs) + "]"
    if "error" in record:
        return f"{head}\n  error: {record['error']}"
    lines = [head]
    m = record["model"]
    if m["u"] != "1" or inp["form"] == "long":
        lines.append(f"  integral model: Y^2 = X^3 + ({m['A']})X + ({m['B']}), u = {m['u']}")
    lines.append(f"  torsion: {record['structure']} (order {record['order']})")
    for P in record["generators"]:
        line = f"  generator: ({P['x']}, {P['y']})"
        if inp["radix"] == 16:
            x, y = (format_number(Fraction(P[c]), 16) for c in "xy")
            line += f" = hex ({x}, {y})"
        lines.append(line)
    primes = ", ".join(map(str, record["primes"]))
    lines.append(f"  bound M = {record['bound']} from primes {primes}")
    if "oracle" in record:
        o = record["oracle"]
        if "warning" in o:
            lines.append(f"  oracle: {o['warning']}")
        else:
            verdict = "agrees" if o["agree"] else "DISAGREES"
            lines.append(f"  oracle (Lutz-Nagell): {o['structure']} ({verdict})")
    if "final_polynomial" in record:
        fp = record["final_polynomial"]
        lines.append(f"  F_{fp['n']} (highest degree first):")
        lines.extend(f"    {c}" for c in fp["coefficients"])
    if "trace" in record:
        lines.append("  trace: " + json.dumps(record["trace"], sort_keys=True))
    lines.append(f"  time: {record['elapsed']:.3f}s")
    return "\n".join(lines)


_NUMERIC = re.compile(r"^-(0[xX])?[0-9A-Fa-f]+(/(0[xX])?[0-9A-Fa-f]+)?$")
_VALUE_OPTIONS = {"--ainv", "--oracle-budget", "--primes", "--file", "--jobs", "--dump-final"}


def _normalize_argv(argv: list[str]) -> list[str]:
    """Keep argparse from reading negative (hex) numbers as options."""
    out, positional = [], []
    it = iter(argv)
    for tok in it:
        if tok == "--":
            positional.extend(it)
            break
        if tok in _VALUE_OPTIONS:
            value = next(it, None)
            out.append(tok if value is None else f"{tok}={value}")
        elif _NUMERIC.match(tok):
            positional.append(tok)
        elif tok.startswith("-"):
            out.append(tok)
        else:
            positional.append(tok)
    return out + ["--"] + positional if positional else out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torsion",
        description="Torsion subgroup of an elliptic curve over Q (Tate normal form method).",
    )
    parser.add_argument("coefficients", nargs="*", metavar="A B",
                        help="short Weierstrass coefficients of Y^2 = X^3 + AX + B (integers or p/q)")
    parser.add_argument("--ainv", metavar="a1,a2,a3,a4,a6", help="long Weierstrass coefficients")
    parser.add_argument("--hex", action="store_true", help="read numbers in base 16")
    parser.add_argument("--json", action="store_true", help="emit one JSON record per curve")
    parser.add_argument("--oracle", action="store_true", help="cross-check with the Lutz-Nagell method")
    parser.add_argument("--oracle-budget", type=float, default=30.0, metavar="SECONDS",
                        help="time allowed for factoring the discriminant (default 30)")
    parser.add_argument("--primes", type=int, default=5, metavar="K", help="good primes for the bound (default 5)")
    parser.add_argument("--file", metavar="PATH", help="batch file, one curve per line ('-' for stdin)")
    parser.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes for batch mode")
    parser.add_argument("--trace", action="store_true", help="include the bound and per-order root trace")
    parser.add_argument("--dump-final", type=int, choices=FINAL_ORDERS, metavar="N",
                        help="print the final polynomial F_N of the integral model")
    return parser


def _read_batch(path: str, radix: int) -> list:
    stream = sys.stdin if path == "-" else open(path, encoding="utf-8")
    with stream:
        items = []
        for lineno, line in enumerate(stream, 1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            try:
                items.append(parse_curve(text, radix, f"line {lineno}"))
            except ParseError as exc:
                items.append(exc)
        return items


def _run_one(args_tuple):
    curve, opts = args_tuple
    return process(curve, **opts)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    args = parser.parse_args(_normalize_argv(argv))
    radix = 16 if args.hex else 10
    if args.primes < 1:
        parser.error("--primes must be at least 1")

    try:
        if args.file:
            if args.coefficients or args.ainv:
                parser.error("--file cannot be combined with coefficients on the command line")
            items = _read_batch(args.file, radix)
        elif args.ainv is not None:
            if args.coefficients:
                parser.error("give either A B or --ainv, not both")
            items = [parse_ainv(args.ainv, radix, "--ainv")]
        elif len(args.coefficients) == 2:
            items = [CurveInput("short", tuple(
                parse_number(t, radix, f"argument {k + 1}") for k, t in enumerate(args.coefficients)), radix)]
        else:
            parser.error("expected two coefficients A B, --ainv, or --file")
    except ParseError as exc:
        print(f"torsion: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    opts = dict(k_primes=args.primes, oracle=args.oracle, oracle_budget=args.oracle_budget,
                trace=args.trace, dump_final=args.dump_final)
    curves = [c for c in items if isinstance(c, CurveInput)]
    if args.jobs > 1 and len(curves) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            computed = iter(list(pool.map(_run_one, [(c, opts) for c in curves])))
    else:
        computed = (process(c, **opts) for c in curves)

    worst = EXIT_OK
    for item in items:
        if isinstance(item, ParseError):
            status, record = EXIT_USAGE, {"error": f"parse error: {item}"}
            if not args.json:
                print(f"torsion: parse error: {item}", file=sys.stderr)
                worst = max(worst, status)
                continue
        else:
            status, record = next(computed)
        worst = max(worst, status)
        if args.json:
            print(json.dumps(record))
        else:
            print(render_text(record))
        if status == EXIT_SINGULAR and not args.json:
            print("torsion: singular curve (discriminant Δ = 0)", file=sys.stderr)
    return worst


if __name__ == "__main__":
    sys.exit(main())
