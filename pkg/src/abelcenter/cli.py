"""Command-line front end.

Exit codes: 0 success, 1 negative mathematical verdict (focus, no composition,
failed claim), 2 input error.  JSON reports have the shape
``{"command", "inputs", "results": [...], "verdict"}``; rationals are strings
``"num/den"`` and any float rendering sits under an ``"approx"`` key.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import casestudy, decompose, moments, poincare
from .ratpoly import Interval, Poly, PolyParseError, format_poly, format_rational as txt, parse_poly

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2
THREADS_ENV = "ABEL_CENTER_THREADS"


class InputError(Exception):
    pass


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    cap = os.cpu_count() or 1
    if raw is None:
        return cap
    try:
        n = int(raw)
    except ValueError:
        raise InputError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    if n < 1:
        raise InputError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


def rat(v: Fraction) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def rat_entry(v: Fraction, **extra) -> dict:
    return {**extra, "value": rat(v), "approx": float(v)}


def poly_entry(f: Poly) -> dict:
    return {"text": format_poly(f), "coeffs": [rat(c) for c in f.coeffs]}


def _parse_rational(text: str, name: str) -> Fraction:
    try:
        return Fraction(text.strip().replace("−", "-"))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"--{name}: not a rational number: {text!r}")


def _poly(text: Optional[str], name: str) -> Poly:
    if text is None:
        raise InputError(f"--{name} is required")
    try:
        return parse_poly(text)
    except PolyParseError as e:
        raise InputError(f"--{name}: {e}")


def _interval(args) -> Interval:
    a, b = _parse_rational(args.a, "a"), _parse_rational(args.b, "b")
    if a == b:
        raise InputError("the interval needs a != b")
    return Interval(a, b)


class Report:
    def __init__(self, command: str, inputs: dict):
        self.command, self.inputs = command, inputs
        self.results: list[dict] = []
        self.lines: list[str] = []
        self.verdict = ""
        self.code = EXIT_OK

    def add(self, entry: dict, line: str) -> None:
        self.results.append(entry)
        self.lines.append(line)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps({"command": self.command, "inputs": self.inputs,
                               "results": self.results, "verdict": self.verdict}, indent=2)
        return "\n".join(self.lines + [f"verdict: {self.verdict}"])


def _cmd_moments(args) -> Report:
    P, Q, iv = _poly(args.P, "P"), _poly(args.Q, "Q"), _interval(args)
    kmax = args.kmax if args.kmax is not None else moments.default_kmax(P, Q)
    if kmax < 0:
        raise InputError("--kmax must be nonnegative")
    mv = moments.moments(P, Q, iv, kmax)
    rep = Report("moments", {"P": format_poly(P), "Q": format_poly(Q), "a": rat(iv.a), "b": rat(iv.b), "kmax": kmax})
    for l, v in enumerate(mv.values):
        rep.add(rat_entry(v, l=l), f"m_{l} = {txt(v)}")
    rep.verdict = "all-vanish" if mv.all_vanish() else "nonzero"
    return rep


def _cmd_melnikov(args) -> Report:
    P, Q, iv = _poly(args.P, "P"), _poly(args.Q, "Q"), _interval(args)
    rep = Report("melnikov", {"P": format_poly(P), "Q": format_poly(Q), "a": rat(iv.a), "b": rat(iv.b)})
    in_space = iv.vanishes_at_ends(P) and iv.vanishes_at_ends(Q)
    ks = [args.k] if args.k is not None else [5, 7, 9, 11]
    for k in ks:
        if k < 5 or k % 2 == 0:
            raise InputError("--k must be odd and at least 5")
        v = moments.melnikov_sum(k, P, Q, iv)
        entry = rat_entry(v, k=k, route="iterated")
        line = f"k = {k}: sum n_alpha I_alpha = {txt(v)}"
        if in_space:
            w = moments.melnikov_sum(k, P, Q, iv, by_parts=True)
            entry["by_parts"] = rat(w)
            line += f", by parts {txt(w)}"
            j = (k - 3) // 2
            if j <= 4:
                d = moments.melnikov_closed(j, P, Q, iv)
                entry["closed"] = {"j": j, "value": rat(d), "approx": float(d)}
                line += f", D_{j} = {txt(d)}"
        rep.add(entry, line)
    rep.verdict = "all-zero" if all(Fraction(e["value"]) == 0 for e in rep.results) else "nonzero"
    return rep


def _cmd_center(args) -> Report:
    P, Q, iv = _poly(args.P, "P"), _poly(args.Q, "Q"), _interval(args)
    if args.order < 2:
        raise InputError("--order must be at least 2")
    series = poincare.return_map(P, Q, iv, args.order)
    rep = Report("center", {"P": format_poly(P), "Q": format_poly(Q), "a": rat(iv.a), "b": rat(iv.b), "order": args.order})
    for n in range(2, args.order + 1):
        v = series.coefficient(n)
        rep.add(rat_entry(v, n=n), f"v_{n} = {txt(v)}")
    verdict = poincare.center_check(P, Q, iv, args.order)
    rep.verdict = str(verdict)
    rep.code = EXIT_OK if verdict.center else EXIT_NEGATIVE
    return rep


def _cmd_decompose(args) -> Report:
    P, iv = _poly(args.P, "P"), _interval(args)
    if P.degree < 2:
        raise InputError("decompose needs deg P >= 2")
    fr = decompose.factor_report(P, iv)
    rep = Report("decompose", {"P": format_poly(P), "a": rat(iv.a), "b": rat(iv.b)})
    ab = {f.W for f in fr.ab_factors}
    indec = {f.W for f in fr.ab_indecomposable}
    for f in fr.right_factors:
        entry = {"degree": f.degree, "W": poly_entry(f.W), "outer": poly_entry(f.outer),
                 "ab_factor": f.W in ab, "ab_indecomposable": f.W in indec}
        tags = ["[a,b]" if f.W in ab else "", "indecomposable" if f.W in indec else ""]
        rep.add(entry, f"deg {f.degree}: W = {format_poly(f.W)}, P = ({format_poly(f.outer)}) o W  {' '.join(t for t in tags if t)}".rstrip())
    if iv.equal_ends(P):
        rep.verdict = "definite" if fr.s == 1 else f"non-definite ({fr.s} indecomposable [a,b]-factors)"
    else:
        rep.verdict = "P(a) != P(b)"
    return rep


def _cmd_composition(args) -> Report:
    P, Q, iv = _poly(args.P, "P"), _poly(args.Q, "Q"), _interval(args)
    try:
        w = decompose.composition_condition(P, Q, iv)
    except decompose.PreconditionError as e:
        raise InputError(str(e))
    rep = Report("composition-check", {"P": format_poly(P), "Q": format_poly(Q), "a": rat(iv.a), "b": rat(iv.b)})
    if w is not None:
        rep.add({"W": poly_entry(w.W), "P_tilde": poly_entry(w.P_tilde), "Q_tilde": poly_entry(w.Q_tilde)},
                f"W = {format_poly(w.W)}\nP = ({format_poly(w.P_tilde)}) o W\nQ = ({format_poly(w.Q_tilde)}) o W")
    mv = decompose.moment_vanishing_structural(P, Q, iv)
    entry: dict[str, Any] = {"moments_vanish": mv.vanishes}
    line = f"moments vanish: {'yes' if mv.vanishes else 'no'}"
    if mv.vanishes:
        entry["constant"] = rat(mv.constant)
        entry["terms"] = [{"W": poly_entry(W), "S": poly_entry(S)} for W, S in zip(mv.factors, mv.components)]
        line += "".join(f"\n  S({format_poly(W)}) with S = {format_poly(S)}" for W, S in zip(mv.factors, mv.components))
    rep.add(entry, line)
    rep.verdict = "composition" if w is not None else "no-composition"
    rep.code = EXIT_OK if w is not None else EXIT_NEGATIVE
    return rep


def _cmd_cos_basis(args) -> Report:
    Q, iv = _poly(args.Q, "Q"), _interval(args)
    if args.d < 2:
        raise InputError("--d must be at least 2")
    try:
        pieces = decompose.composition_set_basis(Q, args.d, iv)
    except decompose.PreconditionError as e:
        raise InputError(str(e))
    rep = Report("cos-basis", {"Q": format_poly(Q), "a": rat(iv.a), "b": rat(iv.b), "d": args.d})
    for piece in pieces:
        rep.add({"W": poly_entry(piece.W), "dim": piece.dim, "basis": [poly_entry(b) for b in piece.basis]},
                f"W = {format_poly(piece.W)}: dim {piece.dim}" + "".join(f"\n  {format_poly(b)}" for b in piece.basis))
    rep.verdict = f"{len(pieces)} subspace(s)"
    return rep


def _cmd_verify(args) -> Report:
    claims = casestudy.verify_paper(workers=min(worker_count(), len(casestudy.CLAIMS)))
    rep = Report("verify-paper", {})
    for c in claims:
        rep.add({"claim": c.name, "passed": c.passed, "detail": c.detail}, c.line())
    failed = sum(not c.passed for c in claims)
    rep.verdict = "all claims pass" if not failed else f"{failed} of {len(claims)} claims fail"
    rep.code = EXIT_OK if not failed else EXIT_NEGATIVE
    return rep


COMMANDS = {
    "moments": _cmd_moments,
    "melnikov": _cmd_melnikov,
    "center": _cmd_center,
    "decompose": _cmd_decompose,
    "composition-check": _cmd_composition,
    "cos-basis": _cmd_cos_basis,
    "verify-paper": _cmd_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="abel-center", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, poly_args):
        for name in poly_args:
            p.add_argument(f"--{name}", required=True, help="polynomial, e.g. '4x^3 - 3x'")
        p.add_argument("--a", default="0", help="left endpoint (rational)")
        p.add_argument("--b", default="1", help="right endpoint (rational)")
        p.add_argument("--output", choices=("text", "json"), default="text")

    common(p := sub.add_parser("moments"), ("P", "Q"))
    p.add_argument("--kmax", type=int)
    common(p := sub.add_parser("melnikov"), ("P", "Q"))
    p.add_argument("--k", type=int, help="odd order >= 5; default 5, 7, 9, 11")
    common(p := sub.add_parser("center"), ("P", "Q"))
    p.add_argument("--order", type=int, default=poincare.DEFAULT_ORDER)
    common(sub.add_parser("decompose"), ("P",))
    common(sub.add_parser("composition-check"), ("P", "Q"))
    common(p := sub.add_parser("cos-basis"), ("Q",))
    p.add_argument("--d", type=int, required=True, help="degree bound")
    p = sub.add_parser("verify-paper")
    p.add_argument("--output", choices=("text", "json"), default="text")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        rep = COMMANDS[args.command](args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (decompose.PreconditionError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    print(rep.render(args.output))
    return rep.code


if __name__ == "__main__":
    sys.exit(main())
