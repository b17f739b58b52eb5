"""Command-line front end.

Exit status: 0 on success, 1 on a parse error, 2 on a precondition
violation (the violated rule is named on stderr).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from .errors import ParseError, PreconditionError
from .matrix import format_matrix
from .poly_core import Polynomial, derivative, format_rational, parse_poly, parse_rationals
from . import cauchy_rfunc, contfrac, hurwitz, resultants, rootcount


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _common(p: argparse.ArgumentParser):
    p.add_argument("--json", action="store_true", help="emit JSON with rationals as num/den strings")
    p.add_argument("--truncation", type=int, default=None, help="size of dumped/searched matrix windows")
    p.add_argument("--dump-matrix", action="store_true", help="print the underlying matrix")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="rootloc", description="Exact root location for polynomials and rational functions.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    one = {"analyze": "root counts and criteria for p",
           "discriminant": "discriminant of p"}
    for name, hlp in one.items():
        sp = sub.add_parser(name, help=hlp)
        sp.add_argument("p", help='coefficients, leading first, e.g. "1 0 -2 1"; - reads stdin')
        _common(sp)
    two = {"resultant": "resultant R(p, q)",
           "orlando": "generalized Orlando identity for (p, q)",
           "cauchy-index": "Cauchy indices of q/p",
           "rfunction": "R-function classification of q/p",
           "tnn": "total nonnegativity of H(p, q)"}
    for name, hlp in two.items():
        sp = sub.add_parser(name, help=hlp)
        sp.add_argument("p")
        sp.add_argument("q")
        _common(sp)
    for name, hlp in {"stieltjes": "Stieltjes fraction of q/p (q defaults to p')",
                      "jfraction": "J-fraction of q/p (q defaults to p')"}.items():
        sp = sub.add_parser(name, help=hlp)
        sp.add_argument("p")
        sp.add_argument("q", nargs="?", default=None)
        _common(sp)
        if name == "jfraction":
            sp.add_argument("--convention", choices=[contfrac.PLUS, contfrac.MINUS], default=contfrac.PLUS)
    sp = sub.add_parser("moment", help="finite moment problem for s_0, s_1, ...")
    sp.add_argument("s", help="whitespace-separated moments; - reads stdin")
    sp.add_argument("--nodes", type=int, required=True)
    _common(sp)
    return ap


# ---- report rendering ----

def _jsonable(v):
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, (int, Fraction)):
        return format_rational(v)
    if isinstance(v, Polynomial):
        return [format_rational(c) for c in v.coeffs]
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    raise TypeError(f"cannot serialize {type(v).__name__}")


def _text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, Polynomial):
        return " ".join(str(c) for c in v.coeffs) or "0"
    if isinstance(v, (list, tuple)):
        return " ".join(_text(x) for x in v)
    return str(v)


def render(report: dict, as_json: bool, matrix=None) -> str:
    if as_json:
        out = dict(report)
        if matrix is not None:
            out["matrix"] = matrix
        return json.dumps(_jsonable(out), sort_keys=False)
    lines = [f"{k}: {_text(v)}" for k, v in report.items()]
    if matrix is not None:
        lines.append("matrix:")
        lines.append(format_matrix(matrix))
    return "\n".join(lines)


# ---- subcommands ----

def _analyze(a, p, q):
    rep = rootcount.count_roots(p)
    rr = rootcount.real_rooted(p)
    neg = rootcount.all_zeros_negative(p)
    st = rootcount.log_derivative_stieltjes(p)
    out = {
        "polynomial": p,
        "m": rep.m_distinct, "k": rep.k_nonreal_pairs, "r": rep.r_distinct_real,
        "r_plus": rep.r_plus, "r_minus": rep.r_minus, "zero_is_root": rep.zero_is_root,
        "positive_with_multiplicity": rep.positive_with_multiplicity,
        "real_rooted": rr.verdict, "all_zeros_negative": neg.verdict,
        "delta": rootcount.delta_ledger(p).delta,
    }
    if isinstance(st, contfrac.StieltjesFraction):
        out["stieltjes_c"] = st.c
    else:
        out["stieltjes_c"] = None
    M = hurwitz.discriminant_matrix(p).matrix(a.truncation) if a.dump_matrix else None
    return out, M


def _resultant(a, p, q):
    rep = resultants.resultant(p, q)
    M = resultants.sylvester_matrix(p, q) if a.dump_matrix else None
    return {"resultant": rep.value, "n": rep.n, "m": rep.m}, M


def _discriminant(a, p, q):
    val = resultants.discriminant(p)
    M = hurwitz.discriminant_matrix(p).matrix(a.truncation or 2 * p.degree) if a.dump_matrix else None
    return {"discriminant": val}, M


def _orlando(a, p, q):
    rec = resultants.orlando_general(p, q)
    return {"branch": rec.branch, "resultant": rec.resultant, "pair_sum_product": rec.product,
            "square_lhs": rec.square_lhs, "square_rhs": rec.square_rhs,
            "pair_sum_square": rec.pair_square, "balanced": rec.balanced}, None


def _cauchy(a, p, q):
    r = cauchy_rfunc.cauchy_index(p, q)
    return {"ind_real_line": r.ind_real_line, "ind_negative_halfline": r.ind_negative_halfline,
            "ind_positive_halfline": r.ind_positive_halfline, "ind_at_infinity": r.ind_at_infinity,
            "ind_projective": r.ind_projective}, None


def _rfunction(a, p, q):
    v = cauchy_rfunc.classify_r_function(p, q)
    return {"is_r_function": v.is_r_negative_type, "failed_condition": v.failed_condition,
            "pole_count": v.pole_count, "negative_poles": v.negative_poles,
            "positive_poles": v.positive_poles, "zero_pole": v.zero_pole}, None


def _tnn(a, p, q):
    window = a.truncation or 10
    c = hurwitz.tnn_certificate(p, q, search_window=window)
    out = {"tnn": c.verdict, "reason": c.reason, "c0": c.c0, "c": c.c, "g": c.g}
    if c.witness is not None:
        out["witness_rows"] = c.witness.rows
        out["witness_cols"] = c.witness.cols
        out["witness_value"] = c.witness.value
    M = hurwitz.hurwitz_infinite(p, q, window).matrix() if a.dump_matrix else None
    return out, M


def _stieltjes(a, p, q):
    fr = contfrac.stieltjes_fraction(p, derivative(p) if q is None else q)
    if isinstance(fr, contfrac.NotStieltjes):
        return {"exists": False, "condition": fr.condition, "index": fr.index}, None
    return {"exists": True, "c0": fr.c0, "c": fr.c, "k": fr.k, "terminal": fr.terminal}, None


def _jfraction(a, p, q):
    jf = contfrac.j_fraction(p, derivative(p) if q is None else q, a.convention)
    if isinstance(jf, contfrac.NotRegular):
        return {"exists": False, "first_vanishing_D": jf.index}, None
    return {"exists": True, "convention": jf.convention, "head_alpha": jf.head_alpha,
            "head_beta": jf.head_beta, "alpha": jf.alpha, "beta": jf.beta}, None


def _moment(a, s):
    sol = cauchy_rfunc.solve_moment_problem(s, a.nodes)
    out = {"feasible": sol.feasible, "n": sol.n, "k_negative_nodes": sol.k_negative_nodes,
           "node_polynomial": sol.node_polynomial, "reason": sol.reason}
    if sol.weight_function is not None:
        out["weight_numerator"] = sol.weight_function[1]
    return out, None


HANDLERS = {
    "analyze": _analyze, "resultant": _resultant, "discriminant": _discriminant,
    "orlando": _orlando, "cauchy-index": _cauchy, "rfunction": _rfunction, "tnn": _tnn,
    "stieltjes": _stieltjes, "jfraction": _jfraction,
}


def _read(arg: Optional[str], stdin) -> Optional[str]:
    if arg != "-":
        return arg
    while True:
        line = stdin.readline()
        if not line:
            raise ParseError("stdin exhausted")
        if line.strip():
            return line


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        a = build_parser().parse_args(argv)
        if a.cmd == "moment":
            report, M = _moment(a, parse_rationals(_read(a.s, stdin)))
        else:
            p = parse_poly(_read(a.p, stdin))
            qtxt = _read(getattr(a, "q", None), stdin)
            q = None if qtxt is None else parse_poly(qtxt)
            report, M = HANDLERS[a.cmd](a, p, q)
    except ParseError as e:
        print(f"parse error: {e}", file=stderr)
        return 1
    except PreconditionError as e:
        print(f"precondition violated [{type(e).__name__}]: {e}", file=stderr)
        return 2
    print(render(report, a.json, M), file=stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
