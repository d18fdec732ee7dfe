"""Command-line front end: compute characters, render diagrams, emit the
theta polynomials, run the verification suites, export JSON or LaTeX.

Exit codes: 0 success, 2 invalid input, 3 truncation instability,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from .capgraph import gamma, theta, theta_tilde
from .caps import cap_diagram, projective_family, render_caps, segment_data
from .charring import (
    CharPoly,
    TruncationInstability,
    Window,
    alt_J,
    auto_depth,
    chi_plus_rho_exponent,
    dhat_denominator,
    dimension_eval,
    irreducible_char,
    kac_char,
    supersymmetry_check,
)
from .oracle import OracleInstability, oracle_char, orthogonality_report
from .weights import (
    ABPair,
    HighestWeight,
    WeightDiagram,
    ab_from_diagram,
    build_diagram,
    diagram_of_weight,
    weight_from_diagram,
)

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_INSTABILITY = 3
EXIT_VERIFY_FAILED = 4


class InputError(Exception):
    pass


def _parse_int_list(text: str, expected: int, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError as exc:
        raise InputError(f"{what} must be a comma-separated integer list: {exc}")
    if len(values) != expected:
        raise InputError(f"{what} must have exactly {expected} entries, got {len(values)}")
    return values


def _weight_from_args(args) -> HighestWeight:
    if args.ab:
        try:
            a_text, b_text = args.ab.split(":")
            a = tuple(int(t) for t in a_text.split(","))
            b = tuple(int(t) for t in b_text.split(","))
        except ValueError as exc:
            raise InputError(f"--ab must look like 'a1,a2:b1,b2': {exc}")
        try:
            diagram = build_diagram(ABPair(tuple(sorted(a, reverse=True)),
                                           tuple(sorted(b))))
        except ValueError as exc:
            raise InputError(str(exc))
        return weight_from_diagram(diagram)
    if args.m is None or args.n is None:
        raise InputError("provide --m and --n (with --lambda/--mu) or --ab")
    if args.m < 1 or args.n < 1:
        raise InputError("--m and --n must be positive")
    lam = _parse_int_list(args.lam, args.m, "--lambda")
    mu = _parse_int_list(args.mu, args.n, "--mu")
    try:
        return HighestWeight(args.m, args.n, lam, mu)
    except ValueError as exc:
        raise InputError(str(exc))


def _coeff_str(c) -> str:
    return str(Fraction(c))


def _char_json_terms(p: CharPoly) -> list[dict]:
    m = p.m
    return [{"eps": list(v[:m]), "delta": list(v[m:]), "coeff": _coeff_str(c)}
            for v, c in p.sorted_terms()]


def _char_text(p: CharPoly) -> str:
    if p.is_zero():
        return "0"
    m = p.m
    chunks = []
    for v, c in p.sorted_terms():
        mono = []
        for i, e in enumerate(v[:m]):
            if e:
                mono.append(f"x{i + 1}^{e}")
        for j, e in enumerate(v[m:]):
            if e:
                mono.append(f"y{j + 1}^{e}")
        body = " ".join(mono) if mono else "1"
        coeff = Fraction(c)
        if coeff == 1 and mono:
            chunks.append(body)
        elif coeff == -1 and mono:
            chunks.append(f"-{body}")
        elif not mono:
            chunks.append(str(coeff))
        else:
            chunks.append(f"{coeff} {body}")
    return " + ".join(chunks).replace("+ -", "- ")


def _theta_json(th) -> dict:
    return {
        "variables": th.r,
        "terms": [{"exponents": list(e), "coeff": _coeff_str(c)}
                  for e, c in th.sorted_terms()],
    }


def _frac_latex(c: Fraction) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    return f"{sign}\\tfrac{{{abs(c.numerator)}}}{{{c.denominator}}}"


def _theta_numerator_latex(th, shift=None) -> str:
    """theta(-e^{alpha}) expanded in the e^{-alpha_i} basis."""
    parts = []
    for exps, coeff in th.sorted_terms():
        c = Fraction(coeff) * (-1 if sum(exps) % 2 else 1)
        factors = []
        for i, e in enumerate(exps):
            if e:
                k = "-" if e == -1 else ("" if e == 1 else str(e))
                factors.append(f"e^{{{k}\\alpha_{{{i + 1}}}}}")
        body = "".join(factors)
        if not body:
            term = _frac_latex(c)
        elif abs(c) == 1:
            term = ("-" if c < 0 else "") + body
        else:
            term = _frac_latex(c) + body
        if parts and not term.startswith("-"):
            parts.append("+" + term)
        else:
            parts.append(term)
    return "".join(parts) if parts else "0"


def _char_latex(chi: HighestWeight, variant: str) -> str:
    f = diagram_of_weight(chi)
    forest = gamma(cap_diagram(f))
    r = len(f.crosses)
    denom = "".join(f"(1+e^{{-\\alpha_{{{i + 1}}}}})" for i in range(r)) or "1"
    if variant == "classic":
        th = theta(forest)
        numer = _theta_numerator_latex(th)
        return (f"D\\,\\mathrm{{ch}}\\,L(\\chi)=\\sum_{{w\\in W_0}}\\varepsilon(w)w"
                f"\\left(e^{{\\chi+\\rho}}\\,\\frac{{{numer}}}{{{denom}}}\\right)")
    th, nu, shift = theta_tilde(forest, segment_data(f))
    numer = _theta_numerator_latex(th)
    gamma_parts = [f"{'' if k == 1 else k}\\alpha_{{{i + 1}}}"
                   for i, k in enumerate(shift) if k]
    gamma_tex = "+" + "+".join(gamma_parts) if gamma_parts else ""
    sign = "-" if nu % 2 else ""
    return (f"D\\,\\mathrm{{ch}}\\,L(\\chi)={sign}J\\left(e^{{\\chi+\\rho{gamma_tex}}}\\,"
            f"\\frac{{{numer}}}{{{denom}}}\\right)")


def cmd_char(args) -> int:
    chi = _weight_from_args(args)
    depth = "auto" if args.depth == "auto" else int(args.depth)
    try:
        ch = irreducible_char(chi, variant=args.variant, depth=depth)
    except TruncationInstability as exc:
        print(f"error: {exc} (retry with --depth {exc.suggested_depth})",
              file=sys.stderr)
        return EXIT_INSTABILITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    f = diagram_of_weight(chi)
    th = theta(gamma(cap_diagram(f)))
    if args.format == "json":
        payload = {
            "m": chi.m, "n": chi.n,
            "lambda": list(chi.lam), "mu": list(chi.mu),
            "variant": args.variant,
            "depth": auto_depth(chi) if depth == "auto" else depth,
            "dimension": dimension_eval(ch),
            "monomials": _char_json_terms(ch),
            "theta": _theta_json(th),
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "latex":
        print(_char_latex(chi, args.variant))
    else:
        print(f"ch L(chi) for gl({chi.m}|{chi.n}), lambda={list(chi.lam)}, "
              f"mu={list(chi.mu)} [{args.variant}]")
        print(_char_text(ch))
        print(f"dimension: {dimension_eval(ch)}")
    return EXIT_OK


def cmd_kac(args) -> int:
    chi = _weight_from_args(args)
    f = diagram_of_weight(chi)
    k = kac_char(f)
    if args.format == "json":
        payload = {
            "m": chi.m, "n": chi.n,
            "lambda": list(chi.lam), "mu": list(chi.mu),
            "dimension": dimension_eval(k),
            "monomials": _char_json_terms(k),
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(_char_text(k))
        print(f"dimension: {dimension_eval(k)}")
    return EXIT_OK


def _diagram_json(f: WeightDiagram) -> dict:
    cf = cap_diagram(f)
    forest = gamma(cf)
    sd = segment_data(f)
    return {
        "symbols": {str(p): s for p, s in f.symbols.items()},
        "crosses": list(f.crosses),
        "caps": {str(c): cf.cap_end[c] for c in cf.crosses},
        "edges": sorted(list(e) for e in forest.edges),
        "segments": [list(s) for s in sd.segments],
        "atypicality": len(f.crosses),
        "components": forest.component_count(),
    }


def cmd_diagram(args) -> int:
    chi = _weight_from_args(args)
    f = diagram_of_weight(chi)
    if args.format == "json":
        print(json.dumps(_diagram_json(f), indent=2, sort_keys=True))
    else:
        ab = ab_from_diagram(f)
        print(f"A = {list(ab.A)}  B = {list(ab.B)}")
        print(render_caps(f))
        forest = gamma(cap_diagram(f))
        edges = ", ".join(f"{i}->{j}" for i, j in sorted(forest.edges)) or "(none)"
        print(f"forest edges (vertex indices): {edges}")
    return EXIT_OK


def cmd_theta(args) -> int:
    chi = _weight_from_args(args)
    f = diagram_of_weight(chi)
    forest = gamma(cap_diagram(f))
    if args.variant == "reduced":
        th, nu, shift = theta_tilde(forest, segment_data(f))
    else:
        th, nu, shift = theta(forest), None, None
    if args.format == "json":
        payload = _theta_json(th)
        if nu is not None:
            payload["nu"] = nu
            payload["gamma"] = list(shift)
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "latex":
        print(_theta_numerator_latex(th))
        if nu is not None:
            print(f"% nu = {nu}, gamma coefficients = {list(shift)}")
    else:
        print(str(th))
        if nu is not None:
            print(f"nu = {nu}, gamma coefficients = {list(shift)}")
    return EXIT_OK


def cmd_proj(args) -> int:
    chi = _weight_from_args(args)
    f = diagram_of_weight(chi)
    members = sorted(projective_family(f),
                     key=lambda d: tuple(sorted(d.symbols.items())))
    if args.format == "json":
        print(json.dumps([{str(p): s for p, s in d.symbols.items()}
                          for d in members], indent=2, sort_keys=True))
    else:
        print(f"{len(members)} diagrams in the projective family:")
        for d in members:
            ab = ab_from_diagram(d)
            print(f"  A = {list(ab.A)}  B = {list(ab.B)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification suites

def _grid(m: int, n: int, lo: int, hi: int):
    from itertools import product

    for lam in product(range(hi, lo - 1, -1), repeat=m):
        if any(lam[i] < lam[i + 1] for i in range(m - 1)):
            continue
        for mu in product(range(hi, lo - 1, -1), repeat=n):
            if any(mu[j] < mu[j + 1] for j in range(n - 1)):
                continue
            yield HighestWeight(m, n, lam, mu)


def _suite_kac() -> dict:
    checked = 0
    for (m, n) in [(1, 1), (2, 1), (2, 2)]:
        num, den = dhat_denominator(m, n)
        for chi in _grid(m, n, -2, 2):
            f = diagram_of_weight(chi)
            lhs = num * kac_char(f)
            rhs = alt_J(CharPoly.monomial(m, n, chi_plus_rho_exponent(chi))) * den
            if lhs != rhs:
                return {"ok": False, "checked": checked,
                        "failure": f"lambda={chi.lam} mu={chi.mu}"}
            checked += 1
    return {"ok": True, "checked": checked}


def _suite_oracle(cutoff: int | None = None) -> dict:
    checked = 0
    for (m, n) in [(1, 1), (2, 1), (2, 2)]:
        for chi in _grid(m, n, -2, 2):
            f = diagram_of_weight(chi)
            ch = irreducible_char(chi)
            window = Window.hull(ch, margin=1)
            per_weight = cutoff
            if per_weight is not None and f.crosses:
                per_weight = min(per_weight, min(f.crosses))
            if oracle_char(f, window, cutoff=per_weight) != ch:
                return {"ok": False, "checked": checked,
                        "failure": f"lambda={chi.lam} mu={chi.mu}"}
            checked += 1
    return {"ok": True, "checked": checked}


def _suite_variants() -> dict:
    checked = 0
    for (m, n) in [(1, 1), (2, 1), (2, 2)]:
        for chi in _grid(m, n, -2, 2):
            if irreducible_char(chi) != irreducible_char(chi, variant="reduced"):
                return {"ok": False, "checked": checked,
                        "failure": f"lambda={chi.lam} mu={chi.mu}"}
            checked += 1
    return {"ok": True, "checked": checked}


def _suite_orthogonality() -> dict:
    reports = []
    for (window, m, n, r_max) in [((0, 5), 1, 1, 1), ((0, 6), 2, 2, 2)]:
        rep = orthogonality_report(window, m, n, r_max)
        reports.append({"window": list(window), "m": m, "n": n,
                        "interior_rows": rep.interior_rows, "ok": rep.ok})
        if not rep.ok:
            return {"ok": False, "reports": reports}
    return {"ok": True, "reports": reports}


def _suite_supersymmetry() -> dict:
    checked = 0
    for (m, n) in [(1, 1), (2, 1), (2, 2)]:
        for chi in _grid(m, n, -2, 2):
            f = diagram_of_weight(chi)
            for p in (kac_char(f, check=False), irreducible_char(chi)):
                if not supersymmetry_check(p):
                    return {"ok": False, "checked": checked,
                            "failure": f"lambda={chi.lam} mu={chi.mu}"}
            checked += 1
    return {"ok": True, "checked": checked}


def _suite_theta_mult() -> dict:
    import random

    from .capgraph import embed_disjoint
    from .weights import CROSS

    rng = random.Random(20240817)
    checked = 0
    for _ in range(25):
        crosses1 = _random_crosses(rng)
        crosses2 = _random_crosses(rng)
        f1 = WeightDiagram({c: CROSS for c in crosses1})
        f2 = WeightDiagram({c: CROSS for c in crosses2})
        g1 = gamma(cap_diagram(f1))
        g2 = gamma(cap_diagram(f2))
        th1, th2 = theta(g1), theta(g2)
        combined = theta(embed_disjoint(g1, g2))
        product = {}
        for e1, c1 in th1.terms.items():
            for e2, c2 in th2.terms.items():
                key = e1 + e2
                product[key] = product.get(key, 0) + c1 * c2
        if {k: v for k, v in product.items() if v} != combined.terms:
            return {"ok": False, "checked": checked,
                    "failure": f"{crosses1} vs {crosses2}"}
        checked += 1
    return {"ok": True, "checked": checked}


def _random_crosses(rng) -> tuple[int, ...]:
    size = rng.randint(1, 3)
    out = set()
    while len(out) < size:
        out.add(rng.randint(0, 6))
    return tuple(sorted(out))


SUITES = {
    "kac": _suite_kac,
    "oracle": _suite_oracle,
    "variants": _suite_variants,
    "orthogonality": _suite_orthogonality,
    "supersymmetry": _suite_supersymmetry,
    "theta-mult": _suite_theta_mult,
}


def cmd_verify(args) -> int:
    names = [args.only] if args.only else list(SUITES)
    for name in names:
        if name not in SUITES:
            print(f"error: unknown suite {name!r}; choose from {sorted(SUITES)}",
                  file=sys.stderr)
            return EXIT_BAD_INPUT
    report = {}
    all_ok = True
    for name in names:
        start = time.monotonic()
        try:
            if name == "oracle" and args.cutoff is not None:
                result = SUITES[name](cutoff=args.cutoff)
            else:
                result = SUITES[name]()
        except (OracleInstability, TruncationInstability) as exc:
            result = {"ok": False, "failure": str(exc)}
        result["seconds"] = round(time.monotonic() - start, 3)
        report[name] = result
        all_ok = all_ok and result["ok"]
    if args.format == "json":
        print(json.dumps({"ok": all_ok, "suites": report},
                         indent=2, sort_keys=True))
    else:
        for name in names:
            res = report[name]
            status = "PASS" if res["ok"] else "FAIL"
            extra = {k: v for k, v in res.items() if k != "ok"}
            print(f"{name:16s} {status}  {extra}")
        print("verification:", "PASS" if all_ok else "FAIL")
    return EXIT_OK if all_ok else EXIT_VERIFY_FAILED


def _thread_cap() -> int:
    raw = os.environ.get("SUPERCHAR_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"SUPERCHAR_THREADS must be an integer, got {raw!r}")
    if cap < 1:
        raise InputError("SUPERCHAR_THREADS must be at least 1")
    return cap


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superchar",
        description="Exact characters of irreducible gl(m|n) modules")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_weight_flags(p):
        p.add_argument("--m", type=int, default=None)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--lambda", dest="lam", default="")
        p.add_argument("--mu", dest="mu", default="")
        p.add_argument("--ab", default="",
                       help="shifted label sets, e.g. '3,1,0:0,1,3'")
        p.add_argument("--format", choices=["text", "json", "latex"],
                       default="text")

    p_char = sub.add_parser("char", help="irreducible character")
    add_weight_flags(p_char)
    p_char.add_argument("--variant", choices=["classic", "reduced"],
                        default="classic")
    p_char.add_argument("--depth", default="auto")
    p_char.set_defaults(func=cmd_char)

    p_kac = sub.add_parser("kac", help="Kac module character")
    add_weight_flags(p_kac)
    p_kac.set_defaults(func=cmd_kac)

    p_diag = sub.add_parser("diagram", help="weight diagram, caps, forest")
    add_weight_flags(p_diag)
    p_diag.set_defaults(func=cmd_diagram)

    p_theta = sub.add_parser("theta", help="theta polynomial of the forest")
    add_weight_flags(p_theta)
    p_theta.add_argument("--variant", choices=["classic", "reduced"],
                         default="classic")
    p_theta.set_defaults(func=cmd_theta)

    p_proj = sub.add_parser("proj", help="projective family of the diagram")
    add_weight_flags(p_proj)
    p_proj.set_defaults(func=cmd_proj)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--only", default=None,
                          help=f"run one suite: {sorted(SUITES)}")
    p_verify.add_argument("--cutoff", type=int, default=None,
                          help="override enumeration cutoffs (advanced)")
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.set_defaults(func=cmd_verify)

    return parser


_VALUE_FLAGS = ("--lambda", "--mu", "--ab", "--depth", "--cutoff")


def _join_negative_values(argv: list[str]) -> list[str]:
    """Glue '--mu -2,-2,-3' into '--mu=-2,-2,-3' so argparse does not read the
    leading minus as an option."""
    out = []
    skip = False
    for k, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok in _VALUE_FLAGS and k + 1 < len(argv) and argv[k + 1].startswith("-"):
            out.append(f"{tok}={argv[k + 1]}")
            skip = True
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_negative_values(
        list(sys.argv[1:] if argv is None else argv)))
    try:
        _thread_cap()
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except OracleInstability as exc:
        print(f"error: {exc} (suggested cutoff {exc.suggested_cutoff})",
              file=sys.stderr)
        return EXIT_INSTABILITY
    except TruncationInstability as exc:
        print(f"error: {exc} (retry with --depth {exc.suggested_depth})",
              file=sys.stderr)
        return EXIT_INSTABILITY


if __name__ == "__main__":
    sys.exit(main())
