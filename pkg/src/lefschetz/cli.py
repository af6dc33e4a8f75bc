"""Command-line interface.

Exit codes: 0 when the property holds or the command succeeded, 1 when it
fails or a check reports a mismatch, 2 for usage and input errors.  Human
output goes to stdout; with ``--json`` stdout carries only the JSON report,
and ``--report FILE`` writes the same report to a file.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import GradedAlgebra
from .betti import betti_bounds, eliahou_kervaire_table, koszul_betti_table
from .cilab import (
    CIDegrees,
    apolar_algebra,
    ci_fuzz,
    hessian,
    jumping_line_ci,
    predicted_IplusL_table,
    predicted_splitting_type,
    random_linear_form,
    restrict_mod_linear,
    syzygy_splitting_type,
)
from .construction import build_construction, level_ideals, plan_construction, verify_construction
from .examples_suite import CHECKS, run_examples
from .hilbert import format_lambda_poly, is_o_sequence, wlp_admissible
from .ideals import IdealSpan, MonomialIdeal, lex_segment_ideal
from .lefschetz import DEFAULT_COEFF_BOUND, DEFAULT_TRIALS, check_lefschetz
from .parser import ParseError, format_ideal_text, parse_hf, parse_polynomial, read_ideal_file
from .polynomial import Polynomial
from .ring import Ring

SCHEMA = "lefschetz-report/1"


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    exit_code: int
    summary: str
    detail: dict = field(default_factory=dict)
    json_path: str | None = None
    as_json: bool = False

    def payload(self) -> dict:
        return {"schema": SCHEMA, "exit_code": self.exit_code, "summary": self.summary, **self.detail}


def _load_ideal(path: str, characteristic: int | None = None) -> IdealSpan:
    ring, gens = read_ideal_file(path)
    if characteristic is not None and characteristic != ring.characteristic:
        ring = ring.with_characteristic(characteristic)
        gens = [Polynomial(ring, {m: ring.field.coerce(c) for m, c in g.terms.items()}) for g in gens]
    return IdealSpan(ring, gens)


def _algebra(args) -> GradedAlgebra:
    if not args.ideal:
        raise UsageError("--ideal FILE is required")
    return GradedAlgebra(_load_ideal(args.ideal, args.char))


def _hf(args) -> tuple[int, ...]:
    if not args.hf:
        raise UsageError("--hf LIST is required")
    return parse_hf(args.hf)


def _num_vars(args, h) -> int:
    if args.n is not None:
        return args.n
    return h[1] if len(h) > 1 else 1


def _write_out(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)


# commands ---------------------------------------------------------------------------


def cmd_hilbert(args) -> CommandResult:
    if args.check:
        h = parse_hf(args.check)
        N = _num_vars(args, h)
        verdict = wlp_admissible(h, N)
        detail = {"h": list(h), "num_vars": N, "o_sequence": is_o_sequence(h), "admissible": verdict.admissible,
                  "reason": verdict.reason}
        if verdict.profile is not None:
            detail["profile"] = verdict.profile.to_json()
        word = "admissible for WLP" if verdict else f"not admissible: {verdict.reason}"
        return CommandResult(0 if verdict else 1, f"{','.join(map(str, h))}: {word}", detail)
    A = _algebra(args)
    return CommandResult(0, "hf = " + ",".join(map(str, A.hf)), {"hf": list(A.hf)})


def cmd_lex(args) -> CommandResult:
    h = _hf(args)
    N = _num_vars(args, h)
    ring = Ring(N, args.char)
    J = lex_segment_ideal(h, ring)
    text = format_ideal_text(ring, J.polynomials(), comment=f"lex-segment ideal for h = {','.join(map(str, h))}")
    _write_out(args.out, text)
    return CommandResult(0, text.rstrip("\n"), {"h": list(h), "generators": [str(g) for g in J.polynomials()]})


def cmd_construct(args) -> CommandResult:
    h = _hf(args)
    mode = {"slp": "slp_lex", "basic": "basic"}[args.mode]
    lex_plan = plan_construction(h, args.n, "slp_lex", args.char)
    plan = lex_plan if mode == "slp_lex" else plan_construction(
        h, args.n, "basic", args.char, bar_ideals=level_ideals(lex_plan) or None
    )
    A = build_construction(plan)
    report = verify_construction(A, h, mode=mode, strict=False)
    text = format_ideal_text(A.ring, A.ideal.gens, comment=f"construction for h = {','.join(map(str, h))} ({mode})")
    _write_out(args.out, text)
    lines = [f"{name}: {'pass' if c['passed'] else 'FAIL'}{'' if c['required'] else ' (recorded)'}"
             for name, c in report.checks.items()]
    detail = {"plan": plan.to_json(), "report": report.to_json(), "ideal_file": text}
    return CommandResult(0 if report.passed else 1, "\n".join(lines), detail)


def _lefschetz(args, strong: bool) -> CommandResult:
    A = _algebra(args)
    v = check_lefschetz(A, strong=strong, trials=args.trials, coeff_bound=args.coeff_bound, seed=args.seed)
    detail = {"hf": list(A.hf), "verdict": v.to_json(), "seed": args.seed}
    return CommandResult(0 if v.holds else 1, v.summary(), detail)


def cmd_wlp(args) -> CommandResult:
    return _lefschetz(args, strong=False)


def cmd_slp(args) -> CommandResult:
    return _lefschetz(args, strong=True)


def cmd_socle(args) -> CommandResult:
    A = _algebra(args)
    socle = A.socle_type()
    detail = {"hf": list(A.hf), "socle_type": list(socle),
              "basis": {i: [str(A.element(i, v)) for v in vs] for i, vs in A.socle().items() if vs}}
    text = f"socle type {format_lambda_poly(socle)}"
    verdict = wlp_admissible(A.hf, A.ring.num_vars)
    if verdict:
        detail["max_socle"] = list(verdict.profile.phi)
        text += f"; largest allowed with WLP {verdict.profile.phi_string()}"
    return CommandResult(0, text, detail)


def cmd_betti(args) -> CommandResult:
    A = _algebra(args)
    if args.method == "ek":
        ideal = A.ideal
        if not ideal.is_monomial:
            raise UsageError("the Eliahou-Kervaire method needs a monomial ideal")
        table = eliahou_kervaire_table(MonomialIdeal(A.ring, [next(iter(g.terms)) for g in ideal.gens]))
    else:
        table = koszul_betti_table(A)
    return CommandResult(0, table.diagram(), {"hf": list(A.hf), "method": args.method, "betti": table.to_json()})


def cmd_bounds(args) -> CommandResult:
    h = _hf(args)
    N = _num_vars(args, h)
    table = betti_bounds(h, Ring(N, args.char))
    return CommandResult(0, table.diagram(), {"h": list(h), "num_vars": N, "bounds": table.to_json()})


def cmd_ci(args) -> CommandResult:
    degs = [int(x) for x in args.degs.split(",")] if args.degs else None
    if args.action == "fuzz":
        report = ci_fuzz(args.trials, seed=args.seed, degs=degs, max_degree=args.max_degree,
                         characteristic=args.char, coeff_bound=args.coeff_bound, slp=args.slp, jobs=args.jobs)
        lines = [f"{report['count']} trials, WLP found in {report['wlp_holds']}, {len(report['findings'])} finding(s)"]
        lines += [f"  [{f['seed']}] {tuple(f['degrees'])}: {f['finding']}" for f in report["findings"]]
        return CommandResult(0 if report["passed"] else 1, "\n".join(lines), report)
    if args.action == "predict":
        if degs is None:
            raise UsageError("ci predict needs --degs")
        D = CIDegrees.of(degs)
        table = predicted_IplusL_table(D)
        detail = {"degrees": list(D.as_tuple()), "mu_bar": 3 if D.mu_bar_is_three else 2,
                  "IplusL_betti": table.to_json()}
        text = [f"mu(Ibar) = {detail['mu_bar']}"]
        if D.d3 < D.d1 + D.d2 + 1:
            detail["splitting_type"] = list(predicted_splitting_type(D).as_tuple())
            text.append(f"splitting type {tuple(detail['splitting_type'])}")
        text.append(table.diagram())
        return CommandResult(0, "\n".join(text), detail)

    rng = random.Random(f"{args.seed}:jumping")
    J = jumping_line_ci(rng)
    special = [syzygy_splitting_type(list(restrict_mod_linear(J.ideal, L).gens)) for L in J.lines]
    L = random_linear_form(J.ideal.ring, rng)
    general = syzygy_splitting_type(list(restrict_mod_linear(J.ideal, L).gens))
    ok = all(t.e1 >= -5 for t in special) and general.as_tuple() == (-6, -6)
    lines = [f"line {L0}: splitting type {t.as_tuple()}" for L0, t in zip(J.lines, special)]
    lines.append(f"general line {L}: splitting type {general.as_tuple()}")
    detail = {"seed": args.seed, "retries": J.retries, "ideal_file": format_ideal_text(J.ideal.ring, J.ideal.gens),
              "special": [{"line": str(a), "type": list(t.as_tuple())} for a, t in zip(J.lines, special)],
              "general": {"line": str(L), "type": list(general.as_tuple())}}
    return CommandResult(0 if ok else 1, "\n".join(lines), detail)


def cmd_apolar(args) -> CommandResult:
    names = args.vars.split(",")
    ring = Ring(len(names), 0, names)
    F = parse_polynomial(args.form, ring)
    A = apolar_algebra(F)
    w = check_lefschetz(A, strong=False, trials=args.trials, coeff_bound=args.coeff_bound, seed=args.seed)
    s = check_lefschetz(A, strong=True, trials=args.trials, coeff_bound=args.coeff_bound, seed=args.seed)
    H = hessian(F)
    detail = {"form": str(F), "hf": list(A.hf), "socle_type": list(A.socle_type()), "wlp": w.to_json(),
              "slp": s.to_json(), "hessian_vanishes": not H,
              "ideal_file": format_ideal_text(ring, A.ideal.gens, comment=f"Ann({F})")}
    text = "\n".join([f"hf = {','.join(map(str, A.hf))}", w.summary(), s.summary(),
                      f"Hessian {'vanishes identically' if not H else 'is nonzero'}"])
    _write_out(args.out, detail["ideal_file"])
    return CommandResult(0 if s.holds else 1, text, detail)


def cmd_examples(args) -> CommandResult:
    if args.list:
        return CommandResult(0, "\n".join(CHECKS), {"examples": list(CHECKS)})
    names = args.names or ["all"]
    try:
        report = run_examples(names)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    lines = [f"{'PASS' if d['passed'] else 'FAIL'}  {name}  ({d['seconds']:.2f}s)" for name, d in report["results"].items()]
    return CommandResult(0 if report["passed"] else 1, "\n".join(lines), report)


# parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ideal", metavar="FILE", help="ideal file")
    common.add_argument("--hf", metavar="LIST", help="Hilbert function as a comma list")
    common.add_argument("--n", type=int, help="number of variables")
    common.add_argument("--char", type=int, default=None, metavar="P", help="characteristic (0 or a prime)")
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS, metavar="T")
    common.add_argument("--coeff-bound", type=int, default=DEFAULT_COEFF_BOUND, metavar="B")
    common.add_argument("--seed", default="0", metavar="S")
    common.add_argument("--jobs", type=int, default=1, metavar="J")
    common.add_argument("--report", metavar="FILE", help="write the JSON report here")
    common.add_argument("--json", action="store_true", help="print only the JSON report")
    common.add_argument("--out", metavar="FILE", help="write the resulting ideal file here")

    parser = argparse.ArgumentParser(prog="lefschetz", description="Lefschetz properties of Artinian algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert function of an ideal, or check a sequence")
    p.add_argument("--check", metavar="LIST", help="check admissibility of a Hilbert function for WLP")
    p.set_defaults(func=cmd_hilbert)

    sub.add_parser("lex", parents=[common], help="lex-segment ideal for --hf").set_defaults(func=cmd_lex)

    p = sub.add_parser("construct", parents=[common], help="extremal algebra for --hf")
    p.add_argument("--mode", choices=["slp", "basic"], default="slp")
    p.set_defaults(func=cmd_construct)

    sub.add_parser("wlp", parents=[common], help="Weak Lefschetz check").set_defaults(func=cmd_wlp)
    sub.add_parser("slp", parents=[common], help="Strong Lefschetz check").set_defaults(func=cmd_slp)
    sub.add_parser("socle", parents=[common], help="socle type").set_defaults(func=cmd_socle)

    p = sub.add_parser("betti", parents=[common], help="graded Betti table")
    p.add_argument("--method", choices=["koszul", "ek"], default="koszul")
    p.set_defaults(func=cmd_betti)

    sub.add_parser("bounds", parents=[common], help="Betti bounds for algebras with WLP").set_defaults(func=cmd_bounds)

    p = sub.add_parser("ci", parents=[common], help="complete intersection experiments")
    p.add_argument("action", choices=["fuzz", "predict", "jumping"])
    p.add_argument("--degs", metavar="D1,D2,D3")
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--slp", action="store_true", help="also record SLP outcomes")
    p.set_defaults(func=cmd_ci)

    p = sub.add_parser("apolar", parents=[common], help="algebra apolar to a form")
    p.add_argument("--form", required=True)
    p.add_argument("--vars", required=True, help="comma-separated variable names")
    p.set_defaults(func=cmd_apolar)

    p = sub.add_parser("examples", parents=[common], help="reproduce the worked examples")
    p.add_argument("names", nargs="*", help="'all' or example keys")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_examples)
    return parser


def dispatch(argv: list[str] | None = None) -> CommandResult:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.char is None and not args.ideal:
        args.char = 0
    try:
        result = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        result = CommandResult(2, f"error: {exc}")
    except (ParseError, ValueError, OSError, ArithmeticError) as exc:
        result = CommandResult(2, f"error: {exc}")
    result.json_path = args.report
    result.as_json = args.json
    return result


def main(argv: list[str] | None = None) -> int:
    try:
        result = dispatch(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if result.exit_code == 2:
        print(result.summary, file=sys.stderr)
        return 2
    text = json.dumps(result.payload(), indent=2, default=str)
    print(text if result.as_json else result.summary)
    if result.json_path:
        Path(result.json_path).write_text(text + "\n")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
