#!/usr/bin/env python3
"""
weyl-cli.py

Evaluate expressions and run structure checks in the Weyl algebra A_1 and
its hom-associative deformations A_1^k.

Usage:
    python weyl-cli.py eval --k 1 "x * y"
    python weyl-cli.py comm --k 1 "x" "y^2"
    python weyl-cli.py assoc --k 2 "y.x" "y.x" "y.x"
    python weyl-cli.py check-derivation --k 1 --c 3 --p "x^2"
    python weyl-cli.py check-morphism --k 1 --l 2 --fx "2 x + 1" --fy "1/2 y + x^2"
    python weyl-cli.py deform-check --order 6 --triple "x;y;x" [--jacobi]
    python weyl-cli.py verify [--suite commuter center ...] [--seed S] [--bound N] [--json]

"." is the associative product, "*" the star product of A_1^k and "a *^ n"
the left-normed star power. k and l are rationals such as 1/2.
"""

import argparse
import json
import os
import sys

from dotenv import load_dotenv

# Settings in .env must be in the environment before homweyl.config is imported
load_dotenv()

# Add the repository root to the path so we can import the homweyl library
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from homweyl.algebra import AlgebraCtx, parse_scalar, star_associator, star_commutator
from homweyl.config import DEFORMATION_ORDER
from homweyl.deformation import (
    constant_series,
    hom_assoc_defect_t,
    hom_jacobi_defect_t,
)
from homweyl.expr import eval_text, evaluate, format_expr, format_poly, parse, poly_to_json
from homweyl.morphisms import DerivationSpec, GenMorphism, apply_derivation, check_morphism, is_derivation
from homweyl.verdict import Verdict
from homweyl.verifier import SUITES, SuiteConfig, run_suites

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_INPUT = 2


def rational(text):
    """argparse type for rational literals such as 3, -2 or 1/2"""
    try:
        return parse_scalar(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def print_verdict(verdict: Verdict, indent: str = "") -> None:
    """Print a verdict as PASS/FAIL with its witness and notes"""
    if verdict.passed:
        print(f"{indent}PASS")
    else:
        clause = f" (clause {verdict.clause})" if verdict.clause else ""
        print(f"{indent}FAIL{clause}")
        witness = verdict.witness
        for name, value in witness.inputs.items():
            print(f"{indent}  {name} = {value}")
        print(f"{indent}  expected: {witness.expected}")
        print(f"{indent}  actual:   {witness.actual}")
    for note in verdict.notes:
        print(f"{indent}  - {note}")


# Commands ----------------------------------------------------------------------------

def cmd_eval(args) -> int:
    ctx = AlgebraCtx(args.k)
    tree = parse(args.expr)
    print(f"{format_expr(tree)} in A_1^{ctx.k}", file=sys.stderr)
    p = evaluate(ctx, tree)
    if args.json:
        print(json.dumps(poly_to_json(p)))
    else:
        print(format_poly(p))
    return EXIT_OK


def cmd_comm(args) -> int:
    ctx = AlgebraCtx(args.k)
    p, q = (eval_text(ctx, e) for e in (args.expr1, args.expr2))
    print(format_poly(star_commutator(ctx, p, q)))
    return EXIT_OK


def cmd_assoc(args) -> int:
    ctx = AlgebraCtx(args.k)
    a, b, c = (eval_text(ctx, e) for e in (args.expr1, args.expr2, args.expr3))
    print(format_poly(star_associator(ctx, a, b, c)))
    return EXIT_OK


def cmd_check_derivation(args) -> int:
    ctx = AlgebraCtx(args.k)
    d = DerivationSpec(ctx, args.c, eval_text(ctx, args.p))
    print(f"[{format_poly(d.generator)}, .] on A_1^{ctx.k}, bound {args.bound}", file=sys.stderr)
    verdict = is_derivation(ctx, lambda a: apply_derivation(d, a), args.bound)
    print_verdict(verdict)
    return EXIT_OK if verdict.passed else EXIT_FAILED


def cmd_check_morphism(args) -> int:
    target = AlgebraCtx(args.l)
    m = GenMorphism(args.k, args.l, eval_text(target, args.fx), eval_text(target, args.fy))
    print(f"A_1^{m.source_k} -> A_1^{m.target_l}: x -> {format_poly(m.fx)}, y -> {format_poly(m.fy)}",
          file=sys.stderr)
    verdict = check_morphism(m, args.bound)
    print_verdict(verdict)
    return EXIT_OK if verdict.passed else EXIT_FAILED


def cmd_deform_check(args) -> int:
    parts = args.triple.split(';')
    if len(parts) != 3:
        raise ValueError(f"--triple needs three expressions separated by ';', got {len(parts)}")
    # "*" inside the triple is the undeformed product; t carries the deformation
    a, b, c = (constant_series(eval_text(AlgebraCtx(0), e), args.order) for e in parts)
    if args.jacobi:
        label, defect = "hom-Jacobi", hom_jacobi_defect_t(a, b, c)
    else:
        label, defect = "hom-associativity", hom_assoc_defect_t(a, b, c)
    print(f"{label} through t^{args.order}", file=sys.stderr)
    for n, coefficient in enumerate(defect.coeffs):
        if coefficient:
            print(f"t^{n}: FAIL {format_poly(coefficient)}")
        else:
            print(f"t^{n}: PASS")
    return EXIT_OK if defect.is_zero() else EXIT_FAILED


def cmd_verify(args) -> int:
    overrides = {}
    if args.seed is not None:
        overrides['rng_seed'] = args.seed
    if args.bound is not None:
        overrides['degree_bound'] = args.bound
    if args.trials is not None:
        overrides['trials'] = args.trials
    cfg = SuiteConfig.from_defaults(**overrides)

    print(f"⇢ Running {', '.join(args.suite or SUITES)} ...", file=sys.stderr)
    verdicts = run_suites(args.suite, cfg)
    if not args.json:
        for verdict in verdicts:
            marker = "✓" if verdict.passed else "✗"
            print(f"{marker} {verdict.suite_name}")
            print_verdict(verdict, indent="    ")

    passed = sum(1 for v in verdicts if v.passed)
    if args.json:
        print(json.dumps({
            'seed': cfg.rng_seed,
            'degree_bound': cfg.degree_bound,
            'passed': passed == len(verdicts),
            'suites': [v.to_dict() for v in verdicts],
        }, indent=2))
    else:
        print()
        print("=" * 60)
        print("VERIFICATION SUMMARY")
        print("=" * 60)
        print(f"Seed: {cfg.rng_seed}  Degree bound: {cfg.degree_bound}  Trials: {cfg.trials}")
        print(f"Suites passed: {passed}/{len(verdicts)}")
        failed = [v.suite_name for v in verdicts if not v.passed]
        if failed:
            print(f"Failed: {', '.join(failed)}")
    return EXIT_OK if passed == len(verdicts) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='weyl-cli.py',
        description="Exact arithmetic and structure checks for A_1 and its hom-associative deformations",
    )
    commands = parser.add_subparsers(dest='command', required=True)

    p = commands.add_parser('eval', help="evaluate an expression in A_1^k")
    p.add_argument('--k', type=rational, default=parse_scalar('0'))
    p.add_argument('--json', action='store_true', help="print the terms as JSON")
    p.add_argument('expr')
    p.set_defaults(handler=cmd_eval)

    p = commands.add_parser('comm', help="star commutator [e1, e2]_*")
    p.add_argument('--k', type=rational, default=parse_scalar('0'))
    p.add_argument('expr1')
    p.add_argument('expr2')
    p.set_defaults(handler=cmd_comm)

    p = commands.add_parser('assoc', help="star associator (e1, e2, e3)_*")
    p.add_argument('--k', type=rational, default=parse_scalar('0'))
    p.add_argument('expr1')
    p.add_argument('expr2')
    p.add_argument('expr3')
    p.set_defaults(handler=cmd_assoc)

    p = commands.add_parser('check-derivation', help="probe [c y + p(x), .] for the Leibniz rule")
    p.add_argument('--k', type=rational, required=True)
    p.add_argument('--c', type=rational, required=True)
    p.add_argument('--p', required=True, help="polynomial in x")
    p.add_argument('--bound', type=int, default=4)
    p.set_defaults(handler=cmd_check_derivation)

    p = commands.add_parser('check-morphism', help="check generator images of a morphism A_1^k -> A_1^l")
    p.add_argument('--k', type=rational, required=True)
    p.add_argument('--l', type=rational, required=True)
    p.add_argument('--fx', required=True)
    p.add_argument('--fy', required=True)
    p.add_argument('--bound', type=int, default=3)
    p.set_defaults(handler=cmd_check_morphism)

    p = commands.add_parser('deform-check', help="coefficientwise check of the t-deformation")
    p.add_argument('--order', type=int, default=DEFORMATION_ORDER)
    p.add_argument('--triple', required=True, help='"e1;e2;e3"')
    p.add_argument('--jacobi', action='store_true', help="check hom-Jacobi instead of hom-associativity")
    p.set_defaults(handler=cmd_deform_check)

    p = commands.add_parser('verify', help="run verification suites")
    p.add_argument('--suite', nargs='+', metavar='NAME', help=f"any of: {', '.join(SUITES)}")
    p.add_argument('--seed', type=int)
    p.add_argument('--bound', type=int)
    p.add_argument('--trials', type=int)
    p.add_argument('--json', action='store_true')
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as e:
        print(f"✗ {e}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    exit(main())
