"""Command-line front end.

Exit codes: 0 success, 2 bad input (parse errors, contract violations,
size guards), 3 verification failure (an internal cross-check did not
hold).  All randomness flows from --seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import codes as code_families
from .codes import (
    CosetState,
    GeneratorFormatError,
    LinearCode,
    format_generator,
    load_generator_file,
)
from .entanglement import analyze, css_basis_report, j_of_code
from .statevec import build_coset_state, build_state, injective_norm_numeric
from .verify import derived_seed, run_suite

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VERIFY = 3


class InputError(Exception):
    pass


def _add_code_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", choices=sorted(code_families.FAMILIES), help="built-in code family")
    parser.add_argument("--file", type=Path, help="generator-matrix file")
    parser.add_argument("--n", type=int, help="code length (repetition/full/zero/even_weight/random)")
    parser.add_argument("--k", type=int, help="code dimension (random family)")
    parser.add_argument("--L", type=int, help="torus side (toric family)")


def resolve_code(args: argparse.Namespace) -> LinearCode:
    if (args.family is None) == (args.file is None):
        raise InputError("exactly one of --family or --file is required")
    if args.file is not None:
        try:
            return load_generator_file(args.file)
        except FileNotFoundError:
            raise InputError(f"no such file: {args.file}")
        except GeneratorFormatError as exc:
            raise InputError(f"{args.file}: {exc}")
    try:
        if args.family == "hamming_7_4":
            return code_families.hamming_7_4()
        if args.family == "toric":
            if args.L is None:
                raise InputError("--L is required for the toric family")
            return code_families.toric_x_code(args.L)
        if args.family == "random":
            if args.n is None or args.k is None:
                raise InputError("--n and --k are required for the random family")
            return code_families.random_code(args.n, args.k, args.seed)
        if args.n is None:
            raise InputError(f"--n is required for the {args.family} family")
        return code_families.FAMILIES[args.family](args.n)
    except ValueError as exc:
        raise InputError(str(exc))


def cmd_info(args: argparse.Namespace) -> int:
    c = resolve_code(args)
    if args.json:
        doc = {
            "n": c.length,
            "k": c.dimension,
            "rate": float(f"{c.rate:.12g}"),
            "generator": c.generator.to_strings(),
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"n = {c.length}")
        print(f"k = {c.dimension}")
        print(f"rate = {c.rate:.6g}")
        print("generator (rref):")
        for row in c.generator.to_strings():
            print(f"  {row}")
        if not c.generator.rows:
            print("  (zero code: no generator rows)")
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    c = resolve_code(args)
    try:
        report = analyze(c, with_oracles=args.oracle)
    except ValueError as exc:  # size-guard violations
        raise InputError(str(exc))
    except AssertionError as exc:
        print(f"VERIFICATION FAILURE: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    doc = report.to_json_dict()
    doc["n"] = c.length
    if args.numeric:
        if c.length > 20:
            raise InputError("--numeric requires n <= 20")
        numeric = injective_norm_numeric(
            build_state(c), restarts=args.restarts, seed=derived_seed(args.seed, "analyze")
        )
        doc["numeric_norm"] = float(f"{numeric.value:.12g}")
        doc["numeric_gap"] = float(f"{abs(numeric.value - report.injective_norm):.12g}")
        doc["numeric_converged"] = numeric.converged
        if numeric.value > report.injective_norm + 1e-6:
            print(
                "VERIFICATION FAILURE: numeric lower bound exceeds the closed form",
                file=sys.stderr,
            )
            return EXIT_VERIFY
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(f"n = {doc['n']}, k = {doc['k']}, j = {doc['j']}, delta = {doc['delta']}")
        print(f"injective norm          = {report.injective_norm:.12g}")
        print(f"geometric entanglement  = {report.geometric_entanglement:.12g}")
        print(f"Groverian distance      = {report.groverian:.12g}")
        print(f"witness partition A     = {sorted(report.witness_partition)}")
        print(f"witness shortened supp  = {sorted(report.witness_shortened_support)}")
        if args.numeric:
            print(f"numeric estimate        = {doc['numeric_norm']:.12g} (gap {doc['numeric_gap']:.3g})")
        if args.oracle:
            print("oracles: j = brute-force j = brute-force delta (checked)")
    return EXIT_OK


def cmd_css(args: argparse.Namespace) -> int:
    try:
        c1 = load_generator_file(args.c1)
        c2 = load_generator_file(args.c2)
    except FileNotFoundError as exc:
        raise InputError(str(exc))
    except GeneratorFormatError as exc:
        raise InputError(str(exc))
    try:
        report = css_basis_report(c1, c2, with_oracles=args.oracle)
    except ValueError as exc:
        raise InputError(str(exc))
    doc = report.to_json_dict()
    doc["n"] = c1.length
    doc["basis_states"] = 1 << (c1.dimension - c2.dimension)
    if args.enumerate_cosets:
        if c1.length > 14:
            raise InputError("--enumerate-cosets requires n <= 14")
        representatives = sorted({CosetState.of(c2, w).shift for w in c1.codewords()})
        checked = []
        for word in representatives:
            value = injective_norm_numeric(
                build_coset_state(word, c2),
                restarts=args.restarts,
                seed=derived_seed(args.seed, f"css:{word}"),
            ).value
            checked.append(value)
            if abs(value - report.injective_norm) > 1e-4:
                print(
                    f"VERIFICATION FAILURE: coset {word:0{c1.length}b} numeric norm "
                    f"{value} vs formula {report.injective_norm}",
                    file=sys.stderr,
                )
                return EXIT_VERIFY
        doc["cosets_checked"] = len(checked)
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(
            f"CSS(C1, C2): n = {doc['n']}, dim C1 = {c1.dimension}, "
            f"dim C2 = {c2.dimension}, basis states = {doc['basis_states']}"
        )
        print(f"common basis-state injective norm = {report.injective_norm:.12g}")
        print(f"geometric entanglement            = {report.geometric_entanglement:.12g}")
        if args.enumerate_cosets:
            print(f"numerically verified on {doc['cosets_checked']} cosets")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results, rows = run_suite(
        max_n=args.max_n,
        random_codes=args.random_codes,
        seed=args.seed,
        restarts=args.restarts,
        j_offset=1 if args.inject_j_mutant else 0,
    )
    width = max(len(r.label) for r in results)
    for r in results:
        status = "pass" if r.passed else "FAIL"
        print(f"{r.label:<{width}}  {status}  {r.detail.splitlines()[0]}")
    failures = [r for r in results if not r.passed]
    if args.report_dir is not None:
        from .report import write_report

        for path in write_report(results, rows, args.report_dir):
            print(f"wrote {path}")
    if failures:
        for r in failures:
            print(f"\n--- {r.label} ---\n{r.detail}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    c = resolve_code(args)
    text = format_generator(c, comment=f"family={args.family or args.file}")
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="code-ent",
        description="Exact geometric entanglement of binary linear / CSS code states.",
    )
    seed_parent = argparse.ArgumentParser(add_help=False)
    seed_parent.add_argument("--seed", type=int, default=0, help="master seed for all randomness")
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", parents=[seed_parent], help="print n, k, rate and the rref generator")
    _add_code_source(p_info)
    p_info.add_argument("--json", action="store_true")
    p_info.set_defaults(func=cmd_info)

    p_analyze = sub.add_parser("analyze", parents=[seed_parent], help="closed-form entanglement report")
    _add_code_source(p_analyze)
    p_analyze.add_argument("--oracle", action="store_true", help="cross-check with brute force (n <= 20)")
    p_analyze.add_argument("--numeric", action="store_true", help="add the tensor-optimization estimate")
    p_analyze.add_argument("--restarts", type=int, default=100)
    p_analyze.add_argument("--json", action="store_true")
    p_analyze.set_defaults(func=cmd_analyze)

    p_css = sub.add_parser("css", parents=[seed_parent], help="common norm of all CSS(C1, C2) basis states")
    p_css.add_argument("--c1", type=Path, required=True, help="generator file for C1")
    p_css.add_argument("--c2", type=Path, required=True, help="generator file for C2")
    p_css.add_argument("--oracle", action="store_true")
    p_css.add_argument("--enumerate-cosets", action="store_true", help="verify each coset numerically")
    p_css.add_argument("--restarts", type=int, default=50)
    p_css.add_argument("--json", action="store_true")
    p_css.set_defaults(func=cmd_css)

    p_verify = sub.add_parser("verify", parents=[seed_parent], help="run the full self-verification suite")
    p_verify.add_argument("--max-n", type=int, default=8)
    p_verify.add_argument("--random-codes", type=int, default=50)
    p_verify.add_argument("--restarts", type=int, default=60)
    p_verify.add_argument("--report-dir", type=Path, help="write CSV tables and figures here")
    p_verify.add_argument("--inject-j-mutant", action="store_true", help=argparse.SUPPRESS)
    p_verify.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("gen", parents=[seed_parent], help="write a built-in family generator matrix")
    _add_code_source(p_gen)
    p_gen.add_argument("--out", type=Path, help="output file (default stdout)")
    p_gen.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except IndexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
