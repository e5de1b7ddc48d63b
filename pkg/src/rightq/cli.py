"""Command line front end.

Output is line oriented: machine-readable lines are key<TAB>value, and
report files written via --report hold such lines in blank-line
separated blocks.  Exit status 0 means success and every requested
check passed, 1 means some verification failed, 2 means a usage or
parse error.  Setting RIGHTQ_VERBOSE=1 adds progress detail on stderr.
"""

import argparse
import os
import random
import sys
from fractions import Fraction

from .basis_oracle import check_basis_dimension, reducible_pairs
from .expressions import Expression
from .laurent import Laurent
from .macmahon import qmm_check
from .rewrite import (
    DEFAULT_TERM_CAP,
    LEFTMOST,
    RIGHTMOST,
    SYSTEM_S,
    TermCapExceeded,
    check_ambiguity,
    check_confluence_fuzz,
    random_strategy,
    reduce,
    rewrite_at,
    system_by_name,
)
from .textform import ParseError, parse_biword, parse_expression, print_expression
from .weight import check_principle, phi, phi_inv
from .words import Biword


def _verbose() -> bool:
    return os.environ.get("RIGHTQ_VERBOSE", "") not in ("", "0")


def _note(msg: str) -> None:
    if _verbose():
        print(msg, file=sys.stderr)


def _emit(key: str, value) -> None:
    if isinstance(value, bool):
        value = "true" if value else "false"
    print(f"{key}\t{value}")


def _strategy_arg(text: str):
    if text == "leftmost":
        return LEFTMOST
    if text == "rightmost":
        return RIGHTMOST
    if text.startswith("random:"):
        try:
            return random_strategy(int(text.split(":", 1)[1]))
        except ValueError:
            pass
    raise argparse.ArgumentTypeError(
        f"expected leftmost, rightmost or random:<seed>, got {text!r}"
    )


def _q_arg(text: str) -> Fraction:
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc
    if q == 0:
        raise argparse.ArgumentTypeError("q must be nonzero")
    return q


def _cmd_normalize(args) -> int:
    expr = parse_expression(args.expr)
    report = reduce(
        expr,
        system_by_name(args.system),
        args.strategy,
        term_cap=args.term_cap,
    )
    _emit("normal-form", print_expression(report.normal_form))
    _emit("rewrite-steps", report.rewrite_steps)
    _emit("max-intermediate-terms", report.max_intermediate_terms)
    return 0


def _cmd_trace(args) -> int:
    bw = parse_biword(args.biword)
    report = reduce(Expression.single(bw), SYSTEM_S, keep_trace=True)
    for step in report.trace:
        replacement = rewrite_at(step.biword, step.position, SYSTEM_S)
        print(
            f"STEP {step.biword} @ {step.position} -> "
            f"{print_expression(replacement)}"
        )
    _emit("normal-form", print_expression(report.normal_form))
    _emit("rewrite-steps", report.rewrite_steps)
    return 0


def _cmd_stats(args) -> int:
    from .words import imv, inv

    bw = parse_biword(args.biword)
    _emit("inv", inv(bw.top))
    _emit("imv", imv(bw.bottom))
    _emit("inv-", bw.inv_minus())
    _emit("inv+", bw.inv_plus())
    _emit("double-descents", ",".join(map(str, bw.double_descents())))
    _emit("irreducible", bw.is_irreducible())
    _emit("circuit", bw.is_circuit())
    return 0


def _cmd_phi(args) -> int:
    expr = parse_expression(args.expr)
    image = phi_inv(expr) if args.inverse else phi(expr)
    print(print_expression(image))
    return 0


def _cmd_check_ambiguities(args) -> int:
    systems = [args.system] if args.system else ["s", "sq"]
    failures = 0
    checked = 0
    for tag in systems:
        system = system_by_name(tag)
        for a in range(1, 4):
            for b in range(1, a + 1):
                for c in range(1, b + 1):
                    ok = check_ambiguity(3, 2, 1, a, b, c, system)
                    checked += 1
                    if not ok:
                        failures += 1
                    _emit("overlap", f"{tag} 321/{a}{b}{c} {'ok' if ok else 'FAIL'}")
    _emit("checked", checked)
    _emit("failures", failures)
    return 0 if failures == 0 else 1


def _cmd_check_confluence(args) -> int:
    report = check_confluence_fuzz(
        args.r, args.max_len, args.trials, args.seed, system_by_name(args.system)
    )
    _emit("system", report.system)
    _emit("trials", report.trials)
    _emit("counterexamples", len(report.counterexamples))
    for bw in report.counterexamples[:20]:
        _emit("counterexample", bw)
    _emit("ok", report.ok)
    return 0 if report.ok else 1


def _random_biword(rng: random.Random, r: int, max_len: int) -> Biword:
    n = rng.randint(0, max_len)
    return Biword._make(
        tuple(rng.randint(1, r) for _ in range(n)),
        tuple(rng.randint(1, r) for _ in range(n)),
    )


def _random_ideal_member(rng: random.Random, r: int, max_len: int) -> Expression:
    pairs = reducible_pairs(r)
    acc = Expression.zero()
    for _ in range(rng.randint(1, 3)):
        g = pairs[rng.randrange(len(pairs))]
        room = max_len - 2
        left = _random_biword(rng, r, rng.randint(0, room))
        right = _random_biword(rng, r, room - len(left))
        relation = Expression.single(g) - rewrite_at(g, 1, SYSTEM_S)
        wrapped = Expression.single(left).product(relation).product(
            Expression.single(right)
        )
        acc = acc + wrapped.scale(rng.choice((-3, -2, -1, 1, 2, 3)))
    return acc


def _random_expression(rng: random.Random, r: int, max_len: int) -> Expression:
    acc: dict[Biword, Laurent] = {}
    for _ in range(rng.randint(1, 4)):
        bw = _random_biword(rng, r, max_len)
        c = Laurent.q_power(rng.randint(-2, 2), rng.choice((-2, -1, 1, 2)))
        acc[bw] = acc.get(bw, Laurent.integer(0)) + c
    return Expression(acc)


def _cmd_check_principle(args) -> int:
    rng = random.Random(args.seed)
    failures = 0
    for trial in range(args.trials):
        if trial % 2 == 0:
            expr = _random_ideal_member(rng, args.r, 5)
        else:
            expr = _random_expression(rng, args.r, 4)
        if not check_principle(expr):
            failures += 1
        if trial % 50 == 49:
            _note(f"principle: {trial + 1}/{args.trials} trials")
    _emit("trials", args.trials)
    _emit("failures", failures)
    _emit("ok", failures == 0)
    return 0 if failures == 0 else 1


def _write_report(path: str, blocks: list[list[tuple[str, object]]]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for k, block in enumerate(blocks):
            if k:
                handle.write("\n")
            for key, value in block:
                if isinstance(value, bool):
                    value = "true" if value else "false"
                handle.write(f"{key}\t{value}\n")


def _cmd_qmm(args) -> int:
    report = qmm_check(args.r, args.max_degree, args.variant, args.term_cap)
    _emit("r", report.r)
    _emit("max-degree", report.max_degree)
    _emit("system", report.system)
    _emit("variant", report.variant)
    print("degree\tterms\tsteps\tok")
    for row in report.per_degree:
        flag = "true" if row.ok else "false"
        print(
            f"{row.degree}\t{row.term_count_before_reduction}"
            f"\t{row.rewrite_steps}\t{flag}"
        )
        _note(f"degree {row.degree}: {row.rewrite_steps} rewrites")
    _emit("ok", report.ok)
    if args.report:
        blocks = [
            [
                ("r", report.r),
                ("max-degree", report.max_degree),
                ("system", report.system),
                ("variant", report.variant),
                ("ok", report.ok),
            ]
        ]
        for row in report.per_degree:
            blocks.append(
                [
                    ("degree", row.degree),
                    ("term-count", row.term_count_before_reduction),
                    ("rewrite-steps", row.rewrite_steps),
                    ("ok", row.ok),
                    ("normal-form", print_expression(row.normal_form)),
                ]
            )
        _write_report(args.report, blocks)
    return 0 if report.ok else 1


def _cmd_basis(args) -> int:
    q_value = args.q if args.q is not None else "one"
    report = check_basis_dimension(args.r, args.degree, q_value)
    pairs = [
        ("r", report.r),
        ("degree", report.degree),
        ("q", report.q_value),
        ("ambient-dim", report.ambient_dim),
        ("relation-rank", report.relation_rank),
        ("quotient-dim", report.quotient_dim),
        ("irreducible-count", report.irreducible_count),
        ("match", report.match),
    ]
    for key, value in pairs:
        _emit(key, value)
    if args.report:
        _write_report(args.report, [pairs])
    return 0 if report.match else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rightq",
        description="Normal forms, weight transport and identity checks "
        "for biword expressions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="reduce an expression to normal form")
    p.add_argument("--system", choices=["s", "sq"], default="s")
    p.add_argument("--strategy", type=_strategy_arg, default=LEFTMOST)
    p.add_argument("--term-cap", type=int, default=DEFAULT_TERM_CAP)
    p.add_argument("expr")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("trace", help="show each rewrite of one biword")
    p.add_argument("biword")
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("stats", help="print the statistics of one biword")
    p.add_argument("biword")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("phi", help="apply the q-weighting (or its inverse)")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_phi)

    check = sub.add_parser("check", help="verification commands")
    check_sub = check.add_subparsers(dest="check_command", required=True)

    p = check_sub.add_parser(
        "ambiguities", help="resolve all overlaps over letters 1..3 both ways"
    )
    p.add_argument("--system", choices=["s", "sq"])
    p.set_defaults(func=_cmd_check_ambiguities)

    p = check_sub.add_parser(
        "confluence", help="fuzz leftmost vs random rewrite order"
    )
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--system", choices=["s", "sq"], default="s")
    p.set_defaults(func=_cmd_check_confluence)

    p = check_sub.add_parser(
        "principle", help="fuzz ideal-membership transport through phi"
    )
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_check_principle)

    p = sub.add_parser("qmm", help="verify the master identity degreewise")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--variant", choices=["q", "one", "strong"], default="strong")
    p.add_argument("--term-cap", type=int, default=DEFAULT_TERM_CAP)
    p.add_argument("--report")
    p.set_defaults(func=_cmd_qmm)

    p = sub.add_parser("basis", help="dimension oracle for one degree")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--q", type=_q_arg)
    p.add_argument("--report")
    p.set_defaults(func=_cmd_basis)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except TermCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
