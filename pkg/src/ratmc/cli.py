"""Command-line front-end.

Exit codes: 0 query true / success, 1 query false / unsatisfiable,
2 usage or input error, 3 rejection of an undecidable fragment.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .automata import Alphabet, count_words, is_empty, is_equivalent, language_membership
from .checker import CheckContext, global_check, local_check, regex_equiv, sat_check
from .errors import CountingScopeError, RatmcError, UndecidableConstructError
from .logic import parse_formula, parse_regex
from .model import RationalKripkeModel, load_model, validate
from .textio import automaton_dot, format_automaton, load_automaton

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_UNDECIDABLE = 3


def _model_formula(args: argparse.Namespace) -> tuple[RationalKripkeModel, object]:
    m = load_model(args.model)
    f = parse_formula(
        args.formula,
        m.alphabet,
        set(m.relations),
        set(m.valuation),
        set(m.nominals),
    )
    return m, f


def _print_stats(ctx: CheckContext) -> None:
    for entry in ctx.stats:
        line = f"stat {entry.kind} states={entry.states} trans={entry.transitions}"
        if entry.product_transitions is not None:
            line += (
                f" product_states={entry.product_states}"
                f" product_trans={entry.product_transitions}"
            )
        print(line)


def cmd_global(args: argparse.Namespace) -> int:
    m, f = _model_formula(args)
    ctx = CheckContext(m)
    result = global_check(m, f, ctx)
    Path(args.output).write_text(format_automaton(result), encoding="utf-8")
    if args.dot:
        Path(args.dot).write_text(automaton_dot(result), encoding="utf-8")
    print(f"states={result.num_states} transitions={result.num_transitions}")
    if args.stats:
        _print_stats(ctx)
    return EXIT_TRUE


def cmd_local(args: argparse.Namespace) -> int:
    m, f = _model_formula(args)
    state = "" if args.state == "EPS" else args.state
    verdict = local_check(m, state, f)
    print("true" if verdict else "false")
    return EXIT_TRUE if verdict else EXIT_FALSE


def cmd_sat(args: argparse.Namespace) -> int:
    m, f = _model_formula(args)
    satisfiable, witness = sat_check(m, f)
    if satisfiable:
        print(witness if witness != "" else "EPS")
        return EXIT_TRUE
    print("unsat")
    return EXIT_FALSE


def cmd_regex(args: argparse.Namespace) -> int:
    alphabet = Alphabet(tuple(args.alphabet))
    e1 = parse_regex(args.left, alphabet)
    e2 = parse_regex(args.right, alphabet)
    same = regex_equiv(e1, e2, alphabet)
    print("equivalent" if same else "different")
    return EXIT_TRUE if same else EXIT_FALSE


def cmd_validate(args: argparse.Namespace) -> int:
    m = load_model(args.model)
    diagnostics = validate(m)
    if not diagnostics:
        print("ok")
        return EXIT_TRUE
    for d in diagnostics:
        print(d)
    return EXIT_TRUE if all(d.severity == "warning" for d in diagnostics) else EXIT_FALSE


def cmd_lang(args: argparse.Namespace) -> int:
    a = load_automaton(args.automaton)
    if args.query == "empty":
        verdict = is_empty(a)
        print("true" if verdict else "false")
        return EXIT_TRUE if verdict else EXIT_FALSE
    if args.query == "count":
        print(count_words(a))
        return EXIT_TRUE
    if args.query == "equiv":
        b = load_automaton(args.other)
        verdict = is_equivalent(a, b)
        print("true" if verdict else "false")
        return EXIT_TRUE if verdict else EXIT_FALSE
    # member
    word = "" if args.word == "EPS" else args.word
    verdict = language_membership(a, word)
    print("true" if verdict else "false")
    return EXIT_TRUE if verdict else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratmc",
        description="Model checking of tense-logic formulae on automaton-presented "
        "infinite-state transition systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_global = sub.add_parser("global", help="compile a formula's extension automaton")
    p_global.add_argument("-m", "--model", required=True)
    p_global.add_argument("-f", "--formula", required=True)
    p_global.add_argument("-o", "--output", required=True)
    p_global.add_argument("--dot", help="also write a DOT rendering")
    p_global.add_argument("--stats", action="store_true", help="print per-node sizes")
    p_global.set_defaults(func=cmd_global)

    p_local = sub.add_parser("local", help="check a formula at one state")
    p_local.add_argument("-m", "--model", required=True)
    p_local.add_argument("-s", "--state", required=True, help="state word (EPS for the empty word)")
    p_local.add_argument("-f", "--formula", required=True)
    p_local.set_defaults(func=cmd_local)

    p_sat = sub.add_parser("sat", help="check satisfiability in the model")
    p_sat.add_argument("-m", "--model", required=True)
    p_sat.add_argument("-f", "--formula", required=True)
    p_sat.set_defaults(func=cmd_sat)

    p_regex = sub.add_parser("regex", help="decide equivalence of star-free regexes")
    p_regex.add_argument("--alphabet", required=True, help="alphabet symbols, e.g. 01")
    p_regex.add_argument("left")
    p_regex.add_argument("right")
    p_regex.set_defaults(func=cmd_regex)

    p_validate = sub.add_parser("validate", help="load a model and report diagnostics")
    p_validate.add_argument("-m", "--model", required=True)
    p_validate.set_defaults(func=cmd_validate)

    p_lang = sub.add_parser("lang", help="decision procedures on automaton files")
    lang_sub = p_lang.add_subparsers(dest="query", required=True)
    q_empty = lang_sub.add_parser("empty", help="is the language empty?")
    q_empty.add_argument("automaton")
    q_empty.set_defaults(func=cmd_lang)
    q_equiv = lang_sub.add_parser("equiv", help="are two languages equal?")
    q_equiv.add_argument("automaton")
    q_equiv.add_argument("other")
    q_equiv.set_defaults(func=cmd_lang)
    q_count = lang_sub.add_parser("count", help="number of words, or 'infinite'")
    q_count.add_argument("automaton")
    q_count.set_defaults(func=cmd_lang)
    q_member = lang_sub.add_parser("member", help="does the automaton accept the word?")
    q_member.add_argument("automaton")
    q_member.add_argument("word", help="word to test (EPS for the empty word)")
    q_member.set_defaults(func=cmd_lang)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (UndecidableConstructError, CountingScopeError) as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_UNDECIDABLE
    except RatmcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
