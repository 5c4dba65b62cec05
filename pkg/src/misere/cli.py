"""Command-line front end.

Subcommands parse games from the notation grammar, compute outcomes and
canonical forms, compare and distinguish games relative to a universe,
enumerate slices, and run the built-in verification scans.

Exit codes: 0 success, 1 verification found violations, 2 usage error,
3 notation error, 4 domain error (wrong universe, bad precondition),
5 resource cap exceeded.

Default enumeration budgets may be overridden with the environment
variables MISERE_MAX_RANK and MISERE_MAX_OPTIONS; explicit flags win
over the environment, which wins over the built-in defaults (rank 2,
four options per side).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import canonical, core, lab, notation, ordering, outcomes
from .core import DomainError, ResourceError, Universe

ENV_MAX_RANK = "MISERE_MAX_RANK"
ENV_MAX_OPTIONS = "MISERE_MAX_OPTIONS"

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_DOMAIN = 4
EXIT_RESOURCE = 5


def _universe(name: str) -> Universe:
    if name == "dicot":
        return Universe.DICOT
    if name == "dead-ending":
        return Universe.DEAD_ENDING
    raise DomainError("unknown universe %r" % name)


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise DomainError("%s must be an integer, got %r" % (name, raw))


def _resolve_budget(args) -> tuple:
    max_rank = args.max_rank
    if max_rank is None:
        max_rank = _env_int(ENV_MAX_RANK, 2)
    max_options = args.max_options
    if max_options is None:
        max_options = _env_int(ENV_MAX_OPTIONS, 4)
    return max_rank, max_options


def _emit(args, doc: dict, text: str) -> None:
    if args.format == "structured":
        sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text + "\n")


def _game_doc(g) -> dict:
    return {
        "named": notation.print_game(g, "named"),
        "brace": notation.print_game(g, "brace"),
        "tree": notation.to_interchange(g),
    }


def cmd_parse(args) -> int:
    g = notation.parse(args.game)
    _emit(args, _game_doc(g),
          "%s\n%s\n%s" % (notation.print_game(g, "named"),
                          notation.print_game(g, "brace"),
                          json.dumps(notation.to_interchange(g), sort_keys=True)))
    return EXIT_OK


def cmd_outcome(args) -> int:
    g = notation.parse(args.game)
    o = outcomes.normal_outcome(g) if args.normal else outcomes.outcome(g)
    kind = "normal" if args.normal else "misere"
    _emit(args, {"outcome": str(o), "convention": kind}, str(o))
    return EXIT_OK


def cmd_strong_outcome(args) -> int:
    g = notation.parse(args.game)
    left = outcomes.strong_left_outcome(g)
    right = outcomes.strong_right_outcome(g)
    o = outcomes.strong_outcome(g)
    _emit(args, {"strong_outcome": str(o), "left": str(left), "right": str(right)},
          "%s (left %s, right %s)" % (o, left, right))
    return EXIT_OK


def cmd_sum(args) -> int:
    g = core.zero()
    for text in args.game:
        g = core.add(g, notation.parse(text))
    _emit(args, _game_doc(g), notation.print_game(g, "named"))
    return EXIT_OK


def cmd_conj(args) -> int:
    g = core.conjugate(notation.parse(args.game))
    _emit(args, _game_doc(g), notation.print_game(g, "named"))
    return EXIT_OK


def cmd_compare(args) -> int:
    g = notation.parse(args.left)
    h = notation.parse(args.right)
    if args.universe == "normal":
        ge_gh = ordering.ge_normal(g, h)
        ge_hg = ordering.ge_normal(h, g)
    else:
        u = _universe(args.universe)
        ge_gh = ordering.ge(g, h, u)
        ge_hg = ordering.ge(h, g, u)
    if ge_gh and ge_hg:
        rel = "="
    elif ge_gh:
        rel = ">="
    elif ge_hg:
        rel = "<="
    else:
        rel = "incomparable"
    _emit(args, {"relation": rel, "universe": args.universe}, rel)
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = notation.parse(args.game)
    u = _universe(args.universe)
    if args.trace:
        canon, steps = canonical.canonical_form_traced(g, u)
        docs = [canonical.step_to_doc(s) for s in steps]
        text_lines = [notation.print_game(canon, "named")]
        for s in steps:
            text_lines.append("%s [%s]: %s -> %s" % (
                s.rule, s.side,
                notation.print_game(s.before, "named"),
                notation.print_game(s.after, "named")))
        doc = _game_doc(canon)
        doc["trace"] = docs
        _emit(args, doc, "\n".join(text_lines))
    else:
        canon = canonical.canonical_form(g, u)
        _emit(args, _game_doc(canon), notation.print_game(canon, "named"))
    return EXIT_OK


def cmd_distinguish(args) -> int:
    g = notation.parse(args.left)
    h = notation.parse(args.right)
    u = _universe(args.universe)
    max_rank, max_options = _resolve_budget(args)
    verdict = ordering.distinguish(g, h, u, max_rank, max_options)
    doc = {"verdict": verdict.verdict,
           "budget": {"max_rank": max_rank, "max_options": max_options}}
    if verdict.witness is not None:
        doc["witness"] = _game_doc(verdict.witness)
        text = "%s: %s" % (verdict.verdict,
                           notation.print_game(verdict.witness, "named"))
    else:
        text = verdict.verdict
    _emit(args, doc, text)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    u = _universe(args.universe)
    max_rank, max_options = _resolve_budget(args)
    budget = lab.EnumerationBudget(max_rank=max_rank, max_options=max_options,
                                   universe=u)
    if args.census:
        report = lab.census(budget, seed=args.seed)
        _emit(args, report.to_doc(), report.render_text())
        return EXIT_OK if report.ok else EXIT_VIOLATIONS
    games = lab.enumerate_games(budget)
    doc = {"universe": u.value, "count": len(games),
           "games": [notation.print_game(g, "named") for g in games]}
    _emit(args, doc, "\n".join(doc["games"]))
    return EXIT_OK


def cmd_verify(args) -> int:
    target = args.target
    if target == "murders":
        report = lab.scan_murder_theorems()
    elif target == "conjugate":
        report = lab.scan_conjugate_property(_universe(args.universe))
    elif target == "uniqueness":
        u = _universe(args.universe)
        max_rank, max_options = _resolve_budget(args)
        budget = lab.EnumerationBudget(max_rank=max_rank,
                                       max_options=max_options, universe=u)
        report = lab.census(budget, seed=args.seed)
    elif target == "ends":
        report = lab.scan_end_invertibility()
    elif target == "embedding":
        report = lab.scan_normal_embedding(_universe(args.universe))
    else:
        raise DomainError("unknown verification target %r" % target)
    _emit(args, report.to_doc(), report.render_text())
    return EXIT_OK if report.ok else EXIT_VIOLATIONS


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="misere",
        description="Misère game algebra in the dicot and dead-ending universes.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "structured"),
                       default="text",
                       help="structured prints one JSON document on stdout")

    def budgeted(p):
        p.add_argument("--max-rank", type=int, default=None)
        p.add_argument("--max-options", type=int, default=None)

    p = sub.add_parser("parse", help="normalize a game expression")
    p.add_argument("game")
    common(p)
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("outcome", help="misère (default) or normal outcome")
    p.add_argument("game")
    p.add_argument("--normal", action="store_true")
    common(p)
    p.set_defaults(func=cmd_outcome)

    p = sub.add_parser("strong-outcome",
                       help="strong outcome of a dead-ending game")
    p.add_argument("game")
    common(p)
    p.set_defaults(func=cmd_strong_outcome)

    p = sub.add_parser("sum", help="disjunctive sum of the arguments")
    p.add_argument("game", nargs="+")
    common(p)
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("conj", help="conjugate (swap the players)")
    p.add_argument("game")
    common(p)
    p.set_defaults(func=cmd_conj)

    p = sub.add_parser("compare", help="order two games in a universe")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--universe", required=True,
                   choices=("dicot", "dead-ending", "normal"))
    common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("reduce", help="canonical form within a universe")
    p.add_argument("game")
    p.add_argument("--universe", required=True, choices=("dicot", "dead-ending"))
    p.add_argument("--trace", action="store_true",
                   help="also list the rewrite steps")
    common(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("distinguish",
                       help="search for a context separating two games")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--universe", required=True, choices=("dicot", "dead-ending"))
    budgeted(p)
    common(p)
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("enumerate", help="list a slice, or census it")
    p.add_argument("--universe", required=True, choices=("dicot", "dead-ending"))
    p.add_argument("--census", action="store_true")
    p.add_argument("--seed", type=int, default=lab.DEFAULT_SEED)
    budgeted(p)
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a built-in verification scan")
    p.add_argument("target",
                   choices=("murders", "conjugate", "uniqueness", "ends",
                            "embedding"))
    p.add_argument("--universe", default="dead-ending",
                   choices=("dicot", "dead-ending"))
    p.add_argument("--seed", type=int, default=lab.DEFAULT_SEED)
    budgeted(p)
    common(p)
    p.set_defaults(func=cmd_verify)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except notation.ParseError as e:
        sys.stderr.write("notation error: %s\n" % e)
        return EXIT_PARSE
    except notation.InterchangeError as e:
        sys.stderr.write("interchange error: %s\n" % e)
        return EXIT_PARSE
    except DomainError as e:
        sys.stderr.write("domain error: %s\n" % e)
        return EXIT_DOMAIN
    except ResourceError as e:
        sys.stderr.write("resource cap: %s\n" % e)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
