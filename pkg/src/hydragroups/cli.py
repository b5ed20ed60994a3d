"""Command line interface: ``hydragroups <command> ...``.

Exit codes: 0 ok, 1 not a member, 2 bad input, 3 budget exceeded,
4 undecided.  With ``--json`` every result is one sorted JSON object on
stdout and every error one JSON line on stderr; big integers are strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .ackermann import ack
from .bounds import K_bound, Psi_bound, ackermann_constants, kappa_bound, psi_bound
from .budget import DEFAULT_MAX_BITS, DEFAULT_MAX_STEPS, BudgetExceeded, EvalBudget
from .distortion import build_oracle, distortion_table, oracle_member, save_oracle, witness_pair, witness_u
from .freewords import reduce
from .group import collect, hword_reduce
from .hydra import NotInDomain, battle, from_runs, hydra_H, phi, strike, to_runs
from .notation import ParseError, format_word, parse, parse_free_word, parse_hword
from .solver import Member, NotInLambda, SolverBudget, solve

EXIT = {"ok": 0, "not_member": 1, "parse_error": 2, "budget_exceeded": 3, "undecided": 4}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Result:
    def __init__(self, status: str, payload: dict, text: str):
        self.status = status
        self.payload = payload
        self.text = text

    @property
    def exit_code(self) -> int:
        return EXIT[self.status]


def _ok(payload: dict, text: str) -> Result:
    return Result("ok", payload, text)


# --- commands --------------------------------------------------------------------


def _battle(args, budget):
    w = parse_free_word(args.word)
    if any(x < 0 for x in w):
        raise ParseError("a hydra is a positive word")
    payload = {}
    lines = []
    if args.words:
        # every intermediate hydra, first to last
        runs, shown = to_runs(w), []
        while runs:
            budget.charge(1, "battle")
            runs = strike(runs)
            shown.append(format_word(from_runs(runs)))
        payload["words"] = shown
        lines += shown
    result = battle(w, budget, want_transcript=args.trace)
    payload["duration"] = str(result.duration)
    lines.insert(0, str(result.duration))
    if args.trace:
        payload["transcript"] = format_word(result.hword(), "x")
        lines.append(payload["transcript"])
    return _ok(payload, "\n".join(lines))


def _value(fn):
    def run(args, budget):
        value = fn(args.k, args.n, budget)
        return _ok({"value": str(value)}, str(value))
    return run


def _nf(args, budget):
    g = collect(parse(args.word), budget)
    return _ok({"v": format_word(g.v), "r": g.r}, str(g))


def _hreduce(args, budget):
    sigma = hword_reduce(parse_hword(args.word))
    text = format_word(sigma, "x")
    return _ok({"word": text, "length": len(sigma)}, text)


def _member(args, budget):
    w = reduce(parse_free_word(args.word))
    answer = solve(args.r, w, SolverBudget(budget, args.max_candidate_s))
    if isinstance(answer, Member):
        sigma = format_word(answer.sigma, "x")
        payload = {"s": str(answer.s), "sigma": sigma, "length": len(answer.sigma)}
        return _ok(payload, f"s = {answer.s}\nsigma = {sigma}")
    if isinstance(answer, NotInLambda):
        return Result("not_member", {"member": False}, "not in any coset H t^s")
    status = "budget_exceeded" if answer.reason == "BudgetExceeded" else "undecided"
    return Result(status, {"reason": answer.reason, "detail": answer.detail},
                  f"undecided: {answer.reason}")


def _witness(args, budget):
    u = witness_u(args.k, args.n, budget)
    payload = {"u": format_word(u, "x"), "u_length": len(u)}
    if args.k >= 2 and args.n >= 1:
        pair = witness_pair(args.k, args.n, budget)
        payload.update(v=pair.v_text(), v_length=pair.v_length, w=pair.w_text(),
                       w_length=len(pair.w), verified=pair.verified)
    text = "\n".join(f"{key}: {payload[key]}" for key in sorted(payload))
    return _ok(payload, text)


def _distortion(args, budget):
    table = distortion_table(args.k, args.n_max, budget)
    if args.format == "csv":
        return _ok({"rows": [[n, d] for n, d in table.rows]}, table.to_csv().rstrip("\n"))
    text = "\n".join(f"{n} {d}" for n, d in table.rows)
    return _ok({"k": args.k, "rows": [[n, d] for n, d in table.rows]}, text)


def _bounds(args, budget):
    d, e, f = ackermann_constants(args.k)
    payload = {
        "kappa": str(kappa_bound(args.k, args.l, args.n, budget)),
        "K": str(K_bound(args.k, args.l, args.p, args.n, budget)),
        "psi": str(psi_bound(args.k, args.l, args.n, budget)),
        "Psi": str(Psi_bound(args.k, args.l, args.p, args.n, budget)),
        "D": str(d), "E": str(e), "F": str(f),
    }
    text = "\n".join(f"{key}: {payload[key]}" for key in sorted(payload))
    return _ok(payload, text)


def _oracle_check(args, budget):
    idx = build_oracle(args.k, args.L, budget)
    if args.save:
        save_oracle(idx, args.save)
    letters = [i for i in range(1, args.k + 1)] + [-i for i in range(1, args.k + 1)]
    words = [()]
    frontier = [()]
    for _ in range(args.max_len):
        frontier = [w + (x,) for w in frontier for x in letters if not w or w[-1] != -x]
        words += frontier
    checked = found = 0
    mismatches = []
    for w in words:
        for r in range(-args.r_max, args.r_max + 1):
            checked += 1
            verdict = oracle_member(idx, r, w)
            answer = solve(r, w, SolverBudget(budget.fresh()))
            found += verdict.found
            if verdict.found and not (isinstance(answer, Member) and answer.s == verdict.s):
                mismatches.append(f"r={r} w={format_word(w)}")
            elif isinstance(answer, Member) and len(answer.sigma) <= idx.L and not verdict.found:
                mismatches.append(f"r={r} w={format_word(w)}")
    payload = {"checked": checked, "oracle_members": found, "mismatches": mismatches}
    text = f"checked {checked} queries, {found} oracle members, {len(mismatches)} mismatches"
    return Result("ok" if not mismatches else "undecided", payload, text)


# --- parsing ------------------------------------------------------------------------


def _global_flags(parser, defaults: bool):
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    parser.add_argument("--max-bits", type=int, default=d(DEFAULT_MAX_BITS))
    parser.add_argument("--max-steps", type=int, default=d(DEFAULT_MAX_STEPS))
    parser.add_argument("--json", action="store_true", default=d(False))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hydragroups", description="Hydra battles and membership in the hydra groups.")
    _global_flags(parser, True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        _global_flags(p, False)
        p.set_defaults(run=fn)
        return p

    p = command("battle", _battle, "fight a hydra and count the strikes")
    p.add_argument("word")
    p.add_argument("--trace", action="store_true", help="print the transcript as an H-word")
    p.add_argument("--words", action="store_true", help="print every intermediate hydra")

    for name, fn, help_text in (("hk", hydra_H, "H_k(n)"), ("phi", phi, "phi_k(n)"),
                                ("ack", ack, "Ackermann A_k(n)")):
        p = command(name, _value(fn), help_text)
        p.add_argument("k", type=int)
        p.add_argument("n", type=int)

    p = command("nf", _nf, "normal form v t^r of a word on a_i, t, x_i")
    p.add_argument("word")
    p = command("hreduce", _hreduce, "freely reduce an H-word")
    p.add_argument("word")

    p = command("member", _member, "decide t^r w in H t^s")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--max-candidate-s", type=int, default=4096)

    p = command("witness", _witness, "u_{k,n} and the distortion witness pair")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)

    p = command("distortion", _distortion, "exact distortion table")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("text", "csv"), default="text")

    p = command("bounds", _bounds, "kappa, K, psi, Psi and the constants D, E, F")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, default=1)

    p = command("oracle-check", _oracle_check, "compare the solver with brute force")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--max-len", type=int, default=3)
    p.add_argument("--r-max", type=int, default=2)
    p.add_argument("--save", help="write the stored ball to this file")
    return parser


def run(argv: Sequence[str]) -> tuple[Result, bool]:
    """Execute a command; returns the result and whether JSON was requested."""
    as_json = "--json" in argv
    try:
        args = build_parser().parse_args(list(argv))
        budget = EvalBudget(args.max_bits, args.max_steps)
        return args.run(args, budget), as_json
    except (UsageError, ParseError, NotInDomain, ValueError) as exc:
        return Result("parse_error", {"error": str(exc)}, f"error: {exc}"), as_json
    except BudgetExceeded as exc:
        payload = {"cap": exc.cap, "limit": exc.limit, "detail": exc.detail}
        return Result("budget_exceeded", payload, f"budget exceeded: {exc}"), as_json
    except RecursionError:
        return Result("budget_exceeded", {"cap": "steps", "detail": "recursion depth"},
                      "budget exceeded: recursion depth"), as_json


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    result, as_json = run(argv)
    stream = sys.stderr if result.status in ("parse_error", "budget_exceeded") else sys.stdout
    if as_json:
        body = dict(result.payload, status=result.status)
        print(json.dumps(body, sort_keys=True), file=stream)
    else:
        print(result.text, file=stream)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
