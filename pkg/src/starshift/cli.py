"""Command-line entry point.

Subcommands wire the library into reproducible experiments with stable
file outputs.  Exit codes follow one contract everywhere: 0 means the
run verified, 1 means a verification failed, 2 means a usage or I/O
error.  Identical flags (including seeds) produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

import numpy as np

from . import core_words, full_group, gray_factor, jump_action, subshift, tree_action
from .errors import StarshiftError
from .full_group import Window
from .jump_action import CircularStarredWord, CircularWord

EXPECTED_POWERS = (1, 2, 4, 8)


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _emit_json(path: str | None, payload: dict) -> None:
    _write(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


# ---------------------------------------------------------------- table1


def _table1_csv(rows: list[list[bool]], p_max: int, paper_layout: bool) -> str:
    def cell(v: bool) -> str:
        return "1" if v else "0"

    lines = []
    if paper_layout and p_max >= 10:
        header = ["n\\p"] + [str(p) for p in range(1, 10)] + [f"10-{p_max}"]
        lines.append(",".join(header))
        for n, row in enumerate(rows, start=1):
            tail = row[9:]
            grouped = cell(tail[0]) if len(set(tail)) == 1 else "x"
            lines.append(",".join([str(n)] + [cell(v) for v in row[:9]] + [grouped]))
    else:
        header = ["n\\p"] + [str(p) for p in range(1, p_max + 1)]
        lines.append(",".join(header))
        for n, row in enumerate(rows, start=1):
            lines.append(",".join([str(n)] + [cell(v) for v in row]))
    return "\n".join(lines) + "\n"


def cmd_table1(args: argparse.Namespace) -> int:
    rows = jump_action.table1(args.n_max, args.p_max, args.t)
    _write(args.out, _table1_csv(rows, args.p_max, args.paper_layout))
    expected = [
        [p in EXPECTED_POWERS for p in range(1, args.p_max + 1)]
    ] * args.n_max
    return 0 if rows == expected else 1


# ---------------------------------------------------------------- verify


def _check_recursion(max_n: int, alpha_fn) -> bool:
    word = "a"
    for n in range(1, max_n + 1):
        if n > 1:
            word = word + alpha_fn(n - 1) + word
        ok = (
            word == core_words.build_w(n)
            and len(word) == 2**n - 1
            and word == word[::-1]
            and core_words.is_alternating(word)
            and word[0] == "a"
        )
        if not ok:
            return False
    return True


def _check_conjugacy(max_n: int) -> bool:
    for n in range(1, min(max_n, 14) + 1):
        codes = gray_factor.phi(n).codes
        w = core_words.build_w(n)
        for g in "abcd":
            jumps = jump_action.linear_jump_permutation(w, g)
            trees = tree_action.level_permutation(g, n)
            if not np.array_equal(codes[jumps], trees[codes]):
                return False
    return True


def _check_gray_tables(max_n: int) -> bool:
    for n in range(1, min(max_n, 16) + 1):
        codes = gray_factor.phi(n).codes
        diffs = codes[:-1] ^ codes[1:]
        ok = (
            codes[0] == 2**n - 1
            and codes[-1] == 2**n - 2
            and bool(np.all(diffs != 0))
            and bool(np.all(diffs & (diffs - 1) == 0))
            and bool(np.array_equal(np.sort(codes), np.arange(2**n)))
            and bool(np.array_equal(codes >> 1, (codes >> 1)[::-1]))
        )
        if not ok:
            return False
    return True


def _check_factor_tower(max_n: int) -> bool:
    m = min(max(max_n, 3), 10)
    letters = core_words.build_w(m)
    for origin in range(2**m):
        window = Window(letters, origin)
        values = {}
        for k in range(1, m):
            if window.margin < 2 ** (k + 2):
                break
            values[k] = gray_factor.psi(k, window)
            if gray_factor.psi(k, full_group.reverse_window(window)) != values[k]:
                return False
        for k in sorted(values)[:-1]:
            if not values[k + 1].startswith(values[k]):
                return False
    return True


def _check_language_equivalence(max_n: int) -> bool:
    longest = min(2**max_n - 1, 63)
    for length in range(longest + 1):
        n = 1
        while 2**n - 1 < length:
            n += 1
        host = core_words.build_w(n + 3)
        from_host = {host[i : i + length] for i in range(len(host) - length + 1)}
        from_pairs = set()
        w = core_words.build_w(n)
        for alpha in "BCD":
            double = w + alpha + w
            from_pairs.update(
                double[i : i + length] for i in range(len(double) - length + 1)
            )
        deep = core_words.build_w(min(n + 6, 16))
        from_deep = {deep[i : i + length] for i in range(len(deep) - length + 1)}
        if not (from_host == from_pairs == from_deep):
            return False
    return True


def _check_minimality(max_n: int) -> bool:
    for n in range(1, min(max_n, 6) + 1):
        w = core_words.build_w(n)
        for u in core_words.language_words(2 ** (n + 1) - 1):
            if w not in u:
                return False
    return True


def cmd_verify(args: argparse.Namespace) -> int:
    alpha_fn = core_words.alpha_choice
    if args.inject_alpha_bug:
        alpha_fn = lambda n: "BDC"[(n + 1) % 3]  # negative control
    checks = [
        ("w-recursion", lambda: _check_recursion(args.max_n, alpha_fn)),
        ("conjugacy", lambda: _check_conjugacy(args.max_n)),
        ("gray-tables", lambda: _check_gray_tables(args.max_n)),
        ("factor-tower", lambda: _check_factor_tower(args.max_n)),
        ("language-equivalence", lambda: _check_language_equivalence(args.max_n)),
        ("minimality", lambda: _check_minimality(args.max_n)),
    ]
    lines = []
    all_ok = True
    for name, run in checks:
        ok = run()
        all_ok &= ok
        lines.append(f"{name:16s} {'PASS' if ok else 'FAIL'}")
    _write(args.out, "\n".join(lines) + "\n")
    return 0 if all_ok else 1


# ---------------------------------------------------------------- schreier


def cmd_schreier(args: argparse.Namespace) -> int:
    if args.circular:
        ring = core_words.build_w(args.n) + core_words.alpha_choice(args.n)
        word = CircularWord(ring * args.p)
        vertices = [CircularStarredWord(word, s) for s in range(len(word))]
        if args.require_action:
            for relator in jump_action.relation_set(args.t):
                if not jump_action.relator_fixes_all_starrings(relator, word):
                    sys.stderr.write(
                        f"action not well-defined: relator {relator} moves a starring\n"
                    )
                    return 1
    else:
        vertices = jump_action.orbit_of_starrings(core_words.build_w(args.n))
    graph = full_group.schreier_graph(vertices)
    _write(args.out, graph.to_dot() if args.format == "dot" else graph.to_json())
    return 0


# ------------------------------------------------------------ pseudo-orbit


def cmd_pseudo_orbit(args: argparse.Namespace) -> int:
    report = subshift.pseudo_orbit_demo(args.n, t=args.t)
    _emit_json(args.out, report.to_dict())
    return 0 if report.all_passed else 1


# ------------------------------------------------------------- stabilizer


def cmd_stabilizer(args: argparse.Namespace) -> int:
    letters = core_words.build_w(args.source_n)
    reach = 2 * args.budget + 8
    if len(letters) < 2 * reach + 1:
        sys.stderr.write("source word too short for the requested budget\n")
        return 2
    rng = random.Random(args.seed)
    origin = rng.randrange(reach, len(letters) - reach)
    hidden = Window(letters, origin)
    oracle = full_group.window_stabilizer_oracle(hidden)
    recovered = full_group.reconstruct_from_stabilizer(oracle, args.budget)
    rightward = letters[origin : origin + args.budget]
    leftward = letters[origin - args.budget : origin][::-1]
    orientation = "right" if recovered == rightward else (
        "left" if recovered == leftward else "mismatch"
    )
    _emit_json(
        args.out,
        {
            "seed": args.seed,
            "budget": args.budget,
            "source_n": args.source_n,
            "origin": origin,
            "recovered": recovered,
            "orientation": orientation,
            "verified": orientation != "mismatch",
        },
    )
    return 0 if orientation != "mismatch" else 1


# -------------------------------------------------------------------- sft


def cmd_sft(args: argparse.Namespace) -> int:
    if args.demo == "union-demo":
        x1 = subshift.ZSft.from_forbidden("01", ["11"])  # no two adjacent ones
        x2 = subshift.ZSft.from_forbidden("01", ["0"])  # the all-ones point
        union = subshift.union_sft(x1, x2)
        horizon = 2 * union.order
        agree = all(
            union.words(n) == (x1.words(n) | x2.words(n)) for n in range(horizon + 1)
        )
        if args.points_out is not None:
            _write(
                args.points_out,
                subshift.periodic_points_jsonl(union, range(1, horizon + 1)),
            )
        _emit_json(
            args.out,
            {
                "demo": "union",
                "separation_order": union.order - 1,
                "order": union.order,
                "forbidden": list(union.forbidden),
                "checked_up_to": horizon,
                "languages_equal": agree,
            },
        )
        return 0 if agree else 1
    tile = subshift.WangTile("T", "x", "x")
    comb = subshift.comb_sft([tile], args.k)
    points = {p: subshift.periodic_points(comb, p) for p in range(1, 4 * args.k + 1)}
    counts = {p: len(ws) for p, ws in points.items()}
    if args.points_out is not None:
        _write(args.points_out, subshift.periodic_points_jsonl(comb, sorted(points)))

    def single_phase(word: str) -> bool:
        residues = {i % args.k for i, c in enumerate(word + word) if c != subshift.BLANK}
        return len(residues) == 1

    phase_ok = all(single_phase(w) for ws in points.values() for w in ws)
    expected = all(
        (counts[p] > 0) == (p % args.k == 0) for p in range(1, 4 * args.k + 1)
    )
    _emit_json(
        args.out,
        {
            "demo": "comb",
            "k": args.k,
            "alphabet": list(comb.alphabet),
            "order": comb.order,
            "periodic_point_counts": {str(p): c for p, c in counts.items()},
            "single_phase": phase_ok,
            "periods_multiples_of_k": expected,
        },
    )
    return 0 if phase_ok and expected else 1


# ------------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starshift",
        description="Starred-word actions, their tree factor, and SFT experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table1", help="relator survival table for circular words")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--p-max", type=int, default=50)
    p.add_argument("--t", type=int, default=6)
    p.add_argument("--paper-layout", action="store_true",
                   help="group columns 10..p-max into one")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("verify", help="run the invariant checks")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--inject-alpha-bug", action="store_true",
                   help=argparse.SUPPRESS)  # negative control for tests
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("schreier", help="export an orbit graph")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--circular", action="store_true")
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--t", type=int, default=6)
    p.add_argument("--require-action", action="store_true",
                   help="fail unless the relators fix every circular starring")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_schreier)

    p = sub.add_parser("pseudo-orbit", help="periodic pseudo-point checks")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--t", type=int, default=6)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_pseudo_orbit)

    p = sub.add_parser("stabilizer", help="reconstruct a hidden window from its stabilizer")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=32)
    p.add_argument("--source-n", type=int, default=14)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_stabilizer)

    p = sub.add_parser("sft", help="union and comb construction demos")
    p.add_argument("demo", choices=("union-demo", "comb-demo"))
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--points-out", default=None,
                   help="also write a periodic-point report as JSON lines")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sft)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StarshiftError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
