"""Command line entry point.

Exit codes: 0 success, 1 rejected (not an automorphism, or a failed
verification), 2 parse or format error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from ..jung import NotAutomorphism, decompose, invert, verify, word_to_pair
from ..newton import ZeroPolynomial, directions, hull, st_en
from ..poly import bracket
from ..witness import random_tame_word
from .documents import (
    FormatError,
    dumps,
    loads,
    pair_from_doc,
    pair_to_doc,
    word_from_doc,
    word_to_doc,
)
from .parse import ParseError, parse_poly
from .svg import polygon_svg

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_FORMAT = 2
EXIT_IO = 3


class _Reject(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _load_pair(path: str):
    return pair_from_doc(loads(_read(path)))


def _load_word(path: str):
    return word_from_doc(loads(_read(path)))


def cmd_decompose(args) -> int:
    word = decompose(_load_pair(args.pair))
    _write(args.word_out, dumps(word_to_doc(word)))
    return EXIT_OK


def cmd_verify(args) -> int:
    pair = _load_pair(args.pair)
    word = _load_word(args.word)
    if verify(word, pair):
        print("true")
        return EXIT_OK
    print("false")
    raise _Reject("Mismatch: the word does not compose to the pair")


def cmd_invert(args) -> int:
    _write(args.out, dumps(pair_to_doc(invert(_load_pair(args.pair)))))
    return EXIT_OK


def cmd_compose(args) -> int:
    _write(args.out, dumps(pair_to_doc(word_to_pair(_load_word(args.word)))))
    return EXIT_OK


def polygon_report(P) -> dict:
    report = {
        "poly": str(P),
        "vertices": [list(v) for v in hull(P).vertices],
        "directions": [list(d) for d in directions(P)],
        "corners": [],
    }
    for d in directions(P):
        st, en = st_en(d, P)
        report["corners"].append({"direction": list(d), "st": list(st), "en": list(en)})
    return report


def cmd_polygon(args) -> int:
    P = parse_poly(args.poly)
    report = polygon_report(P)
    if args.svg:
        _write(args.svg, polygon_svg(P))
    if args.json or not args.svg:
        sys.stdout.write(json.dumps(report) + "\n")
    return EXIT_OK


def cmd_random(args) -> int:
    word = random_tame_word(args.seed, args.moves, args.max_deg, args.coeff_bound)
    _write(args.out, dumps(word_to_doc(word)))
    return EXIT_OK


def cmd_bracket(args) -> int:
    P, Q = _load_pair(args.pair)
    print(bracket(P, Q))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tamepoly",
        description="Decompose automorphisms of Q[x,y] into elementary and linear moves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="write a pair as a tame word")
    p.add_argument("--pair", required=True, help="pair document, '-' for stdin")
    p.add_argument("--word-out", help="output file (default stdout)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check that a word composes to a pair")
    p.add_argument("--pair", required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("invert", help="inverse automorphism of a pair")
    p.add_argument("--pair", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("compose", help="pair denoted by a word")
    p.add_argument("--word", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("polygon", help="Newton polygon, edge directions and corners")
    p.add_argument("--poly", required=True, help='polynomial text, e.g. "(y+x^2)^2 + x"')
    p.add_argument("--json", action="store_true", help="print the JSON report (default)")
    p.add_argument("--svg", help="also draw the polygon to this SVG file")
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("random", help="seeded random tame word")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--moves", type=int, required=True)
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--coeff-bound", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("bracket", help="print the Jacobian [P, Q]")
    p.add_argument("--pair", required=True)
    p.set_defaults(func=cmd_bracket)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_FORMAT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except NotAutomorphism as exc:
        print(exc.reason.value, file=sys.stderr)
        if exc.detail:
            print(exc.detail, file=sys.stderr)
        return EXIT_REJECT
    except _Reject as exc:
        print(exc, file=sys.stderr)
        return EXIT_REJECT
    except (ParseError, FormatError, ZeroPolynomial, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
