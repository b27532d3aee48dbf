"""JSON documents for pairs and words.

Pair: ``{"P": "<poly>", "Q": "<poly>"}``.
Word: ``{"moves": [{"kind": "elem_y", "p": "<poly in x>"},
{"kind": "elem_x", "q": "<poly in y>"},
{"kind": "linear", "a": "1", "b": "-3/2", "c": "0", "d": "1"}]}``.
Rationals travel as strings.
"""

from __future__ import annotations

import json
from fractions import Fraction

from ..jung import AutoPair, ElemX, ElemY, Linear
from ..poly import format_rational
from .parse import ParseError, parse_poly

__all__ = [
    "FormatError",
    "pair_from_doc",
    "pair_to_doc",
    "word_from_doc",
    "word_to_doc",
    "loads",
    "dumps",
]


class FormatError(ValueError):
    """A document is well-formed JSON but does not follow the schema."""


def _field(doc, name: str):
    if not isinstance(doc, dict) or name not in doc:
        raise FormatError(f"missing field {name!r}")
    return doc[name]


def _poly_field(doc, name: str):
    text = _field(doc, name)
    if not isinstance(text, str):
        raise FormatError(f"field {name!r} must be polynomial text")
    return parse_poly(text)


def _rational_field(doc, name: str):
    value = _field(doc, name)
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise FormatError(f"field {name!r} must be a rational string")
    try:
        return Fraction(value) if isinstance(value, int) else Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"field {name!r}: bad rational {value!r}") from None


def pair_from_doc(doc) -> AutoPair:
    return AutoPair(_poly_field(doc, "P"), _poly_field(doc, "Q"))


def pair_to_doc(pair) -> dict:
    P, Q = pair
    return {"P": str(P), "Q": str(Q)}


def _move_from_record(rec):
    kind = _field(rec, "kind")
    try:
        if kind == "elem_y":
            return ElemY(_poly_field(rec, "p"))
        if kind == "elem_x":
            return ElemX(_poly_field(rec, "q"))
        if kind == "linear":
            m = Linear(*(_rational_field(rec, k) for k in "abcd"))
            if not m.det:
                raise FormatError("linear move with zero determinant")
            return m
    except (ParseError, FormatError):
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    raise FormatError(f"unknown move kind {kind!r}")


def _move_to_record(m) -> dict:
    if isinstance(m, ElemY):
        return {"kind": "elem_y", "p": str(m.p)}
    if isinstance(m, ElemX):
        return {"kind": "elem_x", "q": str(m.q)}
    return {"kind": "linear", **{k: format_rational(getattr(m, k)) for k in "abcd"}}


def word_from_doc(doc) -> list:
    moves = _field(doc, "moves")
    if not isinstance(moves, list):
        raise FormatError("'moves' must be a list")
    return [_move_from_record(rec) for rec in moves]


def word_to_doc(word) -> dict:
    return {"moves": [_move_to_record(m) for m in word]}


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"
