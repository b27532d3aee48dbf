"""Exact sparse polynomials in Q[x, y].

Coefficients are :class:`fractions.Fraction` values, except that integral
coefficients are stored as plain ``int`` (they compare and hash equal to the
corresponding ``Fraction``).  That keeps the common integer case fast without
changing any observable result.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from types import MappingProxyType
from typing import Iterable, Mapping, Union

import numpy as np

try:
    from gmpy2 import mpz as _bigint
except ImportError:  # pragma: no cover
    _bigint = int

__all__ = [
    "Rational",
    "Coeff",
    "Monomial",
    "BiPoly",
    "NEG_INF",
    "as_rational",
    "format_rational",
    "add",
    "mul",
    "substitute",
    "partial",
    "bracket",
    "total_degree",
    "support",
    "X",
    "Y",
    "ZERO",
    "ONE",
]

Rational = Fraction
Coeff = Union[int, Fraction]
Monomial = tuple  # (i, j), exponents of x and y

#: degree of the zero polynomial
NEG_INF = -math.inf


def _norm(c) -> Coeff:
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    return _norm(as_rational(c))


def as_rational(value) -> Coeff:
    """Convert ``value`` to an exact rational (``int`` when integral).

    Accepts ints, Fractions, other exact rationals and strings such as
    ``"-3/2"``.  Floats are refused: they are not exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return int(value)
    if isinstance(value, Fraction):
        return _norm(value)
    if isinstance(value, _RationalABC):
        return _norm(Fraction(value.numerator, value.denominator))
    if isinstance(value, str):
        return _norm(Fraction(value.strip()))
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(c: Coeff) -> str:
    """Render as ``"p"`` or ``"p/q"``."""
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _format_monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


class BiPoly:
    """Immutable sparse polynomial in ``x`` and ``y`` over Q.

    ``terms`` maps exponent pairs ``(i, j)`` to nonzero coefficients.
    Arithmetic operators are supported, mixing freely with ints and
    Fractions.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict = {}
        for mono, c in items:
            i, j = mono
            if not (isinstance(i, int) and isinstance(j, int)) or i < 0 or j < 0:
                raise ValueError(f"bad exponent pair {mono!r}")
            key = (int(i), int(j))
            clean[key] = clean.get(key, 0) + as_rational(c)
        self._terms = {k: _norm(v) for k, v in clean.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "BiPoly":
        # terms must already be normalized and free of zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> "BiPoly":
        c = as_rational(c)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "BiPoly":
        return cls({(i, j): c})

    @classmethod
    def coerce(cls, value) -> "BiPoly":
        if isinstance(value, BiPoly):
            return value
        return cls.constant(value)

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def items(self) -> list:
        """Terms in canonical (ascending lexicographic) order."""
        return sorted(self._terms.items())

    def coefficient(self, i: int, j: int) -> Coeff:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0, 0) in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_value(self) -> Coeff:
        """Return the value of a constant polynomial."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0, 0), 0)

    def only_x(self) -> bool:
        return all(j == 0 for _, j in self._terms)

    def only_y(self) -> bool:
        return all(i == 0 for i, _ in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == BiPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            try:
                other = BiPoly.constant(other)
            except TypeError:
                return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            try:
                other = BiPoly.constant(other)
            except TypeError:
                return NotImplemented
        return add(self, -other)

    def __rsub__(self, other) -> "BiPoly":
        return (-self).__add__(other)

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return mul(self, other)
        try:
            c = as_rational(other)
        except TypeError:
            return NotImplemented
        if not c:
            return ZERO
        return BiPoly._raw({k: _norm(v * c) for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "BiPoly":
        c = as_rational(other)
        if not c:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (1 / Fraction(c))

    def __pow__(self, n: int) -> "BiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = mul(result, base)
            n >>= 1
            if n:
                base = mul(base, base)
        return result

    def __call__(self, X, Y) -> "BiPoly":
        return substitute(self, BiPoly.coerce(X), BiPoly.coerce(Y))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for (i, j), c in self.items():
            mono = _format_monomial(i, j)
            neg = c < 0
            mag = -c if neg else c
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if not out:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"BiPoly({str(self)!r})"


ZERO = BiPoly._raw({})
ONE = BiPoly._raw({(0, 0): 1})
X = BiPoly._raw({(1, 0): 1})
Y = BiPoly._raw({(0, 1): 1})


def add(P: BiPoly, Q: BiPoly) -> BiPoly:
    if len(P._terms) < len(Q._terms):
        P, Q = Q, P
    out = dict(P._terms)
    for k, v in Q._terms.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = _norm(s)
        else:
            out.pop(k, None)
    return BiPoly._raw(out)


_KRONECKER_MIN_WORK = 4096


def _integer_content(P: BiPoly) -> tuple:
    # (scale, integer terms) with P == integer terms / scale
    scale = 1
    for c in P._terms.values():
        if type(c) is not int:
            scale = math.lcm(scale, c.denominator)
    if scale == 1:
        return 1, P._terms
    return scale, {k: int(v * scale) for k, v in P._terms.items()}


def _pack(terms: dict, width: int, nbytes: int) -> int:
    top = max(i + width * j for i, j in terms) + 1
    pos = bytearray(top * nbytes)
    neg = bytearray(top * nbytes)
    for (i, j), c in terms.items():
        at = (i + width * j) * nbytes
        if c > 0:
            pos[at:at + nbytes] = c.to_bytes(nbytes, "little")
        else:
            neg[at:at + nbytes] = (-c).to_bytes(nbytes, "little")
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _kronecker_mul(P: BiPoly, Q: BiPoly):
    """Product through one big-integer multiplication, or None if too sparse.

    Exponent ``(i, j)`` maps to slot ``i + width*j``; each slot holds a
    ``k``-bit signed digit, packed with a bias so digits read back as
    unsigned byte chunks.
    """
    pi = max(i for i, _ in P._terms)
    qi = max(i for i, _ in Q._terms)
    pj = max(j for _, j in P._terms)
    qj = max(j for _, j in Q._terms)
    width = pi + qi + 1
    slots = width * (pj + qj + 1)
    if slots > 8 * len(P._terms) * len(Q._terms):
        return None
    sp, tp = _integer_content(P)
    sq, tq = _integer_content(Q)
    bound = max(map(abs, tp.values())) * max(map(abs, tq.values())) * min(len(tp), len(tq))
    nbytes = (bound.bit_length() + 2 + 7) // 8
    k = 8 * nbytes
    A = _pack(tp, width, nbytes)
    B = _pack(tq, width, nbytes)
    bias = 1 << (k - 1)
    biases = int.from_bytes(bias.to_bytes(nbytes, "little") * slots, "little")
    raw = (int(_bigint(A) * _bigint(B)) + biases).to_bytes(nbytes * slots, "little")
    scale = sp * sq
    digits = np.frombuffer(raw, dtype=np.uint8).reshape(slots, nbytes)
    zero = np.frombuffer(bias.to_bytes(nbytes, "little"), dtype=np.uint8)
    out = {}
    for e in np.flatnonzero((digits != zero).any(axis=1)).tolist():
        c = int.from_bytes(raw[e * nbytes:(e + 1) * nbytes], "little") - bias
        j, i = divmod(e, width)
        out[(i, j)] = c if scale == 1 else _norm(Fraction(c, scale))
    return BiPoly._raw(out)


def mul(P: BiPoly, Q: BiPoly) -> BiPoly:
    if len(P._terms) < len(Q._terms):
        P, Q = Q, P
    if not Q._terms:
        return ZERO
    if len(P._terms) * len(Q._terms) >= _KRONECKER_MIN_WORK:
        fast = _kronecker_mul(P, Q)
        if fast is not None:
            return fast
    out: dict = {}
    get = out.get
    q_items = list(Q._terms.items())
    for (i1, j1), c1 in P._terms.items():
        for (i2, j2), c2 in q_items:
            k = (i1 + i2, j1 + j2)
            out[k] = get(k, 0) + c1 * c2
    return BiPoly._raw({k: _norm(v) for k, v in out.items() if v})


class _Powers:
    """Cache of successive powers of one polynomial."""

    def __init__(self, base: BiPoly):
        self._pows = [ONE, base]
        self._is_var = base == X or base == Y

    def __getitem__(self, n: int) -> BiPoly:
        if self._is_var:
            (i, j), = self._pows[1]._terms
            return BiPoly._raw({(i * n, j * n): 1})
        while len(self._pows) <= n:
            self._pows.append(mul(self._pows[-1], self._pows[1]))
        return self._pows[n]


def substitute(P: BiPoly, X_: BiPoly, Y_: BiPoly) -> BiPoly:
    """Evaluate ``P`` at ``x := X_``, ``y := Y_``.

    Horner's scheme in ``y`` over the coefficient polynomials ``c_j(x)``,
    each of which is evaluated from a shared cache of powers of ``X_``.
    """
    if not P._terms:
        return ZERO
    by_j: dict = {}
    for (i, j), c in P._terms.items():
        by_j.setdefault(j, {})[i] = c
    xpow = _Powers(X_)
    ypow = _Powers(Y_)

    def coeff_poly(row: dict) -> BiPoly:
        acc = ZERO
        for i, c in row.items():
            acc = add(acc, xpow[i] * c)
        return acc

    js = sorted(by_j, reverse=True)
    result = coeff_poly(by_j[js[0]])
    for prev, j in zip(js, js[1:]):
        result = add(mul(result, ypow[prev - j]), coeff_poly(by_j[j]))
    if js[-1]:
        result = mul(result, ypow[js[-1]])
    return result


def partial(P: BiPoly, axis: str) -> BiPoly:
    """Formal partial derivative with respect to ``"x"`` or ``"y"``."""
    if axis == "x":
        return BiPoly._raw({(i - 1, j): c * i for (i, j), c in P._terms.items() if i})
    if axis == "y":
        return BiPoly._raw({(i, j - 1): c * j for (i, j), c in P._terms.items() if j})
    raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")


def bracket(P: BiPoly, Q: BiPoly) -> BiPoly:
    """Jacobian determinant ``P_x Q_y - P_y Q_x``."""
    return mul(partial(P, "x"), partial(Q, "y")) - mul(partial(P, "y"), partial(Q, "x"))


def total_degree(P: BiPoly):
    if not P._terms:
        return NEG_INF
    return max(i + j for i, j in P._terms)


def support(P: BiPoly) -> frozenset:
    return frozenset(P._terms)
