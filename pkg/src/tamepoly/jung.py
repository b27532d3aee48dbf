"""Tame generators of Aut Q[x, y] and the degree-reduction decomposition.

A word ``[g1, ..., gk]`` denotes the composition ``g1 o ... o gk`` of ring
endomorphisms, where ``(g o h)(x) = g(h(x))``: apply ``g`` to the polynomial
``h(x)``.  The image pair of a word is ``(E(x), E(y))``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional, Sequence, Union

from .newton import Direction, cross, leading_form, st_en, succ
from .poly import (
    BiPoly,
    Coeff,
    X,
    Y,
    as_rational,
    bracket,
    substitute,
    total_degree,
)

__all__ = [
    "ElemY",
    "ElemX",
    "Linear",
    "TameMove",
    "SWAP",
    "AutoPair",
    "EdgePolynomial",
    "AxisX",
    "AxisY",
    "LinearPower",
    "Mixed",
    "LeadClass",
    "RejectReason",
    "NotAutomorphism",
    "SingularLinear",
    "ConstantInput",
    "RhoNotOne",
    "StNotOnAxis",
    "ConstantProfile",
    "ReductionRecord",
    "apply_move",
    "move_image",
    "word_to_pair",
    "move_inverse",
    "word_inverse",
    "classify_leading",
    "edge_profile",
    "perfect_power_test",
    "reduction_step",
    "decompose",
    "invert",
    "verify",
]


class SingularLinear(ValueError):
    pass


class ConstantInput(ValueError):
    pass


class RhoNotOne(ValueError):
    pass


class StNotOnAxis(ValueError):
    pass


class ConstantProfile(ValueError):
    pass


class RejectReason(str, enum.Enum):
    """Why a pair was shown not to be an automorphism."""

    JacobianNotConstant = "JacobianNotConstant"
    MonomialImage = "MonomialImage"
    MixedInfinity = "MixedInfinity"
    RhoNotOne = "RhoNotOne"
    NotLinearPower = "NotLinearPower"
    PInUnivariate = "PInUnivariate"
    SecondCoordinate = "SecondCoordinate"

    def __str__(self) -> str:
        return self.value


class NotAutomorphism(Exception):
    """The input violates a property every automorphism has."""

    def __init__(self, reason: RejectReason, detail: str = ""):
        self.reason = RejectReason(reason)
        self.detail = detail
        super().__init__(f"{self.reason.value}: {detail}" if detail else self.reason.value)


# -- moves -------------------------------------------------------------------


@dataclass(frozen=True)
class ElemY:
    """``x -> x``, ``y -> y + p(x)``."""

    p: BiPoly

    def __post_init__(self):
        if not self.p.only_x():
            raise ValueError(f"ElemY polynomial must not involve y: {self.p}")


@dataclass(frozen=True)
class ElemX:
    """``x -> x + q(y)``, ``y -> y``."""

    q: BiPoly

    def __post_init__(self):
        if not self.q.only_y():
            raise ValueError(f"ElemX polynomial must not involve x: {self.q}")


@dataclass(frozen=True)
class Linear:
    """``x -> a*x + b*y``, ``y -> c*x + d*y``."""

    a: Coeff
    b: Coeff
    c: Coeff
    d: Coeff

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @property
    def det(self) -> Coeff:
        return self.a * self.d - self.b * self.c


TameMove = Union[ElemY, ElemX, Linear]
SWAP = Linear(0, 1, 1, 0)


@dataclass(frozen=True)
class AutoPair:
    """Images ``(f(x), f(y))`` of a candidate automorphism."""

    P: BiPoly
    Q: BiPoly

    def __iter__(self):
        yield self.P
        yield self.Q


def move_image(m: TameMove) -> tuple:
    """``(m(x), m(y))``."""
    if isinstance(m, ElemY):
        return X, Y + m.p
    if isinstance(m, ElemX):
        return X + m.q, Y
    if isinstance(m, Linear):
        if not m.det:
            raise SingularLinear(f"{m} has zero determinant")
        return X * m.a + Y * m.b, X * m.c + Y * m.d
    raise TypeError(f"not a tame move: {m!r}")


def apply_move(m: TameMove, P: BiPoly) -> BiPoly:
    mx, my = move_image(m)
    return substitute(P, mx, my)


def word_to_pair(word: Sequence[TameMove]) -> AutoPair:
    if not word:
        return AutoPair(X, Y)
    P, Q = move_image(word[-1])
    for m in reversed(word[:-1]):
        mx, my = move_image(m)
        P, Q = substitute(P, mx, my), substitute(Q, mx, my)
    return AutoPair(P, Q)


def move_inverse(m: TameMove) -> TameMove:
    if isinstance(m, ElemY):
        return ElemY(-m.p)
    if isinstance(m, ElemX):
        return ElemX(-m.q)
    if isinstance(m, Linear):
        det = m.det
        if not det:
            raise SingularLinear(f"{m} has zero determinant")
        det = Fraction(det)
        return Linear(m.d / det, -m.b / det, -m.c / det, m.a / det)
    raise TypeError(f"not a tame move: {m!r}")


def word_inverse(word: Sequence[TameMove]) -> list:
    return [move_inverse(m) for m in reversed(word)]


def verify(word: Sequence[TameMove], pair) -> bool:
    P, Q = pair
    try:
        image = word_to_pair(word)
    except SingularLinear:
        return False
    return image.P == P and image.Q == Q


# -- leading-form analysis ----------------------------------------------------


@dataclass(frozen=True)
class AxisX:
    a: int


@dataclass(frozen=True)
class AxisY:
    a: int


@dataclass(frozen=True)
class LinearPower:
    """Leading form ``mu * (x - lam*y)**a``."""

    mu: Coeff
    lam: Coeff
    a: int


@dataclass(frozen=True)
class Mixed:
    pass


LeadClass = Union[AxisX, AxisY, LinearPower, Mixed]


def classify_leading(P: BiPoly) -> LeadClass:
    """Shape of the total-degree leading form of a nonconstant ``P``."""
    if P.is_constant():
        raise ConstantInput(f"{P} is constant")
    ell = leading_form(Direction(1, 1), P)
    a = total_degree(P)
    if ell.is_monomial():
        (i, j), = ell.terms
        return AxisX(a) if j == 0 else AxisY(a) if i == 0 else Mixed()
    # mu*(x - lam*y)^a has coefficient mu*C(a,k)*(-lam)^k on x^(a-k) y^k
    mu = ell.coefficient(a, 0)
    if not mu:
        return Mixed()
    lam = Fraction(ell.coefficient(a - 1, 1)) / (-a * mu)
    if not lam:
        return Mixed()
    expected = BiPoly({(a - k, k): mu * comb(a, k) * (-lam) ** k for k in range(a + 1)})
    if expected != ell:
        return Mixed()
    return LinearPower(as_rational(mu), as_rational(lam), a)


@dataclass(frozen=True)
class EdgePolynomial:
    """Profile ``p`` of a leading form ``x**a * p(y / x**sigma)``."""

    a: int
    sigma: int
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs or not self.coeffs[0] or not self.coeffs[-1]:
            raise ValueError("edge profile needs nonzero first and last coefficients")
        if self.a - self.sigma * self.degree < 0:
            raise ValueError("edge profile leaves the first quadrant")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def as_bipoly(self) -> BiPoly:
        return BiPoly({(self.a - self.sigma * k, k): c for k, c in enumerate(self.coeffs) if c})


def edge_profile(d: Direction, P: BiPoly) -> EdgePolynomial:
    rho, sigma = d
    if rho != 1:
        raise RhoNotOne(f"edge profile needs rho = 1, got {tuple(d)}")
    if sigma < 1:
        raise ValueError(f"edge profile needs sigma >= 1, got {sigma}")
    st, _ = st_en(d, P)
    if st[1] != 0:
        raise StNotOnAxis(f"st of {tuple(d)} is {st}, not on the x-axis")
    a = st[0]
    ell = leading_form(d, P)
    top = max(j for _, j in ell.terms)
    coeffs = tuple(ell.coefficient(a - sigma * k, k) for k in range(top + 1))
    return EdgePolynomial(a, sigma, coeffs)


def perfect_power_test(p: EdgePolynomial) -> Optional[tuple]:
    """Return ``(mu_p, lam, N)`` when ``p(w) == mu_p * (w + lam)**N``, else None."""
    N = p.degree
    if N == 0:
        raise ConstantProfile("profile of degree 0")
    mu = Fraction(p.coeffs[N])
    lam = Fraction(p.coeffs[N - 1]) / (N * mu)
    if not lam:
        return None
    for k, c in enumerate(p.coeffs):
        if c != mu * comb(N, k) * lam ** (N - k):
            return None
    return as_rational(mu), as_rational(lam), N


# -- reduction ------------------------------------------------------------------


@dataclass
class ReductionRecord:
    """What one ``AxisX`` reduction did; collected by ``decompose(trace=...)``."""

    direction: Direction
    profile: EdgePolynomial
    mu_p: Coeff
    lam: Coeff
    move: ElemY
    degree_before: int
    degree_after: int
    leading: BiPoly = field(repr=False)


def _reduce(P: BiPoly) -> tuple:
    d = succ(P)
    if d is None or d.rho <= 0:
        raise NotAutomorphism(
            RejectReason.PInUnivariate, f"{P} lies in Q[x] with degree >= 2"
        )
    if d.rho != 1:
        raise NotAutomorphism(
            RejectReason.RhoNotOne, f"successor direction {tuple(d)} has rho != 1"
        )
    profile = edge_profile(d, P)
    found = perfect_power_test(profile)
    if found is None:
        raise NotAutomorphism(
            RejectReason.NotLinearPower,
            f"edge profile {list(map(str, profile.coeffs))} is not mu*(w+lam)^N",
        )
    mu_p, lam, _ = found
    move = ElemY(BiPoly.monomial(1, 0) ** d.sigma * (-lam))
    P2 = apply_move(move, P)
    before, after = total_degree(P), total_degree(P2)
    assert after < before, "elementary reduction must lower the degree"
    record = ReductionRecord(d, profile, mu_p, lam, move, before, after, leading_form(d, P))
    return move, P2, record


def reduction_step(P: BiPoly) -> tuple:
    """One elementary move ``y -> y - lam*x**sigma`` lowering ``deg P``.

    ``P`` must have total-degree leading form ``c*x**a`` with ``a >= 2`` and
    must not be a monomial.  Raises :class:`NotAutomorphism` when the Newton
    polygon rules out ``P`` being a coordinate.
    """
    move, P2, _ = _reduce(P)
    return move, P2


def _complete_linear(alpha: Coeff, beta: Coeff) -> Linear:
    # invertible linear map whose x-image is alpha*x + beta*y
    if alpha:
        return Linear(alpha, beta, 0, 1)
    return Linear(alpha, beta, 1, 0)


def decompose(pair, *, trace: Optional[dict] = None, check_jacobian: bool = True) -> list:
    """Write the automorphism ``(P, Q)`` as a tame word.

    Returns a list of moves whose ``word_to_pair`` equals the input exactly,
    or raises :class:`NotAutomorphism` naming the violated property.  When
    ``trace`` is a dict it is filled with ``reductions`` (ReductionRecord
    list), ``normalizations`` (count of swaps and shears) and ``iterations``.

    ``check_jacobian=False`` skips the up-front Jacobian test; the result is
    still exact whenever a word is returned.
    """
    P, Q = pair
    if check_jacobian:
        jac = bracket(P, Q)
        if not jac.is_constant() or jac.is_zero():
            raise NotAutomorphism(RejectReason.JacobianNotConstant, f"[P, Q] = {jac}")
    if P.is_constant():
        raise NotAutomorphism(RejectReason.JacobianNotConstant, f"first coordinate {P} is constant")

    word: list = []
    applied: list = []
    reductions: list = []
    normalizations = 0
    iterations = 0

    def push(move, recorded):
        nonlocal P
        P = apply_move(move, P)
        applied.append(move)
        word.append(recorded)

    while total_degree(P) >= 2:
        iterations += 1
        cls = classify_leading(P)
        if isinstance(cls, AxisY):
            push(SWAP, SWAP)
            normalizations += 1
        elif isinstance(cls, LinearPower):
            push(Linear(1, cls.lam, 0, 1), Linear(1, -cls.lam, 0, 1))
            normalizations += 1
        elif isinstance(cls, AxisX):
            if P.is_monomial():
                raise NotAutomorphism(RejectReason.MonomialImage, f"P = {P}")
            move, P2, record = _reduce(P)
            reductions.append(record)
            applied.append(move)
            word.append(move_inverse(move))
            P = P2
        else:
            raise NotAutomorphism(
                RejectReason.MixedInfinity,
                f"leading form {leading_form(Direction(1, 1), P)} has two points at infinity",
            )

    alpha, beta, gamma = P.coefficient(1, 0), P.coefficient(0, 1), P.coefficient(0, 0)
    if (alpha, beta) != (1, 0):
        T = _complete_linear(alpha, beta)
        push(move_inverse(T), T)
    if gamma:
        push(ElemX(BiPoly.constant(-gamma)), ElemX(BiPoly.constant(gamma)))
    assert P == X

    for move in applied:
        Q = apply_move(move, Q)
    lam = Q.coefficient(0, 1)
    q = Q - Y * lam
    if not lam or not q.only_x():
        raise NotAutomorphism(
            RejectReason.SecondCoordinate, f"normalized second coordinate {Q} is not lam*y + q(x)"
        )
    if q:
        word.append(ElemY(q / lam))
    if lam != 1:
        word.append(Linear(1, 0, 0, lam))

    if trace is not None:
        trace["reductions"] = reductions
        trace["normalizations"] = normalizations
        trace["iterations"] = iterations
    return word


def invert(pair) -> AutoPair:
    return word_to_pair(word_inverse(decompose(pair)))
