"""Instance checks for the ingredients of the reduction argument.

These verify, on concrete polynomials, the facts the decomposition relies
on: the homogeneous bracket witness ``F`` with ``[F, ell] = ell``, nilpotent
bracket orbits, corner additivity of leading forms and the Jacobian chain
rule.  ``random_tame_word`` produces seeded test inputs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .jung import ElemX, ElemY, Linear, TameMove, move_image
from .newton import Direction, is_aligned, is_homogeneous, leading_form, st_en
from .poly import BiPoly, X, Y, as_rational, bracket, substitute

__all__ = [
    "NonHomogeneousInput",
    "ZeroBracket",
    "OrbitReport",
    "solve_rational",
    "witness_support",
    "find_homogeneous_F",
    "check_witness_shape",
    "bracket_orbit",
    "check_corner_identity",
    "chain_rule_check",
    "random_tame_word",
]


class NonHomogeneousInput(ValueError):
    pass


class ZeroBracket(ValueError):
    pass


def solve_rational(rows: list, rhs: list) -> Optional[list]:
    """Exact Gauss-Jordan solve of ``rows @ u = rhs`` over Q.

    Free unknowns are set to zero, so among all solutions the one returned
    has pivots on the leftmost possible columns.  Returns None when the
    system is inconsistent.
    """
    n = len(rows[0]) if rows else 0
    A = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(n):
        pivot = next((k for k in range(r, len(A)) if A[k][col]), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        inv = 1 / A[r][col]
        A[r] = [v * inv for v in A[r]]
        for k in range(len(A)):
            if k != r and A[k][col]:
                f = A[k][col]
                A[k] = [a - f * b for a, b in zip(A[k], A[r])]
        pivots.append(col)
        r += 1
        if r == len(A):
            break
    if any(row[-1] for row in A[r:]):
        return None
    sol = [Fraction(0)] * n
    for k, col in enumerate(pivots):
        sol[col] = A[k][-1]
    return sol


def witness_support(d: Direction, ell: BiPoly) -> list:
    """Candidate monomials ``(i, j)`` with ``rho*i + sigma*j == rho + sigma``.

    For a direction with a nonpositive component this set is infinite; it is
    then cut to the search window ``i <= max_i(ell) + 1``,
    ``j <= max_j(ell) + 1``.
    """
    rho, sigma = d
    target = rho + sigma
    if rho > 0 and sigma > 0:
        imax, jmax = target // rho, target // sigma
    else:
        imax = max(i for i, _ in ell.terms) + 1
        jmax = max(j for _, j in ell.terms) + 1
    return sorted(
        (i, j)
        for i in range(imax + 1)
        for j in range(jmax + 1)
        if rho * i + sigma * j == target
    )


def find_homogeneous_F(d: Direction, ell: BiPoly) -> Optional[BiPoly]:
    """Solve ``[F, ell] = ell`` for ``d``-homogeneous ``F`` of weight ``rho + sigma``."""
    rho, sigma = d
    if rho + sigma <= 0:
        raise ValueError("needs rho + sigma > 0")
    if ell.is_zero() or not is_homogeneous(d, ell):
        raise NonHomogeneousInput(f"{ell} is not a nonzero {tuple(d)}-homogeneous form")
    cand = witness_support(d, ell)
    columns = [bracket(BiPoly.monomial(i, j), ell) for i, j in cand]
    monos = sorted(set(ell.terms).union(*(c.terms for c in columns)))
    rows = [[col.coefficient(*m) for col in columns] for m in monos]
    rhs = [ell.coefficient(*m) for m in monos]
    sol = solve_rational(rows, rhs)
    if sol is None:
        return None
    return BiPoly({m: c for m, c in zip(cand, sol) if c})


def check_witness_shape(F: BiPoly, sigma: int) -> Optional[tuple]:
    """Match ``F == mu*x*(y + lam*x**sigma)``; return ``(mu, lam)`` or None."""
    mu = F.coefficient(1, 1)
    if not mu or set(F.terms) - {(1, 1), (sigma + 1, 0)}:
        return None
    lam = Fraction(F.coefficient(sigma + 1, 0)) / mu
    return as_rational(mu), as_rational(lam)


@dataclass(frozen=True)
class OrbitReport:
    terms: tuple
    reached_zero: bool
    steps: int


def bracket_orbit(R0: BiPoly, P: BiPoly, max_steps: int) -> OrbitReport:
    """Iterate ``R -> [R, P]`` from ``R0`` until zero or ``max_steps``."""
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    terms = [R0]
    if R0.is_zero():
        return OrbitReport(tuple(terms), True, 0)
    for _ in range(max_steps):
        nxt = bracket(terms[-1], P)
        terms.append(nxt)
        if nxt.is_zero():
            return OrbitReport(tuple(terms), True, len(terms) - 1)
    return OrbitReport(tuple(terms), False, max_steps)


def check_corner_identity(d: Direction, P: BiPoly, Q: BiPoly) -> bool:
    """Both corner biconditionals for ``R = [lead(P), lead(Q)]`` along ``d``."""
    lP, lQ = leading_form(d, P), leading_form(d, Q)
    R = bracket(lP, lQ)
    if R.is_zero():
        raise ZeroBracket(f"[{lP}, {lQ}] = 0")
    corners = zip(st_en(d, lP), st_en(d, lQ), st_en(d, R))
    for cP, cQ, cR in corners:
        shifted = (cP[0] + cQ[0] - 1, cP[1] + cQ[1] - 1)
        if (not is_aligned(cP, cQ)) != (shifted == cR):
            return False
    return True


def chain_rule_check(m: TameMove, P: BiPoly, Q: BiPoly) -> bool:
    """``[m(P), m(Q)] == m([P, Q]) * [m(x), m(y)]``, exactly."""
    mx, my = move_image(m)
    lhs = bracket(substitute(P, mx, my), substitute(Q, mx, my))
    rhs = substitute(bracket(P, Q), mx, my) * bracket(mx, my)
    return lhs == rhs


_KINDS = ("elem_y", "elem_x", "linear")


def _random_univariate(rng: random.Random, var: BiPoly, max_deg: int, bound: int) -> BiPoly:
    deg = rng.randint(1, max_deg)
    lead = rng.choice([c for c in range(-bound, bound + 1) if c])
    poly = var ** deg * lead
    for k in range(deg):
        poly = poly + var ** k * rng.randint(-bound, bound)
    return poly


def random_tame_word(seed: int, n_moves: int, max_deg: int, coeff_bound: int) -> list:
    """Seeded random word of ``n_moves`` tame moves.

    Uses :class:`random.Random` (Mersenne Twister) seeded with ``seed``.
    Consecutive moves always differ in kind, so neighbouring elementary
    moves of one type never collapse into one.
    """
    if n_moves < 0 or max_deg < 1 or coeff_bound < 1:
        raise ValueError("need n_moves >= 0, max_deg >= 1, coeff_bound >= 1")
    rng = random.Random(seed)
    word: list = []
    prev = None
    for _ in range(n_moves):
        kind = rng.choice([k for k in _KINDS if k != prev])
        if kind == "elem_y":
            word.append(ElemY(_random_univariate(rng, X, max_deg, coeff_bound)))
        elif kind == "elem_x":
            word.append(ElemX(_random_univariate(rng, Y, max_deg, coeff_bound)))
        else:
            while True:
                a, b, c, d = (rng.randint(-coeff_bound, coeff_bound) for _ in range(4))
                if a * d - b * c:
                    break
            word.append(Linear(a, b, c, d))
        prev = kind
    return word
