import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import bipolys
from tamepoly.jung import ElemX, ElemY, Linear, word_to_pair
from tamepoly.newton import Direction, is_homogeneous
from tamepoly.poly import ZERO, BiPoly, X, Y, bracket
from tamepoly.witness import (
    NonHomogeneousInput,
    ZeroBracket,
    bracket_orbit,
    chain_rule_check,
    check_corner_identity,
    check_witness_shape,
    find_homogeneous_F,
    random_tame_word,
    solve_rational,
    witness_support,
)

D11, D12 = Direction(1, 1), Direction(1, 2)
ELL = (X**2 + Y) ** 2


# linear solver

def test_solve_rational_small_systems():
    assert solve_rational([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]
    assert solve_rational([[1, 1], [2, 2]], [1, 3]) is None
    # free second unknown is zeroed
    assert solve_rational([[1, 1], [2, 2]], [1, 2]) == [1, 0]


@settings(max_examples=60)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_solve_rational_against_sympy(m, n, data):
    ints = st.integers(-4, 4)
    rows = [[data.draw(ints) for _ in range(n)] for _ in range(m)]
    rhs = [data.draw(ints) for _ in range(m)]
    sol = solve_rational(rows, rhs)
    A, b = sympy.Matrix(rows), sympy.Matrix(rhs)
    consistent = A.rank() == A.row_join(b).rank()
    assert (sol is not None) == consistent
    if sol is not None:
        assert all(sum(r * s for r, s in zip(row, sol)) == v for row, v in zip(rows, rhs))


# witness F

def test_witness_support_examples():
    assert witness_support(D12, ELL) == [(1, 1), (3, 0)]
    assert witness_support(D11, X + Y) == [(0, 2), (1, 1), (2, 0)]


def test_find_F_for_worked_leading_form():
    F = find_homogeneous_F(D12, ELL)
    assert F == Fraction(1, 2) * X**3 + Fraction(1, 2) * X * Y
    assert bracket(F, ELL) == ELL
    assert check_witness_shape(F, 2) == (Fraction(1, 2), 1)


def test_find_F_zeroes_free_coordinate():
    F = find_homogeneous_F(D12, X**4)
    assert F == Fraction(-1, 4) * X * Y
    assert bracket(F, X**4) == X**4


def test_find_F_linear_form():
    F = find_homogeneous_F(D11, X + Y)
    assert F == -(Y**2) - X * Y
    assert bracket(F, X + Y) == X + Y


def test_find_F_errors():
    with pytest.raises(NonHomogeneousInput):
        find_homogeneous_F(D11, X + Y**2)
    with pytest.raises(NonHomogeneousInput):
        find_homogeneous_F(D11, ZERO)
    with pytest.raises(ValueError):
        find_homogeneous_F(Direction(1, -1), X)


def test_find_F_inconsistent():
    # [a*x^2 + b*x*y + c*y^2, x*y] = 2a*x^2 - 2c*y^2 never has an x*y term
    assert find_homogeneous_F(D11, X * Y) is None


def test_check_witness_shape_examples():
    assert check_witness_shape(Fraction(1, 2) * X**3 + Fraction(1, 2) * X * Y, 2) == (Fraction(1, 2), 1)
    assert check_witness_shape(X * Y, 5) == (1, 0)
    assert check_witness_shape(X**2 + Y**2, 1) is None
    assert check_witness_shape(X**3, 2) is None


@settings(max_examples=60)
@given(
    st.fractions(-4, 4, max_denominator=3).filter(bool),
    st.fractions(-4, 4, max_denominator=3).filter(bool),
    st.integers(2, 4),
    st.integers(1, 5),
)
def test_witness_for_linear_power_forms(mu, lam, sigma, N):
    # [x*u, u^N] = N*u^N for u = y + lam*x^sigma; unique once sigma >= 2
    d = Direction(1, sigma)
    ell = mu * (Y + lam * X**sigma) ** N
    F = find_homogeneous_F(d, ell)
    assert F is not None and bracket(F, ell) == ell
    assert is_homogeneous(d, F)
    assert check_witness_shape(F, sigma) == (Fraction(1, N), lam)


@settings(max_examples=80)
@given(
    st.sampled_from([D11, D12, Direction(2, 1), Direction(1, 3), Direction(2, 3)]),
    st.integers(0, 6),
    st.integers(0, 6),
    st.fractions(-3, 3, max_denominator=2).filter(bool),
)
def test_monomial_witness_means_monomial_form(d, i, j, c):
    ell = c * BiPoly.monomial(i, j)
    F = find_homogeneous_F(d, ell)
    if F is None or not F.is_monomial():
        return
    assert bracket(F, ell) == ell
    assert set(F.terms) == {(1, 1)}
    mu, lam = check_witness_shape(F, d.sigma)
    assert lam == 0


def test_monomial_witness_sweep():
    # exhaustive version of the property above on a small box
    rng = random.Random(4)
    for _ in range(200):
        d = rng.choice([D11, D12, Direction(2, 1), Direction(3, 1)])
        ell = BiPoly({(rng.randint(0, 4), rng.randint(0, 4)): rng.randint(1, 3) for _ in range(rng.randint(1, 3))})
        if not is_homogeneous(d, ell):
            continue
        F = find_homogeneous_F(d, ell)
        if F is not None and F.is_monomial():
            assert bracket(F, ell) == ell
            assert ell.is_monomial() and set(F.terms) == {(1, 1)}


# bracket orbits

def test_orbit_examples():
    r = bracket_orbit(X, X, 5)
    assert r.terms == (X, ZERO) and r.reached_zero and r.steps == 1
    r = bracket_orbit(X, X + Y**2, 10)
    assert r.terms == (X, 2 * Y, BiPoly.constant(-2), ZERO)
    assert r.reached_zero and r.steps == 3
    r = bracket_orbit(X, X**2 + Y**2, 6)
    assert list(r.terms[:5]) == [X, 2 * Y, -4 * X, -8 * Y, 16 * X]
    assert not r.reached_zero and r.steps == 6


def test_orbit_edge_cases():
    with pytest.raises(ValueError):
        bracket_orbit(X, Y, 0)
    r = bracket_orbit(ZERO, X, 3)
    assert r.reached_zero and r.steps == 0


@settings(max_examples=40)
@given(bipolys(max_terms=3, max_exp=2), bipolys(max_terms=3, max_exp=2), st.integers(1, 4))
def test_orbit_invariant(R0, P, n):
    r = bracket_orbit(R0, P, n)
    for a, b in zip(r.terms, r.terms[1:]):
        assert b == bracket(a, P)
    if r.reached_zero:
        assert r.terms[-1] == ZERO
        assert all(not t.is_zero() for t in r.terms[:-1])


# corner identity

def test_corner_identity_examples():
    assert check_corner_identity(D11, X**2, Y**2)
    assert check_corner_identity(D11, X**2, X**2 + X * Y)
    assert check_corner_identity(D12, ELL, X * (Y + X**2))


def test_corner_identity_zero_bracket():
    with pytest.raises(ZeroBracket):
        check_corner_identity(D11, X**2, X**3)


# chain rule

def test_chain_rule_examples():
    assert chain_rule_check(ElemY(X**2), X, Y)
    assert chain_rule_check(Linear(2, 0, 0, 3), X, Y)
    assert bracket(2 * X, 3 * Y) == BiPoly.constant(6)
    assert chain_rule_check(ElemX(Y**3), X**2 + Y, X * Y)


@settings(max_examples=60)
@given(st.integers(0, 10**6), bipolys(max_terms=3, max_exp=3), bipolys(max_terms=3, max_exp=3))
def test_chain_rule_on_generated_moves(seed, P, Q):
    for m in random_tame_word(seed, 3, 3, 3):
        assert chain_rule_check(m, P, Q)


# generator

def test_random_word_contract():
    assert random_tame_word(5, 0, 3, 3) == []
    assert random_tame_word(17, 4, 3, 3) == random_tame_word(17, 4, 3, 3)
    with pytest.raises(ValueError):
        random_tame_word(0, -1, 3, 3)
    with pytest.raises(ValueError):
        random_tame_word(0, 2, 0, 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 5), st.integers(1, 3), st.integers(1, 3))
def test_random_word_shape(seed, n, d, c):
    w = random_tame_word(seed, n, d, c)
    assert len(w) == n
    for a, b in zip(w, w[1:]):
        assert type(a) is not type(b)
    for m in w:
        if isinstance(m, Linear):
            assert m.det != 0
            assert all(abs(v) <= c for v in (m.a, m.b, m.c, m.d))
        else:
            poly = m.p if isinstance(m, ElemY) else m.q
            assert all(abs(v) <= c and Fraction(v).denominator == 1 for _, v in poly.items())
            exps = [max(k) for k in poly.terms]
            assert 1 <= max(exps) <= d
    jac = bracket(*word_to_pair(w))
    assert jac.is_constant() and not jac.is_zero()
