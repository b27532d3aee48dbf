import math
from fractions import Fraction

import sympy
from hypothesis import strategies as st

from tamepoly.newton import Direction, cross, leading_form
from tamepoly.poly import BiPoly

sx, sy = sympy.symbols("x y")

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool)


@st.composite
def bipolys(draw, max_terms=5, max_exp=4, nonzero=False):
    n = draw(st.integers(1 if nonzero else 0, max_terms))
    terms = draw(
        st.dictionaries(
            st.tuples(st.integers(0, max_exp), st.integers(0, max_exp)),
            coefficients,
            min_size=n,
            max_size=n,
        )
    )
    return BiPoly(terms)


def to_sympy(P: BiPoly):
    return sum((sympy.Rational(c.numerator, c.denominator) * sx**i * sy**j
                for (i, j), c in ((k, Fraction(v)) for k, v in P.terms.items())), sympy.Integer(0))


def from_sympy(expr) -> BiPoly:
    poly = sympy.Poly(sympy.expand(expr), sx, sy)
    return BiPoly({m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})


def primitive(a, b):
    g = math.gcd(a, b)
    return Direction(a // g, b // g)


def brute_force_directions(P):
    """Every primitive d with a leading form of two or more terms.

    Candidates are the normals of all pairs of support points, which is
    exhaustive: an edge direction is normal to two of its support points.
    """
    pts = list(P.terms)
    found = set()
    for p in pts:
        for q in pts:
            if p == q:
                continue
            for d in (primitive(q[1] - p[1], p[0] - q[0]), primitive(p[1] - q[1], q[0] - p[0])):
                if len(leading_form(d, P)) > 1:
                    found.add(d)
    return found


def random_support_poly(rng, max_points=15, box=8):
    n = rng.randint(1, max_points)
    return BiPoly({(rng.randint(0, box), rng.randint(0, box)): rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(n)})


def intermediate(d1, d2):
    """A primitive direction strictly between consecutive d1 and d2."""
    if cross(d1, d2) > 0:
        return primitive(d1.rho + d2.rho, d1.sigma + d2.sigma)
    return Direction(-d1.sigma, d1.rho)


# acceptance criterion number -> (passed, detail), shown after the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
