"""Weighted degrees, leading forms and the Newton polygon of a BiPoly."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .poly import BiPoly

__all__ = [
    "Direction",
    "LatticePolygon",
    "ZeroPolynomial",
    "MonomialInput",
    "DirContains11",
    "cross",
    "is_aligned",
    "dir_less",
    "vdeg",
    "leading_form",
    "is_homogeneous",
    "hull",
    "directions",
    "st_en",
    "succ",
]


class ZeroPolynomial(ValueError):
    pass


class MonomialInput(ValueError):
    pass


class DirContains11(ValueError):
    pass


@dataclass(frozen=True)
class Direction:
    """Primitive integer vector ``(rho, sigma)``; weight ``rho*i + sigma*j``."""

    rho: int
    sigma: int

    def __post_init__(self):
        if math.gcd(self.rho, self.sigma) != 1:
            raise ValueError(f"({self.rho}, {self.sigma}) is not a primitive direction")

    @classmethod
    def normal_of(cls, dx: int, dy: int) -> "Direction":
        """Primitive outward normal of a counterclockwise edge ``(dx, dy)``."""
        g = math.gcd(dx, dy)
        return cls(dy // g, -dx // g)

    def weight(self, i: int, j: int) -> int:
        return self.rho * i + self.sigma * j

    def tangent(self) -> tuple:
        # outward normal turned +90 degrees
        return (-self.sigma, self.rho)

    def __iter__(self):
        yield self.rho
        yield self.sigma

    def __repr__(self) -> str:
        return f"Direction({self.rho}, {self.sigma})"


@dataclass(frozen=True)
class LatticePolygon:
    """Convex hull of a finite lattice point set.

    Vertices run counterclockwise from the lowest point (smallest ``j``,
    then smallest ``i``).  A segment keeps its two endpoints, a point one.
    """

    vertices: tuple

    def edges(self) -> list:
        vs = self.vertices
        if len(vs) < 2:
            return []
        return [(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs))]


def _as_pair(d) -> tuple:
    return tuple(d) if not isinstance(d, Direction) else (d.rho, d.sigma)


def cross(A, B) -> int:
    a1, a2 = _as_pair(A)
    b1, b2 = _as_pair(B)
    return a1 * b2 - a2 * b1


def is_aligned(A, B) -> bool:
    return cross(A, B) == 0


def dir_less(a, b) -> bool:
    """Counterclockwise order; valid only inside an arc shorter than a half turn."""
    return cross(a, b) > 0


def _need_nonzero(P: BiPoly) -> None:
    if P.is_zero():
        raise ZeroPolynomial("the zero polynomial has no leading data")


def vdeg(d: Direction, P: BiPoly) -> int:
    _need_nonzero(P)
    rho, sigma = d
    return max(rho * i + sigma * j for i, j in P.terms)


def leading_form(d: Direction, P: BiPoly) -> BiPoly:
    _need_nonzero(P)
    rho, sigma = d
    top = vdeg(d, P)
    return BiPoly._raw({(i, j): c for (i, j), c in P.terms.items() if rho * i + sigma * j == top})


def is_homogeneous(d: Direction, P: BiPoly) -> bool:
    if P.is_zero():
        return True
    rho, sigma = d
    return len({rho * i + sigma * j for i, j in P.terms}) == 1


def _convex_hull(points: list) -> list:
    # Andrew's monotone chain; collinear points are dropped
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and cross(
                (chain[-1][0] - chain[-2][0], chain[-1][1] - chain[-2][1]),
                (p[0] - chain[-2][0], p[1] - chain[-2][1]),
            ) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    ring = lower[:-1] + upper[:-1]
    if len(ring) == 2 and ring[0] == ring[1]:
        return ring[:1]
    return ring


def hull(P: BiPoly) -> LatticePolygon:
    _need_nonzero(P)
    ring = _convex_hull(list(P.terms))
    start = min(range(len(ring)), key=lambda k: (ring[k][1], ring[k][0]))
    return LatticePolygon(tuple(ring[start:] + ring[:start]))


def directions(P: BiPoly) -> list:
    """Outward edge normals of ``hull(P)``.

    Listed in boundary order, which is counterclockwise starting from
    ``(0, -1)`` inclusive.
    """
    return [
        Direction.normal_of(b[0] - a[0], b[1] - a[1])
        for a, b in hull(P).edges()
    ]


def st_en(d: Direction, P: BiPoly) -> tuple:
    """First and last support point of the ``d``-leading form, counterclockwise."""
    pts = list(leading_form(d, P).terms)
    t1, t2 = d.tangent() if isinstance(d, Direction) else (-d[1], d[0])

    def along(p):
        return t1 * p[0] + t2 * p[1]

    return min(pts, key=along), max(pts, key=along)


def succ(P: BiPoly) -> Optional[Direction]:
    """First element of ``Dir(P)`` strictly counterclockwise after ``(1, 1)``.

    Only the open half turn from ``(1, 1)`` to ``(-1, -1)`` is searched;
    returns ``None`` when that arc holds no direction of ``P``.
    """
    _need_nonzero(P)
    if P.is_monomial():
        raise MonomialInput(f"{P} is a monomial")
    dirs = directions(P)
    if Direction(1, 1) in dirs:
        raise DirContains11(f"(1, 1) is an edge direction of {P}")
    best = None
    for d in dirs:
        if cross((1, 1), d) > 0 and (best is None or dir_less(d, best)):
            best = d
    return best
