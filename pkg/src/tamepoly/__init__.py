"""Exact decomposition of automorphisms of Q[x, y] into tame moves.

>>> from tamepoly import X, Y, decompose, verify
>>> P, Q = X + (Y + X**2) ** 2, Y + X**2
>>> verify(decompose((P, Q)), (P, Q))
True
"""

from .jung import (
    SWAP,
    AutoPair,
    AxisX,
    AxisY,
    EdgePolynomial,
    ElemX,
    ElemY,
    Linear,
    LinearPower,
    Mixed,
    NotAutomorphism,
    RejectReason,
    apply_move,
    classify_leading,
    decompose,
    edge_profile,
    invert,
    move_inverse,
    perfect_power_test,
    reduction_step,
    verify,
    word_inverse,
    word_to_pair,
)
from .newton import Direction, directions, hull, leading_form, st_en, succ, vdeg
from .poly import NEG_INF, ONE, X, Y, ZERO, BiPoly, bracket, substitute, total_degree

__version__ = "0.1.0"
