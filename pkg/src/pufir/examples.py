"""Small embedded reference polynomials used by tests and the CLI."""
from __future__ import annotations

import numpy as np

from .laurent import LaurentPoly

__all__ = ["square_example", "wide_example", "reblock_instance"]


def square_example(q=2):
    """2x2 para-unitary polynomial with three coefficients.

    B_1 = (1/5)[[2,2],[2,2]], B_2 = (1/5)[[0,3],[-3,0]],
    B_3 = (1/5)[[2,-2],[-2,2]]; McMillan degree 2 for q in {1, 2}.
    """
    B1 = np.array([[2, 2], [2, 2]]) / 5.0
    B2 = np.array([[0, 3], [-3, 0]]) / 5.0
    B3 = np.array([[2, -2], [-2, 2]]) / 5.0
    return LaurentPoly(q, [B1, B2, B3])


def wide_example(q=0):
    """1x2 co-isometric polynomial z^q(z^-1 (0, -3/5) + z^-2 (4/5, 0)).

    Hankel singular values 1 and 0.8.
    """
    B1 = np.array([[0.0, -3.0 / 5.0]])
    B2 = np.array([[4.0 / 5.0, 0.0]])
    return LaurentPoly(q, [B1, B2])


def reblock_instance(q=-2):
    """2x2 four-coefficient member used to exercise the reblockings."""
    B1 = np.array([[3, 3], [3, 3]]) / 10.0
    B2 = np.array([[2, -2], [2, -2]]) / 5.0
    B3 = np.array([[-2, -2], [2, 2]]) / 5.0
    B4 = np.array([[3, -3], [-3, 3]]) / 10.0
    return LaurentPoly(q, [B1, B2, B3, B4])
