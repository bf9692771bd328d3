"""Exact q-Euler numbers and the combinatorics around them.

Polynomials are lists of ``(coef, y_exp, q_exp)`` tuples in canonical order.
"""

from ._qeuler import *  # noqa: F401,F403
from ._qeuler import BudgetExceeded, NotDivisible, QeulerError, poly_to_string


def q_poly(coeffs):
    """Polynomial in q from a coefficient list, lowest degree first."""
    return [(c, 0, i) for i, c in enumerate(coeffs) if c != 0]


def evaluate(poly, y=1, q=1):
    return sum(c * y**a * q**b for c, a, b in poly)


__all__ = ["BudgetExceeded", "NotDivisible", "QeulerError", "evaluate", "poly_to_string", "q_poly"]
