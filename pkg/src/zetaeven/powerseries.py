"""Exact truncated power series over rationals.

A series is a list of Fractions, index j holding the coefficient of z^j.
All operations truncate to the shortest operand; nothing is approximate.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["series_mul", "series_recip", "series_div", "exp_series", "scaled_exp_series"]


def series_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = min(len(a), len(b))
    out = [Fraction(0)] * n
    for i in range(n):
        ai = a[i]
        if not ai:
            continue
        for j in range(n - i):
            out[i + j] += ai * b[j]
    return out


def series_recip(a: list[Fraction]) -> list[Fraction]:
    """Multiplicative inverse of a series with nonzero constant term."""
    if not a or a[0] == 0:
        raise ZeroDivisionError("series has no reciprocal (zero constant term)")
    inv0 = 1 / a[0]
    out = [inv0]
    for n in range(1, len(a)):
        acc = Fraction(0)
        for i in range(1, n + 1):
            acc += a[i] * out[n - i]
        out.append(-inv0 * acc)
    return out


def series_div(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """a / b truncated to the shorter length; b must have a nonzero constant term."""
    n = min(len(a), len(b))
    return series_mul(a[:n], series_recip(b[:n]))


def exp_series(order: int) -> list[Fraction]:
    """Coefficients of e^z through z^order: 1/j!."""
    out = [Fraction(1)]
    for j in range(1, order + 1):
        out.append(out[-1] / j)
    return out


def scaled_exp_series(x: Fraction, order: int) -> list[Fraction]:
    """Coefficients of e^(x*z) through z^order: x^j/j!."""
    out = [Fraction(1)]
    for j in range(1, order + 1):
        out.append(out[-1] * x / j)
    return out
