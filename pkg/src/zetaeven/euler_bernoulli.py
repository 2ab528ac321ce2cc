"""Bernoulli numbers, Euler polynomials, and Euler's even-zeta formula.

Conventions. Bernoulli numbers are the coefficients of z^n/n! in
z/(e^z - 1), so B_1 = -1/2. The summation recurrence used below,

    sum_{j=0}^{m} C(m+1, j) * B_j = 0,        B_0 = 1,

follows from multiplying that generating function by (e^z - 1)/z and
matching coefficients; it is validated independently by a truncated
series-division oracle in the test suite. Euler polynomials come from
2 e^(x t)/(e^t + 1) = sum E_m(x) t^m/m!, which by the same
coefficient-matching gives

    E_m(x) = x^m - (1/2) * sum_{j=0}^{m-1} C(m, j) * E_j(x),

again cross-checked against series division. Zeta values only ever
consume |B_2k|, so the B_1 sign convention never reaches them.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .numeric_core import binomial, factorial

__all__ = [
    "BernoulliTable",
    "EulerPolynomial",
    "bernoulli",
    "euler_polynomial",
    "euler_polynomial_eval",
    "zeta_even_via_euler",
]


class BernoulliTable:
    """Memoized Bernoulli numbers B_0..B_max_index.

    Extension is serialized behind a lock; reads of already-computed
    prefixes are safe from any thread.
    """

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    @property
    def max_index(self) -> int:
        return len(self._values) - 1

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(self._values)

    def value(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("Bernoulli index must be >= 0")
        if n > self.max_index:
            self._extend_to(n)
        return self._values[n]

    def _extend_to(self, n: int) -> None:
        with self._lock:
            values = self._values
            for m in range(len(values), n + 1):
                if m % 2 and m > 1:
                    # odd-index values vanish; proven by the generating
                    # function oracle, exploited here to halve the work
                    values.append(Fraction(0))
                    continue
                acc = Fraction(0)
                for j in range(0, m, 2):
                    acc += binomial(m + 1, j) * values[j]
                if m > 1:
                    acc += (m + 1) * values[1]  # the only nonzero odd term
                values.append(-acc / (m + 1))


_default_bernoulli = BernoulliTable()


def bernoulli(n: int) -> Fraction:
    """Exact B_n in the z/(e^z - 1) convention (B_1 = -1/2)."""
    return _default_bernoulli.value(n)


@dataclass(frozen=True)
class EulerPolynomial:
    """E_m(x) as exact monomial coefficients, coefficients[j] multiplying x^j."""

    degree: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.degree + 1:
            raise ValueError("coefficient count must be degree + 1")


_euler_lock = threading.Lock()
_euler_memo: list[tuple[Fraction, ...]] = [(Fraction(1),)]


def euler_polynomial(m: int) -> EulerPolynomial:
    """Exact E_m(x); E_0 = 1, E_1 = x - 1/2, E_2 = x^2 - x, ..."""
    if m < 0:
        raise ValueError("degree must be >= 0")
    if m >= len(_euler_memo):
        with _euler_lock:
            while len(_euler_memo) <= m:
                d = len(_euler_memo)
                coeffs = [Fraction(0)] * (d + 1)
                coeffs[d] = Fraction(1)
                for j, prev in enumerate(_euler_memo):
                    c = Fraction(binomial(d, j), 2)
                    for i, pc in enumerate(prev):
                        coeffs[i] -= c * pc
                _euler_memo.append(tuple(coeffs))
    return EulerPolynomial(m, _euler_memo[m])


def euler_polynomial_eval(p: EulerPolynomial, x: Fraction) -> Fraction:
    """Exact Horner evaluation of E_m at a rational point."""
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc


def zeta_even_via_euler(k: int) -> Fraction:
    """zeta(2k)/pi^(2k) by the classical closed form 2^(2k-1) |B_2k| / (2k)!."""
    if k < 1:
        raise ValueError("k must be >= 1")
    b = bernoulli(2 * k)
    return Fraction(2 ** (2 * k - 1) * abs(b.numerator), b.denominator * factorial(2 * k))
