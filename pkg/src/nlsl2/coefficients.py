"""Exact rational calculus for the coefficient systems of nonlinear sl(2).

Everything here is a pure function over fractions.Fraction values: Bernoulli
numbers (in the all-positive convention B_1 = 1/6, B_2 = 1/30, ...), odd
power sums, the triangular epsilon recursion, and the two maps between the
commutator coefficients beta_p (of (2 J3)^(2p+1)) and the structure-function
coefficients alpha_k (of x^k in the deformation polynomial phi).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb
from typing import Sequence

Rational = Fraction

_bernoulli_cache: list[Fraction] = [Fraction(1)]  # standard-convention B_0, B_1, ...
_bernoulli_lock = threading.Lock()


def _bernoulli_standard(m: int) -> Fraction:
    """Standard Bernoulli number B_m (B_1 = -1/2 convention), cached."""
    with _bernoulli_lock:
        while len(_bernoulli_cache) <= m:
            n = len(_bernoulli_cache)
            # sum_{k=0}^{n} C(n+1, k) B_k = 0  for n >= 1
            acc = Fraction(0)
            for k in range(n):
                acc += comb(n + 1, k) * _bernoulli_cache[k]
            _bernoulli_cache.append(-acc / (n + 1))
        return _bernoulli_cache[m]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number in the all-positive convention: B_1=1/6, B_2=1/30, ...

    This is |B_{2n}| of the standard even-index sequence, the convention used
    throughout the power-sum expansions here.
    """
    if n < 1:
        raise ValueError(f"bernoulli(n) requires n >= 1, got {n}")
    return abs(_bernoulli_standard(2 * n))


def power_sum_oracle(p: int, n: int) -> Fraction:
    """Brute-force sum_{r=1}^{n} r^(2p+1); the oracle for the closed forms."""
    return Fraction(sum(r ** (2 * p + 1) for r in range(1, n + 1)))


_epsilon_cache: dict[int, list[Fraction]] = {}
_epsilon_lock = threading.Lock()


def _epsilon_row(k: int) -> list[Fraction]:
    """All eps_r(k) for r = 1..k, as a list indexed r-1."""
    with _epsilon_lock:
        if k in _epsilon_cache:
            return _epsilon_cache[k]
        eps = [Fraction(0)] * k
        eps[k - 1] = Fraction(1)  # eps_k(k) = 1
        # Each successive relation (index jj = 1..k-1) determines eps_{k-jj}(k):
        #   (-1)^(jj+1) * (k+1)/jj * C(2k+1, 2jj-1) * B_jj
        #     = sum_{i=0}^{jj} eps_{k-i}(k) * C(k+1-i, 2jj-2i)
        for jj in range(1, k):
            lhs = (
                (-1) ** (jj + 1)
                * Fraction(k + 1, jj)
                * comb(2 * k + 1, 2 * jj - 1)
                * bernoulli(jj)
            )
            known = sum(
                eps[k - i - 1] * comb(k + 1 - i, 2 * jj - 2 * i) for i in range(jj)
            )
            eps[k - jj - 1] = lhs - known
        _epsilon_cache[k] = eps
        return eps


def epsilon(r: int, k: int) -> Fraction:
    """eps_r(k) from the triangular system; defined for 1 <= r <= k."""
    if not 1 <= r <= k:
        raise ValueError(f"epsilon(r, k) requires 1 <= r <= k, got r={r}, k={k}")
    return _epsilon_row(k)[r - 1]


def as_rationals(values: Sequence) -> list[Fraction]:
    """Coerce a coefficient vector to exact rationals."""
    return [Fraction(v) for v in values]


def alpha_from_beta(beta: Sequence) -> list[Fraction]:
    """Map commutator coefficients beta_0..beta_N to phi coefficients alpha_1..alpha_{N+1}.

    alpha_1 = beta_0 and, for l >= 2,
    alpha_l = sum_{k=l-1}^{N} beta_k * 2^(2k)/(k+1) * eps_{l-1}(k).
    """
    b = as_rationals(beta)
    n = len(b) - 1
    alpha = [b[0]]
    for l in range(2, n + 2):
        acc = Fraction(0)
        for k in range(l - 1, n + 1):
            acc += b[k] * Fraction(4**k, k + 1) * epsilon(l - 1, k)
        alpha.append(acc)
    return alpha


def beta_from_alpha(alpha: Sequence) -> list[Fraction]:
    """Inverse map: beta_p = 2^(-2p) * sum_{k=p+1}^{2p+1} alpha_k * C(k, 2k-2p-1).

    alpha_k beyond the declared order is treated as exact zero, so the output
    has the same length N+1 as the input.
    """
    a = as_rationals(alpha)
    n = len(a) - 1

    def alpha_at(k: int) -> Fraction:  # 1-based index, zero past the end
        return a[k - 1] if 1 <= k <= n + 1 else Fraction(0)

    beta = []
    for p in range(n + 1):
        acc = Fraction(0)
        for k in range(p + 1, 2 * p + 2):
            acc += alpha_at(k) * comb(k, 2 * k - 2 * p - 1)
        beta.append(acc / 4**p)
    return beta


def phi_eval(alpha: Sequence, x) -> Fraction:
    """phi(x) = sum_k alpha_k x^k (no constant term), exact for rational x."""
    a = as_rationals(alpha)
    xf = Fraction(x)
    acc = Fraction(0)
    for coeff in reversed(a):
        acc = (acc + coeff) * xf
    return acc


def phi_prime(alpha: Sequence, x) -> Fraction:
    """Derivative phi'(x), exact for rational x."""
    a = as_rationals(alpha)
    xf = Fraction(x)
    acc = Fraction(0)
    for k in range(len(a), 0, -1):
        acc = acc * xf + k * a[k - 1]
    return acc


def format_rational(value: Fraction) -> str:
    """Serialize a rational as 'p/q' (zero is '0/1')."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(s: str) -> Fraction:
    """Parse 'p/q' or decimal text to an exact rational."""
    return Fraction(s.strip())
