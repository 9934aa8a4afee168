"""p-adic valuations of integers, factorials, and integer polynomials.

The valuation of 0 (or of the zero polynomial) is a first-class INFINITY
value that orders above every number and absorbs addition, so polygon code
never has to special-case sentinel integers.
"""
from __future__ import annotations

from .intpoly import IntPoly


class _Infinity:
    """Valuation of zero. Orders strictly above every number; INF + x = INF."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


def is_prime(p: int) -> bool:
    """Deterministic trial-division primality test."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def vp(c: int, p: int):
    """Exponent of p in c; INFINITY for c = 0."""
    _require_prime(p)
    if c == 0:
        return INFINITY
    c = abs(c)
    v = 0
    while c % p == 0:
        c //= p
        v += 1
    return v


def digit_sum(m: int, p: int) -> int:
    """Sum of the base-p digits of m >= 0."""
    s = 0
    while m:
        m, r = divmod(m, p)
        s += r
    return s


def vp_factorial(m: int, p: int) -> int:
    """Valuation of m! at p, by the digit formula (m - s_p(m)) / (p - 1)."""
    _require_prime(p)
    if m < 0:
        raise ValueError("factorial of a negative integer")
    return (m - digit_sum(m, p)) // (p - 1)


def vpx(f: IntPoly, p: int):
    """Gaussian valuation: minimum of vp over the coefficients of f."""
    _require_prime(p)
    if f.is_zero:
        return INFINITY
    return min(vp(c, p) for c in f.coeffs if c != 0)
