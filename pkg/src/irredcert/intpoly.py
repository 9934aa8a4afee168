"""Exact dense polynomial arithmetic over the integers.

A polynomial is a tuple of arbitrary-precision coefficients, constant term
first, trailing zeros trimmed; the zero polynomial is the empty tuple.
Besides ring arithmetic, the module provides division by a monic divisor
and the expansion of a polynomial in powers of a monic polynomial phi,
i.e. f = sum(parts[i] * phi**i) with deg(parts[i]) < deg(phi).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass


class _NegInf:
    """Degree of the zero polynomial. Orders strictly below every number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __repr__(self):
        return "NEG_INF"


NEG_INF = _NegInf()


@dataclass(frozen=True, init=False)
class IntPoly:
    """Dense integer polynomial; immutable and hashable."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        """Degree of the polynomial; NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> int:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: IntPoly) -> IntPoly:
        return IntPoly(
            a + b
            for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __sub__(self, other: IntPoly) -> IntPoly:
        return IntPoly(
            a - b
            for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Evaluate by Horner's rule; works for int and Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> IntPoly:
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def content(self) -> int:
        """Gcd of the coefficients, nonnegative; 0 for the zero polynomial."""
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xpow = "x" if i == 1 else f"x^{i}"
                body = xpow if mag == 1 else f"{mag}*{xpow}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly({str(self)!r})"


ZERO = IntPoly()
ONE = IntPoly((1,))
X = IntPoly((0, 1))


def divrem_monic(f: IntPoly, phi: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Divide f by a monic phi of degree >= 1; exact over the integers.

    Returns (q, r) with f = q*phi + r and deg r < deg phi.
    """
    if not phi.is_monic or len(phi.coeffs) < 2:
        raise ValueError("divisor must be monic of degree >= 1")
    d = len(phi.coeffs) - 1
    rem = list(f.coeffs)
    if len(rem) <= d:
        return ZERO, f
    q = [0] * (len(rem) - d)
    for i in range(len(rem) - 1, d - 1, -1):
        c = rem[i]
        if c:
            q[i - d] = c
            for j, pc in enumerate(phi.coeffs):
                rem[i - d + j] -= c * pc
    return IntPoly(q), IntPoly(rem[:d])


@dataclass(frozen=True)
class PhiExpansion:
    """Coefficients of f written in powers of a monic phi.

    parts[i] is the coefficient of phi**i; every part has degree below
    deg(phi) and the last part is nonzero (the zero polynomial expands to
    an empty parts tuple).
    """

    phi: IntPoly
    parts: tuple[IntPoly, ...]

    def __post_init__(self):
        if not self.phi.is_monic or len(self.phi.coeffs) < 2:
            raise ValueError("phi must be monic of degree >= 1")
        d = self.phi.degree
        for part in self.parts:
            if not part.degree < d:
                raise ValueError("expansion part with degree >= deg(phi)")
        if self.parts and self.parts[-1].is_zero:
            raise ValueError("last expansion part must be nonzero")

    @property
    def top_index(self):
        """Largest power of phi appearing; NEG_INF for the zero polynomial."""
        return len(self.parts) - 1 if self.parts else NEG_INF

    def assemble(self) -> IntPoly:
        acc = ZERO
        for part in reversed(self.parts):
            acc = acc * self.phi + part
        return acc


def phi_expand(f: IntPoly, phi: IntPoly) -> PhiExpansion:
    """Unique expansion of f in powers of the monic polynomial phi."""
    parts = []
    rem = f
    while not rem.is_zero:
        rem, part = divrem_monic(rem, phi)
        parts.append(part)
    return PhiExpansion(phi, tuple(parts))


def phi_assemble(expansion: PhiExpansion) -> IntPoly:
    return expansion.assemble()


def content(f: IntPoly) -> int:
    return f.content()
