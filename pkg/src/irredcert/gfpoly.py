"""Polynomial arithmetic over Z/pZ, Rabin irreducibility, and DDF degree counts.

Residues are kept in canonical form [0, p) and trailing zeros trimmed, so
equality is structural. Only what the irreducibility criteria and the
factorization oracle need lives here: gcd, Frobenius powers, Rabin's
irreducibility test, and distinct-degree factor counting.
"""
from __future__ import annotations

from dataclasses import dataclass

from .intpoly import IntPoly
from .valuation import _require_prime


class NotSquarefree(Exception):
    """Raised by ddf_degrees when gcd(f, f') != 1 modulo p."""


@dataclass(frozen=True)
class GfPoly:
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("modulus must be at least 2")
        cs = [c % self.p for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial (fine mod p, nothing sums degrees)."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __str__(self) -> str:
        return f"GF({self.p})[{', '.join(map(str, self.coeffs))}]"


def reduce(f: IntPoly, p: int) -> GfPoly:
    """Reduce an integer polynomial coefficient-wise modulo the prime p."""
    _require_prime(p)
    return GfPoly(p, f.coeffs)


def _check_same_modulus(a: GfPoly, b: GfPoly) -> int:
    if a.p != b.p:
        raise ValueError(f"modulus mismatch: {a.p} vs {b.p}")
    return a.p


def gf_add(a: GfPoly, b: GfPoly) -> GfPoly:
    p = _check_same_modulus(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    return GfPoly(p, tuple((a.coeffs[i] if i < len(a.coeffs) else 0)
                           + (b.coeffs[i] if i < len(b.coeffs) else 0)
                           for i in range(n)))


def gf_sub(a: GfPoly, b: GfPoly) -> GfPoly:
    p = _check_same_modulus(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    return GfPoly(p, tuple((a.coeffs[i] if i < len(a.coeffs) else 0)
                           - (b.coeffs[i] if i < len(b.coeffs) else 0)
                           for i in range(n)))


def gf_mul(a: GfPoly, b: GfPoly) -> GfPoly:
    p = _check_same_modulus(a, b)
    if a.is_zero or b.is_zero:
        return GfPoly(p, ())
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca:
            for j, cb in enumerate(b.coeffs):
                out[i + j] = (out[i + j] + ca * cb) % p
    return GfPoly(p, tuple(out))


def gf_divmod(a: GfPoly, b: GfPoly) -> tuple[GfPoly, GfPoly]:
    p = _check_same_modulus(a, b)
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    inv_lead = pow(b.leading, p - 2, p)
    rem = list(a.coeffs)
    db = b.degree
    if len(rem) <= db:
        return GfPoly(p, ()), a
    q = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] % p
        if c:
            factor = (c * inv_lead) % p
            q[i - db] = factor
            for j, bc in enumerate(b.coeffs):
                rem[i - db + j] = (rem[i - db + j] - factor * bc) % p
    return GfPoly(p, tuple(q)), GfPoly(p, tuple(rem[:db]))


def gf_mod(a: GfPoly, b: GfPoly) -> GfPoly:
    return gf_divmod(a, b)[1]


def gf_monic(a: GfPoly) -> GfPoly:
    """Scale a nonzero polynomial to leading coefficient 1; 0 stays 0."""
    if a.is_zero or a.leading == 1:
        return a
    inv = pow(a.leading, a.p - 2, a.p)
    return GfPoly(a.p, tuple(c * inv for c in a.coeffs))


def gf_gcd(a: GfPoly, b: GfPoly) -> GfPoly:
    """Monic gcd by the Euclidean algorithm; gcd(a, 0) is monic(a)."""
    _check_same_modulus(a, b)
    while not b.is_zero:
        a, b = b, gf_mod(a, b)
    return gf_monic(a)


def gf_pow_mod(base: GfPoly, e: int, mod: GfPoly) -> GfPoly:
    result = GfPoly(mod.p, (1,))
    base = gf_mod(base, mod)
    while e:
        if e & 1:
            result = gf_mod(gf_mul(result, base), mod)
        base = gf_mod(gf_mul(base, base), mod)
        e >>= 1
    return result


def gf_derivative(a: GfPoly) -> GfPoly:
    return GfPoly(a.p, tuple(i * c for i, c in enumerate(a.coeffs) if i > 0))


def gf_x(p: int) -> GfPoly:
    return GfPoly(p, (0, 1))


def gf_powmod_frobenius(f: GfPoly, k: int) -> GfPoly:
    """x^(p^k) reduced modulo f, by k successive p-th powerings."""
    if f.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    if k < 1:
        raise ValueError("k must be positive")
    h = gf_mod(gf_x(f.p), f)
    for _ in range(k):
        h = gf_pow_mod(h, f.p, f)
    return h


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_mod_p(f: GfPoly) -> bool:
    """Rabin's test: f of degree d is irreducible over F_p iff
    x^(p^d) = x (mod f) and gcd(x^(p^(d/q)) - x, f) = 1 for every prime q | d.
    """
    d = f.degree
    if d < 1:
        return False
    f = gf_monic(f)
    x = gf_x(f.p)
    frob = {}
    h = gf_mod(x, f)
    for j in range(1, d + 1):
        h = gf_pow_mod(h, f.p, f)
        frob[j] = h
    if not gf_sub(frob[d], gf_mod(x, f)).is_zero:
        return False
    for q in _prime_factors(d):
        g = gf_gcd(gf_sub(frob[d // q], gf_mod(x, f)), f)
        if g.degree != 0:
            return False
    return True


def ddf_degrees(f: GfPoly) -> dict[int, int]:
    """Distinct-degree factor counts of a squarefree monic f over F_p.

    Returns {degree: number of irreducible factors of that degree}. Raises
    NotSquarefree when gcd(f, f') != 1, signalling callers to skip this prime.
    """
    if f.degree < 1:
        raise ValueError("ddf needs degree >= 1")
    f = gf_monic(f)
    if gf_gcd(f, gf_derivative(f)).degree != 0:
        raise NotSquarefree(f"not squarefree mod {f.p}")
    counts: dict[int, int] = {}
    x = gf_x(f.p)
    h = gf_mod(x, f)
    d = 0
    while f.degree > 0:
        d += 1
        if 2 * d > f.degree:
            counts[f.degree] = counts.get(f.degree, 0) + 1
            break
        h = gf_pow_mod(h, f.p, f)
        g = gf_gcd(gf_sub(h, gf_mod(x, f)), f)
        if g.degree > 0:
            counts[d] = counts.get(d, 0) + g.degree // d
            f = gf_divmod(f, g)[0]
            h = gf_mod(h, f)
    return counts
