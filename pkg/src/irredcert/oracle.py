"""Brute-force ground truth for small-degree factorization over Q.

Two independent routes:

 * kronecker_factor: complete factorization into irreducibles for degree
   up to a cap (default 8), by the classical method of evaluating at small
   integers, enumerating divisor tuples of the values, interpolating
   candidate factors, and testing exact division. Slow but transparent,
   which is the point of an oracle.
 * degree_set_sieve: for squarefree f, intersects across primes the
   subset sums of mod-p irreducible factor degrees. Can prove
   irreducibility (only {0, deg f} survives) but never reducibility.

Nothing here looks at Newton polygons, so agreement with the certifiers
is meaningful evidence.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .gfpoly import NotSquarefree, ddf_degrees, gf_derivative, gf_gcd, reduce
from .intpoly import IntPoly
from .valuation import is_prime


class DegreeCapExceeded(ValueError):
    """kronecker_factor refuses degrees above its cap; use the sieve."""


class NotSquarefreeOverQ(ValueError):
    """degree_set_sieve requires gcd(f, f') = 1 over Q."""


@dataclass(frozen=True)
class Factorization:
    """content * product(poly**mult) reassembles the input exactly.

    Factors are primitive with positive leading coefficient, irreducible
    over Q, and sorted by (degree, coefficient tuple) for reproducibility.
    """

    content: int
    factors: tuple[tuple[IntPoly, int], ...]

    def reassemble(self) -> IntPoly:
        acc = IntPoly((self.content,))
        for poly, mult in self.factors:
            acc = acc * poly**mult
        return acc

    @property
    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def to_json_dict(self) -> dict:
        return {
            "content": str(self.content),
            "factors": [
                {"poly": str(poly), "mult": mult} for poly, mult in self.factors
            ],
        }


class SieveVerdict(Enum):
    PROVEN_IRREDUCIBLE = "ProvenIrreducible"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class SieveOutcome:
    verdict: SieveVerdict
    degree_sets: dict[int, frozenset[int]]

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "degree_sets": {
                str(p): sorted(s) for p, s in sorted(self.degree_sets.items())
            },
        }


def rational_roots(f: IntPoly) -> list[Fraction]:
    """All rational roots, by divisor enumeration and exact evaluation."""
    if f.is_zero:
        raise ValueError("every rational is a root of 0")
    roots = []
    low = 0
    while f.coeffs[low] == 0:
        low += 1
    if low > 0:
        roots.append(Fraction(0))
    trailing = abs(f.coeffs[low])
    leading = abs(f.leading)
    for num in _divisors(trailing):
        for den in _divisors(leading):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and f(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def _divisors(v: int) -> list[int]:
    v = abs(v)
    small, large = [], []
    d = 1
    while d * d <= v:
        if v % d == 0:
            small.append(d)
            if d != v // d:
                large.append(v // d)
        d += 1
    return small + large[::-1]


def _exact_div(f: IntPoly, g: IntPoly) -> IntPoly | None:
    """f // g over Z when g divides f exactly, else None."""
    if g.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero:
        return IntPoly()
    if f.degree < g.degree:
        return None
    rem = list(f.coeffs)
    q = [0] * (len(rem) - len(g.coeffs) + 1)
    glead = g.leading
    for i in range(len(rem) - 1, len(g.coeffs) - 2, -1):
        c = rem[i]
        if c == 0:
            continue
        step, r = divmod(c, glead)
        if r:
            return None
        q[i - (len(g.coeffs) - 1)] = step
        for j, gc in enumerate(g.coeffs):
            rem[i - (len(g.coeffs) - 1) + j] -= step * gc
    if any(rem[: len(g.coeffs) - 1]):
        return None
    return IntPoly(q)


def _primitive_positive(f: IntPoly) -> tuple[int, IntPoly]:
    """Split off content with sign so the primitive part has positive lead."""
    c = f.content()
    if f.leading < 0:
        c = -c
    return c, IntPoly(x // c for x in f.coeffs)


def kronecker_factor(f: IntPoly, cap: int = 8) -> Factorization:
    """Complete factorization into irreducibles over Q, for deg f <= cap."""
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if f.degree > cap:
        raise DegreeCapExceeded(f"degree {f.degree} exceeds cap {cap}")
    content, g = _primitive_positive(f)
    if g.degree == 0:
        return Factorization(content, ())

    found: list[IntPoly] = []
    # linear factors via rational roots, with multiplicity
    for root in rational_roots(g):
        lin = IntPoly((-root.numerator, root.denominator))
        while True:
            quo = _exact_div(g, lin)
            if quo is None:
                break
            found.append(lin)
            g = quo

    d = 2
    while g.degree >= 1 and 2 * d <= g.degree:
        h = _find_factor(g, d)
        if h is None:
            d += 1
            continue
        found.append(h)
        g = _exact_div(g, h)
    if g.degree >= 1:
        found.append(g)

    found.sort(key=lambda h: (h.degree, h.coeffs))
    grouped = [(h, len(list(run))) for h, run in itertools.groupby(found)]
    return Factorization(content, tuple(grouped))


def _find_factor(g: IntPoly, d: int) -> IntPoly | None:
    """A degree-d factor of g, or None.

    g has no rational roots here, so g is nonzero at every integer.
    Candidate factors interpolate divisor tuples of g's values at d+1
    points; a tuple survives only if consecutive differences respect
    (x_i - x_j) | (t_i - t_j), the interpolation has integer coefficients,
    degree exactly d, and leading/constant coefficients dividing g's.
    """
    pool = [0] + [s * m for m in range(1, d + 3) for s in (1, -1)]
    pool = pool[: 2 * d + 3]
    values = {x: g(x) for x in pool}
    points = sorted(pool, key=lambda x: len(_divisors(values[x])))[: d + 1]
    points.sort()

    # integer Lagrange data: g = sum t_i * basis_i / weight_i
    weights = []
    numerators = []
    for i, xi in enumerate(points):
        w = 1
        num = IntPoly((1,))
        for j, xj in enumerate(points):
            if j != i:
                w *= xi - xj
                num = num * IntPoly((-xj, 1))
        weights.append(w)
        numerators.append(num)
    common = math.lcm(*weights)
    scaled = [
        [c * (common // w) for c in num.coeffs]
        for num, w in zip(numerators, weights)
    ]

    divisor_lists = []
    for i, x in enumerate(points):
        divs = _divisors(values[x])
        divisor_lists.append(divs if i == 0 else [s for v in divs for s in (v, -v)])

    lead_g = g.leading
    const_g = g(0)

    def search(idx: int, chosen: list[int]):
        if idx == len(points):
            coeffs = [
                sum(t * scaled[i][k] for i, t in enumerate(chosen))
                for k in range(d + 1)
            ]
            if coeffs[d] == 0 or any(c % common for c in coeffs):
                return None
            h = IntPoly(c // common for c in coeffs)
            if h.leading < 0:
                h = -h
            h0 = h(0)
            if h0 == 0 or lead_g % h.leading or const_g % h0:
                return None
            if _exact_div(g, h) is not None:
                return h
            return None
        xi = points[idx]
        for t in divisor_lists[idx]:
            if all((t - chosen[j]) % (xi - points[j]) == 0 for j in range(idx)):
                result = search(idx + 1, chosen + [t])
                if result is not None:
                    return result
        return None

    return search(0, [])


def primes_stream():
    n = 2
    while True:
        if is_prime(n):
            yield n
        n += 1


def _squarefree_over_q(f: IntPoly) -> bool:
    return _poly_gcd_z(f, f.derivative()).degree == 0


def _pseudo_rem(f: IntPoly, g: IntPoly) -> IntPoly:
    """Remainder of f by g up to a power of g's leading coefficient."""
    r = f
    while not r.is_zero and r.degree >= g.degree:
        shift = r.degree - g.degree
        r = r * g.leading - IntPoly((0,) * shift + (r.leading,)) * g
    return r


def _poly_gcd_z(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd over Z via the primitive Euclidean algorithm."""
    if f.is_zero:
        return _primitive_positive(g)[1] if not g.is_zero else IntPoly()
    if g.is_zero:
        return _primitive_positive(f)[1]
    f = _primitive_positive(f)[1]
    g = _primitive_positive(g)[1]
    if f.degree < g.degree:
        f, g = g, f
    while not g.is_zero:
        rem = _pseudo_rem(f, g)
        f, g = g, (_primitive_positive(rem)[1] if not rem.is_zero else IntPoly())
    return f


def degree_set_sieve(f: IntPoly, prime_budget: int = 10) -> SieveOutcome:
    """Feasible factor-degree sets intersected across primes.

    Uses the first prime_budget primes whose reduction is usable (prime
    does not divide the leading coefficient, reduction squarefree); stops
    early once only {0, deg f} survives. Never claims reducibility.
    """
    if f.is_zero or f.degree < 1:
        raise ValueError("sieve needs a nonzero polynomial of degree >= 1")
    if not _squarefree_over_q(f):
        raise NotSquarefreeOverQ("f has a repeated factor over Q")
    n = f.degree
    degree_sets: dict[int, frozenset[int]] = {}
    feasible: frozenset[int] | None = None
    used = 0
    for p in primes_stream():
        if used == prime_budget:
            break
        if f.leading % p == 0:
            continue
        fbar = reduce(f, p)
        if gf_gcd(fbar, gf_derivative(fbar)).degree != 0:
            continue
        counts = ddf_degrees(fbar)
        sums = {0}
        for deg, cnt in counts.items():
            for _ in range(cnt):
                sums |= {s + deg for s in sums}
        degree_sets[p] = frozenset(sums)
        feasible = degree_sets[p] if feasible is None else feasible & degree_sets[p]
        used += 1
        if feasible == frozenset({0, n}):
            break
    proven = feasible is not None and feasible == frozenset({0, n})
    return SieveOutcome(
        SieveVerdict.PROVEN_IRREDUCIBLE if proven else SieveVerdict.INCONCLUSIVE,
        degree_sets,
    )
