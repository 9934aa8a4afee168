"""Irreducibility certifiers built on phi-Newton polygons.

Five checkers share a common certificate format:

 * check_schur: truncated-exponential shape with integer top coefficient,
   phi irreducible modulo all primes up to n.
 * check_coleman: same shape with monic top term, phi irreducible modulo
   the primes dividing n; the polygon must match the closed-form factorial
   edges and the conclusion goes through the Ore factorization rule.
 * check_filaseta_window: excludes factor degrees from an interval,
   given polygon and coefficient conditions.
 * check_schonemann / check_gen_schonemann: the classical criterion for
   phi**n + p*M and its valuation-ratio generalization.

Every checker verifies its hypotheses mechanically and returns a
Certificate carrying one record per hypothesis plus a structured trace
(chosen primes, polygons, exact slopes) that can be replayed bit for bit.
A HypothesisFailed verdict means "this criterion does not apply here",
never "reducible"; reducibility witnesses only come from the oracle
module's explicit factorizations.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .gfpoly import gf_mul, is_irreducible_mod_p, reduce
from .intpoly import IntPoly, phi_expand
from .polygon import NewtonPolygon, build_polygon, polygon_points, rightmost_slope
from .valuation import _require_prime, vpx


class Verdict(Enum):
    IRREDUCIBLE = "Irreducible"
    REDUCIBLE = "Reducible"
    EXCLUSION_WINDOW = "ExclusionWindow"
    HYPOTHESIS_FAILED = "HypothesisFailed"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class HypothesisRecord:
    name: str
    holds: bool
    detail: str = ""


@dataclass(frozen=True)
class Certificate:
    criterion: str
    verdict: Verdict
    window: tuple[int, int] | None = None
    hypotheses: tuple[HypothesisRecord, ...] = ()
    trace: tuple[dict, ...] = ()

    def __post_init__(self):
        if self.verdict is Verdict.EXCLUSION_WINDOW:
            if self.window is None or not 0 < self.window[0] < self.window[1]:
                raise ValueError("exclusion window must satisfy 0 < lo < hi")
        if self.verdict is Verdict.IRREDUCIBLE and not all(
            h.holds for h in self.hypotheses
        ):
            raise ValueError("Irreducible verdict with a failed hypothesis record")

    @property
    def all_hold(self) -> bool:
        return all(h.holds for h in self.hypotheses)

    def to_json_dict(self) -> dict:
        if self.verdict is Verdict.EXCLUSION_WINDOW:
            verdict = {"exclusion_window": list(self.window)}
        else:
            verdict = self.verdict.value
        return {
            "criterion": self.criterion,
            "verdict": verdict,
            "hypotheses": [
                {"name": h.name, "holds": h.holds, "detail": h.detail}
                for h in self.hypotheses
            ],
            "trace": [dict(step) for step in self.trace],
        }


def slope_str(s: Fraction) -> str:
    return f"{s.numerator}/{s.denominator}"


def polygon_json(np: NewtonPolygon, p: int) -> dict:
    return {
        "prime": p,
        "vertices": [[v.x, v.y] for v in np.vertices],
        "edges": [
            {"dx": e.dx, "dy": e.dy, "slope": slope_str(e.slope)} for e in np.edges
        ],
    }


class _Records:
    """Accumulates hypothesis records and tracks whether all hold so far."""

    def __init__(self):
        self.items: list[HypothesisRecord] = []

    def add(self, name: str, holds: bool, detail: str = "") -> bool:
        self.items.append(HypothesisRecord(name, bool(holds), detail))
        return bool(holds)

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.items)

    def tuple(self) -> tuple[HypothesisRecord, ...]:
        return tuple(self.items)


def _require_phi(phi: IntPoly) -> None:
    if not phi.is_monic or len(phi.coeffs) < 2:
        raise ValueError("phi must be monic of degree >= 1")


def primes_upto(n: int) -> list[int]:
    """All primes <= n by a small sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


def prime_divisors(n: int) -> list[int]:
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


def largest_prime_factor(n: int) -> int:
    if n < 2:
        raise ValueError("no prime factor")
    return prime_divisors(n)[-1]


def base_p_terms(n: int, p: int) -> list[tuple[int, int]]:
    """Nonzero base-p digits of n as (digit, exponent), lowest exponent first."""
    out = []
    e = 0
    while n:
        n, digit = divmod(n, p)
        if digit:
            out.append((digit, e))
        e += 1
    return out


def factorial_quotients(n: int) -> list[int]:
    """The weights n!/i! for i = 0..n."""
    weights = [1] * (n + 1)
    for i in range(n - 1, -1, -1):
        weights[i] = weights[i + 1] * (i + 1)
    return weights


def factorial_poly(phi: IntPoly, n: int) -> IntPoly:
    """The monic polynomial sum of (n!/i!) * phi**i for i = 0..n."""
    return truncated_exp_poly(phi, n, [IntPoly((1,))] * (n + 1))


def truncated_exp_poly(phi: IntPoly, n: int, a_parts) -> IntPoly:
    """n! times the truncated exponential sum of a_i * phi**i / i!.

    a_parts lists a_0..a_n; each must have degree below deg(phi), so the
    phi-expansion of the result has parts exactly (n!/i!) * a_i.
    """
    _require_phi(phi)
    if len(a_parts) != n + 1:
        raise ValueError(f"need {n + 1} coefficient polynomials, got {len(a_parts)}")
    weights = factorial_quotients(n)
    acc = IntPoly()
    for i in range(n, -1, -1):
        acc = acc * phi + a_parts[i] * weights[i]
    return acc


def expected_factorial_edges(n: int, p: int) -> list[tuple[int, int, Fraction]]:
    """Closed-form polygon edges of the factorial polynomial at a prime p | n.

    Writing n in base p as a sum of terms c*p**m with increasing m, there is
    one edge per term: horizontal length c*p**m, slope (p**m - 1)/(p**m *(p-1)).
    """
    _require_prime(p)
    if n < 1 or n % p != 0:
        raise ValueError("closed form requires p | n")
    edges = []
    for digit, m in base_p_terms(n, p):
        pm = p**m
        dx = digit * pm
        dy = digit * (pm - 1) // (p - 1)
        edges.append((dx, dy, Fraction(pm - 1, pm * (p - 1))))
    return edges


def sylvester_prime(n: int, k: int) -> tuple[int, int, int]:
    """Deterministic prime for the factor-degree exclusion at window size k.

    Scans w = n, n-1, ..., n-k+1 and returns the first w whose largest
    prime factor p is at least k+1, as (p, witness, ell) where ell = n - w
    is the unique index in 0..k-1 with p | (n - ell). Existence is the
    Sylvester-Schur theorem (m = n-k >= k guarantees such a w).
    """
    if not 1 <= k <= n // 2:
        raise ValueError("need 1 <= k <= n/2")
    for w in range(n, n - k, -1):
        p = largest_prime_factor(w)
        if p >= k + 1:
            return p, w, n - w
    raise AssertionError(f"no admissible prime for n={n}, k={k}")


def _phi_power_shape(f: IntPoly, phi: IntPoly, n: int, top: IntPoly, q: int) -> bool:
    """Whether f mod q equals top * phi**n mod q."""
    phibar = reduce(phi, q)
    expect = reduce(top, q)
    for _ in range(n):
        expect = gf_mul(expect, phibar)
    return reduce(f, q) == expect


def check_filaseta_window(
    f: IntPoly,
    phi: IntPoly,
    p: int,
    k: int,
    ell: int,
    a_parts,
) -> Certificate:
    """Certify that sum(a_i * f_i * phi**i) has no factor with degree in
    [(ell+1)*deg(phi), (k+1)*deg(phi)).

    f supplies the phi-expansion parts f_i (f itself must be monic, not
    divisible by phi); a_parts lists a_0..a_n. Verified hypotheses: phi
    irreducible mod p, every f_i with i <= n-ell-1 has positive valuation,
    the rightmost polygon slope of f is below 1/k, deg a_i < deg(phi) -
    deg(f_i), a_0 has unit content mod p, and the leading coefficient of
    a_n is prime to p. All slope comparisons are exact.
    """
    _require_phi(phi)
    _require_prime(p)
    if f.is_zero:
        raise ValueError("f must be nonzero")
    expansion = phi_expand(f, phi)
    parts = expansion.parts
    n = len(parts) - 1
    if not (0 <= ell < k and 2 * k <= n):
        raise ValueError("need 0 <= ell < k <= n/2 for the expansion length")
    if len(a_parts) != n + 1:
        raise ValueError(f"need {n + 1} multiplier polynomials, got {len(a_parts)}")

    rec = _Records()
    rec.add(
        "phi-irreducible-mod-p",
        is_irreducible_mod_p(reduce(phi, p)),
        f"phi mod {p}",
    )
    rec.add("f-monic", f.is_monic, f"leading coefficient {f.leading}")
    phi_free = rec.add("phi-not-dividing-f", not parts[0].is_zero, "f_0 != 0")

    bad = [i for i in range(n - ell) if vpx(parts[i], p) == 0]
    rec.add(
        "low-parts-p-divisible",
        not bad,
        f"v_p(f_i) > 0 for i <= {n - ell - 1}"
        + (f"; fails at i={bad[0]}" if bad else ""),
    )

    np = None
    slope = None
    if phi_free:
        np = build_polygon(polygon_points(f, phi, p))
        slope = rightmost_slope(np)
        rec.add(
            "rightmost-slope-below-1/k",
            slope < Fraction(1, k),
            f"slope {slope_str(slope)} vs 1/{k}",
        )

    bad_deg = []
    vacuous = []
    for i in range(n + 1):
        if parts[i].is_zero:
            vacuous.append(i)
            continue
        if not a_parts[i].degree < phi.degree - parts[i].degree:
            bad_deg.append(i)
    rec.add(
        "multiplier-degrees",
        not bad_deg,
        (f"fails at i={bad_deg[0]}" if bad_deg else "deg a_i < deg phi - deg f_i")
        + (f"; vacuous at i in {vacuous}" if vacuous else ""),
    )
    rec.add(
        "a0-unit-content",
        not a_parts[0].is_zero and vpx(a_parts[0], p) == 0,
        f"content of a_0 prime to {p}",
    )
    rec.add(
        "an-leading-coprime",
        a_parts[n].leading % p != 0,
        f"leading coefficient of a_n is {a_parts[n].leading}",
    )

    lo = (ell + 1) * phi.degree
    hi = (k + 1) * phi.degree
    step = {"k": k, "prime": p, "ell": ell, "slope_bound": f"1/{k}"}
    if np is not None:
        step["polygon"] = polygon_json(np, p)
        step["slope"] = slope_str(slope)
    if rec.all_hold:
        step["window"] = [lo, hi]
        return Certificate(
            "FilasetaWindow",
            Verdict.EXCLUSION_WINDOW,
            window=(lo, hi),
            hypotheses=rec.tuple(),
            trace=(step,),
        )
    return Certificate(
        "FilasetaWindow",
        Verdict.HYPOTHESIS_FAILED,
        hypotheses=rec.tuple(),
        trace=(step,),
    )


@dataclass(frozen=True)
class SchurInput:
    """Input bundle for check_schur: f = sum (n!/i!) a_i phi**i + a_n phi**n.

    a_parts lists a_0..a_{n-1}; the top coefficient a_n is an integer by
    the theorem's shape (a polynomial top coefficient breaks the result,
    so the type rejects it outright).
    """

    phi: IntPoly
    n: int
    a_parts: tuple[IntPoly, ...]
    a_n: int

    def __post_init__(self):
        _require_phi(self.phi)
        if not isinstance(self.a_n, int):
            raise TypeError("top coefficient a_n must be an integer")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        object.__setattr__(self, "a_parts", tuple(self.a_parts))
        if len(self.a_parts) != self.n:
            raise ValueError(f"need a_0..a_{self.n - 1}, got {len(self.a_parts)}")
        for a in self.a_parts:
            if not a.degree < self.phi.degree:
                raise ValueError("every a_i must have degree < deg phi")
        if self.a_parts[0].is_zero:
            raise ValueError("a_0 must be nonzero")
        if self.a_n == 0:
            raise ValueError("a_n must be nonzero")

    @property
    def full_parts(self) -> tuple[IntPoly, ...]:
        return self.a_parts + (IntPoly((self.a_n,)),)

    def polynomial(self) -> IntPoly:
        return truncated_exp_poly(self.phi, self.n, self.full_parts)


def check_schur(inp: SchurInput) -> Certificate:
    """Certify irreducibility of the generalized truncated exponential.

    Hypotheses: n >= 2; phi irreducible modulo every prime up to n; a_n and
    the content of a_0 prime to every prime up to n (hence to n!). The
    certificate then records, for each window size k up to n/2, the chosen
    prime, the factorial polygon, and the exact slope bound; plus the
    mod-q power shape supporting the no-small-factor step.
    """
    phi, n = inp.phi, inp.n
    rec = _Records()
    trace: list[dict] = []
    if not rec.add("n-at-least-2", n >= 2, f"n = {n}"):
        return Certificate(
            "Schur", Verdict.HYPOTHESIS_FAILED, hypotheses=rec.tuple()
        )

    small_primes = primes_upto(n)
    bad = [q for q in small_primes if not is_irreducible_mod_p(reduce(phi, q))]
    rec.add(
        "phi-irreducible-mod-small-primes",
        not bad,
        f"primes {small_primes}" + (f"; reducible mod {bad[0]}" if bad else ""),
    )
    bad = [q for q in small_primes if inp.a_n % q == 0]
    rec.add(
        "an-coprime-to-n-factorial",
        not bad,
        f"a_n = {inp.a_n}" + (f"; divisible by {bad[0]}" if bad else ""),
    )
    c0 = inp.a_parts[0].content()
    bad = [q for q in small_primes if c0 % q == 0]
    rec.add(
        "a0-content-coprime-to-n-factorial",
        not bad,
        f"content(a_0) = {c0}" + (f"; divisible by {bad[0]}" if bad else ""),
    )

    f_big = inp.polynomial()
    q0 = prime_divisors(n)[0]
    shape_ok = _phi_power_shape(f_big, phi, n, IntPoly((inp.a_n,)), q0)
    rec.add(
        "mod-q-power-shape",
        shape_ok,
        f"f = a_n * phi^{n} mod {q0}; with phi irreducible mod {q0} this "
        f"rules out factors of degree below {phi.degree}",
    )
    trace.append({"step": "no-small-factor", "prime": q0, "phi-power": n})

    f_fact = factorial_poly(phi, n)
    ok = rec.all_hold
    for k in range(1, n // 2 + 1):
        p, witness, ell = sylvester_prime(n, k)
        inner = check_filaseta_window(f_fact, phi, p, k, ell, inp.full_parts)
        step = dict(inner.trace[0])
        step["witness"] = witness
        trace.append(step)
        if inner.verdict is not Verdict.EXCLUSION_WINDOW:
            failed = [h for h in inner.hypotheses if not h.holds]
            for h in failed:
                rec.add(f"k={k}:{h.name}", False, h.detail)
            ok = False
            continue
        assert inner.window == ((ell + 1) * phi.degree, (k + 1) * phi.degree)

    if ok:
        # every degree 1..n*deg(phi)/2 falls in the mod-q step or a window
        covered = set(range(1, phi.degree))
        for step in trace[1:]:
            lo, hi = step["window"]
            covered.update(range(lo, hi))
        need = range(1, n * phi.degree // 2 + 1)
        assert all(d in covered for d in need), "exclusion windows leave a gap"
        trace.append({"step": "conclusion", "degree": n * phi.degree})
        return Certificate(
            "Schur",
            Verdict.IRREDUCIBLE,
            hypotheses=rec.tuple(),
            trace=tuple(trace),
        )
    return Certificate(
        "Schur", Verdict.HYPOTHESIS_FAILED, hypotheses=rec.tuple(), trace=tuple(trace)
    )


def check_coleman(phi: IntPoly, n: int, a_parts) -> Certificate:
    """Certify irreducibility with monic top term and primes dividing n only.

    Hypotheses: n >= 2; phi irreducible mod every prime p | n; the content
    of the product of the a_i prime to n. For each p | n the polygon of the
    assembled polynomial must match the closed-form factorial edges, whose
    slope denominators are all divisible by the exact power of p in n; the
    Ore factorization rule then forces every factor degree to be a multiple
    of n * deg(phi), and there is nothing below the full degree.
    """
    _require_phi(phi)
    if n < 1:
        raise ValueError("n must be at least 1")
    a_parts = tuple(a_parts)
    if len(a_parts) != n:
        raise ValueError(f"need a_0..a_{n - 1}, got {len(a_parts)}")
    for a in a_parts:
        if not a.degree < phi.degree:
            raise ValueError("every a_i must have degree < deg phi")

    rec = _Records()
    trace: list[dict] = []
    if not rec.add("n-at-least-2", n >= 2, f"n = {n}"):
        return Certificate(
            "Coleman", Verdict.HYPOTHESIS_FAILED, hypotheses=rec.tuple()
        )

    divisors = prime_divisors(n)
    bad = [p for p in divisors if not is_irreducible_mod_p(reduce(phi, p))]
    rec.add(
        "phi-irreducible-mod-divisors",
        not bad,
        f"primes {divisors}" + (f"; reducible mod {bad[0]}" if bad else ""),
    )
    contents = [a.content() for a in a_parts]
    bad = [p for p in divisors if any(c % p == 0 for c in contents)]
    rec.add(
        "product-content-coprime-to-n",
        not bad,
        "content of the a_i product is prime to n"
        + (f"; divisible by {bad[0]}" if bad else ""),
    )

    full = a_parts + (IntPoly((1,)),)
    f_big = truncated_exp_poly(phi, n, full)
    polygons_ok = rec.all_hold
    if polygons_ok:
        for p in divisors:
            m1 = 0
            nn = n
            while nn % p == 0:
                nn //= p
                m1 += 1
            np = build_polygon(polygon_points(f_big, phi, p))
            expected = expected_factorial_edges(n, p)
            got = [(e.dx, e.dy, e.slope) for e in np.edges]
            match = got == expected
            rec.add(
                "polygon-matches-closed-form",
                match,
                f"p = {p}: {len(expected)} edges, slopes "
                + ", ".join(slope_str(s) for _, _, s in expected),
            )
            denom_ok = all(s.denominator % p**m1 == 0 for _, _, s in expected)
            rec.add(
                "slope-denominators-divisible",
                denom_ok,
                f"p^{m1} divides every edge slope denominator at p = {p}",
            )
            trace.append(
                {
                    "prime": p,
                    "exact-power": m1,
                    "polygon": polygon_json(np, p),
                    "ore-rule": f"{p}^{m1} * deg(phi) divides every "
                    f"p-adic factor degree",
                }
            )
            polygons_ok = polygons_ok and match and denom_ok

    if polygons_ok and rec.all_hold:
        trace.append(
            {
                "step": "conclusion",
                "degree": n * phi.degree,
                "detail": f"all factor degrees are multiples of "
                f"{n} * {phi.degree}",
            }
        )
        return Certificate(
            "Coleman",
            Verdict.IRREDUCIBLE,
            hypotheses=rec.tuple(),
            trace=tuple(trace),
        )
    return Certificate(
        "Coleman",
        Verdict.HYPOTHESIS_FAILED,
        hypotheses=rec.tuple(),
        trace=tuple(trace),
    )


def check_schonemann(f: IntPoly, phi: IntPoly, p: int) -> Certificate:
    """Classical criterion for f = phi**n + p*M with phi, M coprime mod p.

    In expansion terms: the top part is 1, all lower parts have positive
    valuation, and the constant part has valuation exactly 1 (equivalent to
    phi not dividing M mod p). The polygon is then the single edge from
    (0,0) to (n,1).
    """
    _require_phi(phi)
    _require_prime(p)
    if f.is_zero:
        raise ValueError("f must be nonzero")
    parts = phi_expand(f, phi).parts
    n = len(parts) - 1

    rec = _Records()
    rec.add(
        "phi-irreducible-mod-p", is_irreducible_mod_p(reduce(phi, p)), f"phi mod {p}"
    )
    rec.add(
        "top-part-one",
        parts[n] == IntPoly((1,)) and n >= 1,
        f"f = phi^{n} + {p}*M with deg M < {n} * deg(phi)",
    )
    bad = [i for i in range(n) if vpx(parts[i], p) < 1]
    rec.add(
        "low-parts-p-divisible",
        not bad,
        "all parts below the top divisible by p"
        + (f"; fails at i={bad[0]}" if bad else ""),
    )
    v0 = vpx(parts[0], p)
    rec.add(
        "constant-part-valuation-one",
        v0 == 1,
        f"v_p(f_0) = {v0}; equals 1 exactly when phi and M are coprime mod {p}",
    )

    trace: list[dict] = []
    if rec.all_hold:
        np = build_polygon(polygon_points(f, phi, p))
        single = [(e.dx, e.dy, e.slope) for e in np.edges] == [
            (n, 1, Fraction(1, n))
        ]
        rec.add("single-edge-polygon", single, f"one edge (0,0)-({n},1)")
        trace.append({"prime": p, "polygon": polygon_json(np, p)})
        if single:
            return Certificate(
                "Schonemann",
                Verdict.IRREDUCIBLE,
                hypotheses=rec.tuple(),
                trace=tuple(trace),
            )
    return Certificate(
        "Schonemann",
        Verdict.HYPOTHESIS_FAILED,
        hypotheses=rec.tuple(),
        trace=tuple(trace),
    )


def check_gen_schonemann(f: IntPoly, phi: IntPoly, p: int) -> Certificate:
    """Generalized criterion: valuation ratios dominated by v(f_0)/n.

    Hypotheses on the expansion parts: f_0 nonzero, top part 1, and for
    every i < n the ratio v_p(f_i)/(n - i) is at least v_p(f_0)/n > 0
    (vanishing parts pass), with v_p(f_0) prime to n. Exact arithmetic on
    fractions throughout.
    """
    _require_phi(phi)
    _require_prime(p)
    if f.is_zero:
        raise ValueError("f must be nonzero")
    parts = phi_expand(f, phi).parts
    n = len(parts) - 1

    rec = _Records()
    rec.add(
        "phi-irreducible-mod-p", is_irreducible_mod_p(reduce(phi, p)), f"phi mod {p}"
    )
    rec.add("constant-part-nonzero", not parts[0].is_zero, "f_0 != 0")
    rec.add("top-part-one", parts[n] == IntPoly((1,)) and n >= 1, f"f_n = 1, n = {n}")
    v0 = vpx(parts[0], p)
    positive = n >= 1 and not parts[0].is_zero and v0 >= 1
    rec.add("constant-valuation-positive", positive, f"v_p(f_0) = {v0}")

    if positive:
        ratio = Fraction(v0, n)
        bad = []
        vals = []
        for i in range(n):
            vi = vpx(parts[i], p)
            vals.append(str(vi))
            if not vi >= ratio * (n - i):
                bad.append(i)
        rec.add(
            "valuation-ratios-dominate",
            not bad,
            f"v_p(f_i)/(n-i) >= {slope_str(ratio)} for all i"
            + (f"; fails at i={bad[0]}" if bad else ""),
        )
        rec.add(
            "valuation-coprime-to-n",
            math.gcd(v0, n) == 1,
            f"gcd({v0}, {n}) = {math.gcd(v0, n)}",
        )
        trace = ({"prime": p, "ratio": slope_str(ratio), "valuations": vals},)
    else:
        trace = ()

    if rec.all_hold:
        return Certificate(
            "GenSchonemann",
            Verdict.IRREDUCIBLE,
            hypotheses=rec.tuple(),
            trace=trace,
        )
    return Certificate(
        "GenSchonemann",
        Verdict.HYPOTHESIS_FAILED,
        hypotheses=rec.tuple(),
        trace=trace,
    )
