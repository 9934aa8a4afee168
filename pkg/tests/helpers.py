"""Shared independent oracles for the test suite.

These deliberately avoid the library's own algorithms: the hull here is
Andrew's monotone chain, finite-field irreducibility is trial division,
and random polynomial generation is plain rejection sampling.
"""
from irredcert.gfpoly import GfPoly, gf_divmod, gf_mul
from irredcert.intpoly import IntPoly


def lower_hull(points):
    """Lower convex hull by monotone chain; collinear interior points dropped.

    Input must be sorted by strictly increasing x. Cross products are exact
    integer arithmetic.
    """
    hull = []
    for p in points:
        while len(hull) >= 2:
            (ax, ay), (bx, by) = hull[-2], hull[-1]
            if (bx - ax) * (p[1] - ay) - (p[0] - ax) * (by - ay) <= 0:
                hull.pop()
            else:
                break
        hull.append((p[0], p[1]))
    return hull


def all_monic_gf(p, degree):
    """Every monic polynomial of the given degree over F_p."""
    out = []
    for code in range(p**degree):
        coeffs = []
        c = code
        for _ in range(degree):
            c, r = divmod(c, p)
            coeffs.append(r)
        coeffs.append(1)
        out.append(GfPoly(p, tuple(coeffs)))
    return out


def brute_irreducible_gf(f):
    """Trial division against every lower-degree monic polynomial."""
    d = f.degree
    if d < 1:
        return False
    for e in range(1, d // 2 + 1):
        for g in all_monic_gf(f.p, e):
            if gf_divmod(f, g)[1].is_zero:
                return False
    return True


def random_poly(rng, degree, lo=-9, hi=9, monic=False):
    coeffs = [rng.randint(lo, hi) for _ in range(degree + 1)]
    if monic:
        coeffs[-1] = 1
    else:
        while coeffs[-1] == 0:
            coeffs[-1] = rng.randint(lo, hi)
    return IntPoly(coeffs)


def random_gf_product(rng, p, degrees):
    """Product of random monic polynomials of the given degrees over F_p."""
    acc = GfPoly(p, (1,))
    for d in degrees:
        coeffs = [rng.randrange(p) for _ in range(d)] + [1]
        acc = gf_mul(acc, GfPoly(p, tuple(coeffs)))
    return acc
