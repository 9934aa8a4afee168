"""Certify truncated-exponential polynomials and watch hypotheses fail.

Run with: python demos/02_truncated_exponential_certificates.py
"""
import json

from irredcert.criteria import SchurInput, check_coleman, check_schur
from irredcert.intpoly import IntPoly

# The polynomial certified here is n! times sum(a_i(x) phi(x)^i / i!) with
# an integer top coefficient a_n. With phi = x^3 - x^2 + 1 (irreducible
# mod 2 and mod 3), n = 4, and coefficients whose content avoids 2 and 3,
# the criterion certifies irreducibility of a degree-12 polynomial.
phi = IntPoly((1, 0, -1, 1))
inp = SchurInput(
    phi,
    4,
    (IntPoly((1, 0, 7)), IntPoly((5,)), IntPoly((0, 0, 2)), IntPoly((1, 1))),
    5,
)
cert = check_schur(inp)
print("degree", inp.polynomial().degree, "verdict:", cert.verdict.value)
for h in cert.hypotheses:
    print(f"  [{'ok' if h.holds else 'XX'}] {h.name}: {h.detail}")
print("trace steps:", len(cert.trace))
print(json.dumps(cert.to_json_dict()["trace"][1], indent=2, sort_keys=True))

# Dropping the coprimality assumptions breaks the theorem, and the
# certificate pinpoints the violated hypothesis: here a_0 = -4 shares the
# factor 2 with 2!, and indeed the polynomial splits.
phi2 = IntPoly((1, 1, 1))
bad = check_schur(SchurInput(phi2, 2, (IntPoly((-4,)), IntPoly((1,))), 1))
print("\ncounterexample verdict:", bad.verdict.value)
print("failed:", [h.name for h in bad.hypotheses if not h.holds])

# The variant with monic top term only needs phi irreducible modulo the
# primes dividing n, and its certificate records the polygon matching the
# closed-form factorial edges prime by prime.
phi4 = IntPoly((-1, -1, 0, 0, 1))
cert24 = check_coleman(phi4, 6, [IntPoly((1,))] * 6)
print("\ndegree-24 verdict:", cert24.verdict.value)
for step in cert24.trace:
    if "polygon" in step:
        print(f"  p = {step['prime']}: edges {step['polygon']['edges']}")
