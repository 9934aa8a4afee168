"""Walk through phi-expansions and Newton polygons on small examples.

Run with: python demos/01_expansions_and_polygons.py
"""
from irredcert import IntPoly, build_polygon, phi_expand, polygon_points, principal_part
from irredcert.criteria import factorial_poly

phi = IntPoly((1, 1, 1))  # x^2 + x + 1

# Any integer polynomial can be written in powers of a monic phi with
# remainder coefficients of smaller degree. Here f = phi^2 + 2*(x+1):
f = phi**2 + IntPoly((2, 2))
expansion = phi_expand(f, phi)
print("f  =", f)
print("phi =", phi)
print("parts (coefficient of phi^i at index i):")
for i, part in enumerate(expansion.parts):
    print(f"  phi^{i}: {part}")
assert expansion.assemble() == f

# The polygon plots, at x = i, the minimal 2-adic valuation among the
# coefficients of the part multiplying phi^(n-i). For this f that gives a
# single edge from (0,0) to (2,1): the classical Eisenstein picture.
points = polygon_points(f, phi, 2)
np = build_polygon(points)
print("\npoints:", points)
print("vertices:", np.vertices)
print("edges:", [(e.dx, e.dy, str(e.slope)) for e in np.edges])

# The weights n!/i! produce the polygon with one edge per base-p digit of
# n. For n = 6 and p = 2 (6 = 2 + 4) the slopes are 1/2 and 3/4.
f6 = factorial_poly(IntPoly((0, 1)), 6)
np6 = build_polygon(polygon_points(f6, IntPoly((0, 1)), 2))
print("\nfactorial weights, n = 6, p = 2")
print("f6 =", f6)
print("vertices:", np6.vertices)
print("edges:", [(e.dx, e.dy, str(e.slope)) for e in np6.edges])

# Removing the horizontal edge leaves the principal part, the piece that
# controls factor degrees.
flat = IntPoly((3, 1)) * f6  # an extra unit part adds a slope-zero edge
npf = build_polygon(polygon_points(flat, IntPoly((0, 1)), 2))
print("\nwith a slope-zero edge:", [(e.dx, str(e.slope)) for e in npf.edges])
print("principal part:", [(e.dx, str(e.slope)) for e in principal_part(npf).edges])
