"""Derive the implicit polynomial of the parallel lines to a conic, two ways.

The locus of points at normal distance r from a conic (both sides) is an
algebraic curve.  This script builds it for a parabola with p = 1/3 at
r = 1/4: once by Groebner elimination on the envelope ideal, once by
specializing the stored closed form, and checks the two agree exactly.
"""

from fractions import Fraction as F

from conicoffset import (ConicSpec, build_ideal, buchberger, elimination_ideal,
                         format_poly, lex, offset_poly_closed_form,
                         offset_poly_elimination, reduce_basis)

conic = ConicSpec.parabola(F(1, 3))
r = F(1, 4)

# The envelope variety lives in (y0, x0, x, y): (x0, y0) runs over the
# parabola, (x, y) over the circle of radius r centered there, constrained to
# the normal line.  Eliminating (y0, x0) leaves one polynomial in x, y.
ideal = build_ideal(conic, r)
print("variety ideal generators:")
for g in ideal.generators:
    print("   ", format_poly(g))

gb = buchberger(ideal, lex(ideal.ring))
print(f"\nlex basis before reduction: {len(gb.polys)} polynomials")
reduced = reduce_basis(gb)
print(f"reduced basis: {len(reduced.polys)} polynomials")
survivors = elimination_ideal(reduced, {"x", "y"})
print(f"free of (y0, x0): {len(survivors)} polynomial\n")

elim = offset_poly_elimination(conic, r)
closed = offset_poly_closed_form(conic, r)
assert elim.g == closed.g
print("g(x, y) =", format_poly(closed.g))
print("\nelimination and closed-form specialization agree exactly.")

# The same works for central conics:
ellipse = ConicSpec.ellipse(3, F(3, 2))
ge = offset_poly_closed_form(ellipse, F(1, 2)).g
print(f"\nellipse a=3, b=3/2, r=1/2: degree {ge.degree()}, {len(ge)} terms")
