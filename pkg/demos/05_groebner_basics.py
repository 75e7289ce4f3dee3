"""The exact algebra layer on its own: polynomials, orders, Buchberger.

Everything is exact rational arithmetic; no floats enter until you ask for
them.  This walks the textbook example <x^2 - y, x*y - 1> to its reduced
lexicographic basis and shows the run statistics.
"""

from conicoffset import (Ideal, buchberger, format_poly, lex, parse_poly,
                         reduce, reduce_basis, s_polynomial)

ring = ("x", "y")
f = parse_poly("x^2 - y", ring)
g = parse_poly("x*y - 1", ring)
order = lex(ring)

print("S(f, g) =", format_poly(s_polynomial(f, g, order), order))

gb = buchberger(Ideal(ring, (f, g)), order)
reduced = reduce_basis(gb)
print("reduced lex basis:")
for q in reduced.polys:
    print("   ", format_poly(q, order))
print("stats:", {k: reduced.stats[k] for k in
                 ("pairs_considered", "pairs_skipped_criteria", "reductions")})

# ideal membership by division: remainder zero <=> member
member = parse_poly("x^3 - 1", ring)  # = x*f + g
rem, _ = reduce(member, list(reduced.polys), order)
print("x^3 - 1 in the ideal:", rem.is_zero())

# exact division keeps the reconstruction identity p = sum(q_i b_i) + r
p = parse_poly("x^2*y + x*y^2 + y^2", ring)
rem, quots = reduce(p, [f, g], order)
recon = rem
for q, b in zip(quots, (f, g)):
    recon = recon + q * b
assert recon == p
print("division reconstruction holds:", recon == p)
