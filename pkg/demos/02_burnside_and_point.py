"""
The rational Burnside ring and the graded ring of a point
=========================================================

Everything downstream rests on exact arithmetic in the rational
Burnside rings of the cyclic 2-groups: marks vectors, idempotent
splittings, restrictions and transfers.  On top of that sits the
RO(G)-graded rational cohomology of a point, organized into sectors
that each carry one Laurent strand.  This script tours both layers
and the degree-zero bridge between them.
"""

from ratstems.burnside import BurnsideElement, idempotents
from ratstems.cli import sector_to_burnside
from ratstems.stems import SectorElement, point_presentation

n = 2  # the cyclic group of order 4

# -- marks tell the whole story -----------------------------------------------
# A virtual G-set is pinned down by its fixed-point counts at each
# subgroup level.  The basis is the trivial orbit plus one transitive
# orbit x[i,j] for every proper stabilizer index j.

one = BurnsideElement.one(n, n)
x20 = BurnsideElement.x(n, n, 0)
x21 = BurnsideElement.x(n, n, 1)

print(f"marks over the cyclic group of order {2 ** n} (levels 0..{n}):")
for label, elt in [("1", one), ("x[2,0]", x20), ("x[2,1]", x21)]:
    print(f"  {label:>7}: {tuple(map(int, elt.marks()))}")

# Products multiply marks pointwise, so x[2,1]^2 has marks (4,4,0),
# which the orbit basis writes as 2*x[2,1].
square = x21 * x21
print(f"  x[2,1]^2 = {square}, marks {tuple(map(int, square.marks()))}")

# -- idempotents and the semisimple splitting ----------------------------------
# Rationally the ring splits into one copy of Q per subgroup level.
# The projectors are rational combinations of orbits; their marks are
# indicator vectors, so completeness and orthogonality are visible.

print()
print("idempotent splitting:")
total = BurnsideElement.zero(n, n)
for i, e in enumerate(idempotents(n, n)):
    total = total + e
    print(f"  e{i} = {e}  with marks {tuple(map(int, e.marks()))}")
print(f"  sum of the idempotents: {total}")

# -- induction in the orbit basis -----------------------------------------------
# Transfer acts on the orbit basis by relabeling: the trivial orbit
# induces up to the new transitive orbit, and every x[i,j] keeps its
# stabilizer index on the way up.

print()
print(f"tr(1) from level {n - 1}: {BurnsideElement.one(n, n - 1).tr()}")
print(f"tr(x[1,0]) from level {n - 1}: {BurnsideElement.x(n, n - 1, 0).tr()}")

# -- sector classes over a point --------------------------------------------------
# Each cohomology class of a point lives at one subgroup level in one
# twisted degree, spread across sectors in a transferred basis.  The
# named generators: orientation classes u of the representations that
# restrict to something trivial, Euler classes a of the ones with no
# fixed vectors.

print()
print("named classes over a point:")
for label, g in [
    ("orientation of l0", SectorElement.orient_lambda(n, 0)),
    ("orientation of 2*sigma", SectorElement.orient_2sigma(n)),
    ("orientation of sigma", SectorElement.orient_sigma(n)),
    ("Euler class of sigma", SectorElement.euler_sigma(n)),
    ("Euler class of l0", SectorElement.euler_lambda(n, 0)),
]:
    print(f"  {label:>22}: level {g.level}, degree {g.degree}, value {g}")

# Each named class is invertible on its own support: the product with
# its inverse is the unit cut down to the shared sectors.
u = SectorElement.orient_lambda(n, 0)
support = [i for i, _ in u.coeffs]
assert u * u.inverse() == SectorElement.unit(n, n).project(support)
print(f"  l0 orientation times its inverse: {u * u.inverse()}")

# Euler and orientation supports never overlap, so the cross products
# vanish identically.  This is the quadratic half of the presentation.
assert (SectorElement.euler_sigma(n) * SectorElement.orient_2sigma(n)).is_zero()
print("  a_sigma * u_2sigma = 0 (checked)")

# -- restriction and transfer at the class level ----------------------------------
# The sign orientation lives one level below the top and dies under
# transfer: the group acts on the sign line by -1, so the transfer
# averages it away.

s = SectorElement.orient_sigma(n)
print()
print(f"orientation of sigma sits at level {s.level}: {s}")
print(f"its transfer to the top vanishes: {s.tr().is_zero()}")

# Frobenius reciprocity in action: restrict, multiply below, transfer
# back up equals multiplying by the transferred class directly.
b = SectorElement.orient_2sigma(n)
a = SectorElement.unit(n, n - 1)
assert (b.res(n - 1) * a).tr() == b * a.tr()
print("Frobenius reciprocity: (res(u_2sigma) * 1).tr() == u_2sigma * tr(1)")

# And res after tr multiplies by the index, here 2.
assert b.res(n - 1).tr() == b.scale(2)
print("res then tr doubles a top-level class (index 2 extension)")

# -- the finite presentation -------------------------------------------------------
# The whole point ring is generated by idempotent-weighted orientation
# and Euler classes together with formal inverses, subject to the
# displayed quadratic relations.  The presentation is computed, not
# transcribed, so the counts grow with n.

pres = point_presentation(n)
print()
print(f"point ring presentation for the cyclic group of order {2 ** n}:")
print(f"  generators (with inverse partners): {pres.generator_count()}")
for g in pres.generators[:4]:
    print(f"    {g.name:<16} degree {str(g.degree):>14}  spans {g.spans()}")
print(f"    ... and {len(pres.generators) - 4} more")
print(f"  relations: {len(pres.relations)}, for example")
for r in list(pres.relations)[-3:]:
    print(f"    {r}")
print(f"  note: {pres.normalization}")

# -- bridging back to the Burnside ring --------------------------------------------
# In twisted degree zero the sector coordinates are exactly the
# idempotent coordinates, so degree-zero classes are Burnside elements.

print()
for elem in [SectorElement.unit(n, n), SectorElement.y_class(n, 1).tr()]:
    print(f"degree-zero class {str(elem):<24} = {sector_to_burnside(elem)}")
