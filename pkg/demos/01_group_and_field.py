"""
The Picard group acting on Q(i, sqrt3)
======================================

Generators as 2x2 matrices over the Gaussian integers, a check of the
presentation's relators, and the exact action on a few points.
"""

from fractions import Fraction

from picard import FieldElement, GENERATORS, apply, apply_word, verify_relators
from picard.field import SQRT3

# every relator multiplies out to -I, i.e. the identity in PSL(2, Z[i])
for r in verify_relators():
    print(r.line())

# matrices are stored up to sign
for name, m in GENERATORS.items():
    print(name, m)

# A sends sqrt3 to (sqrt3 + i)/4 -- the i part never goes away
print("A(sqrt3) =", apply(GENERATORS["A"], SQRT3))

# fixed points sit inside Q(i, sqrt3)
half = Fraction(1, 2)
z = FieldElement(0, half, half, 0)
print("A fixes", z, ":", apply(GENERATORS["A"], z) == z)

# words act left to right; CCC and BB are trivial
w = FieldElement(2, -1, Fraction(1, 3), 0)
print(apply_word("CCC", w) == w, apply_word("BB", w) == w)
print("AD(2) =", apply_word("AD", FieldElement(2)))
