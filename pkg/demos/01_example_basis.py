"""The three-curve Venn code: two reduced Groebner bases and the
binomials every generating set must contain.

Run: python3 demos/01_example_basis.py
"""

from toric_codes import corpus
from toric_codes.binomial import reduced_groebner
from toric_codes.code import c1_code
from toric_codes.orders import Grevlex, omega_order
from toric_codes.report import binomial_text, sorted_basis
from toric_codes.toric import graver_basis, indispensable_binomials, toric_generators

code = c1_code()
print("codewords:", " ".join("".join(map(str, w)) for w in code.words))

# Generators come from the integer kernel of the code matrix, saturated.
gens = toric_generators(code).binomials
print(f"\n{len(gens)} generators of the toric ideal")

# Under grevlex the reduced basis is nine quadratic-or-linear binomials.
g1 = reduced_groebner(gens, Grevlex())
print(f"\ngrevlex basis ({len(g1.elements)}):")
for b in sorted_basis(g1.elements, Grevlex()):
    print("  ", binomial_text(code, b))

# Weighting each word by (weight - 1) turns every codeword into a product of
# its neurons: four binomials suffice.
omega = omega_order(code)
g2 = reduced_groebner(gens, omega)
print(f"\n{omega.spec()} basis ({len(g2.elements)}):")
for b in sorted_basis(g2.elements, omega):
    print("  ", binomial_text(code, b))

# Both agree with the tabulated golden data shipped with the package.
assert g1.as_set() == {b.normalized() for b in corpus.golden_basis(code, "c1_grevlex")}
assert g2.as_set() == {b.normalized() for b in corpus.golden_basis(code, "c1_weight")}

# Indispensable binomials lie in every minimal generating set, hence in
# every reduced basis; here they are exactly the shared elements.
ind = indispensable_binomials(code)
print("\nindispensable:", ", ".join(binomial_text(code, b) for b in sorted(ind, key=str)))
assert ind == g1.as_set() & g2.as_set()

# The Graver basis bounds every reduced basis from above.
g = graver_basis(code, method="lawrence")
print(f"\nGraver basis: {len(g)} primitive binomials")
