"""External codes (all singletons present) and internal codes (all
words through neuron 1), plus a case where the external rule breaks.

Run: python3 demos/02_external_and_internal.py
"""

from toric_codes.code import Code, has_down_steps, internal_code, is_external, tree_code
from toric_codes.graphs import delta_graph, expected_quadratic_count
from toric_codes.report import binomial_text
from toric_codes.toric import (a_set, graver_basis, indispensable_binomials, u_set,
                               universal_gb, verify_lawrence_row_equivalence)

# A path of pairwise overlaps: 1-2, 2-3, 3-4.
path = tree_code(4, [(1, 2), (2, 3), (3, 4)])
print("path code external:", is_external(path))
ind = indispensable_binomials(path)
print("indispensables equal t_c - prod t_j over weight-2 words:", ind == a_set(path))

# Its universal basis is sandwiched between a union of reduced bases and
# the Graver basis; here the two bounds meet.
ugb = universal_gb(path, order_family_size=8, seed=1)
quad = sorted((b for b in ugb.lower if b.degrees == (2, 2)), key=str)
print(f"UGB closed: {ugb.closed}; quadratic elements: {len(quad)}, "
      f"predicted from overlap graph degrees: {expected_quadratic_count(delta_graph(path))}")
for b in quad:
    print("  ", binomial_text(path, b))

# The rule needs each multi-neuron word to shed one neuron onto another
# codeword.  {1,2,3,123} does not, and a cubic binomial shows up instead.
odd = Code.from_supports(3, [(), (1,), (2,), (3,), (1, 2, 3)])
print("\n{1,2,3,123} down steps:", has_down_steps(odd))
print("  indispensable:", [binomial_text(odd, b) for b in indispensable_binomials(odd)])
print("  predicted:    ", [binomial_text(odd, b) for b in a_set(odd)])

# Internal codes: the Graver basis is the set U_n of quadratic swaps, and
# the code matrix is row-equivalent to a Lawrence lifting, so it is also
# the universal basis.
for n in range(3, 7):
    code = internal_code(n)
    u = u_set(code)
    print(f"\nL{n}: |U| = {len(u)}, Graver = U: {graver_basis(code).binomials == u}, "
          f"Lawrence witness: {verify_lawrence_row_equivalence(n).ok}")
