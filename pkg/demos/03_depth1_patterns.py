"""Reading indispensable binomials off the dual graph of a depth-1
pierced diagram.

Run: python3 demos/03_depth1_patterns.py
"""

from toric_codes import corpus
from toric_codes.code import Code
from toric_codes.graphs import (depth1_indispensables, dual_graph, find_embeddings,
                                load_patterns, pattern_binomials)
from toric_codes.pierced import pierced_codes
from toric_codes.report import binomial_text
from toric_codes.toric import indispensable_binomials

patterns = load_patterns()
for p in patterns:
    print(f"type {p.id} {p.name}: {len(p.vertices)} vertices, {len(p.edges)} edges")

# Each embedding of a pattern into the dual graph yields one binomial.
code = corpus.load("ci")
print("\nci dual graph:")
print(dual_graph(code).to_edgelist())
for t, bins in pattern_binomials(code).items():
    for b in bins:
        print(f"type {t}: {binomial_text(code, b)}")

# Embeddings must be exact: no other codeword may live on the neurons the
# image uses.  Here zone {2} spoils the lollipop.
spoiled = Code.from_supports(3, [(), (1,), (2,), (1, 2), (1, 3), (1, 2, 3)])
lollipop = patterns[2]
print("\nlollipop embeddings into {1,2,12,13,123}:",
      len(find_embeddings(lollipop, dual_graph(spoiled))))
print("loose rule:", len(depth1_indispensables(spoiled, exact=False)),
      "exact rule:", len(depth1_indispensables(spoiled)),
      "fibers:", len(indispensable_binomials(spoiled)))

# Over every depth-1, 1-pierced diagram with up to five curves the exact
# rule reproduces the fiber computation.
codes = [c for n in range(2, 6) for c in pierced_codes(n, max_depth=1)]
agree = sum(depth1_indispensables(c) == indispensable_binomials(c) for c in codes)
print(f"\npattern rule agrees on {agree}/{len(codes)} diagrams")
