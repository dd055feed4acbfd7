"""Named verification suites run by ``toric-codes verify-paper``.

Each suite returns a list of ``Check`` records; a suite passes when every
record does.  Nothing here is trusted by the test suite, which recomputes
the same facts through independent routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import corpus
from .binomial import normalized_set, reduced_groebner
from .code import Code, internal_code
from .graphs import delta_graph, depth1_indispensables, expected_quadratic_count
from .orders import Grevlex, mu_weight, omega_order, parse_order
from .pierced import canonical, pierced_codes
from .toric import (a_set, b_set, graver_basis, indispensable_binomials, is_primitive,
                    toric_generators, u_set, universal_gb, verify_lawrence_row_equivalence)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool | None  # None: skipped
    detail: str = ""

    @property
    def status(self) -> str:
        return "SKIP" if self.ok is None else ("PASS" if self.ok else "FAIL")


def example_gb() -> list[Check]:
    c1 = corpus.load("c1")
    gens = toric_generators(c1).binomials
    g1 = normalized_set(corpus.golden_basis(c1, "c1_grevlex"))
    g2 = normalized_set(corpus.golden_basis(c1, "c1_weight"))
    r1 = reduced_groebner(gens, Grevlex()).as_set()
    r2 = reduced_groebner(gens, parse_order("weight:[0,0,0,1,1,1,2]:grevlex", c1)).as_set()
    ind = indispensable_binomials(c1)
    return [
        Check("c1 grevlex basis", r1 == g1, f"{len(r1)} binomials, expected {len(g1)}"),
        Check("c1 weighted basis", r2 == g2, f"{len(r2)} binomials, expected {len(g2)}"),
        Check("c1 indispensables are the shared elements", ind == (g1 & g2),
              f"{len(ind)} indispensable, {len(g1 & g2)} shared"),
    ]


def internal(n: int) -> list[Check]:
    code = internal_code(n)
    u = u_set(code)
    g = graver_basis(code)
    ugb = universal_gb(code)
    return [
        Check(f"L{n} |U_n| = C(n-1, 2)", len(u) == comb(n - 1, 2), f"{len(u)}"),
        Check(f"L{n} Graver = U_n", g.binomials == u and g.complete,
              f"{len(g)} Graver elements, complete={g.complete}"),
        Check(f"L{n} UGB exact and = U_n", ugb.exact and ugb.lower == u,
              f"exact={ugb.exact}, {len(ugb.lower)} elements"),
        Check(f"L{n} U_n primitive", all(is_primitive(b, code) for b in u)),
    ]


def external_trees() -> list[Check]:
    out = []
    for name in corpus.TREE_CODES:
        code = corpus.load(name)
        ind = indispensable_binomials(code)
        out.append(Check(f"{name} indispensables = A", ind == a_set(code), f"{len(ind)}"))
        gb = reduced_groebner(toric_generators(code).binomials, omega_order(code)).as_set()
        out.append(Check(f"{name} omega basis = B", gb == b_set(code), f"{len(gb)}"))
        ugb = universal_gb(code)
        quad = [b for b in ugb.lower if b.degrees == (2, 2)]
        want = expected_quadratic_count(delta_graph(code))
        out.append(Check(f"{name} quadratic UGB elements = sum C(d, 2)",
                         ugb.closed and len(quad) == want,
                         f"{len(quad)} found, {want} expected, sandwich "
                         f"{'closed' if ugb.closed else 'open'}"))
    return out


def is_depth1(code: Code) -> bool:
    """Whether the code comes from a 1-pierced diagram of depth <= 1 (n <= 6)."""
    if code.n > 6:
        raise ValueError("depth-1 recognition is by enumeration and stops at 6 neurons")
    return canonical(code) in {canonical(c) for c in pierced_codes(code.n, max_depth=1)}


def depth1_patterns(codes: list[Code] | None = None) -> list[Check]:
    codes = [corpus.load(n) for n in corpus.DEPTH1_EXEMPLARS] if codes is None else codes
    out = []
    for code in codes:
        label = code.name or "code"
        if not is_depth1(code):
            out.append(Check(f"{label} depth-1 patterns", None,
                             "not a depth <= 1, 1-pierced code; skipped"))
            continue
        ind = indispensable_binomials(code)
        pat = depth1_indispensables(code)
        heavy = [b for b in ind if mu_weight(code, b.plus) >= 6]
        out.append(Check(f"{label} patterns = indispensables", pat == ind,
                         f"{len(pat)} from patterns, {len(ind)} from fibers"))
        out.append(Check(f"{label} no indispensable of weight >= 6", not heavy))
    return out


def lawrence(ns=range(3, 7)) -> list[Check]:
    out = []
    for n in ns:
        w = verify_lawrence_row_equivalence(n)
        out.append(Check(f"L{n} row-equivalent to a Lawrence lifting", w.ok,
                         f"column map {w.column_map}"))
    return out


SUITES = ("example-gb", "internal:<n>", "external-trees", "depth1-patterns", "lawrence")


def run(name: str, codes: list[Code] | None = None) -> list[Check]:
    if name == "example-gb":
        return example_gb()
    if name.startswith("internal:"):
        return internal(int(name.split(":", 1)[1]))
    if name == "external-trees":
        return external_trees()
    if name == "depth1-patterns":
        return depth1_patterns(codes)
    if name == "lawrence":
        return lawrence()
    if name.startswith("lawrence:"):
        return lawrence([int(name.split(":", 1)[1])])
    raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
