"""Acceptance gate: one PASS/FAIL line per criterion, printed in the
terminal summary.  Exact set equality everywhere; runtime limits are
asserted alongside."""

import random
import time
from fractions import Fraction
from math import comb

import pytest

from conftest import brute_fibers, brute_indispensables, image
from toric_codes import corpus
from toric_codes.binomial import (is_groebner, reduce, reduced_groebner, s_binomial,
                                  unreduced_s_pair)
from toric_codes.code import (Code, c1_code, full_code, has_down_steps, internal_code,
                              is_external)
from toric_codes.graphs import (delta_graph, depth1_indispensables, dual_graph,
                                expected_quadratic_count, find_embeddings, load_patterns)
from toric_codes.orders import (EQUAL, LESS, Grevlex, Lex, WeightOrder, compare, mu_weight,
                                omega_order)
from toric_codes.pierced import canonical, pierced_codes, random_diagram
from toric_codes.toric import (a_set, b_set, default_bound, graver_basis, ideal_is_zero,
                               indispensable_binomials, is_primitive, toric_generators, u_set,
                               universal_gb, verify_lawrence_row_equivalence)

RESULTS = {}


def record(k, ok, detail):
    RESULTS[k] = (ok, detail)
    assert ok, detail


def external_corpus():
    """External codes n = 3..5 in which every word of weight >= 2 drops
    one neuron to another codeword (true of well-formed diagrams)."""
    codes = [c for n in (3, 4, 5) for c in pierced_codes(n)
             if is_external(c) and has_down_steps(c)]
    codes += [c1_code(), full_code(4)] + [corpus.load(x) for x in corpus.TREE_CODES]
    return codes


EXTERNAL = external_corpus()


def test_criterion_1_golden_example():
    t = time.perf_counter()
    code = c1_code()
    gens = toric_generators(code).binomials
    g1 = reduced_groebner(gens, Grevlex()).as_set()
    g2 = reduced_groebner(gens, omega_order(code)).as_set()
    want1 = frozenset(b.normalized() for b in corpus.golden_basis(code, "c1_grevlex"))
    want2 = frozenset(b.normalized() for b in corpus.golden_basis(code, "c1_weight"))
    elapsed = time.perf_counter() - t
    record(1, g1 == want1 and g2 == want2 and len(g1) == 9 and len(g2) == 4 and elapsed < 1,
           f"G1 {len(g1)}/9, G2 {len(g2)}/4, {elapsed:.2f}s")


def test_criterion_2_external_indispensables():
    t = time.perf_counter()
    assert len(EXTERNAL) >= 10
    assert {c.n for c in EXTERNAL} == {3, 4, 5}
    assert any(len(c) < 2 ** c.n for c in EXTERNAL)
    bad, oracle_runs = [], 0
    for code in EXTERNAL:
        ind = indispensable_binomials(code)
        if ind != a_set(code):
            bad.append(str(code))
        if code.num_variables <= 6:
            oracle_runs += 1
            if brute_indispensables(code, default_bound(code)) != ind:
                bad.append(f"oracle {code}")
    elapsed = time.perf_counter() - t
    record(2, not bad and elapsed < 60,
           f"{len(EXTERNAL)} codes, {oracle_runs} oracle checks, {elapsed:.1f}s, "
           f"mismatches {bad}")


def test_criterion_3_omega_basis_is_b():
    bad = [str(c) for c in EXTERNAL
           if reduced_groebner(toric_generators(c).binomials, omega_order(c)).as_set()
           != b_set(c)]
    record(3, not bad, f"{len(EXTERNAL)} codes, mismatches {bad}")


def test_criterion_4_internal_codes():
    details, ok = [], True
    for n in range(3, 7):
        t = time.perf_counter()
        code = internal_code(n)
        u = u_set(code)
        g = graver_basis(code)
        ugb = universal_gb(code)
        elapsed = time.perf_counter() - t
        this = (len(u) == comb(n - 1, 2) and g.complete and g.binomials == u and ugb.exact
                and ugb.lower == u and all(is_primitive(b, code) for b in u) and elapsed < 30)
        ok &= this
        details.append(f"n={n}: |U|={len(u)} {elapsed:.2f}s")
    record(4, ok, "; ".join(details))


def test_criterion_5_lawrence_rows():
    ws = {n: verify_lawrence_row_equivalence(n) for n in range(3, 7)}
    ok = all(w.ok and w.transform and w.column_map for w in ws.values())
    record(5, ok, ", ".join(f"n={n} {'ok' if w.ok else 'FAILED'}" for n, w in ws.items()))


def test_criterion_6_zero_pierced_and_type1():
    rng = random.Random(6)
    zero = {}
    while len(zero) < 20:
        c = random_diagram(rng.randint(3, 6), rng, piercing=0).code()
        zero.setdefault(canonical(c), c)
    lozenge = load_patterns()[0]
    with_type1 = {}
    while len(with_type1) < 20:
        n = rng.randint(3, 5)
        i, j = rng.sample(range(1, n + 1), 2)
        extra = [tuple(sorted(rng.sample(range(1, n + 1), rng.randint(1, n))))
                 for _ in range(rng.randint(0, 4))]
        c = Code.from_supports(n, [(), (i,), (j,), tuple(sorted((i, j)))] + extra)
        assert find_embeddings(lozenge, dual_graph(c))
        with_type1.setdefault(canonical(c), c)
    z_ok = sum(ideal_is_zero(c) for c in zero.values())
    t_ok = sum(not ideal_is_zero(c) for c in with_type1.values())
    record(6, z_ok == 20 and t_ok == 20,
           f"0-pierced zero ideals {z_ok}/20, Type-1 nonzero ideals {t_ok}/20")


def quadratic_graver_oracle(code):
    """Count primitive t_a t_b - t_c t_d by brute force over weight <= 4."""
    fibers = [m for m in brute_fibers(code, 4).values() if len(m) >= 2]
    pairs = [(u, v) for ms in fibers for u in ms for v in ms if u != v]
    count = 0
    for u, v in pairs:
        if u > v or sum(u) != 2 or sum(v) != 2 or any(x and y for x, y in zip(u, v)):
            continue
        if not any((p, q) != (u, v) and all(x <= y for x, y in zip(p, u))
                   and all(x <= y for x, y in zip(q, v)) for p, q in pairs):
            count += 1
    return count


def test_criterion_7_tree_counts():
    details, ok = [], True
    for name, want in (("path4", 2), ("star4", 3), ("caterpillar5", None)):
        code = corpus.load(name)
        oracle = quadratic_graver_oracle(code)
        expected = expected_quadratic_count(delta_graph(code))
        ugb = universal_gb(code)
        quad = [b for b in ugb.lower if b.degrees == (2, 2)]
        this = ugb.closed and ugb.upper_complete and len(quad) == expected == oracle
        if want is not None:
            this &= expected == want
        ok &= this
        details.append(f"{name}: {len(quad)} in UGB, oracle {oracle}, sum C(d,2) {expected}")
    record(7, ok, "; ".join(details))


def test_criterion_8_depth1_patterns():
    codes = [corpus.load(x) for x in corpus.DEPTH1_EXEMPLARS]
    codes += [c for n in range(2, 6) for c in pierced_codes(n, max_depth=1)]
    bad, heavy = [], []
    for code in codes:
        ind = indispensable_binomials(code)
        if depth1_indispensables(code) != ind:
            bad.append(str(code))
        heavy += [b for b in ind if mu_weight(code, b.plus) >= 6]
    record(8, not bad and not heavy and "ci" in corpus.DEPTH1_EXEMPLARS,
           f"{len(codes)} codes, mismatches {bad}, weight >= 6 indispensables {len(heavy)}")


PROPERTY_CODES = [c1_code(), corpus.load("ci"), internal_code(4), corpus.load("path4"),
                  corpus.load("star4"), corpus.load("d1_flower")]

ORDER_KINDS = [Lex(), Grevlex(), Grevlex(perm=[3, 1, 4, 0, 2]),
               WeightOrder([2, 0, 1, 1, 3], Grevlex()),
               WeightOrder([Fraction(1, 3), 1, 0, 2, Fraction(5, 2)], Lex())]


def s_pairs_reduce(elements, order):
    for i, f in enumerate(elements):
        for g in elements[i + 1:]:
            s = s_binomial(f, g, order)
            if s is not None and reduce(s, elements, order) is not None:
                return False
    return True


def test_criterion_9_properties():
    failures = []
    rng = random.Random(9)
    for code in PROPERTY_CODES:
        gens = list(toric_generators(code).binomials)
        ugb = universal_gb(code, order_family_size=6, seed=1)
        graver = graver_basis(code, method="lawrence").binomials
        emitted = gens + list(ugb.lower) + list(graver)
        for order in (Lex(), Grevlex(), omega_order(code)) if is_external(code) else (
                Lex(), Grevlex()):
            gb = reduced_groebner(gens, order)
            emitted += gb.elements
            if not (is_groebner(gb.elements, order) and s_pairs_reduce(gb.elements, order)
                    and unreduced_s_pair(gb.elements, order) is None):
                failures.append(f"S-pairs {code} {order.spec()}")
            if not gb.as_set() <= ugb.lower <= graver:
                failures.append(f"sandwich {code} {order.spec()}")
        if any(image(code, b.plus) != image(code, b.minus) for b in emitted):
            failures.append(f"kernel {code}")
    code = c1_code()
    gens = list(toric_generators(code).binomials)
    for order in (Grevlex(), omega_order(code)):
        base = reduced_groebner(gens, order).as_set()
        for _ in range(100):
            shuffled = [b.negate() if rng.random() < 0.5 else b for b in gens]
            rng.shuffle(shuffled)
            if reduced_groebner(shuffled, order).as_set() != base:
                failures.append(f"shuffle {order.spec()}")
                break
    zero = (0,) * 5
    mono = lambda: tuple(rng.randint(0, 4) for _ in range(5))
    for order in ORDER_KINDS:
        for _ in range(10 ** 4):
            a, b, c = mono(), mono(), mono()
            ab = compare(order, a, b)
            ac_bc = compare(order, tuple(x + y for x, y in zip(a, c)),
                            tuple(x + y for x, y in zip(b, c)))
            if ac_bc != ab or compare(order, zero, a) not in (LESS, EQUAL) or (
                    (ab == EQUAL) != (a == b)):
                failures.append(f"axioms {order.spec()}")
                break
    record(9, not failures, f"{len(PROPERTY_CODES)} codes, 2x100 shuffles, "
                            f"{len(ORDER_KINDS)}x10^4 triples, failures {failures}")
