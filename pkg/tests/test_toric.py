import random
from math import comb

import pytest
import sympy

from conftest import brute_fibers, brute_indispensables, sympy_toric_ideal, to_poly
from toric_codes.binomial import Binomial, ResourceError, normalized_set, reduced_groebner
from toric_codes.code import (Code, DomainError, c1_code, example_code, internal_code,
                              lawrence_code, tree_code)
from toric_codes.orders import Grevlex, mu_weight
from toric_codes.toric import (a_set, all_fibers, b_set, certify_generators, enumerate_monomials,
                               fibers_up_to, graver_basis, ideal_is_zero,
                               indispensable_binomials, is_primitive, lawrence_type,
                               minimal_generators, printed_row_transform, toric_generators,
                               u_set, universal_gb, verify_lawrence_row_equivalence)

SMALL = [c1_code(), example_code(), tree_code(4, [(1, 2), (2, 3), (3, 4)]), internal_code(3),
         internal_code(4), lawrence_code(3),
         Code.from_supports(4, [(), (1,), (1, 2), (1, 3), (2, 3, 4), (1, 2, 3)])]


def brute_graver(code, bound):
    out = set()
    for members in brute_fibers(code, bound).values():
        for u in members:
            for v in members:
                if u >= v or any(x and y for x, y in zip(u, v)):
                    continue
                dominated = any(
                    (p, q) != (u, v) and p != q
                    and all(x <= y for x, y in zip(p, u)) and all(x <= y for x, y in zip(q, v))
                    for ms in brute_fibers(code, bound).values() for p in ms for q in ms)
                if not dominated:
                    out.add(Binomial(u, v).normalized())
    return out


@pytest.mark.parametrize("code", SMALL, ids=lambda c: c.name or str(len(c)))
def test_generators_match_elimination(code):
    ts, theirs = sympy_toric_ideal(code)
    gens = toric_generators(code).binomials
    if theirs is None:
        assert not gens
        return
    ours = reduced_groebner(gens, Grevlex())
    assert {to_poly(b, ts) for b in ours.elements} == set(theirs.exprs)


@pytest.mark.parametrize("code", SMALL, ids=lambda c: c.name or str(len(c)))
def test_bounded_generators_are_certified(code):
    res = toric_generators(code, "bounded")
    assert res.certified
    sat = toric_generators(code).binomials
    assert certify_generators(code, sat)
    if len(res.binomials) > 1:
        assert not certify_generators(code, sorted(res.binomials, key=str)[1:])


def test_fibers_match_brute_force():
    code = example_code()
    ours = {f.degree: set(f.members) for f in all_fibers(code, 7)}
    assert ours == {d: set(m) for d, m in brute_fibers(code, 7).items()}
    assert all(len(f) >= 2 for f in fibers_up_to(code, 7))
    with pytest.raises(ValueError):
        fibers_up_to(code, 1)
    with pytest.raises(ResourceError):
        list(enumerate_monomials(code, 10, budget=50))


def test_zero_ideal():
    nested = Code.from_supports(3, [(), (1,), (1, 2), (1, 2, 3)])
    disjoint = Code.from_supports(3, [(), (1,), (2,), (3,)])
    assert ideal_is_zero(nested) and ideal_is_zero(disjoint)
    assert not ideal_is_zero(c1_code()) and not ideal_is_zero(example_code())
    assert toric_generators(nested).binomials == frozenset()
    assert indispensable_binomials(nested) == frozenset()


@pytest.mark.parametrize("code", SMALL[1:], ids=lambda c: c.name or str(len(c)))
def test_indispensables_three_ways(code):
    fib = indispensable_binomials(code)
    assert indispensable_binomials(code, method="membership") == fib
    if code.num_variables <= 6:
        assert brute_indispensables(code, 6) == fib


def test_minimal_generators_are_minimal():
    code = c1_code()
    gens = minimal_generators(code)
    assert certify_generators(code, gens)
    for g in gens:
        assert not certify_generators(code, [h for h in gens if h != g])


def test_graver_two_routes_and_brute_force():
    code = example_code()
    fib = graver_basis(code, 8).binomials
    law = graver_basis(code, method="lawrence").binomials
    assert fib == law == brute_graver(code, 8)
    assert all(is_primitive(b, code) for b in fib)


def test_c1_graver():
    g = graver_basis(c1_code(), method="lawrence").binomials
    assert len(g) == 17
    assert g == graver_basis(c1_code(), 8).binomials
    assert max(mu_weight(c1_code(), b.plus) for b in g) == 6


def test_primitive_examples():
    code = c1_code()
    ind = sorted(indispensable_binomials(code), key=str)[0]
    assert is_primitive(ind, code)
    squared = Binomial(tuple(2 * x for x in ind.plus), tuple(2 * x for x in ind.minus))
    assert not is_primitive(squared, code)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_internal_graver_is_u(n):
    code = internal_code(n)
    u = u_set(code)
    assert len(u) == comb(n - 1, 2)
    g = graver_basis(code)
    assert g.complete and g.binomials == u
    assert graver_basis(code, method="lawrence").binomials == u


def test_literal_internal_code_breaks_u():
    # keeping e_1 gives a non-homogeneous ideal whose Graver basis is not U_3
    code = internal_code(3, literal=True)
    g = graver_basis(code, method="lawrence").binomials
    assert len(g) == 3 and not all(b.is_homogeneous() for b in g)
    with pytest.raises(DomainError):
        u_set(code)


def test_lawrence_code_u_is_graver():
    code = lawrence_code(4)
    assert graver_basis(code, method="lawrence").binomials == u_set(code)
    assert lawrence_type(code).ok


def test_row_transforms():
    for n in range(3, 7):
        assert verify_lawrence_row_equivalence(n).ok
        assert not verify_lawrence_row_equivalence(n, printed_row_transform(n)).ok
    with pytest.raises(DomainError):
        verify_lawrence_row_equivalence(2)


def test_a_and_b_sets():
    code = c1_code()
    assert len(a_set(code)) == 3 and len(b_set(code)) == 4
    with pytest.raises(DomainError):
        b_set(example_code())


@pytest.mark.parametrize("code", [c1_code(), example_code(), tree_code(4, [(1, 2), (1, 3), (1, 4)])],
                         ids=["c1", "ci", "star"])
def test_ugb_sandwich(code):
    res = universal_gb(code, order_family_size=6, seed=3)
    assert res.lower <= res.upper
    for gb in res.reduced_bases.values():
        assert gb.as_set() <= res.lower
    assert res.upper_complete and res.closed


def test_ugb_exact_for_internal():
    res = universal_gb(internal_code(5))
    assert res.exact and res.lower == u_set(internal_code(5))


def test_ugb_is_seed_deterministic():
    code = tree_code(5, [(1, 2), (2, 3), (3, 4), (2, 5)])
    a = universal_gb(code, order_family_size=5, seed=11, targeted=False)
    b = universal_gb(code, order_family_size=5, seed=11, targeted=False)
    assert a.orders == b.orders and a.lower == b.lower


def test_random_codes_generators(tmp_path):
    rng = random.Random(5)
    for _ in range(6):
        n = rng.randint(3, 4)
        words = {tuple(sorted(rng.sample(range(1, n + 1), rng.randint(1, n)))) for _ in range(5)}
        code = Code.from_supports(n, [()] + sorted(words))
        ts, theirs = sympy_toric_ideal(code)
        gens = toric_generators(code).binomials
        if theirs is None:
            assert not gens
            continue
        ours = reduced_groebner(gens, Grevlex())
        assert {to_poly(b, ts) for b in ours.elements} == set(theirs.exprs)
        assert normalized_set(ours.elements) == ours.as_set()
