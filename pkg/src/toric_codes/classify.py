"""Algebraic tests for how a code's diagram was pierced."""

from __future__ import annotations

from dataclasses import dataclass

from .binomial import reduced_groebner
from .code import Code, DomainError
from .orders import goy_order
from .toric import (certify_generators, default_bound, ideal_is_zero, minimal_generators,
                    toric_generators)


class HypothesisError(DomainError):
    """The test's hypothesis fails, so its verdict would mean nothing."""


@dataclass(frozen=True)
class Verdict:
    test: str
    value: bool
    order: str | None = None
    max_degree: int = 0
    basis_size: int = 0
    note: str = ""


def _require_firing(code: Code) -> None:
    silent = code.silent_neurons()
    if silent:
        raise HypothesisError(f"neurons {silent} never fire; the classification needs every "
                              "neuron in some codeword")


def zero_pierced_test(code: Code) -> Verdict:
    _require_firing(code)
    zero = ideal_is_zero(code)
    return Verdict("is_zero_pierced", zero, note="zero ideal" if zero else "nonzero ideal")


def is_zero_pierced(code: Code) -> bool:
    """0-inductively pierced iff the toric ideal is zero (every neuron must fire)."""
    return zero_pierced_test(code).value


def quadratic_generation(code: Code, bound: int | None = None,
                         budget: int | None = None) -> Verdict:
    """Whether a minimal generating set has degree at most two.

    Minimal generators are read off the fibers up to ``bound`` and certified
    exactly; the bound doubles until certification succeeds.  The ideal
    need not be homogeneous in t-degree, so the generators are chosen to
    keep the largest t-degree minimal over all generating sets.
    """
    if ideal_is_zero(code):
        return Verdict("generated_by_quadratics", True, note="zero ideal")
    bound = default_bound(code) if bound is None else max(bound, 2)
    for _ in range(6):
        gens = minimal_generators(code, bound)
        if certify_generators(code, gens, budget):
            deg = max(max(b.degrees) for b in gens)
            return Verdict("generated_by_quadratics", deg <= 2, None, deg, len(gens),
                           f"certified minimal generators up to weight {bound}")
        bound *= 2
    gens = toric_generators(code, "saturation", budget=budget).binomials
    raise DomainError(f"no certified minimal generating set up to weight {bound // 2}; "
                      f"a Groebner basis has {len(gens)} elements")


def generated_by_quadratics(code: Code, tdeg_bound: int | None = None,
                            budget: int | None = None) -> bool:
    return quadratic_generation(code, tdeg_bound, budget).value


def one_pierced_test(code: Code, budget: int | None = None) -> Verdict:
    """Reduced GB under the (0,0,0,1,1,1,0)-weighted grevlex order has degree <= 2."""
    if code.n != 3:
        raise DomainError(f"this test needs 3 neurons, got {code.n}")
    _require_firing(code)
    if ideal_is_zero(code):
        return Verdict("is_one_pierced_n3", True, goy_order(code).spec(), note="zero ideal")
    gens = toric_generators(code, "saturation", budget=budget).binomials
    gb = reduced_groebner(gens, goy_order(code), budget)
    deg = max(max(b.degrees) for b in gb.elements)
    return Verdict("is_one_pierced_n3", deg <= 2, goy_order(code).spec(), deg, len(gb.elements),
                   "reduced Groebner basis")


def is_one_pierced_n3(code: Code, budget: int | None = None) -> bool:
    return one_pierced_test(code, budget).value
