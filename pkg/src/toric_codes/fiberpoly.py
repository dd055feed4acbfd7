"""Weight vectors aimed at single Graver elements.

A primitive binomial t^u - t^v can only appear in a reduced Groebner basis
when the segment [u, v] is an edge of the convex hull of its fiber.  A
weight vector minimised exactly on that edge is found with a linear
program; floating-point solutions are rounded to rationals and re-checked
exactly before use.  Nothing here is trusted on its own: the caller still
computes the reduced Groebner basis for each proposed order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

import numpy as np
from scipy.optimize import linprog

from .binomial import Binomial
from .code import Code
from .orders import Grevlex, WeightOrder, image
from .toric import all_fibers


def edge_normal(u, v, others) -> list[Fraction] | None:
    """Rational c with c.u == c.v < c.w for every w in ``others``, or None."""
    m = len(u)
    others = [w for w in others if w != u and w != v]
    if not others:
        return [Fraction(0)] * m
    d = np.array(u, float) - np.array(v, float)
    a_ub = np.array([np.array(u, float) - np.array(w, float) for w in others])
    b_ub = -np.ones(len(others))
    res = linprog(np.zeros(m), A_ub=a_ub, b_ub=b_ub, A_eq=d[None, :], b_eq=[0.0],
                  bounds=[(-50, 50)] * m, method="highs")
    if res.status != 0:
        return None
    for denom in (1, 2, 6, 12, 60, 840):
        c = [Fraction(round(x * denom), denom) for x in res.x]
        if _check(c, u, v, others):
            return c
    c = [Fraction(x).limit_denominator(10 ** 6) for x in res.x]
    return c if _check(c, u, v, others) else None


def _dot(c, a):
    return sum(x * y for x, y in zip(c, a))


def _check(c, u, v, others) -> bool:
    cu = _dot(c, u)
    return cu == _dot(c, v) and all(_dot(c, w) > cu for w in others)


def _positive(code: Code, c: list[Fraction]) -> list[Fraction]:
    # adding a multiple of the mu-grading changes nothing inside a fiber
    mu = [len(s) for s in code.variables]
    lam = max([Fraction(0)] + [(-x + 1) / w for x, w in zip(c, mu)])
    return [x + lam * w for x, w in zip(c, mu)]


def targeted_orders(code: Code, binomials: Iterable[Binomial]) -> list[WeightOrder]:
    """Weight orders (grevlex tiebreak) whose minimal face is [u, v], both ways round."""
    binomials = list(binomials)
    if not binomials:
        return []
    top = max(sum(image(code, b.plus)) for b in binomials)
    by_degree = {f.degree: f.members for f in all_fibers(code, top)}
    orders = []
    seen = set()
    for b in binomials:
        u, v = b.plus, b.minus
        members = by_degree[image(code, u)]
        c = edge_normal(u, v, members)
        if c is None:
            continue
        gap = min((_dot(c, w) - _dot(c, u) for w in members if w not in (u, v)),
                  default=Fraction(1))
        spread = max([abs(_dot([p - q for p, q in zip(u, v)], w)) for w in members] + [1])
        eps = gap / (4 * spread)
        for sign in (1, -1):
            cc = [x + sign * eps * (p - q) for x, p, q in zip(c, u, v)]
            w = tuple(_positive(code, cc))
            if w not in seen:
                seen.add(w)
                orders.append(WeightOrder(w, Grevlex()))
    return orders


def is_fiber_edge(code: Code, b: Binomial) -> bool:
    """True when [plus, minus] is an edge of its fiber's convex hull (LP check)."""
    members = next(f.members for f in all_fibers(code, sum(image(code, b.plus)))
                   if f.degree == image(code, b.plus))
    return edge_normal(b.plus, b.minus, members) is not None
