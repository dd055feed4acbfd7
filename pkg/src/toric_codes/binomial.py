"""Buchberger completion specialised to pure binomials.

Coefficients stay at +-1 throughout: the S-binomial of two binomials is a
binomial, and reducing one monomial by a binomial gives one monomial, so no
general polynomial arithmetic is needed.  A binomial whose two terms meet
is zero.

Internally a binomial is a ``(lead, trail)`` pair of exponent tuples; the
public ``Binomial`` type wraps the same data together with the grading
matrix used to check kernel membership.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .orders import Exps, Grevlex, MonomialOrder

DEFAULT_PAIR_BUDGET = 10 ** 6

# Set to True to assert that every rewriting step strictly descends.
CHECK_DESCENT = False


class ResourceError(RuntimeError):
    """A configured budget was exhausted."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class KernelError(ValueError):
    """The two terms of a binomial have different images."""


class DegenerateBinomialError(ValueError):
    """Both terms of a binomial are the same monomial."""


def pair_budget() -> int:
    env = os.environ.get("TORIC_CODES_BUDGET")
    return int(env) if env else DEFAULT_PAIR_BUDGET


def _columns(matrix: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    if not matrix:
        return ()
    return tuple(zip(*matrix))


def apply_matrix(columns, a: Exps) -> tuple[int, ...]:
    if not columns:
        return ()
    out = [0] * len(columns[0])
    for col, x in zip(columns, a):
        if x:
            for i, c in enumerate(col):
                if c:
                    out[i] += c * x
    return tuple(out)


@dataclass(frozen=True)
class Binomial:
    """``t^plus - t^minus``.

    When a grading matrix is supplied (columns of the code matrix) the two
    terms are checked to have the same image.  The matrix takes no part in
    equality or hashing.
    """

    plus: Exps
    minus: Exps
    columns: tuple = field(default=(), compare=False, hash=False, repr=False)

    def __post_init__(self):
        if len(self.plus) != len(self.minus):
            raise ValueError("terms over different variable sets")
        if self.plus == self.minus:
            raise DegenerateBinomialError("t^a - t^a is zero")
        if self.columns:
            if apply_matrix(self.columns, self.plus) != apply_matrix(self.columns, self.minus):
                raise KernelError(f"{self.plus} and {self.minus} have different images")

    @classmethod
    def in_kernel(cls, matrix, plus, minus) -> "Binomial":
        return cls(tuple(plus), tuple(minus), _columns(matrix))

    def negate(self) -> "Binomial":
        return Binomial(self.minus, self.plus, self.columns)

    def oriented(self, order: MonomialOrder) -> "Binomial":
        """Same binomial up to sign with the leading term in ``plus``."""
        if order.key(self.plus) >= order.key(self.minus):
            return self
        return self.negate()

    def terms(self) -> tuple[Exps, Exps]:
        return self.plus, self.minus

    @property
    def degrees(self) -> tuple[int, int]:
        return sum(self.plus), sum(self.minus)

    def is_homogeneous(self) -> bool:
        return sum(self.plus) == sum(self.minus)

    def normalized(self) -> "Binomial":
        """Sign-normalised form: grevlex-leading term in ``plus``."""
        return self.oriented(Grevlex())

    def vector(self) -> tuple[int, ...]:
        return tuple(p - q for p, q in zip(self.plus, self.minus))

    def divides(self, other: "Binomial") -> bool:
        """True iff plus | other.plus and minus | other.minus."""
        return (all(a <= b for a, b in zip(self.plus, other.plus))
                and all(a <= b for a, b in zip(self.minus, other.minus)))


def normalized_set(binomials: Iterable[Binomial]) -> frozenset[Binomial]:
    return frozenset(b.normalized() for b in binomials)


def leading_term(order: MonomialOrder, b: Binomial) -> Exps:
    if b.plus == b.minus:
        raise DegenerateBinomialError("binomial is zero")
    return order.max(b.plus, b.minus)


# -- low level rewriting on (lead, trail) pairs -------------------------------

def _mask(a: Exps) -> int:
    m = 0
    for i, x in enumerate(a):
        if x:
            m |= 1 << i
    return m


class _Rules:
    """Leading-term rewriting rules ``lead -> trail`` with a support-mask filter."""

    def __init__(self, order: MonomialOrder, pairs=()):
        self.order = order
        self.leads: list[Exps] = []
        self.trails: list[Exps] = []
        self.masks: list[int] = []
        for lead, trail in pairs:
            self.add(lead, trail)

    def add(self, lead, trail):
        self.leads.append(lead)
        self.trails.append(trail)
        self.masks.append(_mask(lead))

    def __len__(self):
        return len(self.leads)

    def divisor(self, a: Exps, skip: int = -1) -> int:
        ma = _mask(a)
        for k, (lead, m) in enumerate(zip(self.leads, self.masks)):
            if k == skip or m & ~ma:
                continue
            if all(x <= y for x, y in zip(lead, a)):
                return k
        return -1

    def normal_form(self, a: Exps, skip: int = -1) -> Exps:
        key = self.order.key
        while True:
            k = self.divisor(a, skip)
            if k < 0:
                return a
            lead, trail = self.leads[k], self.trails[k]
            b = tuple(x - l + t for x, l, t in zip(a, lead, trail))
            if CHECK_DESCENT:
                assert key(b) < key(a), "rewriting step did not descend"
            a = b


def _orient(order, p, q):
    return (p, q) if order.key(p) > order.key(q) else (q, p)


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _s_pair(f, g):
    (lf, tf), (lg, tg) = f, g
    lcm = _lcm(lf, lg)
    p = tuple(l - x + y for l, x, y in zip(lcm, lf, tf))
    q = tuple(l - x + y for l, x, y in zip(lcm, lg, tg))
    return p, q


# -- public operations ---------------------------------------------------------

def _as_pair(order, b: Binomial):
    return _orient(order, b.plus, b.minus)


def _wrap(pair, columns) -> Binomial:
    return Binomial(pair[0], pair[1], columns)


def s_binomial(f: Binomial, g: Binomial, order: MonomialOrder) -> Binomial | None:
    """``lcm/lt(f) * f - lcm/lt(g) * g`` as a binomial, or None when it cancels."""
    p, q = _s_pair(_as_pair(order, f), _as_pair(order, g))
    if p == q:
        return None
    return _wrap(_orient(order, p, q), f.columns or g.columns)


def reduce(b: Binomial, basis: Iterable[Binomial], order: MonomialOrder) -> Binomial | None:
    """Fully reduce both terms of ``b`` by the leading terms of ``basis``."""
    rules = _Rules(order, (_as_pair(order, g) for g in basis))
    p, q = rules.normal_form(b.plus), rules.normal_form(b.minus)
    if p == q:
        return None
    return _wrap(_orient(order, p, q), b.columns)


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple[Binomial, ...]
    order: MonomialOrder
    reduced: bool = False
    pairs_processed: int = 0

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def as_set(self) -> frozenset[Binomial]:
        return normalized_set(self.elements)

    def leading_terms(self) -> list[Exps]:
        return [b.plus for b in self.elements]

    def normal_form(self, a: Exps) -> Exps:
        return _Rules(self.order, ((b.plus, b.minus) for b in self.elements)).normal_form(a)

    def contains(self, b: Binomial) -> bool:
        """Ideal membership of ``b`` (valid because this is a Groebner basis)."""
        rules = _Rules(self.order, ((g.plus, g.minus) for g in self.elements))
        return rules.normal_form(b.plus) == rules.normal_form(b.minus)


def _sorted(order, pairs):
    return sorted(pairs, key=lambda pr: (order.key(pr[0]), order.key(pr[1])))


def buchberger(gens: Iterable[Binomial], order: MonomialOrder,
               budget: int | None = None) -> GroebnerBasis:
    """Complete ``gens`` to a Groebner basis of the ideal they generate.

    Pairs are handled smallest lcm degree first, ties broken by ``order``.
    Coprime leading terms and Buchberger's chain criterion prune pairs.
    Raises ResourceError after ``budget`` S-pairs.
    """
    budget = pair_budget() if budget is None else budget
    gens = list(gens)
    columns = next((g.columns for g in gens if g.columns), ())
    key = order.key

    rules = _Rules(order)
    basis: list[tuple[Exps, Exps]] = []
    seen = set()
    for g in gens:
        pr = _as_pair(order, g)
        if pr not in seen:
            seen.add(pr)
            basis.append(pr)
    basis = _sorted(order, basis)
    for lead, trail in basis:
        rules.add(lead, trail)

    heap: list = []
    pending: set[tuple[int, int]] = set()

    def push(i, j):
        lcm = _lcm(basis[i][0], basis[j][0])
        heapq.heappush(heap, (sum(lcm), key(lcm), i, j))
        pending.add((i, j))

    for i, j in combinations(range(len(basis)), 2):
        push(i, j)

    processed = 0
    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        li, lj = basis[i][0], basis[j][0]
        if _coprime(li, lj):
            continue
        lcm = _lcm(li, lj)
        if _chain_criterion(basis, pending, i, j, lcm):
            continue
        processed += 1
        if processed > budget:
            raise ResourceError(
                f"pair budget {budget} exhausted",
                partial=GroebnerBasis(tuple(_wrap(p, columns) for p in basis), order))
        p, q = _s_pair(basis[i], basis[j])
        p, q = rules.normal_form(p), rules.normal_form(q)
        if p == q:
            continue
        new = _orient(order, p, q)
        basis.append(new)
        rules.add(*new)
        k = len(basis) - 1
        for i2 in range(k):
            push(i2, k)

    elements = tuple(_wrap(p, columns) for p in _sorted(order, basis))
    return GroebnerBasis(elements, order, reduced=False, pairs_processed=processed)


def _chain_criterion(basis, pending, i, j, lcm) -> bool:
    for k in range(len(basis)):
        if k == i or k == j:
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        if all(x <= y for x, y in zip(basis[k][0], lcm)):
            return True
    return False


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced Groebner basis of the ideal generated by ``gb``."""
    order = gb.order
    pairs = _sorted(order, {_as_pair(order, b) for b in gb.elements})
    columns = next((b.columns for b in gb.elements if b.columns), ())
    # minimal leading terms: drop any lead divisible by another (first kept on ties)
    minimal = []
    for idx, (lead, trail) in enumerate(pairs):
        redundant = False
        for jdx, (other, _) in enumerate(pairs):
            if jdx == idx:
                continue
            if all(x <= y for x, y in zip(other, lead)) and (other != lead or jdx < idx):
                redundant = True
                break
        if not redundant:
            minimal.append((lead, trail))
    rules = _Rules(order, pairs)
    out = []
    for lead, trail in minimal:
        tail = rules.normal_form(trail)
        out.append((lead, tail))
    elements = tuple(_wrap(p, columns) for p in _sorted(order, out))
    return GroebnerBasis(elements, order, reduced=True, pairs_processed=gb.pairs_processed)


def reduced_groebner(gens: Iterable[Binomial], order: MonomialOrder,
                     budget: int | None = None) -> GroebnerBasis:
    return reduce_basis(buchberger(gens, order, budget))


def is_groebner(elements: Iterable[Binomial], order: MonomialOrder) -> bool:
    """Buchberger's criterion: every S-binomial reduces to zero."""
    pairs = [_as_pair(order, b) for b in elements]
    rules = _Rules(order, pairs)
    for f, g in combinations(pairs, 2):
        p, q = _s_pair(f, g)
        if rules.normal_form(p) != rules.normal_form(q):
            return False
    return True


def unreduced_s_pair(elements: Iterable[Binomial], order: MonomialOrder):
    """First pair whose S-binomial has a nonzero remainder, or None."""
    els = list(elements)
    pairs = [_as_pair(order, b) for b in els]
    rules = _Rules(order, pairs)
    for (a, f), (b, g) in combinations(enumerate(pairs), 2):
        p, q = _s_pair(f, g)
        if rules.normal_form(p) != rules.normal_form(q):
            return els[a], els[b]
    return None


def is_reduced(gb: Iterable[Binomial], order: MonomialOrder) -> bool:
    pairs = [_as_pair(order, b) for b in gb]
    for a, (lead, _) in enumerate(pairs):
        for b, (l2, t2) in enumerate(pairs):
            if a == b:
                continue
            for term in (l2, t2):
                if all(x <= y for x, y in zip(lead, term)):
                    return False
    return True


def same_ideal(a: Iterable[Binomial], b: Iterable[Binomial], order: MonomialOrder | None = None,
               budget: int | None = None) -> bool:
    """Mutual normal-form test: each set reduces to zero by a GB of the other."""
    order = order or Grevlex()
    a, b = list(a), list(b)
    ga, gb = buchberger(a, order, budget), buchberger(b, order, budget)
    return all(gb.contains(x) for x in a) and all(ga.contains(x) for x in b)
