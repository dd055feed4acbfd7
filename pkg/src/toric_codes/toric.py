"""Toric ideals of codes: generators, fibers, Graver and universal bases.

Degree bounds are measured with the code weight ``mu`` (the L1 norm of a
monomial's image).  Every variable has ``mu >= 1``, so the fiber of an
image ``b`` consists of monomials with ``mu = |b|`` and is enumerated in
full as soon as ``|b| <= bound``.
"""

from __future__ import annotations

import random
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Sequence

from .binomial import (Binomial, GroebnerBasis, ResourceError, buchberger, normalized_set,
                       reduce_basis, reduced_groebner)
from .code import Code, DomainError, is_external, support, lawrence_code
from .lattice import integer_kernel, lawrence_lift, matmul, rank
from .orders import Grevlex, Lex, MonomialOrder, WeightOrder, image, mu_weight, omega_order

DEFAULT_MONOMIAL_BUDGET = 10 ** 7


def default_bound(code: Code) -> int:
    top = max((len(s) for s in code.variables), default=0)
    return 2 * top + 2


# -- matrices and binomials ------------------------------------------------------

@dataclass(frozen=True)
class CodeMatrix:
    entries: tuple[tuple[int, ...], ...]
    rank: int

    @property
    def shape(self):
        return len(self.entries), (len(self.entries[0]) if self.entries else 0)

    def columns(self):
        return list(zip(*self.entries))


def code_matrix(code: Code) -> CodeMatrix:
    if not code.num_variables:
        raise DomainError("code has no nonzero words")
    return CodeMatrix(code.matrix, rank(code.matrix))


def make_binomial(code: Code, plus, minus) -> Binomial:
    """Binomial over the zone variables of ``code``, kernel membership checked."""
    return Binomial.in_kernel(code.matrix, plus, minus)


def binomial_from_supports(code: Code, plus: dict, minus: dict) -> Binomial:
    """Build from ``{support: exponent}`` maps, e.g. ``{(1,): 1, (2,): 1}``."""
    def vec(d):
        v = [0] * code.num_variables
        for s, e in d.items():
            v[code.index[tuple(sorted(s))]] += e
        return v
    return make_binomial(code, vec(plus), vec(minus))


def monomial(code: Code, *supports) -> tuple[int, ...]:
    v = [0] * code.num_variables
    for s in supports:
        v[code.index[tuple(sorted(s))]] += 1
    return tuple(v)


def ideal_is_zero(code: Code) -> bool:
    """True iff the code matrix has independent columns (the toric ideal is 0)."""
    if not code.num_variables:
        return True
    return rank(code.matrix) == code.num_variables


def a_set(code: Code) -> frozenset[Binomial]:
    """Binomials t_i t_j - t_{ij} over weight-one words summing to a codeword."""
    out = set()
    for i, j in combinations(range(1, code.n + 1), 2):
        if code.has_support((i,)) and code.has_support((j,)) and code.has_support((i, j)):
            out.add(make_binomial(code, monomial(code, (i,), (j,)), monomial(code, (i, j))))
    return normalized_set(out)


def b_set(code: Code) -> frozenset[Binomial]:
    """``t_c - prod_{j in supp c} t_j`` for every word of weight >= 2."""
    out = set()
    for s in code.variables:
        if len(s) >= 2:
            if not all(code.has_support((j,)) for j in s):
                raise DomainError("B is only defined when the weight-one words are present")
            out.add(make_binomial(code, monomial(code, s), monomial(code, *[(j,) for j in s])))
    return normalized_set(out)


def u_set(code: Code) -> frozenset[Binomial]:
    """The quadratics t_{1j} t_k - t_{1k} t_j for 2 <= j < k <= n.

    On the Lawrence code the labels are taken literally.  On an internal code
    ``{1, j}`` and ``{k}`` are read through the row transform: they are the
    words ``1^j 0...`` and ``0 1^(k-1) 0...``.
    """
    from .code import internal_code
    n = code.n
    if code == lawrence_code(n):
        top = {j: (1, j) for j in range(2, n + 1)}
        single = {k: (k,) for k in range(2, n + 1)}
    elif code == internal_code(n):
        top = {j: tuple(range(1, j + 1)) for j in range(2, n + 1)}
        single = {k: tuple(range(2, k + 1)) for k in range(2, n + 1)}
    else:
        raise DomainError("U_n is defined for internal and Lawrence codes only")
    out = set()
    for j, k in combinations(range(2, n + 1), 2):
        out.add(make_binomial(code, monomial(code, top[j], single[k]),
                              monomial(code, top[k], single[j])))
    return normalized_set(out)


# -- fibers -----------------------------------------------------------------------

@dataclass(frozen=True)
class Fiber:
    degree: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    complete: bool = True

    @property
    def weight(self) -> int:
        return sum(self.degree)

    def __len__(self):
        return len(self.members)


def enumerate_monomials(code: Code, bound: int, budget: int = DEFAULT_MONOMIAL_BUDGET):
    """All monomials with ``mu <= bound``, as (exponents, image) pairs."""
    weights = [len(s) for s in code.variables]
    cols = [tuple(1 if i + 1 in s else 0 for i in range(code.n)) for s in code.variables]
    m = len(weights)
    count = 0
    exps = [0] * m
    img = [0] * code.n

    def rec(j, room):
        nonlocal count
        if j == m:
            count += 1
            if count > budget:
                raise ResourceError(f"monomial budget {budget} exhausted")
            yield tuple(exps), tuple(img)
            return
        w, col = weights[j], cols[j]
        e = 0
        while True:
            yield from rec(j + 1, room - e * w)
            if (e + 1) * w > room:
                break
            e += 1
            exps[j] = e
            for i, c in enumerate(col):
                if c:
                    img[i] += 1
        for i, c in enumerate(col):
            if c:
                img[i] -= e
        exps[j] = 0

    yield from rec(0, bound)


def all_fibers(code: Code, bound: int, budget: int = DEFAULT_MONOMIAL_BUDGET) -> list[Fiber]:
    """Every fiber of weight <= bound (singletons included), sorted by weight."""
    groups = defaultdict(list)
    for exps, img in enumerate_monomials(code, bound, budget):
        groups[img].append(exps)
    key = Grevlex().key
    fibers = [Fiber(b, tuple(sorted(ms, key=key, reverse=True)))
              for b, ms in groups.items()]
    fibers.sort(key=lambda f: (f.weight, f.degree))
    return fibers


def fibers_up_to(code: Code, bound: int, budget: int = DEFAULT_MONOMIAL_BUDGET) -> list[Fiber]:
    """Fibers with at least two members among monomials of weight <= bound."""
    if bound < 2:
        raise ValueError("degree bound must be at least 2")
    return [f for f in all_fibers(code, bound, budget) if len(f) >= 2]


def _components(members) -> list[list[int]]:
    """Components of the graph joining members that share a variable."""
    parent = list(range(len(members)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_var = defaultdict(list)
    for idx, a in enumerate(members):
        for v, e in enumerate(a):
            if e:
                by_var[v].append(idx)
    for idxs in by_var.values():
        r = find(idxs[0])
        for k in idxs[1:]:
            rk = find(k)
            if rk != r:
                parent[rk] = r
    comps = defaultdict(list)
    for idx in range(len(members)):
        comps[find(idx)].append(idx)
    return sorted(comps.values())


# -- generators ---------------------------------------------------------------------

@dataclass
class GeneratorResult:
    binomials: frozenset[Binomial]
    method: str
    bound: int | None
    certified: bool
    max_degree: int = 0

    def __iter__(self):
        return iter(self.binomials)

    def __len__(self):
        return len(self.binomials)


def minimal_generators(code: Code, bound: int | None = None,
                       budget: int = DEFAULT_MONOMIAL_BUDGET) -> frozenset[Binomial]:
    """A minimal binomial generating set of all generators of weight <= bound.

    In each fiber, members sharing a variable are connected through
    generators of lower weight, and one binomial per extra component is
    needed.  The links form a spanning tree on the components chosen to keep
    the largest t-degree as small as possible (Kruskal on the cheapest pair
    between each two components), so the result also has the least possible
    maximal degree when the ideal is not homogeneous in t-degree.
    """
    bound = default_bound(code) if bound is None else bound
    if not code.num_variables:
        return frozenset()
    out = set()
    for f in all_fibers(code, bound, budget):
        if len(f) < 2:
            continue
        comps = _components(f.members)
        if len(comps) < 2:
            continue
        links = []
        for i, j in combinations(range(len(comps)), 2):
            best = min(((max(sum(f.members[a]), sum(f.members[b])),
                         sum(f.members[a]) + sum(f.members[b]), a, b)
                        for a in comps[i] for b in comps[j]))
            links.append((best, i, j))
        parent = list(range(len(comps)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (_, _, a, b), i, j in sorted(links):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
                out.add(make_binomial(code, f.members[a], f.members[b]))
    return normalized_set(out)


def lattice_binomials(code: Code) -> list[Binomial]:
    """``t^{u+} - t^{u-}`` for a lattice basis ``u`` of the integer kernel."""
    out = []
    for u in integer_kernel(code.matrix, code.num_variables):
        plus = tuple(max(x, 0) for x in u)
        minus = tuple(max(-x, 0) for x in u)
        out.append(make_binomial(code, plus, minus))
    return out


class _Revlex(MonomialOrder):
    """Reverse lexicographic comparison; only meaningful after a positive weight."""

    kind = "revlex"

    def __init__(self, perm):
        self.perm = tuple(perm)

    def key(self, a):
        return tuple(-a[i] for i in reversed(self.perm))

    def spec(self):
        return "revlex<" + ",".join(map(str, self.perm)) + ">"


def _saturation_order(code: Code, var: int) -> WeightOrder:
    m = code.num_variables
    perm = [i for i in range(m) if i != var] + [var]
    return WeightOrder([len(s) for s in code.variables], _Revlex(perm))


def saturate(code: Code, gens: Sequence[Binomial], var: int,
             budget: int | None = None) -> list[Binomial]:
    """Generators of ``(J : t_var^infinity)``.

    The ideal is homogeneous for the ``mu`` grading, so in a Groebner basis
    for ``mu`` refined by reverse lex with ``t_var`` last, dividing every
    element by its largest power of ``t_var`` generates the saturation.
    """
    gb = buchberger(gens, _saturation_order(code, var), budget)
    out = []
    for b in gb.elements:
        k = min(b.plus[var], b.minus[var])
        if k:
            p = list(b.plus)
            q = list(b.minus)
            p[var] -= k
            q[var] -= k
            b = make_binomial(code, p, q)
        out.append(b)
    return out


def saturation_generators(code: Code, budget: int | None = None) -> frozenset[Binomial]:
    gens = lattice_binomials(code)
    if not gens:
        return frozenset()
    for var in range(code.num_variables):
        gens = saturate(code, gens, var, budget)
    return normalized_set(reduce_basis(buchberger(gens, Grevlex(), budget)).elements)


def is_saturated(code: Code, gens: Sequence[Binomial], budget: int | None = None) -> bool:
    """True iff ``(J : t_i) = J`` for every variable."""
    for var in range(code.num_variables):
        gb = buchberger(gens, _saturation_order(code, var), budget)
        if any(min(b.plus[var], b.minus[var]) for b in gb.elements):
            return False
    return True


def certify_generators(code: Code, gens: Iterable[Binomial], budget: int | None = None) -> bool:
    """Exact check that ``gens`` generate the whole toric ideal.

    The lattice ideal of the kernel basis must lie in ``J`` and ``J`` must be
    saturated with respect to every variable.
    """
    gens = list(gens)
    lattice = lattice_binomials(code)
    if not lattice:
        return not gens
    gb = buchberger(gens, Grevlex(), budget)
    if not all(gb.contains(b) for b in lattice):
        return False
    return is_saturated(code, gens, budget)


def toric_generators(code: Code, method: str = "saturation", bound: int | None = None,
                     budget: int | None = None) -> GeneratorResult:
    """A generating set of the toric ideal.

    ``saturation`` is exact.  ``bounded`` reads minimal generators off the
    fibers of weight <= bound and then certifies the result exactly.
    """
    if method == "saturation":
        gens = saturation_generators(code, budget)
        return GeneratorResult(gens, method, None, True, _max_deg(gens))
    if method == "bounded":
        bound = default_bound(code) if bound is None else bound
        gens = minimal_generators(code, bound)
        return GeneratorResult(gens, method, bound, certify_generators(code, gens, budget),
                               _max_deg(gens))
    raise ValueError(f"unknown method {method!r}")


def _max_deg(bins) -> int:
    return max((max(b.degrees) for b in bins), default=0)


# -- primitive binomials and Graver bases ---------------------------------------------

def _box(a):
    return product(*(range(x + 1) for x in a))


def is_primitive(b: Binomial, code: Code) -> bool:
    """No other binomial t^u - t^v of the ideal has u | plus and v | minus."""
    if any(x and y for x, y in zip(b.plus, b.minus)):
        return False
    below = defaultdict(list)
    for v in _box(b.minus):
        below[image(code, v)].append(v)
    for u in _box(b.plus):
        if not any(u):
            continue
        for v in below.get(image(code, u), ()):
            if (u, v) != (b.plus, b.minus) and u != v:
                return False
    return True


@dataclass
class GraverResult:
    binomials: frozenset[Binomial]
    method: str
    bound: int | None
    complete: bool

    def __iter__(self):
        return iter(self.binomials)

    def __len__(self):
        return len(self.binomials)


def _mask(a):
    m = 0
    for i, x in enumerate(a):
        if x:
            m |= 1 << i
    return m


def graver_by_fibers(code: Code, bound: int,
                     budget: int = DEFAULT_MONOMIAL_BUDGET) -> frozenset[Binomial]:
    """All primitive binomials of weight <= bound, from complete fibers.

    A non-primitive binomial is divided by a primitive one of strictly
    smaller weight, so each candidate is only tested against primitives
    already found.
    """
    found: list[tuple[tuple, tuple, int, int]] = []
    out = []
    for f in all_fibers(code, bound, budget):
        if len(f) < 2:
            continue
        masks = [_mask(a) for a in f.members]
        new = []
        for i, j in combinations(range(len(f.members)), 2):
            if masks[i] & masks[j]:
                continue
            a, b = f.members[i], f.members[j]
            ma, mb = masks[i], masks[j]
            divided = False
            for u, v, mu_, mv in found:
                if (not (mu_ & ~ma) and not (mv & ~mb)
                        and all(x <= y for x, y in zip(u, a))
                        and all(x <= y for x, y in zip(v, b))):
                    divided = True
                    break
                if (not (mu_ & ~mb) and not (mv & ~ma)
                        and all(x <= y for x, y in zip(u, b))
                        and all(x <= y for x, y in zip(v, a))):
                    divided = True
                    break
            if not divided:
                new.append((a, b, ma, mb))
        found.extend(new)
        out.extend(make_binomial(code, a, b) for a, b, _, _ in new)
    return normalized_set(out)


def graver_by_lawrence(code: Code, budget: int | None = None) -> frozenset[Binomial]:
    """Exact Graver basis from a Groebner basis of the Lawrence lifting.

    For a Lawrence lifting every reduced Groebner basis is the Graver basis,
    and its elements are exactly ``(u, -u)`` for ``u`` in the Graver basis
    of the code matrix.
    """
    m = code.num_variables
    if not m or ideal_is_zero(code):
        return frozenset()
    lifted = lawrence_lift(code.matrix)
    lattice = [tuple(u) + tuple(-x for x in u) for u in integer_kernel(code.matrix, m)]
    gens = [Binomial.in_kernel(lifted, tuple(max(x, 0) for x in u), tuple(max(-x, 0) for x in u))
            for u in lattice]
    order_weights = [1] * (2 * m)
    for var in range(2 * m):
        perm = [i for i in range(2 * m) if i != var] + [var]
        gb = buchberger(gens, WeightOrder(order_weights, _Revlex(perm)), budget)
        gens = []
        for b in gb.elements:
            k = min(b.plus[var], b.minus[var])
            p, q = list(b.plus), list(b.minus)
            p[var] -= k
            q[var] -= k
            gens.append(Binomial.in_kernel(lifted, p, q))
    gb = reduce_basis(buchberger(gens, Grevlex(), budget))
    out = set()
    for b in gb.elements:
        u = tuple(x - y for x, y in zip(b.plus[:m], b.minus[:m]))
        out.add(make_binomial(code, tuple(max(x, 0) for x in u), tuple(max(-x, 0) for x in u)))
    return normalized_set(out)


def graver_basis(code: Code, bound: int | None = None, method: str = "fibers",
                 budget: int | None = None) -> GraverResult:
    """Primitive binomials of the toric ideal.

    ``fibers`` returns every primitive of weight <= bound; the result is
    marked complete when the code is a recognised Lawrence type (then the
    minimal generators coincide with the Graver basis and are certified) or
    when ``method="lawrence"`` is used, which is exact.
    """
    if ideal_is_zero(code):
        return GraverResult(frozenset(), method, bound, True)
    if method == "lawrence":
        return GraverResult(graver_by_lawrence(code, budget), method, None, True)
    if method != "fibers":
        raise ValueError(f"unknown method {method!r}")
    bound = default_bound(code) if bound is None else bound
    gb = graver_by_fibers(code, bound)
    complete = False
    if lawrence_type(code) is not None:
        mingens = minimal_generators(code, bound)
        complete = mingens == gb and certify_generators(code, mingens, budget)
    return GraverResult(gb, method, bound, complete)


# -- Lawrence liftings --------------------------------------------------------------

@dataclass
class LawrenceWitness:
    n: int
    transform: list[list[int]]
    lifted: list[list[int]]
    column_map: list[int]
    dropped_columns: list[tuple[int, ...]]
    ok: bool
    note: str = ""


def internal_row_transform(n: int) -> list[list[int]]:
    """Rows e_1, e_i - e_{i+1} (2 <= i <= n-1), e_n."""
    rows = []
    for i in range(1, n + 1):
        r = [0] * n
        if i == 1 or i == n:
            r[i - 1] = 1
        else:
            r[i - 1], r[i] = 1, -1
        rows.append(r)
    return rows


def printed_row_transform(n: int) -> list[list[int]]:
    """Rows e_1, e_{i-1} - e_i (2 <= i <= n-1), e_n, as displayed in print."""
    rows = []
    for i in range(1, n + 1):
        r = [0] * n
        if i == 1 or i == n:
            r[i - 1] = 1
        else:
            r[i - 2], r[i - 1] = 1, -1
        rows.append(r)
    return rows


def _match_columns(a, b) -> list[int] | None:
    """Permutation p with column j of ``a`` equal to column p[j] of ``b``."""
    ca, cb = list(zip(*a)), list(zip(*b))
    if len(ca) != len(cb):
        return None
    used, perm = set(), []
    for col in ca:
        k = next((k for k, c in enumerate(cb) if c == col and k not in used), None)
        if k is None:
            return None
        used.add(k)
        perm.append(k)
    return perm


def verify_lawrence_row_equivalence(n: int, transform=None) -> LawrenceWitness:
    """Check that the internal code matrix is row-equivalent to Lambda([1 ... 1]).

    The target is the lifting of the 1 x (n-1) ones row, an n x (2n-2)
    matrix.  The transform must be unimodular; columns are matched up to a
    permutation, which is returned in canonical variable order.
    """
    if n < 3:
        raise DomainError("need n >= 3")
    from .code import internal_code
    code = internal_code(n)
    t = internal_row_transform(n) if transform is None else transform
    image_ = matmul(t, code.matrix)
    target = lawrence_lift([[1] * (n - 1)])
    perm = _match_columns(image_, target)
    invertible = rank(t) == n
    ok = perm is not None and invertible
    literal = internal_code(n, literal=True)
    dropped = [s for s in literal.variables if s not in code.index]
    note = ("transform rows e1, e_i - e_(i+1), e_n; the word e1 is not a column"
            if ok else "columns do not match the lifting")
    return LawrenceWitness(n, t, target, perm or [], dropped, ok, note)


def lawrence_type(code: Code) -> LawrenceWitness | None:
    """Witness when ``code`` is an internal code (or its Lawrence code), else None."""
    from .code import internal_code
    n = code.n
    if n < 3:
        return None
    if code == internal_code(n):
        return verify_lawrence_row_equivalence(n)
    if code == lawrence_code(n):
        target = lawrence_lift([[1] * (n - 1)])
        perm = _match_columns(code.matrix, target)
        return LawrenceWitness(n, [[int(i == j) for j in range(n)] for i in range(n)],
                               target, perm or [], [], perm is not None)
    return None


# -- indispensable binomials -------------------------------------------------------------

def indispensable_binomials(code: Code, bound: int | None = None, method: str = "fibers",
                            budget: int = DEFAULT_MONOMIAL_BUDGET) -> frozenset[Binomial]:
    """Binomials that belong, up to sign, to every binomial generating set.

    ``fibers``: t^a - t^b is indispensable iff its fiber is exactly {a, b}
    and a, b share no variable.  ``membership`` is an independent oracle:
    the binomial must be outside the ideal generated by all other binomials
    of weight up to its own, checked with Groebner bases.
    """
    bound = default_bound(code) if bound is None else bound
    if ideal_is_zero(code):
        return frozenset()
    fibers = all_fibers(code, bound, budget)
    if method == "fibers":
        out = []
        for f in fibers:
            if len(f) == 2:
                a, b = f.members
                if not any(x and y for x, y in zip(a, b)):
                    out.append(make_binomial(code, a, b))
        return normalized_set(out)
    if method == "membership":
        return _indispensable_by_membership(code, fibers)
    raise ValueError(f"unknown method {method!r}")


def _indispensable_by_membership(code: Code, fibers: list[Fiber]) -> frozenset[Binomial]:
    out = []
    for f in fibers:
        # with a third member w, u - v = (u - w) + (w - v) is never needed
        if len(f) != 2:
            continue
        a, b = f.members
        lower = []
        for g in fibers:
            if len(g) >= 2 and g.degree != f.degree and all(
                    x <= y for x, y in zip(g.degree, f.degree)):
                lower.extend(make_binomial(code, x, y) for x, y in zip(g.members, g.members[1:]))
        target = make_binomial(code, a, b)
        if not lower or not buchberger(lower, Grevlex()).contains(target):
            out.append(target)
    return normalized_set(out)


def all_quadratic_binomials(code: Code) -> frozenset[Binomial]:
    """Every homogeneous quadratic binomial t_a t_b - t_c t_d of the ideal."""
    groups = defaultdict(list)
    m = code.num_variables
    for i in range(m):
        for j in range(i, m):
            v = [0] * m
            v[i] += 1
            v[j] += 1
            v = tuple(v)
            groups[image(code, v)].append(v)
    out = []
    for members in groups.values():
        for a, b in combinations(members, 2):
            out.append(make_binomial(code, a, b))
    return normalized_set(out)


# -- universal Groebner bases --------------------------------------------------------------

@dataclass
class UGBResult:
    exact: bool
    lower: frozenset[Binomial]
    upper: frozenset[Binomial]
    orders: list[str] = field(default_factory=list)
    bound: int | None = None
    upper_complete: bool = False
    reduced_bases: dict = field(default_factory=dict)

    @property
    def closed(self) -> bool:
        return self.lower == self.upper

    @property
    def basis(self) -> frozenset[Binomial]:
        if not (self.exact or self.closed):
            raise ValueError("sandwich is open")
        return self.lower


CERTIFY_UPPER_VARIABLES = 12


def named_orders(code: Code) -> list[MonomialOrder]:
    return [Lex(), Grevlex(), omega_order(code)]


def random_weight_order(code: Code, rng: random.Random) -> WeightOrder:
    m = code.num_variables
    return WeightOrder([rng.randint(0, 2 * m) for _ in range(m)], Grevlex())


def _weights_decide(order: WeightOrder, gb: GroebnerBasis) -> bool:
    w = order._w
    return all(sum(x * y for x, y in zip(w, b.plus)) != sum(x * y for x, y in zip(w, b.minus))
               for b in gb.elements)


def _rgb(args):
    gens, order = args
    return order.spec(), reduced_groebner(gens, order)


def universal_gb(code: Code, order_family_size: int = 20, bound: int | None = None,
                 seed: int = 0, workers: int = 1, targeted: bool = True,
                 graver_method: str = "fibers", certify_upper: bool = True) -> UGBResult:
    """Exact UGB for Lawrence-type codes, otherwise a lower/upper sandwich.

    The lower bound is the union of reduced Groebner bases over lex,
    grevlex, the omega order, ``order_family_size`` random weight orders and,
    with ``targeted``, weight orders aimed at Graver elements still missing
    from the union.  The upper bound is the Graver basis; with
    ``certify_upper`` and at most ``CERTIFY_UPPER_VARIABLES`` variables it
    is recomputed exactly through the Lawrence lifting.
    """
    bound = default_bound(code) if bound is None else bound
    if ideal_is_zero(code):
        return UGBResult(True, frozenset(), frozenset(), [], bound, True)
    graver = graver_basis(code, bound, method=graver_method)
    if lawrence_type(code) is not None and graver.complete:
        return UGBResult(True, graver.binomials, graver.binomials, ["lawrence"], bound, True)

    gens = list(toric_generators(code, "saturation").binomials)
    rng = random.Random(seed)
    orders: list[MonomialOrder] = named_orders(code)
    for _ in range(order_family_size):
        for _attempt in range(20):
            o = random_weight_order(code, rng)
            if _weights_decide(o, reduced_groebner(gens, o)):
                break
        orders.append(o)

    bases = {}
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for spec, gb in pool.map(_rgb, [(gens, o) for o in orders]):
                bases[spec] = gb
    else:
        for o in orders:
            spec, gb = _rgb((gens, o))
            bases[spec] = gb

    lower = set()
    for gb in bases.values():
        lower |= gb.as_set()

    if targeted:
        from .fiberpoly import targeted_orders
        missing = [g for g in graver.binomials if g not in lower]
        for o in targeted_orders(code, missing):
            spec, gb = _rgb((gens, o))
            bases[spec] = gb
            lower |= gb.as_set()

    lower = frozenset(lower)
    upper, complete = graver.binomials, graver.complete
    if not complete and certify_upper and code.num_variables <= CERTIFY_UPPER_VARIABLES:
        upper, complete = graver_by_lawrence(code), True
    return UGBResult(False, lower, upper, list(bases), bound, complete, bases)
