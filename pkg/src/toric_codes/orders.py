"""Monomial orders on exponent vectors.

Exponent vectors are plain tuples of nonnegative ints indexed by the
canonical variable order of a code.  Every order exposes ``key(a)``; two
monomials compare as their keys do, so sorting, ``max`` and heaps work
directly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .code import Code, DomainError

Exps = tuple[int, ...]

LESS, EQUAL, GREATER = -1, 0, 1


class OrderSpecError(ValueError):
    """Unparseable order specification."""


class MonomialOrder:
    kind = ""

    def key(self, a: Exps):
        raise NotImplementedError

    def spec(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({self.spec()!r})"

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.spec() == other.spec()

    def __hash__(self):
        return hash(self.spec())

    def max(self, a: Exps, b: Exps) -> Exps:
        return a if self.key(a) >= self.key(b) else b


class Lex(MonomialOrder):
    """Lexicographic order, first variable most expensive."""

    kind = "lex"

    def key(self, a):
        return tuple(a)

    def spec(self):
        return "lex"


class Grevlex(MonomialOrder):
    """Graded reverse lexicographic order.

    Ties in total degree go to the monomial with the smaller exponent in the
    last variable where the two differ, i.e. ``a < b`` iff the last nonzero
    entry of ``a - b`` is positive.  ``perm`` optionally lists variable
    positions from most to least expensive.
    """

    kind = "grevlex"

    def __init__(self, perm: Sequence[int] | None = None):
        self.perm = tuple(perm) if perm is not None else None

    def key(self, a):
        if self.perm is not None:
            a = [a[i] for i in self.perm]
        return (sum(a), tuple(-x for x in reversed(a)))

    def spec(self):
        if self.perm is None:
            return "grevlex"
        return "grevlex<" + ",".join(map(str, self.perm)) + ">"


class WeightOrder(MonomialOrder):
    """Compare by ``w . a`` first; ``tiebreak`` decides equal weights."""

    kind = "weight"

    def __init__(self, weights: Sequence, tiebreak: MonomialOrder | None = None):
        self.weights = tuple(Fraction(w) for w in weights)
        self.tiebreak = tiebreak if tiebreak is not None else Grevlex()
        # integral weights keep keys as ints, which is much faster
        if all(w.denominator == 1 for w in self.weights):
            self._w = tuple(int(w) for w in self.weights)
        else:
            self._w = self.weights

    def key(self, a):
        if len(a) != len(self._w):
            raise DomainError(
                f"weight vector has {len(self._w)} entries, monomial has {len(a)}")
        return (sum(w * x for w, x in zip(self._w, a)), self.tiebreak.key(a))

    def spec(self):
        return "weight:[" + ",".join(str(w) for w in self.weights) + "]:" + self.tiebreak.spec()


def compare(order: MonomialOrder, a: Exps, b: Exps) -> int:
    if len(a) != len(b):
        raise DomainError("exponent vectors live over different variable sets")
    ka, kb = order.key(a), order.key(b)
    return LESS if ka < kb else GREATER if ka > kb else EQUAL


def mu_weight(code: Code, a: Exps) -> int:
    """L1 norm of the image sum_w a_w * w of a monomial."""
    return sum(len(s) * x for s, x in zip(code.variables, a))


def image(code: Code, a: Exps) -> tuple[int, ...]:
    """Image of a monomial under the code matrix (the x-exponent vector)."""
    out = [0] * code.n
    for s, x in zip(code.variables, a):
        if x:
            for i in s:
                out[i - 1] += x
    return tuple(out)


def omega_order(code: Code) -> WeightOrder:
    """Weight ``wt(c) - 1`` per zone variable, grevlex tiebreak."""
    return WeightOrder([len(s) - 1 for s in code.variables], Grevlex())


_GOY_WEIGHTS = {(1,): 0, (2,): 0, (3,): 0, (1, 2): 1, (1, 3): 1, (2, 3): 1, (1, 2, 3): 0}


def goy_order(code: Code) -> WeightOrder:
    """Weight (0,0,0,1,1,1,0) on t1,t2,t3,t12,t13,t23,t123, grevlex tiebreak.

    Codes missing some of the seven words use the matching sub-vector.
    """
    if code.n != 3:
        raise DomainError("this order is only defined for 3-neuron codes")
    return WeightOrder([_GOY_WEIGHTS[s] for s in code.variables], Grevlex())


_WEIGHT_RE = re.compile(r"^weight:\[(?P<w>[^\]]*)\]:(?P<tb>.+)$")


def parse_order(spec: str, code: Code | None = None) -> MonomialOrder:
    """Parse ``lex``, ``grevlex``, ``omega``, ``goy`` or ``weight:[q1,...]:<tiebreak>``."""
    spec = spec.strip()
    if spec == "lex":
        return Lex()
    if spec == "grevlex":
        return Grevlex()
    if spec in ("omega", "goy"):
        if code is None:
            raise OrderSpecError(f"order {spec!r} needs a code")
        return omega_order(code) if spec == "omega" else goy_order(code)
    m = _WEIGHT_RE.match(spec)
    if m:
        try:
            weights = [Fraction(x.strip()) for x in m.group("w").split(",") if x.strip()]
        except (ValueError, ZeroDivisionError) as exc:
            raise OrderSpecError(f"bad weight in {spec!r}") from exc
        tiebreak = parse_order(m.group("tb"), code)
        if isinstance(tiebreak, WeightOrder):
            raise OrderSpecError("only one weight layer is supported")
        if code is not None and len(weights) != code.num_variables:
            raise OrderSpecError(
                f"{len(weights)} weights given for {code.num_variables} variables")
        return WeightOrder(weights, tiebreak)
    raise OrderSpecError(f"unknown order {spec!r}")
