"""Text and JSON renderings of binomials, bases and verdicts.

Binomials are written two ways.  The JSON form maps comma-joined supports
to exponents, ``{"plus": {"1,2": 1}, "minus": {"1": 1, "2": 1}}``.  The
text form lists zone supports in braces, ``{1,3} {2,3} - {3} {1,2,3}``,
and is also what the golden data files use.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterable

from .binomial import Binomial
from .code import Code, support_label
from .orders import Grevlex, MonomialOrder
from .toric import make_binomial, monomial


def monomial_dict(code: Code, a) -> dict[str, int]:
    return {",".join(map(str, s)): e for s, e in zip(code.variables, a) if e}


def binomial_dict(code: Code, b: Binomial) -> dict:
    return {"plus": monomial_dict(code, b.plus), "minus": monomial_dict(code, b.minus)}


def monomial_text(code: Code, a) -> str:
    if not any(a):
        return "1"
    parts = []
    for name, e in zip(code.variable_names(), a):
        if e:
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def binomial_text(code: Code, b: Binomial) -> str:
    return f"{monomial_text(code, b.plus)} - {monomial_text(code, b.minus)}"


def _supports(text: str) -> list[tuple[int, ...]]:
    out = []
    for chunk in text.replace("}", "} ").split():
        chunk = chunk.strip("{}")
        out.append(tuple(sorted(int(x) for x in chunk.split(",") if x)))
    return out


def parse_binomial(code: Code, text: str) -> Binomial:
    """Parse ``{1,3} {2,3} - {3} {1,2,3}``; raises KernelError off the kernel."""
    lhs, rhs = text.split(" - ")
    return make_binomial(code, monomial(code, *_supports(lhs)), monomial(code, *_supports(rhs)))


def parse_binomials(code: Code, lines: Iterable[str]) -> list[Binomial]:
    return [parse_binomial(code, ln.strip()) for ln in lines
            if ln.strip() and not ln.lstrip().startswith("#")]


def sorted_basis(elements: Iterable[Binomial], order: MonomialOrder) -> list[Binomial]:
    """Leading term first in each binomial; elements ascending by leading term."""
    oriented = [b.oriented(order) for b in elements]
    return sorted(oriented, key=lambda b: (order.key(b.plus), order.key(b.minus)))


@dataclass
class BasisReport:
    code: Code
    method: str
    elements: list[Binomial]
    order: str | None = None
    bound: int | None = None
    complete: bool = True
    note: str = ""
    extra: dict = field(default_factory=dict)

    @classmethod
    def build(cls, code, method, elements, order: MonomialOrder | None = None, **kw):
        o = order if order is not None else Grevlex()
        return cls(code, method, sorted_basis(elements, o),
                   order.spec() if order is not None else None, **kw)

    def to_dict(self) -> dict:
        d = {
            "code": self.code.name or None,
            "n": self.code.n,
            "method": self.method,
            "order": self.order,
            "degree_bound": self.bound,
            "complete": self.complete,
            "size": len(self.elements),
            "elements": [binomial_dict(self.code, b) for b in self.elements],
        }
        if self.note:
            d["note"] = self.note
        d.update(self.extra)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        head = [f"method: {self.method}"]
        if self.order:
            head.append(f"order: {self.order}")
        if self.bound is not None:
            head.append(f"degree bound: {self.bound}")
        head.append(f"complete: {'yes' if self.complete else 'no'}")
        lines = ["  ".join(head), f"{len(self.elements)} binomials"]
        if self.note:
            lines.append(f"note: {self.note}")
        for k, v in self.extra.items():
            lines.append(f"{k}: {v}")
        lines += [f"  {binomial_text(self.code, b)}" for b in self.elements]
        return "\n".join(lines) + "\n"


def verdict_dict(v) -> dict:
    return asdict(v)


def verdict_text(v) -> str:
    parts = [f"{v.test}: {'true' if v.value else 'false'}"]
    if v.order:
        parts.append(f"order {v.order}")
    if v.basis_size:
        parts.append(f"{v.basis_size} binomials, max degree {v.max_degree}")
    if v.note:
        parts.append(v.note)
    return "  ".join(parts)


def code_label(code: Code) -> str:
    return code.name or "{" + ", ".join(support_label(s) for s in code.variables) + "}"
