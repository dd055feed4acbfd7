"""Codes of inductively pierced diagrams, built curve by curve.

A diagram is grown by adding curves one at a time.  A new curve either
sits inside a single zone (a 0-piercing) or crosses exactly one existing
curve between two zones that share a stretch of boundary (a 1-piercing).
The generator tracks which zones share boundary, so the geometric dual
graph is known exactly and can be compared with Hamming adjacency.

New curves never enclose old ones.  Any diagram in which a curve encloses
others can be redrawn in this form after relabelling, so nothing is lost
when codes are compared up to permutation of neurons.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

from .code import Code

Zone = frozenset


@dataclass(frozen=True)
class Diagram:
    n: int
    zones: frozenset
    boundaries: frozenset  # pairs of zones sharing a stretch of boundary
    depth: tuple[int, ...]  # number of curves enclosing each curve

    def code(self, name: str = "") -> Code:
        return Code.from_supports(self.n, [sorted(z) for z in self.zones], name=name)

    @property
    def max_depth(self) -> int:
        return max(self.depth, default=0)


def empty_diagram() -> Diagram:
    return Diagram(0, frozenset([Zone()]), frozenset(), ())


def moves(d: Diagram, max_depth: int | None = None, piercing: int = 1):
    """Every diagram obtained by adding curve ``d.n + 1``."""
    k = d.n + 1
    out = []
    for w in sorted(d.zones, key=sorted):
        if max_depth is not None and len(w) > max_depth:
            continue
        wk = w | {k}
        out.append(Diagram(k, d.zones | {wk}, d.boundaries | {frozenset((w, wk))},
                           d.depth + (len(w),)))
    if piercing < 1:
        return out
    for pair in sorted(d.boundaries, key=lambda p: sorted(sorted(z) for z in p)):
        w, wj = sorted(pair, key=len)
        if max_depth is not None and len(w) > max_depth:
            continue
        wk, wjk = w | {k}, wj | {k}
        new = {frozenset((w, wk)), frozenset((wj, wjk)), frozenset((wk, wjk))}
        out.append(Diagram(k, d.zones | {wk, wjk}, d.boundaries | new, d.depth + (len(w),)))
    return out


def canonical(code: Code) -> tuple:
    """A relabelling-invariant key (minimum over neuron permutations)."""
    best = None
    for p in permutations(range(code.n)):
        words = sorted(tuple(w[i] for i in p) for w in code.words)
        key = tuple(words)
        if best is None or key < best:
            best = key
    return best


def all_diagrams(n: int, max_depth: int | None = None, piercing: int = 1) -> list[Diagram]:
    level = [empty_diagram()]
    for _ in range(n):
        level = [m for d in level for m in moves(d, max_depth, piercing)]
    return level


def pierced_codes(n: int, max_depth: int | None = None, piercing: int = 1) -> list[Code]:
    """One code per relabelling class of n-curve pierced diagrams."""
    seen, out = set(), []
    for d in all_diagrams(n, max_depth, piercing):
        c = d.code()
        key = canonical(c)
        if key not in seen:
            seen.add(key)
            out.append(c)
    return out


def random_diagram(n: int, rng: random.Random, max_depth: int | None = None,
                   piercing: int = 1) -> Diagram:
    d = empty_diagram()
    for _ in range(n):
        d = rng.choice(moves(d, max_depth, piercing))
    return d


def hamming_boundaries(d: Diagram) -> frozenset:
    zones = list(d.zones)
    return frozenset(frozenset((a, b)) for i, a in enumerate(zones) for b in zones[i + 1:]
                     if len(a ^ b) == 1)
