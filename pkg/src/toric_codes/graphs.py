"""Weighted dual graphs, pattern graphs and weight-preserving embeddings.

The dual graph of a code has one vertex per codeword (the zero word
included) weighted by the word's weight, and an edge between words at
Hamming distance one.  A pattern embeds when an injective vertex map keeps
weights and sends edges to edges.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterable

from .binomial import Binomial, KernelError, normalized_set
from .code import Code, DomainError, Word, support, weight, word_from_support
from .toric import make_binomial, monomial


class PatternError(ValueError):
    """An induced binomial failed its kernel check."""


@dataclass(frozen=True)
class WeightedDualGraph:
    vertices: tuple[Word, ...]
    edges: frozenset[frozenset]

    def weight(self, v: Word) -> int:
        return weight(v)

    def neighbours(self, v: Word) -> set[Word]:
        return {u for e in self.edges if v in e for u in e if u != v}

    def adjacency(self) -> dict[Word, set[Word]]:
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def to_edgelist(self) -> str:
        return _to_edgelist(self.vertices, self.edges)


def _label(w: Word) -> str:
    return "".join(map(str, w))


def _to_edgelist(vertices, edges, header: Iterable[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines += [f"v {_label(v)} {weight(v)}" for v in vertices]
    lines += [f"e {a} {b}" for a, b in sorted(sorted((_label(x), _label(y))) for x, y in
                                              (tuple(e) for e in edges))]
    return "\n".join(lines) + "\n"


def dual_graph(code: Code) -> WeightedDualGraph:
    words = tuple(code.words)
    if (0,) * code.n not in words:
        words = ((0,) * code.n,) + words
    edges = frozenset(frozenset((a, b)) for a, b in combinations(words, 2)
                      if sum(x != y for x, y in zip(a, b)) == 1)
    return WeightedDualGraph(words, edges)


# -- patterns ------------------------------------------------------------------------

@dataclass(frozen=True)
class PatternGraph:
    """A small dual graph with a binomial template over its own zone labels.

    ``plus`` and ``minus`` list the supports (in the pattern's local
    neurons) whose zone variables multiply into each term.
    """

    id: int
    name: str
    n: int
    vertices: tuple[Word, ...]
    edges: frozenset[frozenset]
    plus: tuple[tuple[int, ...], ...]
    minus: tuple[tuple[int, ...], ...]
    shared_binomial_text: bool = False
    notes: tuple[str, ...] = field(default=(), compare=False)

    def to_edgelist(self) -> str:
        head = [f"pattern {self.id} {self.name}",
                "binomial " + " ".join("{%s}" % ",".join(map(str, s)) for s in self.plus)
                + " - " + " ".join("{%s}" % ",".join(map(str, s)) for s in self.minus)]
        if self.shared_binomial_text:
            head.append("shared_binomial_text")
        return _to_edgelist(self.vertices, self.edges, head + list(self.notes))


def _parse_supports(text: str) -> tuple[tuple[int, ...], ...]:
    out = []
    for chunk in text.replace("}", "} ").split():
        chunk = chunk.strip("{}")
        out.append(tuple(sorted(int(x) for x in chunk.split(",") if x)))
    return tuple(out)


def parse_pattern(text: str) -> PatternGraph:
    pid, name, plus, minus, shared = None, "", (), (), False
    notes, verts, edges = [], [], []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("pattern "):
                _, pid, name = body.split(maxsplit=2)
                pid = int(pid)
            elif body.startswith("binomial "):
                lhs, rhs = body[len("binomial "):].split(" - ")
                plus, minus = _parse_supports(lhs), _parse_supports(rhs)
            elif body == "shared_binomial_text":
                shared = True
            else:
                notes.append(body)
            continue
        kind, *rest = line.split()
        if kind == "v":
            verts.append(tuple(int(ch) for ch in rest[0]))
            if int(rest[1]) != sum(verts[-1]):
                raise ValueError(f"vertex {rest[0]} has weight {sum(verts[-1])}, not {rest[1]}")
        elif kind == "e":
            a, b = (tuple(int(ch) for ch in x) for x in rest[:2])
            edges.append(frozenset((a, b)))
        else:
            raise ValueError(f"bad line {raw!r}")
    if pid is None:
        raise ValueError("pattern header missing")
    return PatternGraph(pid, name, len(verts[0]), tuple(verts), frozenset(edges), plus, minus,
                        shared, tuple(notes))


def load_patterns() -> list[PatternGraph]:
    """The six shipped pattern graphs, ordered by type."""
    root = resources.files("toric_codes") / "patterns"
    out = [parse_pattern(p.read_text(encoding="utf-8"))
           for p in root.iterdir() if p.name.endswith(".txt")]
    return sorted(out, key=lambda p: p.id)


def load_pattern_file(path: str | Path) -> PatternGraph:
    return parse_pattern(Path(path).read_text(encoding="utf-8"))


# -- embeddings -----------------------------------------------------------------------

def find_embeddings(pattern, g: WeightedDualGraph) -> list[dict]:
    """All injective, weight- and edge-preserving vertex maps ``pattern -> g``."""
    p_adj = defaultdict(set)
    for e in pattern.edges:
        a, b = tuple(e)
        p_adj[a].add(b)
        p_adj[b].add(a)
    g_adj = g.adjacency()
    buckets = defaultdict(list)
    for v in g.vertices:
        buckets[weight(v)].append(v)
    # most constrained first: high degree, then few candidates
    order = sorted(pattern.vertices,
                   key=lambda v: (-len(p_adj[v]), len(buckets[weight(v)]), v))
    # make every vertex after the first adjacent to an earlier one when possible
    ordered = [order[0]]
    rest = order[1:]
    while rest:
        nxt = next((v for v in rest if p_adj[v] & set(ordered)), rest[0])
        ordered.append(nxt)
        rest.remove(nxt)

    found, phi, used = [], {}, set()

    def extend(i):
        if i == len(ordered):
            found.append(dict(phi))
            return
        v = ordered[i]
        mapped_nbrs = [phi[u] for u in p_adj[v] if u in phi]
        if mapped_nbrs:
            cands = set.intersection(*(g_adj[x] for x in mapped_nbrs))
            cands = [c for c in cands if weight(c) == weight(v)]
        else:
            cands = buckets[weight(v)]
        for c in sorted(cands):
            if c in used:
                continue
            phi[v] = c
            used.add(c)
            extend(i + 1)
            used.discard(c)
            del phi[v]

    extend(0)
    return found


def induced_binomial(pattern: PatternGraph, embedding: dict, code: Code) -> Binomial:
    """The pattern's template with local zones replaced by their images."""
    def term(supports):
        host = []
        for s in supports:
            w = word_from_support(s, pattern.n)
            host.append(support(embedding[w]))
        return monomial(code, *host)
    try:
        return make_binomial(code, term(pattern.plus), term(pattern.minus))
    except KernelError as exc:
        raise PatternError(f"pattern {pattern.id} induces a non-kernel binomial") from exc


def is_exact_embedding(code: Code, embedding: dict) -> bool:
    """True when the image is every codeword supported on the image's neurons.

    The fiber of an induced binomial only involves codewords supported on
    those neurons, so for an exact embedding the fiber is the pattern's own
    fiber and indispensability carries over.  Extra words there (zone {2}
    next to a lollipop on curves 1, 2, 3, say) add balancing monomials.
    """
    image = set(embedding.values())
    neurons = set().union(*(support(w) for w in image))
    local = {w for w in code.words if set(support(w)) <= neurons} | {(0,) * code.n}
    return local == image


def pattern_binomials(code: Code, patterns=None, exact: bool = True
                      ) -> dict[int, frozenset[Binomial]]:
    """Induced binomials per pattern type.

    With ``exact=False`` every embedding counts, which over-generates on
    codes such as {1, 2, 12, 13, 123}.
    """
    patterns = load_patterns() if patterns is None else patterns
    g = dual_graph(code)
    out = {}
    for p in patterns:
        out[p.id] = normalized_set(induced_binomial(p, phi, code)
                                   for phi in find_embeddings(p, g)
                                   if not exact or is_exact_embedding(code, phi))
    return out


def depth1_indispensables(code: Code, patterns=None, exact: bool = True) -> frozenset[Binomial]:
    """Union of the binomials induced by the pattern embeddings."""
    out = set()
    for bins in pattern_binomials(code, patterns, exact).values():
        out |= bins
    return frozenset(out)


# -- the neuron graph of an external code ----------------------------------------------------

@dataclass(frozen=True)
class DeltaGraph:
    vertices: tuple[int, ...]
    edges: frozenset[frozenset]

    @property
    def degrees(self) -> dict[int, int]:
        deg = {v: 0 for v in self.vertices}
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = self.adjacency()
        seen, stack = {self.vertices[0]}, [self.vertices[0]]
        while stack:
            for u in adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(self.vertices)

    def tree_failure(self) -> str | None:
        if not self.is_connected():
            return "not connected"
        if len(self.edges) != len(self.vertices) - 1:
            return f"has {len(self.edges)} edges, a tree on {len(self.vertices)} vertices has " \
                   f"{len(self.vertices) - 1}"
        return None

    def is_tree(self) -> bool:
        return self.tree_failure() is None


def delta_graph(code: Code) -> DeltaGraph:
    verts = tuple(range(1, code.n + 1))
    edges = frozenset(frozenset((i, j)) for i, j in combinations(verts, 2)
                      if code.has_support((i, j)))
    return DeltaGraph(verts, edges)


def graph_from_edges(n: int, edges) -> DeltaGraph:
    return DeltaGraph(tuple(range(1, n + 1)), frozenset(frozenset(e) for e in edges))


def expected_quadratic_count(dg: DeltaGraph) -> int:
    """Number of length-two paths, sum over v of C(d(v), 2); trees only."""
    why = dg.tree_failure()
    if why:
        raise DomainError(f"Delta graph is not a tree: {why}")
    return sum(comb(d, 2) for d in dg.degrees.values())


def distance_two_partners(dg: DeltaGraph) -> list[tuple[int, int, int]]:
    """Triples (i, k, j), i < j, with k adjacent to both i and j."""
    why = dg.tree_failure() if dg.edges else None
    if why:
        raise DomainError(f"Delta graph is not a tree: {why}")
    adj = dg.adjacency()
    out = []
    for k in dg.vertices:
        for i, j in combinations(sorted(adj[k]), 2):
            out.append((i, k, j))
    return sorted(out)


def distance_two_binomials(code: Code) -> frozenset[Binomial]:
    """t_i t_{jk} - t_{ik} t_j for each length-two path i - k - j of the Delta graph."""
    out = set()
    for i, k, j in distance_two_partners(delta_graph(code)):
        out.add(make_binomial(code, monomial(code, (i,), (j, k)), monomial(code, (i, k), (j,))))
    return normalized_set(out)
