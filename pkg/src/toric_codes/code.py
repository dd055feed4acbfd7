"""Combinatorial neural codes and the named code families.

A code is a set of 0/1 words of a fixed length ``n``.  Every nonzero
codeword carries one zone variable, labelled by its support; the all-zero
word is accepted but never gets a variable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

Word = tuple[int, ...]
Support = tuple[int, ...]


class CodeFormatError(ValueError):
    """Malformed code input."""


class DomainError(ValueError):
    """An operation was called outside its domain."""


def weight(word: Sequence[int]) -> int:
    return sum(1 for b in word if b)


def support(word: Sequence[int]) -> Support:
    """1-based positions of the nonzero entries."""
    return tuple(i + 1 for i, b in enumerate(word) if b)


def word_from_support(supp: Iterable[int], n: int) -> Word:
    s = set(supp)
    return tuple(1 if i + 1 in s else 0 for i in range(n))


def support_label(supp: Sequence[int]) -> str:
    """``(1, 2, 3)`` -> ``"1,2,3"``; the empty support prints as ``""``."""
    return ",".join(str(i) for i in supp)


def canonical_key(supp: Sequence[int]) -> tuple[int, Support]:
    # weight first, then the sorted index sequence
    return (len(supp), tuple(supp))


@dataclass(frozen=True)
class Code:
    """An immutable combinatorial code on ``n`` neurons.

    ``words`` is stored sorted and duplicate free.  Zone variables are the
    supports of the nonzero words in canonical order (by weight, then
    lexicographically by index sequence).
    """

    n: int
    words: tuple[Word, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise CodeFormatError("codes need at least one neuron")
        cleaned = set()
        for w in self.words:
            w = tuple(int(b) for b in w)
            if len(w) != self.n:
                raise CodeFormatError(f"word {w} does not have length {self.n}")
            if any(b not in (0, 1) for b in w):
                raise CodeFormatError(f"word {w} is not a 0/1 word")
            cleaned.add(w)
        object.__setattr__(
            self, "words", tuple(sorted(cleaned, key=lambda w: canonical_key(support(w))))
        )

    @classmethod
    def from_supports(cls, n: int, supports: Iterable[Iterable[int]], name: str = "",
                      zero: bool = True) -> "Code":
        words = [word_from_support(s, n) for s in supports]
        if zero:
            words.append((0,) * n)
        return cls(n, tuple(words), name=name)

    @property
    def contains_zero(self) -> bool:
        return (0,) * self.n in self.words

    @cached_property
    def nonzero_words(self) -> tuple[Word, ...]:
        return tuple(w for w in self.words if any(w))

    @cached_property
    def variables(self) -> tuple[Support, ...]:
        """Zone-variable supports in canonical order."""
        return tuple(support(w) for w in self.nonzero_words)

    @cached_property
    def index(self) -> dict[Support, int]:
        return {s: i for i, s in enumerate(self.variables)}

    @property
    def num_variables(self) -> int:
        return len(self.variables)

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """The n x m 0/1 matrix whose columns are the nonzero codewords."""
        cols = self.nonzero_words
        return tuple(tuple(c[i] for c in cols) for i in range(self.n))

    def variable_names(self) -> list[str]:
        return ["t" + support_label(s).replace(",", "") if self.n < 10
                else "t{" + support_label(s) + "}" for s in self.variables]

    def __contains__(self, word) -> bool:
        return tuple(word) in self.words

    def has_support(self, supp: Iterable[int]) -> bool:
        return tuple(sorted(supp)) in self.index

    def silent_neurons(self) -> list[int]:
        """Neurons (1-based) that never fire; empty for a proper code."""
        return [i + 1 for i in range(self.n) if not any(w[i] for w in self.words)]

    def every_neuron_fires(self) -> bool:
        return not self.silent_neurons()

    def __len__(self) -> int:
        return len(self.words)

    def __str__(self) -> str:
        return "{" + ", ".join("".join(map(str, w)) for w in self.words) + "}"

    def to_lines(self) -> list[str]:
        return ["".join(map(str, w)) for w in self.words]


def parse_code(lines: Iterable[str], name: str = "") -> Code:
    """Build a code from 0/1 strings.

    Blank lines and lines starting with ``#`` are skipped.  Duplicates are
    collapsed.
    """
    words = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        bad = set(line) - {"0", "1"}
        if bad:
            raise CodeFormatError(f"line {lineno}: illegal characters {sorted(bad)!r}")
        if words and len(line) != len(words[0]):
            raise CodeFormatError(
                f"line {lineno}: length {len(line)} differs from {len(words[0])}")
        words.append(tuple(int(ch) for ch in line))
    if not words:
        raise CodeFormatError("empty code")
    return Code(len(words[0]), tuple(words), name=name)


def load_code(path: str | Path) -> Code:
    path = Path(path)
    return parse_code(path.read_text(encoding="utf-8").splitlines(), name=path.stem)


def write_code(code: Code, path: str | Path) -> None:
    Path(path).write_text("\n".join(code.to_lines()) + "\n", encoding="utf-8")


def is_external(code: Code) -> bool:
    """True iff every weight-one word e_1, ..., e_n is a codeword."""
    return all(code.has_support((i,)) for i in range(1, code.n + 1))


def has_down_steps(code: Code) -> bool:
    """Every word of weight >= 2 loses one neuron to another codeword.

    A zone of a well-formed diagram always borders a zone inside one fewer
    curve, so codes of such diagrams pass.
    """
    return all(any(code.has_support(tuple(x for x in s if x != i)) for i in s)
               for s in code.variables if len(s) >= 2)


def internal_code(n: int, literal: bool = False) -> Code:
    """The n-th internal code.

    Words are built from prefixes of ones, ``c_j = 1^j 0^(n-j)``, and their
    shifts ``c_j - e_1``.  By default the word ``e_1`` (and its shift, which is
    zero) is left out: only then is the code matrix row-equivalent to the
    Lawrence lifting of the ``1 x (n-1)`` all-ones matrix, and the toric ideal
    homogeneous.  ``literal=True`` keeps ``c_1 = e_1`` exactly as in the
    displayed formula, which produces ``2n - 1`` nonzero words.
    """
    if n < 2:
        raise DomainError("internal codes need n >= 2")
    prefixes = [tuple(1 if i < j else 0 for i in range(n)) for j in range(1, n + 1)]
    shifted = [(0,) + p[1:] for p in prefixes]
    words = prefixes + shifted + [(0,) * n]
    if not literal:
        words = [w for w in words if w != (1,) + (0,) * (n - 1)]
    tag = "L%d" % n + ("-literal" if literal else "")
    return Code(n, tuple(words), name=tag)


def lawrence_code(n: int) -> Code:
    """Code whose matrix is the Lawrence lifting of the 1 x (n-1) ones row.

    Words are ``e_1 + e_j`` and ``e_j`` for ``2 <= j <= n``; these are the
    zone labels ``{1, j}`` and ``{k}`` used for the quadratic family U_n.
    """
    if n < 2:
        raise DomainError("need n >= 2")
    supports = [(1, j) for j in range(2, n + 1)] + [(j,) for j in range(2, n + 1)]
    return Code.from_supports(n, supports, name="A%d" % n)


def full_code(n: int) -> Code:
    """All 2^n words (the n-curve Venn code)."""
    words = [tuple((k >> (n - 1 - i)) & 1 for i in range(n)) for k in range(2 ** n)]
    return Code(n, tuple(words), name="venn%d" % n)


def example_code() -> Code:
    """Three curves: 1 and 3 cross, 2 lies inside 1 and crosses 3."""
    return parse_code(["000", "100", "001", "110", "101", "111"], name="ci")


def c1_code() -> Code:
    return full_code(3)


def tree_code(n: int, edges: Iterable[tuple[int, int]], name: str = "") -> Code:
    """External code with weight-one words and e_i + e_j for each edge."""
    supports = [(i,) for i in range(1, n + 1)] + [tuple(sorted(e)) for e in edges]
    return Code.from_supports(n, supports, name=name)
