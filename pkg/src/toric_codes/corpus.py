"""Built-in codes and golden bases shipped with the package."""

from __future__ import annotations

from importlib import resources

from .binomial import Binomial
from .code import Code, parse_code
from .report import parse_binomials

DEPTH1_EXEMPLARS = ("ci", "d1_lozenge", "d1_nested", "d1_trap", "d1_flower",
                    "d1_flower_trap", "d1_mixed5", "d1_full5")
TREE_CODES = ("path4", "star4", "caterpillar5")


def _root():
    return resources.files("toric_codes") / "corpus"


def corpus_names() -> list[str]:
    return sorted(p.name[:-5] for p in _root().iterdir() if p.name.endswith(".code"))


def load(name: str) -> Code:
    path = _root() / f"{name}.code"
    if not path.is_file():
        raise KeyError(f"no built-in code {name!r}; known: {', '.join(corpus_names())}")
    return parse_code(path.read_text(encoding="utf-8").splitlines(), name=name)


def golden_basis(code: Code, name: str) -> list[Binomial]:
    text = (_root() / f"{name}.gb").read_text(encoding="utf-8")
    return parse_binomials(code, text.splitlines())
