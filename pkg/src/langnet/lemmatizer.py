"""Dictionary-validated suffix-stripping lemmatizer.

Resolution for a word of class C:

1. an irregular form listed in ``exceptions[C]`` maps to its base;
2. a word already in ``valid_lemmas[C]`` is returned as is;
3. detachment rules for C are tried in order and the first candidate that
   is a valid lemma wins;
4. otherwise the word comes back unchanged.

Lexicon directories hold up to three files per class, named after the
class (``noun``, ``verb``, ``adj``, ``adv``):

``<class>.lemmas``  one base form per line
``<class>.exc``     ``inflected<TAB>base`` per line
``<class>.rules``   ``suffix<TAB>replacement`` per line, in application order
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Mapping, Optional, Sequence, Union

from .preprocess import TagClass

__all__ = ["LemmaLexicon", "DEFAULT_RULES", "CLASS_FILE_STEMS", "lemmatize"]

CLASS_FILE_STEMS = {TagClass.N: "noun", TagClass.V: "verb", TagClass.J: "adj", TagClass.R: "adv"}

# Doubled-consonant rules come after the plain ones so "running" -> "run"
# is only tried once "runn"/"runne" have failed.
_DOUBLED = "bdglmnprt"

DEFAULT_RULES: dict[TagClass, tuple[tuple[str, str], ...]] = {
    TagClass.N: (
        ("s", ""), ("ses", "s"), ("xes", "x"), ("zes", "z"),
        ("ches", "ch"), ("shes", "sh"), ("men", "man"), ("ies", "y"),
    ),
    TagClass.V: (
        ("s", ""), ("ies", "y"), ("es", "e"), ("es", ""),
        ("ed", "e"), ("ed", ""), ("ing", "e"), ("ing", ""),
        *((c + c + "ed", c) for c in _DOUBLED),
        *((c + c + "ing", c) for c in _DOUBLED),
    ),
    TagClass.J: (("er", ""), ("est", ""), ("er", "e"), ("est", "e")),
    TagClass.R: (),
}


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _parse_pairs(text: str, what: str) -> list[tuple[str, str]]:
    pairs = []
    for line in text.splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.rstrip("\r\n").split("\t")
        if len(parts) != 2:
            raise ValueError(f"bad {what} line {line!r}; expected two tab-separated fields")
        pairs.append((parts[0].strip(), parts[1].strip()))
    return pairs


@dataclass(frozen=True, eq=False)
class LemmaLexicon:
    valid_lemmas: Mapping[TagClass, frozenset]
    exceptions: Mapping[TagClass, Mapping[str, str]]
    detachment_rules: Mapping[TagClass, Sequence[tuple[str, str]]]

    def __post_init__(self):
        valid, exc, rules = {}, {}, {}
        for cls in TagClass:
            exc[cls] = dict(self.exceptions.get(cls, {}))
            # exception targets are lemmas by definition
            valid[cls] = frozenset(self.valid_lemmas.get(cls, ())) | frozenset(exc[cls].values())
            rules[cls] = tuple(self.detachment_rules.get(cls, DEFAULT_RULES[cls]))
        object.__setattr__(self, "valid_lemmas", valid)
        object.__setattr__(self, "exceptions", exc)
        object.__setattr__(self, "detachment_rules", rules)

    @classmethod
    def default(cls) -> "LemmaLexicon":
        return _bundled_lexicon()

    @classmethod
    def from_directory(cls, path: Union[str, Path], base: Optional["LemmaLexicon"] = None) -> "LemmaLexicon":
        """Load a lexicon directory. Files that are absent fall back to *base*
        (the bundled lexicon by default)."""
        path = Path(path)
        if not path.is_dir():
            raise FileNotFoundError(f"lexicon directory not found: {path}")
        base = base or cls.default()
        return cls._load(lambda name: path / name, base)

    @classmethod
    def _load(cls, locate, base: Optional["LemmaLexicon"]) -> "LemmaLexicon":
        valid, exc, rules = {}, {}, {}
        for tag_class, stem in CLASS_FILE_STEMS.items():
            f = locate(f"{stem}.lemmas")
            if f.is_file():
                valid[tag_class] = frozenset(_lines(f.read_text(encoding="utf-8")))
            elif base is not None:
                valid[tag_class] = base.valid_lemmas[tag_class]
            f = locate(f"{stem}.exc")
            if f.is_file():
                exc[tag_class] = dict(_parse_pairs(f.read_text(encoding="utf-8"), "exception"))
            elif base is not None:
                exc[tag_class] = base.exceptions[tag_class]
            f = locate(f"{stem}.rules")
            if f.is_file():
                rules[tag_class] = tuple(_parse_pairs(f.read_text(encoding="utf-8"), "rule"))
            elif base is not None:
                rules[tag_class] = base.detachment_rules[tag_class]
        return cls(valid, exc, rules)


@lru_cache(maxsize=None)
def _bundled_lexicon() -> LemmaLexicon:
    root = resources.files("langnet").joinpath("data", "lexicon")
    return LemmaLexicon._load(root.joinpath, None)


def lemmatize(word: str, tag_class: TagClass = TagClass.N, lexicon: LemmaLexicon | None = None) -> str:
    lexicon = lexicon or LemmaLexicon.default()
    tag_class = TagClass(tag_class)
    base = lexicon.exceptions[tag_class].get(word)
    if base is not None:
        return base
    valid = lexicon.valid_lemmas[tag_class]
    if word in valid:
        return word
    for suffix, replacement in lexicon.detachment_rules[tag_class]:
        if word.endswith(suffix):
            candidate = word[: len(word) - len(suffix)] + replacement
            if candidate and candidate in valid:
                return candidate
    return word
