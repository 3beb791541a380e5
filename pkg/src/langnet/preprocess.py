"""Text preprocessing: tokenize, drop stopwords, tag, lemmatize.

The default pipeline turns raw text into an ordered list of lemmas::

    >>> preprocess("the children were playing games")
    ['child', 'play', 'game']

Every stage is also exposed on its own so callers can stop early or swap a
resource (stoplist, tagger, lexicon).
"""

from __future__ import annotations

import enum
import re
import unicodedata
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence, Union

__all__ = [
    "InputEncodingError",
    "Token",
    "PosTag",
    "TagClass",
    "StopList",
    "PipelineConfig",
    "RuleTagger",
    "PipelineResult",
    "decode_text",
    "tokenize",
    "remove_stopwords",
    "pos_tag",
    "map_tag",
    "parse_pretagged",
    "run_pipeline",
    "preprocess",
]


class InputEncodingError(ValueError):
    """Raised when input bytes are not valid UTF-8."""


@dataclass(frozen=True)
class Token:
    surface: str
    position: int

    def __post_init__(self):
        if not self.surface or any(ch.isspace() for ch in self.surface):
            raise ValueError(f"invalid token surface: {self.surface!r}")
        if self.position < 0:
            raise ValueError(f"negative token position: {self.position}")


# Penn Treebank tag set, including punctuation tags.
PENN_TAGS = frozenset(
    """
    CC CD DT EX FW IN JJ JJR JJS LS MD NN NNS NNP NNPS PDT POS PRP PRP$ RB RBR
    RBS RP SYM TO UH VB VBD VBG VBN VBP VBZ WDT WP WP$ WRB
    # $ `` '' ( ) , . : -LRB- -RRB- HYPH NFP
    """.split()
)
UNKNOWN_TAG = "UNKNOWN"


@dataclass(frozen=True)
class PosTag:
    """A Penn-Treebank-style tag. Codes outside the tag set become UNKNOWN."""

    tag: str

    def __post_init__(self):
        tag = self.tag.strip().upper() if isinstance(self.tag, str) else ""
        if tag not in PENN_TAGS:
            tag = UNKNOWN_TAG
        object.__setattr__(self, "tag", tag)

    def __str__(self):
        return self.tag


class TagClass(str, enum.Enum):
    """Coarse word classes understood by the lemmatizer."""

    N = "N"
    V = "V"
    J = "J"
    R = "R"


def _data_path(name: str):
    return resources.files("langnet").joinpath("data", name)


def _read_word_lines(text: str) -> list[str]:
    words = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.append(line)
    return words


@dataclass(frozen=True)
class StopList:
    words: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "words", frozenset(w.lower() for w in self.words))

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.words

    def __len__(self):
        return len(self.words)

    @classmethod
    def from_text(cls, text: str) -> "StopList":
        return cls(frozenset(_read_word_lines(text)))

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "StopList":
        return cls.from_text(Path(path).read_text(encoding="utf-8"))

    @classmethod
    def default(cls) -> "StopList":
        return _default_stoplist()


@lru_cache(maxsize=None)
def _default_stoplist() -> StopList:
    return StopList.from_text(_data_path("stopwords_en.txt").read_text(encoding="utf-8"))


@dataclass(frozen=True)
class PipelineConfig:
    lowercase: bool = True
    remove_stopwords: bool = True
    window_size: int = 1
    keep_alphabetic_only: bool = True
    lemmatize: bool = True

    def __post_init__(self):
        if isinstance(self.window_size, bool) or not isinstance(self.window_size, int):
            raise TypeError("window_size must be an integer")
        if self.window_size < 1:
            raise ValueError(f"window_size must be >= 1, got {self.window_size}")
        if self.window_size > 3:
            warnings.warn(
                f"window_size={self.window_size} is larger than the usual range 1..3",
                stacklevel=3,
            )


# ---------------------------------------------------------------------------
# tokenization

# A word is a run of letters/digits; apostrophes and hyphens are kept only
# between two such runs ("don't", "well-known").
_WORD_RE = re.compile(r"[^\W_]+(?:['’\-][^\W_]+)*")
_JOINERS = frozenset("'’-")


def decode_text(data: Union[str, bytes, bytearray]) -> str:
    """Return *data* as ``str``, rejecting anything that is not valid UTF-8."""
    if isinstance(data, (bytes, bytearray)):
        try:
            return bytes(data).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputEncodingError(f"input is not valid UTF-8: {exc}") from exc
    try:
        data.encode("utf-8")
    except UnicodeEncodeError as exc:
        raise InputEncodingError(f"input is not valid UTF-8: {exc}") from exc
    return data


def _is_alphabetic(word: str) -> bool:
    return all(ch.isalpha() or ch in _JOINERS for ch in word)


def _keep_surface(word: str, config: PipelineConfig) -> bool:
    if not any(ch.isalnum() for ch in word):
        return False
    return _is_alphabetic(word) if config.keep_alphabetic_only else True


def tokenize(text: Union[str, bytes], config: PipelineConfig | None = None) -> list[Token]:
    """Split *text* into word tokens, in order.

    Pure punctuation never yields a token. With ``keep_alphabetic_only``
    tokens containing digits are dropped as well. Positions number the
    surviving tokens from zero.
    """
    config = config or PipelineConfig()
    text = unicodedata.normalize("NFC", decode_text(text))
    tokens = []
    for match in _WORD_RE.finditer(text):
        word = match.group()
        if not _keep_surface(word, config):
            continue
        if config.lowercase:
            word = word.lower()
        tokens.append(Token(word, len(tokens)))
    return tokens


def remove_stopwords(tokens: Iterable[Token], stoplist: StopList | None = None) -> list[Token]:
    stoplist = StopList.default() if stoplist is None else stoplist
    return [tok for tok in tokens if tok.surface not in stoplist]


# ---------------------------------------------------------------------------
# tagging

# Ordered; the first suffix that matches wins. A rule only fires when at
# least two characters remain in front of the suffix.
SUFFIX_RULES: tuple[tuple[str, str], ...] = (
    ("ing", "VBG"),
    ("ed", "VBD"),
    ("ly", "RB"),
    ("ous", "JJ"),
    ("ness", "NN"),
    ("ss", "NN"),
    ("is", "NN"),
    ("us", "NN"),
    ("s", "NNS"),
    ("tion", "NN"),
    ("ment", "NN"),
    ("ity", "NN"),
    ("ful", "JJ"),
    ("able", "JJ"),
    ("ible", "JJ"),
    ("ive", "JJ"),
    ("al", "JJ"),
    ("ic", "JJ"),
    ("est", "JJS"),
)
FALLBACK_TAG = "NN"


def _load_tag_table(text: str) -> dict[str, str]:
    table = {}
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        word, tag = line.split("\t")
        table.setdefault(word.strip().lower(), tag.strip())
    return table


class RuleTagger:
    """Deterministic tagger: word table, then suffix rules, then NN."""

    def __init__(self, lexicon: dict[str, str] | None = None,
                 suffix_rules: Sequence[tuple[str, str]] = SUFFIX_RULES,
                 fallback: str = FALLBACK_TAG):
        if lexicon is None:
            lexicon = _load_tag_table(_data_path("tags.tsv").read_text(encoding="utf-8"))
        self.lexicon = lexicon
        self.suffix_rules = tuple(suffix_rules)
        self.fallback = fallback

    def tag_word(self, word: str) -> str:
        key = word.lower()
        if key in self.lexicon:
            return self.lexicon[key]
        if key.isdigit():
            return "CD"
        for suffix, tag in self.suffix_rules:
            if key.endswith(suffix) and len(key) - len(suffix) >= 2:
                return tag
        return self.fallback

    def tag(self, words: Sequence[str]) -> list[str]:
        return [self.tag_word(w) for w in words]


@lru_cache(maxsize=None)
def _default_tagger() -> RuleTagger:
    return RuleTagger()


def pos_tag(tokens: Sequence[Token], tagger: RuleTagger | None = None) -> list[tuple[Token, PosTag]]:
    tagger = tagger or _default_tagger()
    tags = tagger.tag([tok.surface for tok in tokens])
    return [(tok, PosTag(tag)) for tok, tag in zip(tokens, tags)]


_CLASS_BY_INITIAL = {"N": TagClass.N, "V": TagClass.V, "J": TagClass.J, "R": TagClass.R}


def map_tag(tag: Union[PosTag, str]) -> TagClass:
    """Collapse a fine tag to N/V/J/R by its first letter; anything else is N."""
    code = tag.tag if isinstance(tag, PosTag) else str(tag)
    return _CLASS_BY_INITIAL.get(code[:1].upper(), TagClass.N)


def parse_pretagged(text: Union[str, bytes], config: PipelineConfig | None = None) -> list[tuple[Token, PosTag]]:
    """Read whitespace-separated ``word_TAG`` items.

    The last underscore separates word from tag. Items whose word would be
    dropped by :func:`tokenize` (punctuation, or digits under
    ``keep_alphabetic_only``) are skipped.
    """
    config = config or PipelineConfig()
    text = unicodedata.normalize("NFC", decode_text(text))
    tagged = []
    for item in text.split():
        word, sep, tag = item.rpartition("_")
        if not sep or not word or not tag:
            raise ValueError(f"malformed pretagged item {item!r}; expected word_TAG")
        if not _keep_surface(word, config):
            continue
        if config.lowercase:
            word = word.lower()
        tagged.append((Token(word, len(tagged)), PosTag(tag)))
    return tagged


# ---------------------------------------------------------------------------
# full pipeline


@dataclass(frozen=True)
class PipelineResult:
    tokens: tuple           # every token produced by tokenization
    kept: tuple             # tokens surviving stopword removal
    tags: tuple             # PosTag per kept token (empty when not lemmatizing)
    lemmas: tuple           # output words, aligned with ``kept``


def run_pipeline(text: Union[str, bytes], config: PipelineConfig | None = None,
                 stoplist: StopList | None = None, lexicon=None,
                 tagger: RuleTagger | None = None, pretagged: bool = False) -> PipelineResult:
    from .lemmatizer import LemmaLexicon, lemmatize

    config = config or PipelineConfig()
    if pretagged:
        tagged = parse_pretagged(text, config)
        tokens = [tok for tok, _ in tagged]
        given = {tok.position: tag for tok, tag in tagged}
    else:
        tokens = tokenize(text, config)
        given = None

    kept = remove_stopwords(tokens, stoplist) if config.remove_stopwords else list(tokens)

    if not config.lemmatize:
        return PipelineResult(tuple(tokens), tuple(kept), (), tuple(t.surface for t in kept))

    if given is not None:
        tags = [given[tok.position] for tok in kept]
    else:
        tags = [tag for _, tag in pos_tag(kept, tagger)]
    lexicon = lexicon or LemmaLexicon.default()
    lemmas = [lemmatize(tok.surface, map_tag(tag), lexicon) for tok, tag in zip(kept, tags)]
    return PipelineResult(tuple(tokens), tuple(kept), tuple(tags), tuple(lemmas))


def preprocess(text: Union[str, bytes], config: PipelineConfig | None = None,
               stoplist: StopList | None = None, lexicon=None, **kwargs) -> list[str]:
    return list(run_pipeline(text, config, stoplist, lexicon, **kwargs).lemmas)
