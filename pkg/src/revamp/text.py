"""Sentence segmentation, tokenization and part-of-speech tagging.

Everything here is deterministic and dictionary-driven: a coarse 12-tag
tagger backed by embedded closed-class word lists, a shipped open-class
lexicon (``data/pos_lexicon.txt``, one ``word<TAB>TAG`` entry per line)
and a handful of suffix heuristics. No trained models, so identical text
always yields identical token/tag sequences.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from pathlib import Path

_DATA_DIR = Path(__file__).resolve().parent / "data"


class PosTag(Enum):
    NOUN = "NOUN"
    VERB = "VERB"
    ADJ = "ADJ"
    ADV = "ADV"
    PRON = "PRON"
    DET = "DET"
    ADP = "ADP"
    CONJ = "CONJ"
    NUM = "NUM"
    PRT = "PRT"
    PUNCT = "PUNCT"
    X = "X"


@dataclass(frozen=True)
class Token:
    surface: str
    normal: str
    tag: PosTag
    index: int

    @property
    def is_word(self) -> bool:
        return self.tag is not PosTag.PUNCT


@dataclass(frozen=True)
class Sentence:
    """One tokenized, tagged review sentence with provenance.

    ``char_span`` addresses the originating review content; ``text`` is the
    exact slice, so every downstream snippet stays a verbatim substring of
    what was ingested.
    """

    tokens: tuple[Token, ...]
    review_id: str
    char_span: tuple[int, int]
    text: str

    def word_count(self) -> int:
        return sum(1 for t in self.tokens if t.is_word)

    def normals(self) -> tuple[str, ...]:
        return tuple(t.normal for t in self.tokens)


# --------------------------------------------------------------------------
# Sentence segmentation
# --------------------------------------------------------------------------

# Fixed abbreviation guard list. A period directly after one of these does
# not end a sentence. Unlisted abbreviations may over-segment; accepted.
ABBREVIATIONS = frozenset({
    "mr.", "mrs.", "ms.", "dr.", "prof.", "sr.", "jr.", "st.",
    "vs.", "etc.", "e.g.", "i.e.", "eg.", "ie.",
    "inc.", "ltd.", "co.", "corp.", "approx.", "dept.", "fig.",
    "oz.", "lb.", "lbs.", "ft.", "sq.", "est.",
})

_BOUNDARY_RE = re.compile(r"[.!?\n]")
_CLOSERS = "\"')]"


def _abbrev_before(text: str, dot: int) -> str:
    """Word (letters and internal periods) ending at ``dot``, dot included."""
    start = dot
    while start > 0 and (text[start - 1].isalpha() or text[start - 1] == "."):
        start -= 1
    return text[start:dot].lower() + "."


def _is_guarded_period(text: str, i: int) -> bool:
    # decimal point / thousands-style digit separator
    if 0 < i < len(text) - 1 and text[i - 1].isdigit() and text[i + 1].isdigit():
        return True
    word = _abbrev_before(text, i)
    if word in ABBREVIATIONS:
        return True
    # single-letter initials such as "J. Smith"
    if len(word) == 2 and word[0].isalpha():
        return True
    return False


def segment_sentences(text: str) -> list[tuple[int, int]]:
    """Split review content into sentence spans.

    Boundaries sit after runs of ``.``, ``!``, ``?`` (plus any closing
    quotes/brackets) and at newlines, subject to the abbreviation and
    decimal guards. Returned spans are whitespace-trimmed, ordered and
    non-overlapping, and together cover every non-whitespace character.
    Empty input yields an empty list.
    """
    spans: list[tuple[int, int]] = []
    n = len(text)

    def emit(start: int, end: int) -> None:
        while start < end and text[start].isspace():
            start += 1
        while end > start and text[end - 1].isspace():
            end -= 1
        if end > start:
            spans.append((start, end))

    start = 0
    pos = 0
    while True:
        m = _BOUNDARY_RE.search(text, pos)
        if m is None:
            break
        i = m.start()
        ch = text[i]
        if ch == "\n":
            emit(start, i)
            start = i + 1
            pos = i + 1
            continue
        j = i + 1
        while j < n and text[j] in ".!?":
            j += 1
        if ch == "." and j == i + 1 and _is_guarded_period(text, i):
            pos = j
            continue
        while j < n and text[j] in _CLOSERS:
            j += 1
        emit(start, j)
        start = j
        pos = j
    emit(start, n)
    return spans


# --------------------------------------------------------------------------
# Tokenization
# --------------------------------------------------------------------------

def _split_chunk(chunk: str) -> list[str]:
    lead: list[str] = []
    while chunk and not chunk[0].isalnum():
        lead.append(chunk[0])
        chunk = chunk[1:]
    trail: list[str] = []
    while chunk and not chunk[-1].isalnum():
        trail.append(chunk[-1])
        chunk = chunk[:-1]
    core = [p for p in re.split(r"(/)", chunk) if p] if chunk else []
    return lead + core + trail[::-1]


def tokenize(text: str) -> list[str]:
    """Split sentence text into surface tokens.

    Whitespace separates tokens; leading/trailing punctuation is peeled
    off into its own tokens and word-internal slashes split (so
    "blue/normal" keyword-matches on both words). Hyphenated words and
    decimal numbers stay intact.
    """
    out: list[str] = []
    for chunk in text.split():
        out.extend(_split_chunk(chunk))
    return out


# --------------------------------------------------------------------------
# Part-of-speech tagging
# --------------------------------------------------------------------------

# Embedded closed-class word lists, checked before the lexicon.
PRONOUNS = frozenset("""
i you he she it we they me him her us them
my your his its our their mine yours hers ours theirs
myself yourself himself herself itself ourselves yourselves themselves
who whom whose which what
something anything nothing everything someone anyone everyone
somebody anybody nobody everybody
""".split())

DETERMINERS = frozenset("""
a an the this that these those each every either neither
some any all both few many much most several another such same other no
""".split())

CONJUNCTIONS = frozenset("""
and or but nor so yet because although though while if unless since
whereas whether when
""".split())

ADPOSITIONS = frozenset("""
of in on at by for with about against between into through during
before after above below from up down under over off near than across
behind beside inside outside within without along around past toward
towards upon onto beneath like as
""".split())

PARTICLES = frozenset({"to"})

_CLOSED_CLASS: dict[str, PosTag] = {}
for _w in PRONOUNS:
    _CLOSED_CLASS[_w] = PosTag.PRON
for _w in DETERMINERS:
    _CLOSED_CLASS[_w] = PosTag.DET
for _w in CONJUNCTIONS:
    _CLOSED_CLASS[_w] = PosTag.CONJ
for _w in ADPOSITIONS:
    _CLOSED_CLASS[_w] = PosTag.ADP
for _w in PARTICLES:
    _CLOSED_CLASS[_w] = PosTag.PRT

_NUMERIC_RE = re.compile(r"^\d[\d.,]*$")
_VOWELS = "aeiou"


class Lexicon:
    """Open-class word -> most-frequent coarse tag, loaded from disk.

    File format: one ``word<TAB>TAG`` per line, lowercase words, UTF-8,
    ``#`` starts a comment. Later entries for the same word win.
    """

    def __init__(self, entries: dict[str, PosTag]):
        self.entries = entries

    @classmethod
    def load(cls, path: str | Path) -> "Lexicon":
        entries: dict[str, PosTag] = {}
        with open(path, encoding="utf-8") as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                word, _, tag = line.partition("\t")
                entries[word.strip().lower()] = PosTag[tag.strip().upper()]
        return cls(entries)

    def get(self, normal: str) -> PosTag | None:
        return self.entries.get(normal)


@lru_cache(maxsize=None)
def default_lexicon() -> Lexicon:
    return Lexicon.load(_DATA_DIR / "pos_lexicon.txt")


def _suffix_tag(normal: str, lexicon: Lexicon) -> PosTag | None:
    if normal.endswith("ly") and len(normal) > 3:
        return PosTag.ADV
    if len(normal) > 4 and (normal.endswith("ed") or normal.endswith("ing")):
        stem = normal[:-2] if normal.endswith("ed") else normal[:-3]
        candidates = [stem, stem + "e"]
        if len(stem) >= 2 and stem[-1] == stem[-2]:
            candidates.append(stem[:-1])
        if any(lexicon.get(c) is PosTag.VERB for c in candidates):
            return PosTag.VERB
    if normal.endswith(("ous", "ish", "ful")) and len(normal) > 4:
        return PosTag.ADJ
    # -y after a consonant: shimmery, glossy; leaves day/way/buy alone
    if normal.endswith("y") and len(normal) > 3 and normal[-2] not in _VOWELS:
        return PosTag.ADJ
    return None


def _tag_one(normal: str, lexicon: Lexicon) -> PosTag:
    if not any(c.isalnum() for c in normal):
        return PosTag.PUNCT
    if _NUMERIC_RE.match(normal):
        return PosTag.NUM
    closed = _CLOSED_CLASS.get(normal)
    if closed is not None:
        return closed
    from_lexicon = lexicon.get(normal)
    if from_lexicon is not None:
        return from_lexicon
    from_suffix = _suffix_tag(normal, lexicon)
    if from_suffix is not None:
        return from_suffix
    return PosTag.NOUN


def pos_tag(surfaces: list[str], lexicon: Lexicon | None = None) -> list[Token]:
    """Tag every surface token. Total: unknown words default to NOUN."""
    lex = lexicon or default_lexicon()
    tokens = []
    for i, surface in enumerate(surfaces):
        normal = surface.lower()
        tokens.append(Token(surface=surface, normal=normal, tag=_tag_one(normal, lex), index=i))
    return tokens


def analyze(text: str, review_id: str = "", lexicon: Lexicon | None = None) -> list[Sentence]:
    """Segment, tokenize and tag review content into Sentence objects."""
    sentences = []
    for start, end in segment_sentences(text):
        slice_ = text[start:end]
        surfaces = tokenize(slice_)
        if not surfaces:
            continue
        sentences.append(Sentence(
            tokens=tuple(pos_tag(surfaces, lexicon)),
            review_id=review_id,
            char_span=(start, end),
            text=slice_,
        ))
    return sentences
