"""Lexicon-based positive/negative classification of snippets.

A snippet scores +1 per positive word and -1 per negative word; a hit
within three content tokens after a negation word contributes with flipped
sign. Zero scores fall back to the parent review's star rating (>= 3.5 is
positive; no rating defaults positive, matching the benefit of the doubt
customers give by only writing). The classifier sits behind ``Classifier``
so a remote service could replace it without touching the callers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Protocol

from .ranking import RankedSnippet
from .text import Sentence

_DATA_DIR = Path(__file__).resolve().parent / "data" / "sentiment"

NEGATION_WORDS = frozenset({"not", "no", "never", "n't", "hardly"})
NEGATION_WINDOW = 3


class SentimentLabel(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


def _load_words(path: Path) -> frozenset[str]:
    words = set()
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip().lower()
            if line:
                words.add(line)
    return frozenset(words)


@dataclass(frozen=True)
class SentimentLexicon:
    positive: frozenset[str]
    negative: frozenset[str]
    negation: frozenset[str] = NEGATION_WORDS
    negation_window: int = NEGATION_WINDOW

    def __post_init__(self):
        overlap = self.positive & self.negative
        if overlap:
            raise ValueError(f"words in both polarity lists: {sorted(overlap)[:5]}")

    @classmethod
    def load(cls, directory: str | Path | None = None) -> "SentimentLexicon":
        base = Path(directory) if directory else _DATA_DIR
        return cls(positive=_load_words(base / "positive.txt"),
                   negative=_load_words(base / "negative.txt"))


@lru_cache(maxsize=None)
def default_sentiment_lexicon() -> SentimentLexicon:
    return SentimentLexicon.load()


def _is_negation(normal: str, lexicon: SentimentLexicon) -> bool:
    return normal in lexicon.negation or normal.endswith("n't")


def score_words(words: list[str], lexicon: SentimentLexicon | None = None) -> int:
    """Signed hit count over lowercase content words, negation applied."""
    lex = lexicon or default_sentiment_lexicon()
    score = 0
    for i, normal in enumerate(words):
        polarity = 0
        if normal in lex.positive:
            polarity = 1
        elif normal in lex.negative:
            polarity = -1
        if polarity == 0:
            continue
        lo = max(0, i - lex.negation_window)
        if any(_is_negation(words[j], lex) for j in range(lo, i)):
            polarity = -polarity
        score += polarity
    return score


def classify_words(words: list[str], rating: float | None,
                   lexicon: SentimentLexicon | None = None) -> SentimentLabel:
    score = score_words(words, lexicon)
    if score > 0:
        return SentimentLabel.POSITIVE
    if score < 0:
        return SentimentLabel.NEGATIVE
    if rating is not None and rating < 3.5:
        return SentimentLabel.NEGATIVE
    return SentimentLabel.POSITIVE


def classify_sentiment(snippet: Sentence, rating: float | None,
                       lexicon: SentimentLexicon | None = None) -> SentimentLabel:
    words = [t.normal for t in snippet.tokens if t.is_word]
    return classify_words(words, rating, lexicon)


def split_lists(ranked: list[RankedSnippet], ratings: dict[str, float | None],
                lexicon: SentimentLexicon | None = None) -> tuple[list[RankedSnippet], list[RankedSnippet]]:
    """Stable partition of the ranked list into (positive, negative)."""
    positive: list[RankedSnippet] = []
    negative: list[RankedSnippet] = []
    for item in ranked:
        rating = ratings.get(item.sentence.review_id)
        label = classify_sentiment(item.sentence, rating, lexicon)
        (positive if label is SentimentLabel.POSITIVE else negative).append(item)
    return positive, negative


class Classifier(Protocol):
    def __call__(self, snippet: Sentence, rating: float | None) -> SentimentLabel: ...
