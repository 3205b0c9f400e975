"""Ordering candidate snippets for answers.

Tier 1 (descriptive/clause/comparative matches) beats tier 2 (evaluative
matches) beats tier 3 (bare keyword mentions). Within tiers 1 and 2 the
review's helpfulness votes decide; within tier 3, relevance measured as
weighted-degree centrality over the pairwise cosine-similarity graph of the
tier-3 snippets themselves. Remaining ties fall back to newest review date,
then review id and character offset, so the order is total and identical
for any input permutation.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from datetime import date

from .query import default_stopwords
from .rules import RuleVerdict, Tier
from .store import Review
from .text import Sentence


@dataclass(frozen=True)
class RankedSnippet:
    verdict: RuleVerdict
    helpfulness: int
    review_date: date
    centrality: float | None  # present iff tier 3
    rank: int

    @property
    def sentence(self) -> Sentence:
        return self.verdict.snippet

    @property
    def tier(self) -> Tier:
        return self.verdict.tier


def _term_vector(snippet: Sentence, stopwords: frozenset[str]) -> Counter:
    return Counter(
        t.normal for t in snippet.tokens
        if t.is_word and t.normal not in stopwords
    )


def similarity(a: Sentence, b: Sentence, stopwords: frozenset[str] | None = None) -> float:
    """Cosine similarity of content-word frequency vectors, in [0, 1]."""
    stop = stopwords if stopwords is not None else default_stopwords()
    va, vb = _term_vector(a, stop), _term_vector(b, stop)
    if not va or not vb:
        return 0.0
    dot = sum(count * vb[word] for word, count in va.items())
    norm = math.sqrt(sum(c * c for c in va.values())) * math.sqrt(sum(c * c for c in vb.values()))
    if norm == 0.0:
        return 0.0
    return dot / norm


def _identity(sentence: Sentence) -> tuple[str, int]:
    return (sentence.review_id, sentence.char_span[0])


def centrality_scores(snippets: list[Sentence],
                      stopwords: frozenset[str] | None = None) -> dict[tuple[str, int], float]:
    """Weighted-degree centrality: each snippet's summed similarity to the rest.

    Keyed by (review_id, char offset). Sums run in a canonical order so the
    scores are bitwise identical however the input is permuted.
    """
    stop = stopwords if stopwords is not None else default_stopwords()
    ordered = sorted(snippets, key=_identity)
    scores: dict[tuple[str, int], float] = {}
    for s in ordered:
        total = 0.0
        for t in ordered:
            if _identity(t) != _identity(s):
                total += similarity(s, t, stop)
        scores[_identity(s)] = total
    return scores


def rank_snippets(verdicts: list[RuleVerdict], reviews: dict[str, Review],
                  stopwords: frozenset[str] | None = None) -> list[RankedSnippet]:
    """Total, permutation-invariant ordering of unfiltered keyword matches."""
    for v in verdicts:
        if v.filtered is not None or v.tier is Tier.NONE:
            raise ValueError("rank_snippets expects unfiltered verdicts with a tier")

    tier3 = [v.snippet for v in verdicts if v.tier is Tier.TIER3]
    central = centrality_scores(tier3, stopwords) if tier3 else {}

    def sort_key(v: RuleVerdict):
        review = reviews[v.snippet.review_id]
        if v.tier is Tier.TIER3:
            score = central[_identity(v.snippet)]
        else:
            score = float(review.helpfulness)
        return (
            v.tier.value,
            -score,
            -review.date.toordinal(),
            v.snippet.review_id,
            v.snippet.char_span[0],
        )

    ranked = []
    for rank, v in enumerate(sorted(verdicts, key=sort_key)):
        review = reviews[v.snippet.review_id]
        ranked.append(RankedSnippet(
            verdict=v,
            helpfulness=review.helpfulness,
            review_date=review.date,
            centrality=central[_identity(v.snippet)] if v.tier is Tier.TIER3 else None,
            rank=rank,
        ))
    return ranked
