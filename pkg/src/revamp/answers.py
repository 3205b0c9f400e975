"""Composing user-facing outputs: query answers, summaries and image alt-text.

The answer pipeline for one product and one query: route the query to a
keyword set, evaluate every indexed review sentence of the product, rank
the surviving candidates, split them into positive and negative lists and
render the templated counts-plus-top-mentions summary. When nothing
survives, a pluggable visual answerer supplies fallback text (the built-in
one returns a fixed sentinel).

Alt-text runs the same pipeline once per visual attribute and stitches the
shortest of each attribute's top-3 snippets into one comma-joined
description, in shape, logo, color, size order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol

from .config import AnswerConfig, default_answer_config
from .query import QueryPlan, attribute_keywords, dispatch_query
from .ranking import RankedSnippet, rank_snippets
from .rules import Tier, evaluate_snippet
from .sentiment import split_lists
from .store import CorpusStore, Product
from .text import Sentence

ALT_TEXT_ATTRIBUTE_ORDER = ("shape", "logo", "color", "size")


class VisualAnswerer(Protocol):
    """Seam for an external image-based question answerer."""

    def answer(self, image_ref: str | None, question: str) -> str | None: ...


class SentinelAnswerer:
    """Built-in fallback: always the same fixed sentence."""

    def __init__(self, sentinel: str | None = None):
        self.sentinel = sentinel or default_answer_config().fallback_sentinel

    def answer(self, image_ref: str | None, question: str) -> str | None:
        return self.sentinel


@dataclass(frozen=True)
class SnippetPayload:
    text: str
    review_id: str
    rank: int
    tier: int
    helpfulness: int

    @classmethod
    def from_ranked(cls, item: RankedSnippet) -> "SnippetPayload":
        return cls(
            text=item.sentence.text,
            review_id=item.sentence.review_id,
            rank=item.rank,
            tier=item.tier.value,
            helpfulness=item.helpfulness,
        )

    def to_record(self) -> dict:
        return {
            "text": self.text,
            "review_id": self.review_id,
            "rank": self.rank,
            "tier": self.tier,
            "helpfulness": self.helpfulness,
        }


@dataclass(frozen=True)
class AnswerBundle:
    summary: str
    positive: tuple[SnippetPayload, ...]
    negative: tuple[SnippetPayload, ...]
    used_fallback: bool
    fallback_text: str | None

    def to_record(self) -> dict:
        return {
            "summary": self.summary,
            "positive": [p.to_record() for p in self.positive],
            "negative": [n.to_record() for n in self.negative],
            "used_fallback": self.used_fallback,
            "fallback_text": self.fallback_text,
        }


@dataclass(frozen=True)
class AltText:
    clauses: tuple[tuple[str, str], ...]  # (attribute, clause text)
    rendered: str

    def to_record(self) -> dict:
        return {
            "clauses": [[attr, text] for attr, text in self.clauses],
            "rendered": self.rendered,
        }


def build_summary(positive: list[RankedSnippet], negative: list[RankedSnippet],
                  key: str, config: AnswerConfig | None = None) -> str:
    """Render the counts sentence plus up to three quoted snippets.

    Mentions come from the top of the global ranking across both lists, or
    from each list separately when ``per_list_top3`` is set. With zero
    snippets the mentions clause is omitted entirely.
    """
    cfg = config or default_answer_config()
    text = cfg.summary_template.format(positive=len(positive), negative=len(negative), key=key)
    if cfg.per_list_top3:
        chosen = positive[:3] + negative[:3]
    else:
        chosen = sorted(positive + negative, key=lambda s: s.rank)[:3]
    if chosen:
        mentions = cfg.mentions_separator.join(s.sentence.text for s in chosen)
        text += cfg.mentions_template.format(mentions=mentions)
    return text


def _candidates(store: CorpusStore, product_id: str, plan_keywords) -> list:
    """Evaluate indexed sentences preselected through the inverted map."""
    index = store.require_index()
    first_words = {t.split()[0] for t in plan_keywords.terms}
    sentences = index.sentences.get(product_id, [])
    verdicts = []
    for i in index.candidate_sentence_indices(product_id, first_words):
        verdict = evaluate_snippet(sentences[i], plan_keywords)
        if verdict.filtered is None and verdict.tier is not Tier.NONE:
            verdicts.append(verdict)
    return verdicts


def answer_query(store: CorpusStore, product_id: str, raw_query: str,
                 answerer: VisualAnswerer | None = None,
                 config: AnswerConfig | None = None) -> AnswerBundle:
    """Full query pipeline for one product. Deterministic for a fixed store."""
    cfg = config or default_answer_config()
    product = store.get_product(product_id)
    plan: QueryPlan = dispatch_query(raw_query, product)

    verdicts = _candidates(store, product_id, plan.keyword_set)
    reviews = store.review_map(product_id)
    ranked = rank_snippets(verdicts, reviews)
    ratings = {rid: r.rating for rid, r in reviews.items()}
    positive, negative = split_lists(ranked, ratings)
    summary = build_summary(positive, negative, plan.summary_key, cfg)

    if not ranked:
        fallback = (answerer or SentinelAnswerer(cfg.fallback_sentinel))
        return AnswerBundle(
            summary=summary,
            positive=(),
            negative=(),
            used_fallback=True,
            fallback_text=fallback.answer(product.image_ref, raw_query),
        )
    return AnswerBundle(
        summary=summary,
        positive=tuple(SnippetPayload.from_ranked(s) for s in positive),
        negative=tuple(SnippetPayload.from_ranked(s) for s in negative),
        used_fallback=False,
        fallback_text=None,
    )


def _strip_terminal_punctuation(text: str) -> str:
    return text.rstrip(".!? ")


def best_attribute_snippets(store: CorpusStore, product: Product) -> dict[str, list[RankedSnippet]]:
    """Ranked candidates per visual attribute (used by alt-text and reports)."""
    reviews = store.review_map(product.id)
    out = {}
    for attribute in ALT_TEXT_ATTRIBUTE_ORDER:
        keywords = attribute_keywords(attribute, product)
        verdicts = _candidates(store, product.id, keywords)
        out[attribute] = rank_snippets(verdicts, reviews)
    return out


def generate_alt_text(store: CorpusStore, product_id: str,
                      config: AnswerConfig | None = None) -> AltText:
    """One clause per attribute: the shortest snippet among that attribute's top 3.

    Clause text is the snippet sentence with terminal punctuation dropped so
    the comma-joined rendering reads as one description; it remains a
    verbatim substring of the originating review. Attributes without
    candidates are skipped; if none has any, the seller's original alt-text
    (or a sentinel) is used.
    """
    cfg = config or default_answer_config()
    product = store.get_product(product_id)
    per_attribute = best_attribute_snippets(store, product)
    clauses = []
    for attribute in ALT_TEXT_ATTRIBUTE_ORDER:
        top3 = per_attribute[attribute][:3]
        if not top3:
            continue
        chosen = min(top3, key=lambda s: (s.sentence.word_count(), s.rank))
        clauses.append((attribute, _strip_terminal_punctuation(chosen.sentence.text)))
    if clauses:
        rendered = ", ".join(text for _attr, text in clauses)
    else:
        rendered = product.original_alt or cfg.alt_text_sentinel
    return AltText(clauses=tuple(clauses), rendered=rendered)
