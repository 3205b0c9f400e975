"""Loaders for the line-oriented `key = value` config files.

Two configs ship with the package: ``data/rules.conf`` (extraction rules)
and ``data/answers.conf`` (response templates and sentinels). Both can be
replaced wholesale by passing a path to the loaders.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

_DATA_DIR = Path(__file__).resolve().parent / "data"


def parse_config(path: str | Path) -> dict[str, str]:
    """Read `key = value` lines. Double-quote a value to keep edge spaces."""
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            value = value.strip()
            if len(value) >= 2 and value[0] == '"' and value[-1] == '"':
                value = value[1:-1]
            values[key.strip()] = value
    return values


def _word_set(value: str) -> frozenset[str]:
    return frozenset(w.strip().lower() for w in value.split(",") if w.strip())


@dataclass(frozen=True)
class RuleConfig:
    short_sentence_max_tokens: int = 3
    image_reference_triggers: frozenset[str] = frozenset()
    image_reference_context: frozenset[str] = frozenset()
    vague_adjectives: frozenset[str] = frozenset()
    rule1_window_before: int = 2
    rule1_window_after: int = 4
    rule3_window: int = 2
    first_person_pronouns: frozenset[str] = frozenset()
    clause_markers: frozenset[str] = frozenset()


def load_rule_config(path: str | Path | None = None) -> RuleConfig:
    values = parse_config(path or _DATA_DIR / "rules.conf")
    return RuleConfig(
        short_sentence_max_tokens=int(values["short_sentence_max_tokens"]),
        image_reference_triggers=_word_set(values["image_reference_triggers"]),
        image_reference_context=_word_set(values["image_reference_context"]),
        vague_adjectives=_word_set(values["vague_adjectives"]),
        rule1_window_before=int(values["rule1_window_before"]),
        rule1_window_after=int(values["rule1_window_after"]),
        rule3_window=int(values["rule3_window"]),
        first_person_pronouns=_word_set(values["first_person_pronouns"]),
        clause_markers=_word_set(values["clause_markers"]),
    )


@lru_cache(maxsize=None)
def default_rule_config() -> RuleConfig:
    return load_rule_config()


@dataclass(frozen=True)
class AnswerConfig:
    summary_template: str = 'Found {positive} positive and {negative} negative review snippets about "{key}".'
    mentions_template: str = " Top mentions: {mentions}."
    mentions_separator: str = " | "
    per_list_top3: bool = False
    fallback_sentinel: str = "No review-based answer is available for this question."
    alt_text_sentinel: str = "No appearance description available."


def load_answer_config(path: str | Path | None = None) -> AnswerConfig:
    values = parse_config(path or _DATA_DIR / "answers.conf")
    defaults = AnswerConfig()
    return AnswerConfig(
        summary_template=values.get("summary_template", defaults.summary_template),
        mentions_template=values.get("mentions_template", defaults.mentions_template),
        mentions_separator=values.get("mentions_separator", defaults.mentions_separator),
        per_list_top3=values.get("per_list_top3", "false").lower() in ("true", "1", "yes"),
        fallback_sentinel=values.get("fallback_sentinel", defaults.fallback_sentinel),
        alt_text_sentinel=values.get("alt_text_sentinel", defaults.alt_text_sentinel),
    )


@lru_cache(maxsize=None)
def default_answer_config() -> AnswerConfig:
    return load_answer_config()
