"""Filters and extraction rules that decide how informative a review sentence is.

A tagged sentence is first screened by two filters (too short, or a remark
about the seller's photo), then matched against three patterns for a given
keyword set:

  * modifier patterns: a descriptive word directly qualifying the keyword,
    either before it ("a shimmery purple") or after a linking verb
    ("the logo is sleek"); vague opinion words ("nice shape") still match
    but are classed evaluative,
  * first-person clause pattern: the reviewer states something about the
    keyword and elaborates with that/which/but/because,
  * comparative patterns, attribute-specific: "shaped like ...",
    "size fits ...", "... than <color>".

Matches from the descriptive modifier, clause and comparative patterns put
the sentence in tier 1; an evaluative-only modifier match in tier 2; a bare
keyword mention in tier 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .config import RuleConfig, default_rule_config
from .errors import NotAdjectiveError, UnknownAttributeError
from .text import PosTag, Sentence, Token

ATTRIBUTES = ("color", "logo", "shape", "size")

# Lemma variants for each attribute plus the base color vocabulary used to
# extend the color keyword set.
ATTRIBUTE_VARIANTS = {
    "color": ("color", "colors"),
    "logo": ("logo", "logos"),
    "shape": ("shape", "shaped", "shapes"),
    "size": ("size", "sized", "sizes"),
}

BASIC_COLORS = (
    "blue", "red", "green", "yellow", "orange", "purple", "pink",
    "brown", "black", "white", "gray", "gold", "silver", "beige",
)


class FilterReason(Enum):
    TOO_SHORT = "TOO_SHORT"
    IMAGE_REFERENCE = "IMAGE_REFERENCE"


class Rule(Enum):
    R1_DESCRIPTIVE = "R1_DESCRIPTIVE"
    R1_EVALUATIVE = "R1_EVALUATIVE"
    R2_CLAUSE = "R2_CLAUSE"
    R3_COMPARATIVE = "R3_COMPARATIVE"


class Tier(Enum):
    TIER1 = 1
    TIER2 = 2
    TIER3 = 3
    NONE = 0


class AdjectiveClass(Enum):
    DESCRIPTIVE = "DESCRIPTIVE"
    EVALUATIVE = "EVALUATIVE"


@dataclass(frozen=True)
class KeywordSet:
    """Lowercase search terms, optionally tied to one visual attribute.

    Multiword terms ("surf the web") match as consecutive token runs.
    """

    terms: frozenset[str]
    attribute: str | None = None

    def __post_init__(self):
        if not self.terms:
            raise ValueError("keyword set must not be empty")
        if self.attribute is not None and self.attribute not in ATTRIBUTES:
            raise UnknownAttributeError(self.attribute)

    def find_hits(self, sentence: Sentence) -> list[tuple[int, int]]:
        """Token spans [start, end) covered by any term, ordered by start."""
        normals = sentence.normals()
        hits = []
        singles = {t for t in self.terms if " " not in t}
        phrases = [t.split() for t in self.terms if " " in t]
        for i, normal in enumerate(normals):
            if normal in singles:
                hits.append((i, i + 1))
        for words in phrases:
            span = len(words)
            for i in range(len(normals) - span + 1):
                if list(normals[i:i + span]) == words:
                    hits.append((i, i + span))
        hits.sort()
        return hits


@dataclass(frozen=True)
class RuleVerdict:
    snippet: Sentence
    filtered: FilterReason | None
    matched_rules: frozenset[Rule]
    keyword_hits: tuple[int, ...]
    tier: Tier


def filter_candidates(sentence: Sentence, config: RuleConfig | None = None) -> FilterReason | None:
    """Screen out sentences that cannot describe appearance.

    Too short (3 content tokens or fewer) wins over the photo-consistency
    check when both apply.
    """
    cfg = config or default_rule_config()
    if sentence.word_count() <= cfg.short_sentence_max_tokens:
        return FilterReason.TOO_SHORT
    normals = set(sentence.normals())
    if normals & cfg.image_reference_triggers and normals & cfg.image_reference_context:
        return FilterReason.IMAGE_REFERENCE
    return None


def _modifier_class(normal: str, config: RuleConfig) -> AdjectiveClass:
    if normal in config.vague_adjectives:
        return AdjectiveClass.EVALUATIVE
    return AdjectiveClass.DESCRIPTIVE


def classify_adjective(token: Token, config: RuleConfig | None = None) -> AdjectiveClass:
    """Evaluative iff the word is on the vague-adjective stoplist."""
    if token.tag is not PosTag.ADJ:
        raise NotAdjectiveError(f"token {token.surface!r} is tagged {token.tag.value}, not ADJ")
    return _modifier_class(token.normal, config or default_rule_config())


_SKIPPED_BEFORE = (PosTag.DET, PosTag.ADV)


def _modifiers_before(tokens: tuple[Token, ...], hit_start: int, window: int) -> list[Token]:
    """Modifier tokens qualifying the keyword from the left.

    Walks back from the hit inspecting up to ``window`` candidate positions;
    determiners and adverbs are skipped without consuming the window. An
    adjective anywhere in the window counts; a noun counts only when it
    directly precedes the keyword ("crescent shape").
    """
    found = []
    inspected = 0
    i = hit_start - 1
    while i >= 0 and inspected < window:
        token = tokens[i]
        if token.tag in _SKIPPED_BEFORE:
            i -= 1
            continue
        if token.tag is PosTag.PUNCT:
            break
        if token.tag is PosTag.ADJ:
            found.append(token)
        elif token.tag is PosTag.NOUN and i == hit_start - 1:
            found.append(token)
        inspected += 1
        i -= 1
    return found


def _adjectives_after_verb(tokens: tuple[Token, ...], hit_end: int, window: int) -> list[Token]:
    """Adjectives after a verb that follows the keyword, within the window."""
    verb_at = None
    found = []
    for i in range(hit_end, min(hit_end + window, len(tokens))):
        token = tokens[i]
        if token.tag is PosTag.VERB and verb_at is None:
            verb_at = i
        elif token.tag is PosTag.ADJ and verb_at is not None:
            found.append(token)
    return found


def match_rule1(sentence: Sentence, keywords: KeywordSet,
                config: RuleConfig | None = None) -> Rule | None:
    """Modifier pattern: descriptive beats evaluative when both occur."""
    cfg = config or default_rule_config()
    modifiers: list[Token] = []
    for start, end in keywords.find_hits(sentence):
        modifiers.extend(_modifiers_before(sentence.tokens, start, cfg.rule1_window_before))
        modifiers.extend(_adjectives_after_verb(sentence.tokens, end, cfg.rule1_window_after))
    if not modifiers:
        return None
    classes = {_modifier_class(m.normal, cfg) for m in modifiers}
    if AdjectiveClass.DESCRIPTIVE in classes:
        return Rule.R1_DESCRIPTIVE
    return Rule.R1_EVALUATIVE


def match_rule2(sentence: Sentence, keywords: KeywordSet,
                config: RuleConfig | None = None) -> Rule | None:
    """First-person pronoun before a keyword hit, clause marker after it."""
    cfg = config or default_rule_config()
    normals = sentence.normals()
    for start, end in keywords.find_hits(sentence):
        has_pronoun = any(n in cfg.first_person_pronouns for n in normals[:start])
        has_marker = any(n in cfg.clause_markers for n in normals[end:])
        if has_pronoun and has_marker:
            return Rule.R2_CLAUSE
    return None


def _near(normals: tuple[str, ...], center: int, offsets: range, words: frozenset[str] | set[str]) -> bool:
    for off in offsets:
        j = center + off
        if 0 <= j < len(normals) and normals[j] in words:
            return True
    return False


def match_rule3(sentence: Sentence, keywords: KeywordSet, attribute: str,
                config: RuleConfig | None = None) -> Rule | None:
    """Attribute-specific comparative patterns; no pattern exists for logo."""
    if attribute not in ATTRIBUTES:
        raise UnknownAttributeError(attribute)
    cfg = config or default_rule_config()
    w = cfg.rule3_window
    normals = sentence.normals()
    hits = keywords.find_hits(sentence)
    if attribute == "shape":
        targets = {"like", "liked"}
        return next((Rule.R3_COMPARATIVE for s, e in hits
                     if _near(normals, e - 1, range(1, w + 1), targets)), None)
    if attribute == "size":
        targets = {"fit", "fits", "for", "of"}
        return next((Rule.R3_COMPARATIVE for s, e in hits
                     if _near(normals, e - 1, range(1, w + 1), targets)), None)
    if attribute == "color":
        for s, e in hits:
            if _near(normals, s, range(-w, 0), {"than"}) or _near(normals, e - 1, range(1, w + 1), {"than"}):
                return Rule.R3_COMPARATIVE
            for i in range(len(normals) - 1):
                if normals[i] == "more" and normals[i + 1] == "of":
                    if s - (i + 1) in range(1, w + 1) or i - (e - 1) in range(1, w + 1):
                        return Rule.R3_COMPARATIVE
        return None
    return None  # logo


_TIER1_RULES = frozenset({Rule.R1_DESCRIPTIVE, Rule.R2_CLAUSE, Rule.R3_COMPARATIVE})


def evaluate_snippet(sentence: Sentence, keywords: KeywordSet,
                     config: RuleConfig | None = None) -> RuleVerdict:
    """Run filters then all rules, and assign the priority tier."""
    cfg = config or default_rule_config()
    hits = keywords.find_hits(sentence)
    hit_indices = tuple(i for s, e in hits for i in range(s, e))

    reason = filter_candidates(sentence, cfg)
    if reason is not None:
        return RuleVerdict(sentence, reason, frozenset(), hit_indices, Tier.NONE)
    if not hits:
        return RuleVerdict(sentence, None, frozenset(), (), Tier.NONE)

    matched = set()
    r1 = match_rule1(sentence, keywords, cfg)
    if r1 is not None:
        matched.add(r1)
    if match_rule2(sentence, keywords, cfg) is not None:
        matched.add(Rule.R2_CLAUSE)
    if keywords.attribute is not None:
        if match_rule3(sentence, keywords, keywords.attribute, cfg) is not None:
            matched.add(Rule.R3_COMPARATIVE)

    if matched & _TIER1_RULES:
        tier = Tier.TIER1
    elif matched:
        tier = Tier.TIER2
    else:
        tier = Tier.TIER3
    return RuleVerdict(sentence, None, frozenset(matched), hit_indices, tier)
