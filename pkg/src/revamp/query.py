"""Turning a raw user query into a keyword set.

Queries naming one of the four visual attributes (or a seller color name)
dispatch to a curated keyword table; anything else is treated as a natural
language question, run through stopword-delimited keyword extraction and
expanded with a synonym lexicon.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .errors import NoKeywordsError, UnknownAttributeError
from .rules import ATTRIBUTE_VARIANTS, ATTRIBUTES, BASIC_COLORS, KeywordSet
from .store import Product
from .text import tokenize

_DATA_DIR = Path(__file__).resolve().parent / "data"


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    """One lowercase word per line, UTF-8, `#` comments."""
    words = set()
    with open(path or _DATA_DIR / "stopwords.txt", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip().lower()
            if line:
                words.add(line)
    return frozenset(words)


@lru_cache(maxsize=None)
def default_stopwords() -> frozenset[str]:
    return load_stopwords()


class SynonymLexicon:
    """Groups of interchangeable lemmas.

    File format: ``lemma<TAB>syn1,syn2,...`` per line, UTF-8. Overlapping
    groups are merged at load (union-find over lines), so lookup is
    symmetric and expansion cannot grow on a second pass.
    """

    def __init__(self, groups: dict[str, frozenset[str]]):
        self._groups = groups

    @classmethod
    def load(cls, path: str | Path | None = None) -> "SynonymLexicon":
        parent: dict[str, str] = {}

        def find(w: str) -> str:
            parent.setdefault(w, w)
            while parent[w] != w:
                parent[w] = parent[parent[w]]
                w = parent[w]
            return w

        def union(a: str, b: str) -> None:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra

        with open(path or _DATA_DIR / "synonyms.txt", encoding="utf-8") as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                lemma, _, rest = line.partition("\t")
                words = [lemma.strip().lower()]
                words += [w.strip().lower() for w in rest.split(",") if w.strip()]
                for w in words[1:]:
                    union(words[0], w)

        members: dict[str, set[str]] = {}
        for w in parent:
            members.setdefault(find(w), set()).add(w)
        groups = {}
        for group in members.values():
            frozen = frozenset(group)
            for w in group:
                groups[w] = frozen
        return cls(groups)

    def synonyms(self, word: str) -> frozenset[str]:
        """The word's full group; a word not in the lexicon maps to itself."""
        return self._groups.get(word, frozenset({word}))


@lru_cache(maxsize=None)
def default_synonyms() -> SynonymLexicon:
    return SynonymLexicon.load()


@dataclass(frozen=True)
class QueryPlan:
    kind: str  # "ATTRIBUTE" or "NATURAL_LANGUAGE"
    keyword_set: KeywordSet
    raw_query: str
    summary_key: str  # attribute name, or the top-scored extracted phrase


def attribute_keywords(attribute: str, product: Product) -> KeywordSet:
    """Curated keyword set for one visual attribute of one product.

    Color picks up the base color vocabulary and the seller's own variant
    names (kept as phrases when multiword); the other attributes use their
    lemma variants only.
    """
    if attribute not in ATTRIBUTES:
        raise UnknownAttributeError(attribute)
    terms = set(ATTRIBUTE_VARIANTS[attribute])
    if attribute == "color":
        terms.update(BASIC_COLORS)
        terms.update(n.lower() for n in product.seller_variant_names)
    return KeywordSet(terms=frozenset(terms), attribute=attribute)


def rake_extract(question: str, stopwords: frozenset[str] | None = None) -> list[tuple[str, float]]:
    """Stopword-delimited keyword phrases scored by word degree/frequency.

    Candidate phrases are maximal runs of content tokens; each word scores
    deg(w)/freq(w) over the question's phrase co-occurrence graph (a word's
    degree counts itself plus its co-occurrents per phrase occurrence) and a
    phrase scores the sum of its words. Sorted by score descending, ties by
    first occurrence.
    """
    stop = stopwords if stopwords is not None else default_stopwords()
    normals = [t.lower() for t in tokenize(question)]

    phrases: list[list[str]] = []
    current: list[str] = []
    for normal in normals:
        if normal in stop or not any(c.isalnum() for c in normal):
            if current:
                phrases.append(current)
                current = []
        else:
            current.append(normal)
    if current:
        phrases.append(current)
    if not phrases:
        raise NoKeywordsError(question)

    freq: dict[str, int] = {}
    degree: dict[str, int] = {}
    for phrase in phrases:
        for word in phrase:
            freq[word] = freq.get(word, 0) + 1
            degree[word] = degree.get(word, 0) + len(phrase)

    scored: list[tuple[str, float]] = []
    seen = set()
    for phrase in phrases:
        text = " ".join(phrase)
        if text in seen:
            continue
        seen.add(text)
        scored.append((text, sum(degree[w] / freq[w] for w in phrase)))
    scored.sort(key=lambda item: -item[1])  # stable: ties keep first occurrence
    return scored


def expand_synonyms(keywords: KeywordSet, lexicon: SynonymLexicon | None = None) -> KeywordSet:
    """Add every synonym of each single-word term; phrases pass through."""
    lex = lexicon or default_synonyms()
    terms = set(keywords.terms)
    for term in keywords.terms:
        if " " not in term:
            terms.update(lex.synonyms(term))
    return KeywordSet(terms=frozenset(terms), attribute=keywords.attribute)


def dispatch_query(raw_query: str, product: Product,
                   stopwords: frozenset[str] | None = None,
                   synonyms: SynonymLexicon | None = None) -> QueryPlan:
    """Route a query to the attribute table or the keyword-extraction path."""
    normalized = raw_query.strip().lower()
    for attribute, variants in ATTRIBUTE_VARIANTS.items():
        if normalized == attribute or normalized in variants:
            return QueryPlan("ATTRIBUTE", attribute_keywords(attribute, product),
                             raw_query, attribute)
    if normalized in (n.lower() for n in product.seller_variant_names):
        return QueryPlan("ATTRIBUTE", attribute_keywords("color", product),
                         raw_query, "color")

    scored = rake_extract(raw_query, stopwords)
    terms = set()
    for phrase, _ in scored:
        terms.add(phrase)
        terms.update(phrase.split())
    keywords = expand_synonyms(KeywordSet(terms=frozenset(terms)), synonyms)
    return QueryPlan("NATURAL_LANGUAGE", keywords, raw_query, scored[0][0])
