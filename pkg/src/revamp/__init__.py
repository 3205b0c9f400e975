"""Review-mining engine: extract, rank and summarize informative review
snippets to answer visual questions about products and to generate image
alt-text, served over a read-only JSON API."""

from .answers import (
    AltText,
    AnswerBundle,
    SentinelAnswerer,
    VisualAnswerer,
    answer_query,
    build_summary,
    generate_alt_text,
)
from .config import AnswerConfig, RuleConfig, load_answer_config, load_rule_config
from .errors import (
    NoKeywordsError,
    NotAdjectiveError,
    ProductNotFoundError,
    RevampError,
    SchemaError,
    StoreNotFoundError,
    UnknownAttributeError,
    UnknownProductError,
)
from .query import (
    QueryPlan,
    SynonymLexicon,
    attribute_keywords,
    dispatch_query,
    expand_synonyms,
    rake_extract,
)
from .ranking import RankedSnippet, centrality_scores, rank_snippets, similarity
from .rules import (
    AdjectiveClass,
    FilterReason,
    KeywordSet,
    Rule,
    RuleVerdict,
    Tier,
    classify_adjective,
    evaluate_snippet,
    filter_candidates,
    match_rule1,
    match_rule2,
    match_rule3,
)
from .sentiment import SentimentLabel, SentimentLexicon, classify_sentiment, split_lists
from .store import CorpusStore, Index, Product, Review
from .text import PosTag, Sentence, Token, analyze, pos_tag, segment_sentences, tokenize

__version__ = "0.1.0"
