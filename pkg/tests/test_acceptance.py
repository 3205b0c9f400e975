"""Acceptance suite: one test per release criterion, with its stated budget.

Each test prints an `ACCEPTANCE PASS: <criterion>` line (visible with -s or
-v plus captured output) so a run reads as a checklist. Budgets and
tolerances are asserted inside the tests, not left to the harness.
"""

import csv
import math
import random
import subprocess
import sys
import time
from collections import Counter
from datetime import date

import pytest

from conftest import (
    TEASER_CLAUSES,
    TEASER_PRODUCT,
    TEASER_ROWS,
    synthetic_rows,
    write_products,
    write_reviews,
)
from revamp import cli
from revamp.answers import answer_query, generate_alt_text
from revamp.query import default_stopwords, rake_extract
from revamp.ranking import centrality_scores, rank_snippets
from revamp.rules import (
    FilterReason,
    KeywordSet,
    Rule,
    Tier,
    evaluate_snippet,
    filter_candidates,
    match_rule1,
    match_rule3,
)
from revamp.service import query_record
from revamp.store import CorpusStore, Review
from revamp.text import analyze


def _pass(name):
    print(f"ACCEPTANCE PASS: {name}")


def sent(text, review_id="r"):
    return analyze(text, review_id)[0]


SHAPE_KW = KeywordSet(frozenset({"shape", "shaped", "shapes"}), "shape")
SIZE_KW = KeywordSet(frozenset({"size", "sized", "sizes"}), "size")
LOGO_KW = KeywordSet(frozenset({"logo", "logos"}), "logo")


def test_criterion_rule_fixture_exactness():
    """The quoted snippet fixtures each get exactly the documented outcome."""
    started = time.perf_counter()

    # filters
    assert filter_candidates(sent("satisfied")) is FilterReason.TOO_SHORT
    assert filter_candidates(sent("like the shape")) is FilterReason.TOO_SHORT
    assert filter_candidates(sent("poor logo")) is FilterReason.TOO_SHORT
    assert filter_candidates(sent("looks exactly as pictured")) is FilterReason.IMAGE_REFERENCE
    assert filter_candidates(sent("not shown as picture")) is FilterReason.IMAGE_REFERENCE

    # modifier patterns (rule preconditions hold: keyword present, unfiltered
    # for the full-length ones; the two-word exemplars exercise the matcher
    # directly, since the filter would screen them out of the pipeline)
    assert match_rule1(sent("a shimmery purple"),
                       KeywordSet(frozenset({"purple"}), "color")) is Rule.R1_DESCRIPTIVE
    assert match_rule1(sent("crescent shape"), SHAPE_KW) is Rule.R1_DESCRIPTIVE
    assert match_rule1(sent("a very nice-looking etched logo"), LOGO_KW) is Rule.R1_DESCRIPTIVE
    assert match_rule1(sent("squarish shape"), SHAPE_KW) is Rule.R1_DESCRIPTIVE

    # comparative patterns, and their end-to-end tier
    assert match_rule3(sent("shaped like a Cola Bottle"), SHAPE_KW, "shape") is Rule.R3_COMPARATIVE
    assert match_rule3(sent("size fits in all cup holders"), SIZE_KW, "size") is Rule.R3_COMPARATIVE
    terra = KeywordSet(frozenset({"color", "colors", "terra cotta", "mocha"}), "color")
    assert match_rule3(sent("it is a terra cotta than mocha"), terra, "color") is Rule.R3_COMPARATIVE

    assert evaluate_snippet(sent("shaped like a Cola Bottle"), SHAPE_KW).tier is Tier.TIER1
    assert evaluate_snippet(sent("size fits in all cup holders"), SIZE_KW).tier is Tier.TIER1
    assert evaluate_snippet(sent("it is a terra cotta than mocha"), terra).tier is Tier.TIER1
    assert evaluate_snippet(sent("satisfied"), SHAPE_KW).tier is Tier.NONE

    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"rule fixtures took {elapsed:.3f}s (budget 1s)"
    _pass("rule-fixture exactness")


def test_criterion_teaser_alt_text(teaser_store):
    """Four clause sentences among 20 distractors render in fixed order."""
    alt = generate_alt_text(teaser_store, "B001")
    assert alt.rendered.startswith("shaped like a Cola Bottle, the logo is sleek,")
    assert [attr for attr, _ in alt.clauses] == ["shape", "logo", "color", "size"]
    expected = ", ".join(TEASER_CLAUSES[a] for a in ("shape", "logo", "color", "size"))
    assert alt.rendered == expected
    _pass("teaser alt-text reproduction")


def _brute_cosine(a, b, stopwords):
    va = Counter(t.normal for t in a.tokens if t.is_word and t.normal not in stopwords)
    vb = Counter(t.normal for t in b.tokens if t.is_word and t.normal not in stopwords)
    if not va or not vb:
        return 0.0
    dot = sum(va[w] * vb[w] for w in va)
    na = math.sqrt(sum(c * c for c in va.values()))
    nb = math.sqrt(sum(c * c for c in vb.values()))
    return dot / (na * nb)


def test_criterion_ranking_oracle():
    """Centrality == brute-force sums (1e-9); tier dominance on 1,000 fixtures."""
    started = time.perf_counter()
    rng = random.Random(2024)
    stopwords = default_stopwords()
    vocab = ["blue", "red", "green", "bottle", "lid", "shade", "soft",
             "matte", "grip", "strap", "pale", "deep"]

    for _ in range(120):
        n = rng.randint(0, 6)
        snippets = [sent(" ".join(rng.choices(vocab, k=rng.randint(1, 7))), f"r{i}")
                    for i in range(n)]
        scores = centrality_scores(snippets)
        assert len(scores) == n
        for s in snippets:
            brute = sum(_brute_cosine(s, t, stopwords)
                        for t in snippets if t.review_id != s.review_id)
            assert abs(scores[(s.review_id, 0)] - brute) < 1e-9

    # pool of precomputed verdicts at known tiers
    kw = KeywordSet(frozenset({"color", "blue", "pink"}), "color")
    templates = [
        "a shimmery blue color covers the lid",
        "the pale pink color works in daylight",
        "I love the color because it hides stains, which helps",
        "more of a pink than a coral overall",
        "This color looks great to me",
        "nice color but great value overall",
        "We ordered blue and black in size xl",
        "the blue one arrived with the black one today",
    ]
    pool = []
    for i, text in enumerate(templates):
        for j in range(5):
            verdict = evaluate_snippet(sent(text, f"p{i}_{j}"), kw)
            assert verdict.tier is not Tier.NONE
            pool.append(verdict)

    for trial in range(1000):
        verdicts = rng.sample(pool, rng.randint(2, 8))
        reviews = {
            v.snippet.review_id: Review(
                review_id=v.snippet.review_id, product_id="P", title="t",
                content="c", rating=5.0, helpfulness=rng.randint(0, 99),
                date=date(2024, rng.randint(1, 12), rng.randint(1, 28)),
                author="a")
            for v in verdicts
        }
        ranked = rank_snippets(verdicts, reviews)
        tiers = [r.tier.value for r in ranked]
        assert tiers == sorted(tiers), "tier dominance violated"
        assert [r.rank for r in ranked] == list(range(len(ranked)))

    elapsed = time.perf_counter() - started
    assert elapsed < 10.0, f"ranking oracle took {elapsed:.2f}s (budget 10s)"
    _pass("ranking oracle (centrality 1e-9, tier dominance x1000)")


def test_criterion_rake_oracle():
    """Hand-computed degree/frequency scores, exact equality."""
    cases = [
        ("Does the product have physical buttons?",
         [("physical buttons", 4.0), ("product", 1.0)]),
        ("Is it waterproof?", [("waterproof", 1.0)]),
        ("Does the blue color fade after washing?",
         [("blue color fade", 9.0), ("washing", 1.0)]),
        ("How big is the logo on the front?",
         [("big", 1.0), ("logo", 1.0), ("front", 1.0)]),
        ("Is the speaker loud enough for a small room?",
         [("speaker loud", 4.0), ("small room", 4.0)]),
        ("Does the case scratch easily or does the case crack?",
         [("case scratch easily", 8.5), ("case crack", 4.5)]),
    ]
    for question, expected in cases:
        assert rake_extract(question) == expected, question
    _pass("RAKE oracle (6 hand-worked questions)")


def test_criterion_partition_and_provenance(synthetic_store):
    """On 1,000 synthetic reviews: exact disjoint partition, verbatim snippets."""
    started = time.perf_counter()
    store = synthetic_store
    contents = {r.review_id: r.content for r in store.reviews_for("S1")}
    index = store.require_index()

    queries = ["color", "logo", "shape", "size",
               "Does it fit in a cup holder?", "terra cotta"]
    for raw_query in queries:
        bundle = answer_query(store, "S1", raw_query)

        # independent candidate count: full scan, no inverted-index shortcut
        from revamp.query import dispatch_query
        plan = dispatch_query(raw_query, store.get_product("S1"))
        expected = sum(
            1 for sentence in index.sentences["S1"]
            if (v := evaluate_snippet(sentence, plan.keyword_set)).filtered is None
            and v.tier is not Tier.NONE
        )
        assert len(bundle.positive) + len(bundle.negative) == expected

        ranks = [p.rank for p in bundle.positive] + [n.rank for n in bundle.negative]
        assert sorted(ranks) == list(range(expected)), "ranks not a 0..n-1 partition"
        keys_positive = {(p.review_id, p.rank) for p in bundle.positive}
        keys_negative = {(n.review_id, n.rank) for n in bundle.negative}
        assert not keys_positive & keys_negative

        for payload in bundle.positive + bundle.negative:
            assert payload.text in contents[payload.review_id], "snippet not verbatim"

    elapsed = time.perf_counter() - started
    assert elapsed < 30.0, f"partition/provenance took {elapsed:.2f}s (budget 30s)"
    _pass("partition + provenance invariants (1,000-review corpus)")


def test_criterion_determinism(tmp_path, capsysbinary):
    """query CLI 100x byte-identical; fingerprint invariant to row order."""
    products = tmp_path / "products.jsonl"
    reviews = tmp_path / "reviews.csv"
    write_products(products, [TEASER_PRODUCT])
    write_reviews(reviews, TEASER_ROWS, product_id="B001")
    db = tmp_path / "db"
    assert cli.main(["ingest", "--products", str(products),
                     "--reviews", str(reviews), "--db", str(db)]) == 0
    assert cli.main(["index", "--db", str(db)]) == 0
    capsysbinary.readouterr()  # drain the setup output

    outputs = set()
    for _ in range(100):
        assert cli.main(["query", "B001", "color", "--db", str(db), "--json"]) == 0
        outputs.add(capsysbinary.readouterr().out)
    assert len(outputs) == 1, "CLI output varied across runs"

    result = subprocess.run(
        [sys.executable, "-m", "revamp.cli", "query", "B001", "color",
         "--db", str(db), "--json"],
        capture_output=True)
    assert result.returncode == 0
    assert result.stdout == next(iter(outputs)), "subprocess output differed"

    # fingerprint is order-invariant: shuffle the review rows and re-ingest
    baseline = CorpusStore.open(db, require_index=True).index.fingerprint
    rng = random.Random(99)
    for trial in range(3):
        shuffled = list(TEASER_ROWS)
        rng.shuffle(shuffled)
        reviews2 = tmp_path / f"shuffled{trial}.csv"
        write_reviews(reviews2, shuffled, product_id="B001")
        db2 = tmp_path / f"db{trial}"
        store = CorpusStore(db2)
        store.ingest_products(products)
        store.ingest_reviews(reviews2)
        assert store.build_index() == baseline
    _pass("determinism (CLI x100, shuffle-invariant fingerprint)")


def test_criterion_performance(tmp_path):
    """Index build for 10,000 reviews < 5s; warm single-query latency < 50ms."""
    product_count = 200
    products = [{"id": f"P{i:03d}", "title": f"Product {i}",
                 "seller_variant_names": ["terra cotta"]}
                for i in range(product_count)]
    products_path = tmp_path / "products.jsonl"
    write_products(products_path, products)

    rows = synthetic_rows(10_000, seed=31)
    reviews_path = tmp_path / "reviews.csv"
    with open(reviews_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["product_id", "review_id", "title", "content",
                         "rating", "helpfulness", "date", "author"])
        for i, (rid, content, rating, votes, day) in enumerate(rows):
            writer.writerow([f"P{i % product_count:03d}", rid, "t", content,
                             rating, votes, day, "a"])

    db = tmp_path / "db"
    store = CorpusStore(db)
    store.ingest_products(products_path)
    assert store.ingest_reviews(reviews_path) == 10_000

    started = time.perf_counter()
    store.build_index()
    build_seconds = time.perf_counter() - started
    assert build_seconds < 5.0, f"index build took {build_seconds:.2f}s (budget 5s)"

    warm = CorpusStore.open(db, require_index=True)
    query_record(warm, "P000", "color")  # warm caches
    latencies = []
    for _ in range(5):
        t0 = time.perf_counter()
        query_record(warm, "P000", "color")
        latencies.append(time.perf_counter() - t0)
    best = min(latencies)
    assert best < 0.050, f"query latency {best * 1000:.1f}ms (budget 50ms)"
    _pass(f"performance (build {build_seconds:.2f}s, query {best * 1000:.1f}ms)")


def test_criterion_report_structure(tmp_path):
    """The informativeness report format: per-attribute rows, three levels.

    The original human-judged coverage and usability outcomes are not
    reproducible and are deliberately replaced by the fixture and property
    suites above; this checks only the report's structure.
    """
    product_rows = [dict(TEASER_PRODUCT)] + [
        {"id": f"B00{i}", "title": f"Product {i}"} for i in range(2, 7)]
    products_path = tmp_path / "products.jsonl"
    write_products(products_path, product_rows)
    reviews_path = tmp_path / "reviews.csv"
    write_reviews(reviews_path, TEASER_ROWS, product_id="B001")
    db = tmp_path / "db"
    cli.main(["ingest", "--products", str(products_path),
              "--reviews", str(reviews_path), "--db", str(db)])
    cli.main(["index", "--db", str(db)])
    out = tmp_path / "report.csv"
    assert cli.main(["report", "--db", str(db), "--out", str(out)]) == 0

    with open(out, encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    header, data = rows[0], rows[1:]
    assert header == ["product_id", "attribute", "level"]
    assert len(data) == 6 * 4
    assert {attr for _, attr, _ in data} == {"color", "logo", "shape", "size"}
    assert {level for _, _, level in data} <= {"DIRECT", "RELATED", "NOT_APPLICABLE"}
    assert {level for _, _, level in data} >= {"DIRECT", "NOT_APPLICABLE"}
    _pass("informativeness report structure (3 levels, per-attribute rows)")
