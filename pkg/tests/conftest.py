"""Shared fixture corpora.

``teaser_store`` holds one product whose reviews contain the four clause
sentences the alt-text generator should pick, buried among twenty
distractors (filtered shorts, photo remarks, longer rule matches with
fewer votes, keyword-only mentions and off-topic filler).

``bubblegum_store`` is the small color-query corpus where the first-person
clause sentence must outrank an evaluative sentence with five times the
votes.
"""

from __future__ import annotations

import csv
import json
import random
from pathlib import Path

import pytest

from revamp.store import REVIEW_CSV_HEADER, CorpusStore

TEASER_PRODUCT = {
    "id": "B001",
    "title": "Insulated Water Bottle",
    "category": "Home & Kitchen",
    "price": 24.99,
    "seller_variant_names": ["Flat Pink"],
    "original_alt": "product image",
    "image_ref": "https://example.com/bottle.jpg",
}

TEASER_CLAUSES = {
    "shape": "shaped like a Cola Bottle",
    "logo": "the logo is sleek",
    "color": "it is a flat pink with a few speckles of white mixed in the blue",
    "size": "sized for the disposable plastic water bottles",
}

# (review_id, content, rating, helpfulness, date)
TEASER_ROWS = [
    ("c-shape", TEASER_CLAUSES["shape"], "5", 40, "2024-03-01"),
    ("c-logo", TEASER_CLAUSES["logo"], "5", 38, "2024-03-02"),
    ("c-color", TEASER_CLAUSES["color"], "5", 36, "2024-03-03"),
    ("c-size", TEASER_CLAUSES["size"], "5", 34, "2024-03-04"),
    ("d01", "satisfied", "5", 50, "2024-01-01"),
    ("d02", "like the shape", "4", 45, "2024-01-02"),
    ("d03", "nice shape", "4", 44, "2024-01-03"),
    ("d04", "poor logo", "1", 2, "2024-01-04"),
    ("d05", "looks exactly as pictured", "5", 30, "2024-01-05"),
    ("d06", "not shown as picture", "2", 28, "2024-01-06"),
    ("d07", "We ordered 2 blue and black in size xl. The blue was ok and the black was small", "3", 1, "2024-01-07"),
    ("d08", "The squarish shape of the lid makes it easy to grip", "5", 25, "2024-01-08"),
    ("d09", "I love the shape because it fits perfectly in my backpack pocket, which is great", "5", 22, "2024-01-09"),
    ("d10", "a very nice-looking etched logo on the front side", "5", 26, "2024-01-10"),
    ("d11", "The logo is printed in a deep matte black that will not fade", "4", 24, "2024-01-11"),
    ("d12", "size fits in all cup holders and the side pocket of my gym bag", "5", 27, "2024-01-12"),
    ("d13", "I like the size, but it can be heavy because a full bottle will not fit small hands", "3", 21, "2024-01-13"),
    ("d14", "color was off and not the true blue/normal blue that champion usually has", "2", 20, "2024-01-14"),
    ("d15", "The flat pink color is a soft pastel shade with tiny white speckles scattered evenly across the whole bottle", "5", 30, "2024-01-15"),
    ("d16", "I picked the pale blue color and it turned out to be a dusty gray shade in person, closer to concrete than to sky", "2", 28, "2024-01-16"),
    ("d17", "Keeps drinks cold all day long.", "5", 33, "2024-01-17"),
    ("d18", "My daughter loves it and takes it to school every day.", "5", 12, "2024-01-18"),
    ("d19", "The handle strap snapped within a month.", "2", 11, "2024-01-19"),
    ("d20", "Arrived quickly and was packaged well.", "4", 8, "2024-01-20"),
]

BUBBLEGUM_ROWS = [
    ("r1", "I love the color (Bubblegum), which I bought because it was the lowest cost for a color that would be difficult to misplace or forget while traveling", "5", 10, "2024-02-01"),
    ("r2", "The bubblegum color is glossy and fun.", "5", 5, "2024-02-02"),
    ("r3", "This color looks great", "4", 50, "2024-02-03"),
    ("r4", "We ordered 2 blue and black in size xl.", "3", 70, "2024-02-04"),
]


def write_products(path: Path, products: list[dict]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for product in products:
            fh.write(json.dumps(product) + "\n")


def write_reviews(path: Path, rows: list[tuple], product_id: str | None = None) -> None:
    """Rows are (review_id, content, rating, helpfulness, date) when
    ``product_id`` is given, else full 8-field rows."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(REVIEW_CSV_HEADER)
        for row in rows:
            if product_id is not None:
                rid, content, rating, votes, date = row
                writer.writerow([product_id, rid, "review", content, rating, votes, date, "tester"])
            else:
                writer.writerow(row)


def build_store(db_dir: Path, products: list[dict], review_files: list[Path]) -> CorpusStore:
    store = CorpusStore(db_dir)
    products_path = db_dir.parent / f"{db_dir.name}-products.jsonl"
    write_products(products_path, products)
    store.ingest_products(products_path)
    for path in review_files:
        store.ingest_reviews(path)
    store.build_index()
    return store


@pytest.fixture(scope="session")
def teaser_store(tmp_path_factory) -> CorpusStore:
    base = tmp_path_factory.mktemp("teaser")
    reviews = base / "reviews.csv"
    write_reviews(reviews, TEASER_ROWS, product_id="B001")
    return build_store(base / "db", [TEASER_PRODUCT], [reviews])


@pytest.fixture(scope="session")
def bubblegum_store(tmp_path_factory) -> CorpusStore:
    base = tmp_path_factory.mktemp("bubblegum")
    reviews = base / "reviews.csv"
    write_reviews(reviews, BUBBLEGUM_ROWS, product_id="P1")
    product = {
        "id": "P1", "title": "Travel Mug", "category": "Home & Kitchen",
        "price": 15.0, "seller_variant_names": ["Bubblegum"],
        "original_alt": None, "image_ref": None,
    }
    return build_store(base / "db", [product], [reviews])


# -- synthetic corpus generator ----------------------------------------------

_DESCRIPTIVE = ["shimmery", "glossy", "matte", "pale", "deep", "bright", "faded", "vivid"]
_COLORS = ["blue", "red", "green", "pink", "purple", "black", "white", "gray"]
_OBJECTS = ["bottle", "banana", "brick", "pebble", "coin", "croissant"]
_FILLER = [
    "Arrived quickly and works.",
    "My daughter uses it every day.",
    "Customer service replied within a week.",
    "The firmware update took ten minutes.",
    "Très happy with it overall.",
]


def synthetic_rows(count: int, seed: int = 7, tier3_share: float = 0.15) -> list[tuple]:
    """Deterministic mixed-tier review rows for property suites."""
    rng = random.Random(seed)
    rows = []
    for i in range(count):
        roll = rng.random()
        color = rng.choice(_COLORS)
        if roll < 0.08:
            content = rng.choice(["satisfied", "like the shape", "nice color", "poor logo"])
        elif roll < 0.14:
            content = rng.choice(["looks exactly as pictured", "not shown as picture"])
        elif roll < 0.14 + tier3_share:
            content = f"We ordered the {color} one and also a {rng.choice(_COLORS)} one in size xl."
        elif roll < 0.55:
            adj = rng.choice(_DESCRIPTIVE)
            content = f"It is a {adj} {color} with a {rng.choice(_DESCRIPTIVE)} finish."
        elif roll < 0.7:
            content = f"I love the {rng.choice(['color', 'shape', 'size', 'logo'])} because it suits me, which is rare."
        elif roll < 0.8:
            content = rng.choice([
                f"shaped like a {rng.choice(_OBJECTS)} more or less",
                "size fits in all cup holders",
                f"it is more of a {color} than {rng.choice(_COLORS)}",
            ])
        else:
            content = rng.choice(_FILLER)
        if rng.random() < 0.3:
            content += " " + rng.choice(_FILLER)
        rating = "" if rng.random() < 0.1 else str(rng.randint(1, 5))
        date = f"202{rng.randint(0, 4)}-{rng.randint(1, 12):02d}-{rng.randint(1, 28):02d}"
        rows.append((f"s{i:05d}", content, rating, rng.randint(0, 100), date))
    return rows


@pytest.fixture(scope="session")
def synthetic_store(tmp_path_factory) -> CorpusStore:
    base = tmp_path_factory.mktemp("synthetic")
    reviews = base / "reviews.csv"
    write_reviews(reviews, synthetic_rows(1000), product_id="S1")
    product = {
        "id": "S1", "title": "Synthetic Product", "category": "Testing",
        "price": 1.0, "seller_variant_names": ["terra cotta", "mocha"],
        "original_alt": None, "image_ref": None,
    }
    return build_store(base / "db", [product], [reviews])
