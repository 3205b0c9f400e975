#!/usr/bin/env python3
"""Regenerate tests/fixtures/*.json from the real service.

Builds a store from the repository's demo corpus and records the exact
response bodies the frontend tests replay, so the UI round-trip tests
always compare against genuine wire payloads. Run from frontend/:

    python3 scripts/capture_fixtures.py
"""

import json
import sys
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from revamp.service import create_app
from revamp.store import CorpusStore

FRONTEND = Path(__file__).resolve().parent.parent
REPO = FRONTEND.parent
FIXTURES = FRONTEND / "tests" / "fixtures"


def main() -> int:
    with tempfile.TemporaryDirectory() as tmp:
        store = CorpusStore(Path(tmp) / "db")
        store.ingest_products(REPO / "demo" / "products.jsonl")
        store.ingest_reviews(REPO / "demo" / "reviews.csv")
        store.build_index()
        client = TestClient(create_app(store))

        captures = {
            "products.json": client.get("/api/products"),
            "product_bottle.json": client.get("/api/products/BOTTLE-01"),
            "query_color.json": client.post(
                "/api/products/BOTTLE-01/query", json={"query": "color"}),
            "query_fallback.json": client.post(
                "/api/products/BOTTLE-01/query", json={"query": "warranty terms"}),
            "reviews_all.json": client.get("/api/products/BOTTLE-01/reviews"),
            "reviews_negative.json": client.get(
                "/api/products/BOTTLE-01/reviews?sentiment=negative"),
            "error_no_keywords.json": client.post(
                "/api/products/BOTTLE-01/query", json={"query": "is it?"}),
            "error_not_found.json": client.get("/api/products/NOPE"),
        }

    FIXTURES.mkdir(parents=True, exist_ok=True)
    for name, response in captures.items():
        payload = {"status": response.status_code, "body": response.json()}
        (FIXTURES / name).write_text(
            json.dumps(payload, ensure_ascii=False, indent=2) + "\n",
            encoding="utf-8")
        print(f"wrote {name} ({response.status_code})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
