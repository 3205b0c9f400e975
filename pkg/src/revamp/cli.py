"""Operator command line: ingest, index, alt-text, query, report, serve.

``--db`` defaults to the REVAMP_DB environment variable. ``--json`` output
is the exact byte sequence the HTTP service would return for the
equivalent endpoint (no trailing newline).
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from pathlib import Path

from .answers import best_attribute_snippets
from .errors import RevampError
from .rules import Tier
from .service import (
    alt_text_record,
    canonical_json_bytes,
    query_record,
    serve,
)
from .store import CorpusStore

REPORT_ATTRIBUTES = ("color", "logo", "shape", "size")
REPORT_HEADER = ["product_id", "attribute", "level"]


def _open_or_create(db_dir: str) -> CorpusStore:
    if (Path(db_dir) / "products.jsonl").exists():
        return CorpusStore.open(db_dir)
    return CorpusStore(db_dir)


def _write_json(payload_bytes: bytes) -> None:
    sys.stdout.buffer.write(payload_bytes)
    sys.stdout.buffer.flush()


def cmd_ingest(args) -> int:
    store = _open_or_create(args.db)
    if args.products:
        count = store.ingest_products(args.products)
        print(f"ingested {count} product records")
    if args.reviews:
        count = store.ingest_reviews(args.reviews)
        print(f"ingested {count} review records")
    return 0


def cmd_index(args) -> int:
    store = CorpusStore.open(args.db)
    fingerprint = store.build_index()
    print(f"index built, fingerprint {fingerprint}")
    return 0


def cmd_alt_text(args) -> int:
    store = CorpusStore.open(args.db, require_index=True)
    record = alt_text_record(store, args.product_id)
    if args.json:
        _write_json(canonical_json_bytes(record))
    else:
        print(record["rendered"])
    return 0


def cmd_query(args) -> int:
    store = CorpusStore.open(args.db, require_index=True)
    record = query_record(store, args.product_id, args.question)
    if args.json:
        _write_json(canonical_json_bytes(record))
        return 0
    print(record["summary"])
    if record["used_fallback"]:
        print(f"fallback: {record['fallback_text']}")
        return 0
    for label in ("positive", "negative"):
        snippets = record[label]
        print(f"{label} ({len(snippets)}):")
        for s in snippets:
            print(f"  #{s['rank']} [tier {s['tier']}, votes {s['helpfulness']}] {s['text']}")
    return 0


def _report_level(ranked) -> str:
    if not ranked:
        return "NOT_APPLICABLE"
    best = min(s.tier.value for s in ranked)
    return "RELATED" if best == Tier.TIER3.value else "DIRECT"


def cmd_report(args) -> int:
    store = CorpusStore.open(args.db, require_index=True)
    rows = []
    for pid in sorted(store.products):
        per_attribute = best_attribute_snippets(store, store.products[pid])
        for attribute in REPORT_ATTRIBUTES:
            rows.append([pid, attribute, _report_level(per_attribute[attribute])])
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(REPORT_HEADER)
        writer.writerows(rows)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_serve(args) -> int:
    serve(args.db, args.port, args.static, host=args.host)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revamp",
        description="Mine customer reviews to answer visual questions about products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_db(p):
        p.add_argument("--db", default=os.environ.get("REVAMP_DB"),
                       help="store directory (default: $REVAMP_DB)")

    p = sub.add_parser("ingest", help="load product and review files into a store")
    p.add_argument("--products", help="JSON-lines product metadata file")
    p.add_argument("--reviews", help="CSV review file")
    add_db(p)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("index", help="(re)build the query index")
    add_db(p)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("alt-text", help="generate the image description for a product")
    p.add_argument("product_id")
    p.add_argument("--json", action="store_true", help="emit the API response body")
    add_db(p)
    p.set_defaults(func=cmd_alt_text)

    p = sub.add_parser("query", help="answer a question about a product")
    p.add_argument("product_id")
    p.add_argument("question")
    p.add_argument("--json", action="store_true", help="emit the API response body")
    add_db(p)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("report", help="per-product, per-attribute informativeness report")
    p.add_argument("--out", required=True, help="output CSV path")
    add_db(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("serve", help="run the read-only query API")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", help="directory of UI assets to serve at /")
    add_db(p)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "db", None) in (None, ""):
        parser.error("--db is required (or set REVAMP_DB)")
    try:
        return args.func(args)
    except RevampError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
