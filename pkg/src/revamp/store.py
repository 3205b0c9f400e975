"""Ingestion, validation and persistence of products, reviews and the query index.

A data store is a plain directory:

    products.jsonl  -- one product object per line (normalized on ingest)
    reviews.csv     -- the review corpus, RFC-4180, fixed header
    index.json      -- segmented/tagged sentences, inverted keyword map,
                       content fingerprint and build timestamp

Ingestion upserts by id (products) and by (product_id, review_id) (reviews);
the index is immutable once built and must be rebuilt after re-ingestion.
The fingerprint hashes records in sorted id order, so it does not depend on
the order rows appear in the input files.
"""

from __future__ import annotations

import csv
import hashlib
import json
from dataclasses import dataclass, field
from datetime import date, datetime, timezone
from pathlib import Path

from .errors import (
    IndexNotBuiltError,
    ProductNotFoundError,
    SchemaError,
    StoreNotFoundError,
    UnknownProductError,
)
from .text import PosTag, Sentence, Token, analyze

REVIEW_CSV_HEADER = ["product_id", "review_id", "title", "content",
                     "rating", "helpfulness", "date", "author"]
PRODUCT_KEYS = ["id", "title", "category", "price", "seller_variant_names",
                "original_alt", "image_ref"]


@dataclass(frozen=True)
class Product:
    id: str
    title: str
    category: str = ""
    price: float | None = None
    seller_variant_names: tuple[str, ...] = ()
    original_alt: str | None = None
    image_ref: str | None = None

    def to_record(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "category": self.category,
            "price": self.price,
            "seller_variant_names": list(self.seller_variant_names),
            "original_alt": self.original_alt,
            "image_ref": self.image_ref,
        }


@dataclass(frozen=True)
class Review:
    review_id: str
    product_id: str
    title: str
    content: str
    rating: float | None
    helpfulness: int
    date: date
    author: str

    def to_row(self) -> list[str]:
        return [
            self.product_id,
            self.review_id,
            self.title,
            self.content,
            "" if self.rating is None else format(self.rating, "g"),
            str(self.helpfulness),
            self.date.isoformat(),
            self.author,
        ]


def _parse_product_line(line: str, lineno: int) -> Product:
    try:
        record = json.loads(line)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg}", lineno) from exc
    if not isinstance(record, dict):
        raise SchemaError("product record must be a JSON object", lineno)
    unknown = set(record) - set(PRODUCT_KEYS)
    if unknown:
        raise SchemaError(f"unknown keys: {', '.join(sorted(unknown))}", lineno)
    pid = record.get("id")
    title = record.get("title")
    if not pid or not isinstance(pid, str):
        raise SchemaError("missing or empty id", lineno)
    if not title or not isinstance(title, str):
        raise SchemaError("missing or empty title", lineno)
    price = record.get("price")
    if price is not None and not isinstance(price, (int, float)):
        raise SchemaError("price must be a number or null", lineno)
    names = record.get("seller_variant_names") or []
    if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
        raise SchemaError("seller_variant_names must be a list of strings", lineno)
    return Product(
        id=pid,
        title=title,
        category=record.get("category") or "",
        price=None if price is None else float(price),
        seller_variant_names=tuple(names),
        original_alt=record.get("original_alt"),
        image_ref=record.get("image_ref"),
    )


def _parse_review_row(row: list[str], lineno: int, products: dict[str, Product]) -> Review:
    if len(row) != len(REVIEW_CSV_HEADER):
        raise SchemaError(f"expected {len(REVIEW_CSV_HEADER)} fields, got {len(row)}", lineno)
    pid, rid, title, content, rating_s, help_s, date_s, author = row
    if not pid:
        raise SchemaError("empty product_id", lineno)
    if pid not in products:
        raise UnknownProductError(pid, lineno)
    if not rid:
        raise SchemaError("empty review_id", lineno)
    rating: float | None = None
    if rating_s.strip():
        try:
            rating = float(rating_s)
        except ValueError:
            raise SchemaError(f"rating is not a number: {rating_s!r}", lineno) from None
        if not 1.0 <= rating <= 5.0:
            raise SchemaError(f"rating out of range [1, 5]: {rating_s}", lineno)
    try:
        helpfulness = int(help_s)
    except ValueError:
        raise SchemaError(f"helpfulness is not an integer: {help_s!r}", lineno) from None
    if helpfulness < 0:
        raise SchemaError(f"helpfulness must be non-negative: {help_s}", lineno)
    try:
        parsed_date = date.fromisoformat(date_s)
    except ValueError:
        raise SchemaError(f"date is not ISO-8601: {date_s!r}", lineno) from None
    return Review(
        review_id=rid, product_id=pid, title=title, content=content,
        rating=rating, helpfulness=helpfulness, date=parsed_date, author=author,
    )


@dataclass
class Index:
    """Immutable per-product sentence data plus an inverted keyword map."""

    sentences: dict[str, list[Sentence]]
    inverted: dict[str, dict[str, tuple[int, ...]]]  # product -> normal -> sentence idxs
    fingerprint: str
    built_at: str

    def candidate_sentence_indices(self, product_id: str, first_words: set[str]) -> list[int]:
        postings = self.inverted.get(product_id, {})
        found: set[int] = set()
        for word in first_words:
            found.update(postings.get(word, ()))
        return sorted(found)


def _fingerprint(products: dict[str, Product], reviews: dict[tuple[str, str], Review]) -> str:
    payload = {
        "products": [products[pid].to_record() for pid in sorted(products)],
        "reviews": [reviews[key].to_row() for key in sorted(reviews)],
    }
    blob = json.dumps(payload, ensure_ascii=False, separators=(",", ":")).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()


class CorpusStore:
    """Directory-backed store; single writer, any number of readers."""

    def __init__(self, db_dir: str | Path):
        self.db_dir = Path(db_dir)
        self.products: dict[str, Product] = {}
        self.reviews: dict[tuple[str, str], Review] = {}
        self.index: Index | None = None

    # -- ingestion ----------------------------------------------------------

    @classmethod
    def open(cls, db_dir: str | Path, require_index: bool = False) -> "CorpusStore":
        """Load a previously persisted store from disk."""
        store = cls(db_dir)
        if not store.db_dir.is_dir() or not (store.db_dir / "products.jsonl").exists():
            raise StoreNotFoundError(str(db_dir))
        store._load_raw()
        index_path = store.db_dir / "index.json"
        if index_path.exists():
            store._load_index(index_path)
        elif require_index:
            raise IndexNotBuiltError(str(db_dir))
        return store

    def ingest_products(self, path: str | Path) -> int:
        """Upsert products from a JSON-lines file; returns records read."""
        count = 0
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                if not raw.strip():
                    continue
                product = _parse_product_line(raw, lineno)
                self.products[product.id] = product
                count += 1
        self._persist_products()
        return count

    def ingest_reviews(self, path: str | Path) -> int:
        """Upsert reviews from CSV; the header row must match exactly."""
        count = 0
        with open(path, encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise SchemaError("empty file, expected header row", 1) from None
            if header != REVIEW_CSV_HEADER:
                raise SchemaError(
                    f"bad header: expected {','.join(REVIEW_CSV_HEADER)}", 1)
            for row in reader:
                review = _parse_review_row(row, reader.line_num, self.products)
                self.reviews[(review.product_id, review.review_id)] = review
                count += 1
        self._persist_reviews()
        return count

    def _persist_products(self) -> None:
        self.db_dir.mkdir(parents=True, exist_ok=True)
        with open(self.db_dir / "products.jsonl", "w", encoding="utf-8") as fh:
            for pid in sorted(self.products):
                fh.write(json.dumps(self.products[pid].to_record(), ensure_ascii=False) + "\n")

    def _persist_reviews(self) -> None:
        self.db_dir.mkdir(parents=True, exist_ok=True)
        with open(self.db_dir / "reviews.csv", "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(REVIEW_CSV_HEADER)
            for key in sorted(self.reviews):
                writer.writerow(self.reviews[key].to_row())

    def _load_raw(self) -> None:
        products_path = self.db_dir / "products.jsonl"
        with open(products_path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                if raw.strip():
                    product = _parse_product_line(raw, lineno)
                    self.products[product.id] = product
        reviews_path = self.db_dir / "reviews.csv"
        if reviews_path.exists():
            with open(reviews_path, encoding="utf-8", newline="") as fh:
                reader = csv.reader(fh)
                next(reader, None)
                for row in reader:
                    review = _parse_review_row(row, reader.line_num, self.products)
                    self.reviews[(review.product_id, review.review_id)] = review

    # -- index --------------------------------------------------------------

    def build_index(self, product_id: str | None = None) -> str:
        """Segment, tokenize and tag every review sentence; returns the fingerprint.

        ``product_id`` restricts the sanity check to one product (it must
        exist) but the index is always built over the full corpus so that a
        single immutable snapshot serves every query.
        """
        if product_id is not None and product_id not in self.products:
            raise ProductNotFoundError(product_id)
        sentences: dict[str, list[Sentence]] = {pid: [] for pid in self.products}
        inverted: dict[str, dict[str, set[int]]] = {pid: {} for pid in self.products}
        for key in sorted(self.reviews):
            review = self.reviews[key]
            for sentence in analyze(review.content, review.review_id):
                bucket = sentences[review.product_id]
                idx = len(bucket)
                bucket.append(sentence)
                postings = inverted[review.product_id]
                for normal in set(sentence.normals()):
                    postings.setdefault(normal, set()).add(idx)
        self.index = Index(
            sentences=sentences,
            inverted={pid: {w: tuple(sorted(ix)) for w, ix in postings.items()}
                      for pid, postings in inverted.items()},
            fingerprint=_fingerprint(self.products, self.reviews),
            built_at=datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"),
        )
        self._persist_index()
        return self.index.fingerprint

    def _persist_index(self) -> None:
        assert self.index is not None
        payload = {
            "fingerprint": self.index.fingerprint,
            "built_at": self.index.built_at,
            "sentences": {
                pid: [
                    {
                        "review_id": s.review_id,
                        "span": list(s.char_span),
                        "tokens": [[t.surface, t.tag.value] for t in s.tokens],
                    }
                    for s in sents
                ]
                for pid, sents in self.index.sentences.items()
            },
            "inverted": {
                pid: {w: list(ix) for w, ix in postings.items()}
                for pid, postings in self.index.inverted.items()
            },
        }
        self.db_dir.mkdir(parents=True, exist_ok=True)
        with open(self.db_dir / "index.json", "w", encoding="utf-8") as fh:
            json.dump(payload, fh, ensure_ascii=False, separators=(",", ":"))

    def _load_index(self, path: Path) -> None:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
        sentences: dict[str, list[Sentence]] = {}
        for pid, sents in payload["sentences"].items():
            out = []
            for record in sents:
                start, end = record["span"]
                review = self.reviews.get((pid, record["review_id"]))
                text = review.content[start:end] if review else ""
                tokens = tuple(
                    Token(surface=surf, normal=surf.lower(), tag=PosTag[tag], index=i)
                    for i, (surf, tag) in enumerate(record["tokens"])
                )
                out.append(Sentence(tokens=tokens, review_id=record["review_id"],
                                    char_span=(start, end), text=text))
            sentences[pid] = out
        self.index = Index(
            sentences=sentences,
            inverted={pid: {w: tuple(ix) for w, ix in postings.items()}
                      for pid, postings in payload["inverted"].items()},
            fingerprint=payload["fingerprint"],
            built_at=payload["built_at"],
        )

    def require_index(self) -> Index:
        if self.index is None:
            raise IndexNotBuiltError(str(self.db_dir))
        return self.index

    # -- lookups ------------------------------------------------------------

    def get_product(self, product_id: str) -> Product:
        try:
            return self.products[product_id]
        except KeyError:
            raise ProductNotFoundError(product_id) from None

    def reviews_for(self, product_id: str) -> list[Review]:
        self.get_product(product_id)
        keys = [k for k in sorted(self.reviews) if k[0] == product_id]
        return [self.reviews[k] for k in keys]

    def review_map(self, product_id: str) -> dict[str, Review]:
        return {r.review_id: r for r in self.reviews_for(product_id)}

    def list_products(self) -> list[dict]:
        counts: dict[str, int] = {pid: 0 for pid in self.products}
        for pid, _rid in self.reviews:
            counts[pid] += 1
        return [
            {
                "id": pid,
                "title": self.products[pid].title,
                "category": self.products[pid].category,
                "review_count": counts[pid],
            }
            for pid in sorted(self.products)
        ]
