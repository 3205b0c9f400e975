"""Read-only JSON query service over a built store.

All responses are rendered through one canonical encoder (compact
separators, UTF-8, no NaN) so that a response body is byte-identical across
requests and identical to the CLI's ``--json`` output. Every non-2xx
response carries exactly one ``{"code", "message"}`` error object.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from .answers import answer_query, generate_alt_text
from .errors import NoKeywordsError, ProductNotFoundError, RevampError
from .sentiment import SentimentLabel, classify_words
from .store import CorpusStore, Review


def canonical_json_bytes(payload: Any) -> bytes:
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"),
                      allow_nan=False).encode("utf-8")


class CanonicalJSONResponse(JSONResponse):
    media_type = "application/json; charset=utf-8"

    def render(self, content: Any) -> bytes:
        return canonical_json_bytes(content)


class BadRequestError(RevampError):
    pass


# -- response builders (shared with the CLI's --json mode) -------------------

def product_list_record(store: CorpusStore) -> list[dict]:
    return store.list_products()

def product_record(store: CorpusStore, product_id: str) -> dict:
    product = store.get_product(product_id)
    record = product.to_record()
    record["review_count"] = len(store.reviews_for(product_id))
    record["alt_text"] = generate_alt_text(store, product_id).rendered
    return record


def alt_text_record(store: CorpusStore, product_id: str) -> dict:
    alt = generate_alt_text(store, product_id)
    record = {"product_id": product_id}
    record.update(alt.to_record())
    return record


def query_record(store: CorpusStore, product_id: str, raw_query: str) -> dict:
    bundle = answer_query(store, product_id, raw_query)
    record = bundle.to_record()
    record["generated_at"] = store.require_index().built_at
    return record


def _review_sentiment(store: CorpusStore, review: Review) -> SentimentLabel:
    """Whole-review polarity from its indexed sentences plus the rating."""
    index = store.require_index()
    words = []
    for sentence in index.sentences.get(review.product_id, []):
        if sentence.review_id == review.review_id:
            words.extend(t.normal for t in sentence.tokens if t.is_word)
    return classify_words(words, review.rating)


def review_list_record(store: CorpusStore, product_id: str,
                       sentiment: str | None = None) -> list[dict]:
    if sentiment not in (None, "positive", "negative"):
        raise BadRequestError("sentiment must be 'positive' or 'negative'")
    reviews = store.reviews_for(product_id)
    ordered = sorted(reviews, key=lambda r: (-r.helpfulness, -r.date.toordinal(), r.review_id))
    records = []
    for review in ordered:
        label = _review_sentiment(store, review)
        if sentiment is not None and label.value != sentiment:
            continue
        records.append({
            "review_id": review.review_id,
            "product_id": review.product_id,
            "title": review.title,
            "content": review.content,
            "rating": review.rating,
            "helpfulness": review.helpfulness,
            "date": review.date.isoformat(),
            "author": review.author,
            "sentiment": label.value,
        })
    return records


# -- app ---------------------------------------------------------------------

def _error_response(status: int, code: str, message: str) -> CanonicalJSONResponse:
    return CanonicalJSONResponse({"code": code, "message": message}, status_code=status)


def create_app(store: CorpusStore, static_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="revamp", docs_url=None, redoc_url=None, openapi_url=None,
                  default_response_class=CanonicalJSONResponse)

    @app.exception_handler(ProductNotFoundError)
    async def _not_found(request: Request, exc: ProductNotFoundError):
        return _error_response(404, "NOT_FOUND", str(exc))

    @app.exception_handler(NoKeywordsError)
    async def _no_keywords(request: Request, exc: NoKeywordsError):
        return _error_response(422, "NO_KEYWORDS", str(exc))

    @app.exception_handler(BadRequestError)
    async def _bad_request(request: Request, exc: BadRequestError):
        return _error_response(400, "BAD_REQUEST", str(exc))

    @app.exception_handler(RequestValidationError)
    async def _validation(request: Request, exc: RequestValidationError):
        return _error_response(400, "BAD_REQUEST", "invalid request")

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(request: Request, exc: StarletteHTTPException):
        # routing-level 404/405; keep the one-error-object contract
        code = "NOT_FOUND" if exc.status_code == 404 else "BAD_REQUEST"
        return _error_response(exc.status_code, code, str(exc.detail))

    @app.exception_handler(Exception)
    async def _internal(request: Request, exc: Exception):
        return _error_response(500, "INTERNAL", "internal error")

    @app.get("/api/products")
    def list_products():
        return product_list_record(store)

    @app.get("/api/products/{product_id}")
    def get_product(product_id: str):
        return product_record(store, product_id)

    @app.get("/api/products/{product_id}/alt-text")
    def get_alt_text(product_id: str):
        return alt_text_record(store, product_id)

    @app.get("/api/products/{product_id}/reviews")
    def get_reviews(product_id: str, sentiment: str | None = None):
        return review_list_record(store, product_id, sentiment)

    @app.post("/api/products/{product_id}/query")
    async def post_query(product_id: str, request: Request):
        try:
            body = await request.json()
        except json.JSONDecodeError:
            raise BadRequestError("request body must be JSON") from None
        if not isinstance(body, dict) or not isinstance(body.get("query"), str) \
                or not body["query"].strip():
            raise BadRequestError('request body must be {"query": <non-empty string>}')
        return query_record(store, product_id, body["query"])

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="static")

    return app


def serve(db_dir: str | Path, port: int, static_dir: str | Path | None = None,
          host: str = "127.0.0.1") -> None:
    """Run the service until interrupted. Requires a built index on disk."""
    import uvicorn

    store = CorpusStore.open(db_dir, require_index=True)
    app = create_app(store, static_dir)
    uvicorn.run(app, host=host, port=port)
