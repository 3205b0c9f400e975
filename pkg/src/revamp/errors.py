"""Exception hierarchy shared across the engine."""


class RevampError(Exception):
    """Base class for all engine errors."""


class ProductNotFoundError(RevampError):
    def __init__(self, product_id: str):
        super().__init__(f"product not found: {product_id}")
        self.product_id = product_id


class NoKeywordsError(RevampError):
    """Raised when a query contains no usable content words."""

    def __init__(self, query: str):
        super().__init__(f"no keywords could be extracted from query: {query!r}")
        self.query = query


class UnknownAttributeError(RevampError):
    def __init__(self, attribute: str):
        super().__init__(f"unknown visual attribute: {attribute!r}")
        self.attribute = attribute


class NotAdjectiveError(RevampError):
    """Adjective classification was asked about a non-adjective token."""


class SchemaError(RevampError):
    """A record in an input file failed validation.

    ``line`` is the 1-based line number of the offending record.
    """

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnknownProductError(SchemaError):
    """A review references a product id that was never ingested."""

    def __init__(self, product_id: str, line: int):
        super().__init__(f"unknown product: {product_id}", line)
        self.product_id = product_id


class StoreNotFoundError(RevampError):
    def __init__(self, path: str):
        super().__init__(f"no data store at {path}")
        self.path = path


class IndexNotBuiltError(RevampError):
    def __init__(self, path: str):
        super().__init__(f"store at {path} has no built index (run the index command first)")
        self.path = path
