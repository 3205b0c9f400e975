import type {
  AnswerBundle,
  ApiError,
  ProductDetail,
  ProductSummary,
  ReviewRecord,
} from "./types.js";

/** Raised for non-2xx service responses; carries the service error body. */
export class ServiceError extends Error {
  constructor(
    public readonly status: number,
    public readonly body: ApiError,
  ) {
    super(body.message);
    this.name = "ServiceError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/**
 * Thin client for the read-only query service. The fetch implementation is
 * injectable so tests can replay recorded responses.
 */
export class ApiClient {
  constructor(
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
    private readonly base: string = "",
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.base + path, init);
    if (!response.ok) {
      let body: ApiError;
      try {
        body = (await response.json()) as ApiError;
      } catch {
        body = { code: "INTERNAL", message: `unexpected response ${response.status}` };
      }
      throw new ServiceError(response.status, body);
    }
    return (await response.json()) as T;
  }

  listProducts(): Promise<ProductSummary[]> {
    return this.request("/api/products");
  }

  getProduct(id: string): Promise<ProductDetail> {
    return this.request(`/api/products/${encodeURIComponent(id)}`);
  }

  query(id: string, query: string, signal?: AbortSignal): Promise<AnswerBundle> {
    return this.request(`/api/products/${encodeURIComponent(id)}/query`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ query }),
      signal,
    });
  }

  listReviews(id: string, sentiment?: "positive" | "negative"): Promise<ReviewRecord[]> {
    const suffix = sentiment ? `?sentiment=${sentiment}` : "";
    return this.request(`/api/products/${encodeURIComponent(id)}/reviews${suffix}`);
  }
}
