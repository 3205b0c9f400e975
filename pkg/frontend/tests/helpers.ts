import { vi } from "vitest";

import { ApiClient, type FetchLike } from "../src/api.js";
import { installAnnouncer } from "../src/announce.js";
import { ProductPage } from "../src/view.js";

import errorNoKeywords from "./fixtures/error_no_keywords.json";
import errorNotFound from "./fixtures/error_not_found.json";
import productBottle from "./fixtures/product_bottle.json";
import products from "./fixtures/products.json";
import queryColor from "./fixtures/query_color.json";
import queryFallback from "./fixtures/query_fallback.json";
import reviewsAll from "./fixtures/reviews_all.json";
import reviewsNegative from "./fixtures/reviews_negative.json";

export const fixtures = {
  products,
  productBottle,
  queryColor,
  queryFallback,
  reviewsAll,
  reviewsNegative,
  errorNoKeywords,
  errorNotFound,
};

interface Recorded {
  status: number;
  body: unknown;
}

/** Replays recorded service responses keyed by "METHOD path". */
export function fixtureFetch(extra: Record<string, Recorded> = {}): FetchLike {
  const table: Record<string, Recorded> = {
    "GET /api/products": products,
    "GET /api/products/BOTTLE-01": productBottle,
    "GET /api/products/NOPE": errorNotFound,
    "POST /api/products/BOTTLE-01/query": queryColor,
    "GET /api/products/BOTTLE-01/reviews": reviewsAll,
    "GET /api/products/BOTTLE-01/reviews?sentiment=negative": reviewsNegative,
    ...extra,
  };
  return async (input, init) => {
    const key = `${init?.method ?? "GET"} ${input}`;
    const recorded = table[key];
    if (!recorded) {
      throw new Error(`no fixture for ${key}`);
    }
    return new Response(JSON.stringify(recorded.body), {
      status: recorded.status,
      headers: { "content-type": "application/json; charset=utf-8" },
    });
  };
}

export function makePage(fetchImpl: FetchLike, cue = vi.fn()) {
  // mirror the shell that src/index.html ships
  document.documentElement.setAttribute("lang", "en");
  document.title = "Product viewer";
  document.body.innerHTML =
    '<a class="skip-link" href="#app">Skip to content</a>' +
    '<main id="app" tabindex="-1"></main>';
  const root = document.getElementById("app")!;
  const announcer = installAnnouncer(document);
  const api = new ApiClient(fetchImpl);
  const page = new ProductPage(root, api, announcer, cue);
  return { page, api, announcer, root, cue };
}

export function statusText(): string {
  return document.getElementById("status")?.textContent ?? "";
}

export async function flush(): Promise<void> {
  await new Promise((resolve) => setTimeout(resolve, 0));
}
