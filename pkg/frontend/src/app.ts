import { ApiClient } from "./api.js";
import { installAnnouncer } from "./announce.js";
import { defaultReadyCue } from "./cue.js";
import { ProductPage } from "./view.js";

/** Hash routes: `#/` product list, `#/product/<id>` one product. */
export async function route(
  root: HTMLElement,
  api: ApiClient,
  page: ProductPage,
  hash: string,
): Promise<void> {
  const match = /^#\/product\/(.+)$/.exec(hash);
  if (match && match[1]) {
    await page.show(decodeURIComponent(match[1]));
    return;
  }
  const d = root.ownerDocument;
  const nav = d.createElement("nav");
  nav.setAttribute("aria-label", "Products");
  const heading = d.createElement("h1");
  heading.textContent = "Products";
  const list = d.createElement("ul");
  try {
    for (const product of await api.listProducts()) {
      const item = d.createElement("li");
      const link = d.createElement("a");
      link.href = `#/product/${encodeURIComponent(product.id)}`;
      link.textContent = `${product.title} (${product.review_count} reviews)`;
      item.append(link);
      list.append(item);
    }
  } catch {
    const item = d.createElement("li");
    item.textContent = "The product list could not be loaded.";
    list.append(item);
  }
  nav.append(heading, list);
  root.replaceChildren(nav);
}

export function boot(window: Window & typeof globalThis): void {
  const document = window.document;
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app container");
  const announcer = installAnnouncer(document);
  const api = new ApiClient();
  const page = new ProductPage(root, api, announcer, defaultReadyCue);
  const render = () => void route(root, api, page, window.location.hash);
  window.addEventListener("hashchange", render);
  render();
}

declare global {
  interface Window {
    __revampTest?: boolean;
  }
}

if (typeof window !== "undefined" && !window.__revampTest) {
  boot(window);
}
