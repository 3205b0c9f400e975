import type { ApiClient } from "./api.js";
import { ServiceError } from "./api.js";
import type { Announcer } from "./announce.js";
import type { ReadyCue } from "./cue.js";
import type { AnswerBundle, ProductDetail, ReviewRecord, SnippetPayload } from "./types.js";

function el<K extends keyof HTMLElementTagNameMap>(
  document: Document,
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  if (text !== undefined) node.textContent = text;
  return node;
}

/**
 * The simplified product page: exactly four labeled regions (product name,
 * product image, seller information, questions and answers), all controls
 * native and keyboard-operable. Answers render into plain containers, not
 * live regions, so nothing is auto-spoken; the ready cue signals arrival.
 */
export class ProductPage {
  private inFlight: AbortController | null = null;
  private detail: ProductDetail | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly announcer: Announcer,
    private readonly cue: ReadyCue,
  ) {}

  get document(): Document {
    return this.root.ownerDocument;
  }

  /** Fetch and render one product; announces a not-found message on miss. */
  async show(productId: string): Promise<void> {
    try {
      this.detail = await this.api.getProduct(productId);
    } catch (error) {
      this.renderNotFound(productId, error);
      return;
    }
    this.render(this.detail);
  }

  private renderNotFound(productId: string, error: unknown): void {
    const message =
      error instanceof ServiceError && error.status === 404
        ? `No product with id ${productId}.`
        : "The product could not be loaded. Check that the service is running.";
    this.root.replaceChildren(
      el(this.document, "section", { "aria-label": "Error" }),
    );
    const region = this.root.firstElementChild as HTMLElement;
    region.append(
      el(this.document, "h1", {}, "Product not available"),
      el(this.document, "p", {}, message),
      el(this.document, "a", { href: "#/" }, "Back to all products"),
    );
    this.announcer.announce(message);
  }

  private render(detail: ProductDetail): void {
    const d = this.document;

    const nameRegion = el(d, "section", { "aria-labelledby": "product-name" });
    nameRegion.append(el(d, "h1", { id: "product-name" }, detail.title));

    const imageRegion = el(d, "section", { "aria-label": "Product image" });
    if (detail.image_ref) {
      imageRegion.append(
        el(d, "img", { id: "product-image", src: detail.image_ref, alt: detail.alt_text }),
      );
    } else {
      const figure = el(d, "div", {
        id: "product-image",
        role: "img",
        "aria-label": detail.alt_text,
      });
      figure.append(el(d, "p", { "aria-hidden": "true" }, detail.alt_text));
      imageRegion.append(figure);
    }

    const sellerRegion = el(d, "section", { "aria-label": "Seller information" });
    const facts = el(d, "dl");
    const fact = (term: string, value: string) => {
      facts.append(el(d, "dt", {}, term), el(d, "dd", {}, value));
    };
    fact("Category", detail.category || "Not stated");
    fact("Price", detail.price === null ? "Not stated" : `$${detail.price.toFixed(2)}`);
    if (detail.seller_variant_names.length > 0) {
      fact("Variants", detail.seller_variant_names.join(", "));
    }
    fact("Customer reviews", String(detail.review_count));
    sellerRegion.append(facts);
    if (detail.image_ref) {
      sellerRegion.append(
        el(d, "a", { href: detail.image_ref, id: "original-link" },
          "View the original product page"),
      );
    }

    this.root.replaceChildren(
      nameRegion,
      imageRegion,
      sellerRegion,
      this.buildQaRegion(detail),
    );
  }

  private buildQaRegion(detail: ProductDetail): HTMLElement {
    const d = this.document;
    const region = el(d, "section", { "aria-label": "Questions and answers" });

    const form = el(d, "form", { id: "qa-form" });
    const label = el(d, "label", { for: "qa-input" },
      "Ask about this product (for example: color, shape, or a full question)");
    const input = el(d, "input", {
      id: "qa-input",
      type: "text",
      autocomplete: "off",
      enterkeyhint: "send",
    });
    const submit = el(d, "button", { type: "submit", disabled: "" }, "Ask");
    input.addEventListener("input", () => {
      if (input.value.trim()) {
        submit.removeAttribute("disabled");
      } else {
        submit.setAttribute("disabled", "");
      }
    });
    form.append(label, input, submit);
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submitQuery(input.value);
    });

    const answer = el(d, "div", { id: "answer", "aria-busy": "false" });
    answer.append(el(d, "p", { id: "answer-placeholder" },
      detail.review_count === 0
        ? "This product has no customer reviews yet; answers will use the fallback description."
        : "Ask a question to see what reviews say."));

    const browser = el(d, "details", { id: "browse-reviews" });
    browser.append(el(d, "summary", {}, "Browse all original reviews"));
    const controls = el(d, "div", { role: "group", "aria-label": "Review list filter" });
    for (const filter of ["all", "positive", "negative"] as const) {
      const button = el(d, "button", { type: "button", "data-filter": filter },
        filter === "all" ? "All reviews" : `${filter} reviews`);
      button.addEventListener("click", () => void this.loadReviews(filter));
      controls.append(button);
    }
    browser.append(controls, el(d, "div", { id: "review-browser" }));
    browser.addEventListener("toggle", () => {
      const body = browser.querySelector("#review-browser")!;
      if (browser.hasAttribute("open") && body.childElementCount === 0) {
        void this.loadReviews("all");
      }
    });

    region.append(form, answer, browser);
    return region;
  }

  /** POST the question; one in-flight request at most, newest wins. */
  async submitQuery(raw: string): Promise<void> {
    if (!this.detail || !raw.trim()) return;
    this.inFlight?.abort();
    const controller = new AbortController();
    this.inFlight = controller;

    const answer = this.root.querySelector<HTMLElement>("#answer");
    if (!answer) return;
    answer.setAttribute("aria-busy", "true");
    try {
      const bundle = await this.api.query(this.detail.id, raw, controller.signal);
      if (controller.signal.aborted) return;
      this.renderAnswer(answer, bundle);
      this.cue(); // exactly one cue per completed query; focus stays put
    } catch (error) {
      if (controller.signal.aborted) return;
      this.renderQueryError(answer, error);
    } finally {
      answer.setAttribute("aria-busy", "false");
      if (this.inFlight === controller) this.inFlight = null;
    }
  }

  private renderAnswer(answer: HTMLElement, bundle: AnswerBundle): void {
    const d = this.document;
    answer.replaceChildren(el(d, "h2", {}, "Answer"));
    answer.append(el(d, "p", { id: "summary" }, bundle.summary));

    if (bundle.used_fallback) {
      answer.append(el(d, "p", { id: "fallback" }, bundle.fallback_text ?? ""));
      this.announcer.announce("No review-backed answer; a fallback description is shown.");
      return;
    }
    answer.append(
      this.buildSnippetList("positive", bundle.positive),
      this.buildSnippetList("negative", bundle.negative),
    );
  }

  private buildSnippetList(kind: "positive" | "negative",
                           snippets: SnippetPayload[]): HTMLElement {
    const d = this.document;
    const wrap = el(d, "div", { id: `${kind}-snippets` });
    wrap.append(el(d, "h3", {},
      `${kind === "positive" ? "Positive" : "Negative"} review snippets (${snippets.length})`));
    if (snippets.length === 0) {
      wrap.append(el(d, "p", {}, `No ${kind} review snippets for this question.`));
      return wrap;
    }
    const list = el(d, "ul");
    for (const snippet of snippets) {
      const item = el(d, "li");
      item.append(
        el(d, "span", { class: "snippet-text" }, snippet.text),
        el(d, "span", { class: "snippet-meta" },
          ` (${snippet.helpfulness} helpful votes)`),
      );
      list.append(item);
    }
    wrap.append(list);
    return wrap;
  }

  private renderQueryError(answer: HTMLElement, error: unknown): void {
    const d = this.document;
    let guidance: string;
    if (error instanceof ServiceError && error.body.code === "NO_KEYWORDS") {
      guidance = "That question has no searchable words. Try naming a detail, like color or shape.";
    } else if (error instanceof ServiceError) {
      guidance = `The service reported an error: ${error.body.message}`;
    } else {
      guidance = "The question could not be sent. Check your connection and try again.";
    }
    answer.replaceChildren(
      el(d, "h2", {}, "Answer"),
      el(d, "p", { id: "query-error" }, guidance),
    );
    this.announcer.announce(guidance);
  }

  /** Original full reviews stay reachable, with optional sentiment filter. */
  async loadReviews(filter: "all" | "positive" | "negative"): Promise<void> {
    if (!this.detail) return;
    const body = this.root.querySelector<HTMLElement>("#review-browser");
    if (!body) return;
    let reviews: ReviewRecord[];
    try {
      reviews = await this.api.listReviews(
        this.detail.id, filter === "all" ? undefined : filter);
    } catch {
      this.announcer.announce("The review list could not be loaded.");
      return;
    }
    const d = this.document;
    body.replaceChildren();
    if (reviews.length === 0) {
      body.append(el(d, "p", {}, filter === "all"
        ? "This product has no reviews."
        : `No ${filter} reviews.`));
      return;
    }
    const list = el(d, "ul", { class: "review-list" });
    for (const review of reviews) {
      const item = el(d, "li");
      item.append(
        el(d, "h4", {}, review.title || "(untitled review)"),
        el(d, "p", { class: "review-meta" },
          `${review.rating ?? "unrated"} stars, ${review.helpfulness} helpful votes, `
          + `${review.date}, by ${review.author}, ${review.sentiment}`),
        el(d, "p", { class: "review-content" }, review.content),
      );
      list.append(item);
    }
    body.append(list);
  }
}
