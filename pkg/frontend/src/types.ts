/** Response shapes of the query service. Field names match the wire format. */

export interface ProductSummary {
  id: string;
  title: string;
  category: string;
  review_count: number;
}

export interface ProductDetail {
  id: string;
  title: string;
  category: string;
  price: number | null;
  seller_variant_names: string[];
  original_alt: string | null;
  image_ref: string | null;
  review_count: number;
  alt_text: string;
}

export interface SnippetPayload {
  text: string;
  review_id: string;
  rank: number;
  tier: number;
  helpfulness: number;
}

export interface AnswerBundle {
  summary: string;
  positive: SnippetPayload[];
  negative: SnippetPayload[];
  used_fallback: boolean;
  fallback_text: string | null;
  generated_at: string;
}

export interface ReviewRecord {
  review_id: string;
  product_id: string;
  title: string;
  content: string;
  rating: number | null;
  helpfulness: number;
  date: string;
  author: string;
  sentiment: "positive" | "negative";
}

export interface ApiError {
  code: "NOT_FOUND" | "BAD_REQUEST" | "NO_KEYWORDS" | "INTERNAL";
  message: string;
}
