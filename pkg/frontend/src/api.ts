/**
 * Typed client for the concept service. Every response is an envelope
 * {ok, data, error} with exactly one of data/error populated; failures are
 * surfaced as ApiError carrying the HTTP status and the service's message
 * verbatim. This module is the only place that talks to the network.
 */

export interface Envelope<T> {
  ok: boolean;
  data: T | null;
  error: string | null;
}

export interface TreeNode {
  id: string;
  genus: string | null;
  denominations: Record<string, string>;
  children: string[];
}

export interface ConceptTree {
  roots: string[];
  concepts: TreeNode[];
}

export interface IntentCharacter {
  id: string;
  kind: "essential" | "descriptive";
  labels: Record<string, string>;
}

export interface UsageTerm {
  form: string;
  language: string;
  variant_kind: string | null;
}

export interface ConceptDetail {
  id: string;
  genus: string | null;
  intent: IntentCharacter[];
  differentia: string[];
  denominations: Record<string, string>;
  usage_terms: UsageTerm[];
  document_count: number;
}

export interface SearchHit {
  doc: string;
  language: string;
  score: number;
}

export interface SearchData {
  matched_concepts: string[];
  expanded_concepts: string[];
  hits: SearchHit[];
}

export interface DocumentData {
  id: string;
  language: string;
  title: string;
  body: string;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(this.baseUrl + path, init);
    } catch {
      throw new ApiError(0, "service unreachable");
    }
    let envelope: Envelope<T>;
    try {
      envelope = (await response.json()) as Envelope<T>;
    } catch {
      throw new ApiError(response.status, "malformed response from service");
    }
    if (!envelope.ok || envelope.data === null) {
      throw new ApiError(response.status, envelope.error ?? "unknown service error");
    }
    return envelope.data;
  }

  getTree(): Promise<ConceptTree> {
    return this.request<ConceptTree>("/api/concepts");
  }

  getConcept(id: string): Promise<ConceptDetail> {
    return this.request<ConceptDetail>(`/api/concepts/${encodeURIComponent(id)}`);
  }

  search(query: string, language: string, expand: boolean): Promise<SearchData> {
    const params = new URLSearchParams({
      q: query,
      lang: language,
      expand: String(expand),
    });
    return this.request<SearchData>(`/api/search?${params.toString()}`);
  }

  getDocument(id: string): Promise<DocumentData> {
    return this.request<DocumentData>(`/api/documents/${encodeURIComponent(id)}`);
  }
}
