/** Typed client for the backend JSON API. GET-only by design. */

import type {
  DefinitionResponse,
  ExpertProfile,
  FieldsResponse,
  HealthResponse,
  SearchResponse,
  WordcloudResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

export class NotFoundError extends ApiError {}

async function getJson<T>(url: string): Promise<T> {
  const response = await fetch(url, { headers: { Accept: "application/json" } });
  if (!response.ok) {
    let detail = `HTTP ${response.status}`;
    try {
      const body = (await response.json()) as { error?: string };
      if (body.error) detail = body.error;
    } catch {
      // non-JSON error body: keep the status text
    }
    if (response.status === 404) throw new NotFoundError(404, detail);
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(readonly baseUrl: string = "") {}

  search(query: string, limit = 10): Promise<SearchResponse> {
    const params = new URLSearchParams({ q: query, limit: String(limit) });
    return getJson(`${this.baseUrl}/api/search?${params}`);
  }

  expert(id: string): Promise<ExpertProfile> {
    return getJson(`${this.baseUrl}/api/experts/${encodeURIComponent(id)}`);
  }

  fields(): Promise<FieldsResponse> {
    return getJson(`${this.baseUrl}/api/fields`);
  }

  wordcloud(positiveList = false): Promise<WordcloudResponse> {
    const suffix = positiveList ? "?positive_list=true" : "";
    return getJson(`${this.baseUrl}/api/wordcloud${suffix}`);
  }

  definition(term: string): Promise<DefinitionResponse> {
    const params = new URLSearchParams({ term });
    return getJson(`${this.baseUrl}/api/definition?${params}`);
  }

  health(): Promise<HealthResponse> {
    return getJson(`${this.baseUrl}/healthz`);
  }
}
