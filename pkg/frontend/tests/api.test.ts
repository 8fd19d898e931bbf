import { describe, expect, it } from "vitest";

import { ApiClient, ApiError, FetchLike } from "../src/api.js";

function fakeFetch(status: number, payload: unknown): FetchLike {
  return async () =>
    new Response(JSON.stringify(payload), {
      status,
      headers: { "Content-Type": "application/json" },
    });
}

describe("envelope handling", () => {
  it("unwraps data from ok envelopes", async () => {
    const client = new ApiClient(
      "http://example",
      fakeFetch(200, { ok: true, data: { roots: [], concepts: [] }, error: null }),
    );
    await expect(client.getTree()).resolves.toEqual({ roots: [], concepts: [] });
  });

  it("surfaces the service error message verbatim", async () => {
    const client = new ApiClient(
      "http://example",
      fakeFetch(400, { ok: false, data: null, error: "search requires q= and lang= parameters" }),
    );
    await expect(client.search("", "fr", true)).rejects.toThrowError(
      "search requires q= and lang= parameters",
    );
  });

  it("carries the HTTP status on failures", async () => {
    const client = new ApiClient(
      "http://example",
      fakeFetch(404, { ok: false, data: null, error: "unknown concept: 'x'" }),
    );
    const failure = await client.getConcept("x").catch((error) => error as ApiError);
    expect(failure).toBeInstanceOf(ApiError);
    expect((failure as ApiError).status).toBe(404);
  });

  it("maps network failures to status 0", async () => {
    const client = new ApiClient("http://example", async () => {
      throw new TypeError("fetch failed");
    });
    const failure = await client.getTree().catch((error) => error as ApiError);
    expect((failure as ApiError).status).toBe(0);
    expect((failure as ApiError).message).toBe("service unreachable");
  });

  it("encodes ids and query parameters", async () => {
    const seen: string[] = [];
    const client = new ApiClient("", async (input) => {
      seen.push(input);
      return new Response(JSON.stringify({ ok: true, data: {}, error: null }), { status: 200 });
    });
    await client.getConcept("relais à seuil");
    await client.search("relais à seuil", "fr", false);
    expect(seen[0]).toBe("/api/concepts/relais%20%C3%A0%20seuil");
    expect(seen[1]).toContain("expand=false");
    expect(seen[1]).toContain("relais+%C3%A0+seuil");
  });
});
