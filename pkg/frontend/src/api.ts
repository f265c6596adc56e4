// Thin client for the qmut HTTP service; the fetch function is injectable so
// tests can run against fixtures.

import type {
  ApiErrorBody,
  DynamicsResponse,
  ExplorationReport,
  QuiverDocument,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public code: string,
    message: string,
    public status: number,
  ) {
    super(message);
  }
}

export type FetchLike = (url: string, init: RequestInit) => Promise<Response>;

export class QmutClient {
  constructor(
    private base: string = "http://127.0.0.1:8642",
    private fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const resp = await this.fetchFn(`${this.base}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!resp.ok) {
      let code = "HttpError";
      let message = `${resp.status}`;
      try {
        const parsed = (await resp.json()) as ApiErrorBody;
        code = parsed.error.code;
        message = parsed.error.message;
      } catch {
        /* non-JSON error body */
      }
      throw new ApiError(code, message, resp.status);
    }
    return (await resp.json()) as T;
  }

  async mutate(quiver: QuiverDocument, vertex: string): Promise<QuiverDocument> {
    const out = await this.post<{ quiver: QuiverDocument }>("/api/mutate", {
      quiver,
      vertex,
    });
    return out.quiver;
  }

  async mutateSeq(quiver: QuiverDocument, steps: string[]): Promise<QuiverDocument> {
    const out = await this.post<{ quiver: QuiverDocument }>("/api/mutate-seq", {
      quiver,
      steps,
    });
    return out.quiver;
  }

  async canonicalKey(quiver: QuiverDocument): Promise<string> {
    const out = await this.post<{ key_hex: string }>("/api/canonical", { quiver });
    return out.key_hex;
  }

  async explore(
    quiver: QuiverDocument,
    predicate: Record<string, unknown>,
    limits?: Record<string, unknown>,
    dedup?: "labeled" | "isomorphism",
  ): Promise<ExplorationReport> {
    return this.post<ExplorationReport>("/api/explore", {
      quiver,
      predicate,
      limits,
      dedup,
    });
  }

  async dynamics(
    quiver: QuiverDocument,
    c: string,
    d: string,
    steps: number,
  ): Promise<DynamicsResponse> {
    return this.post<DynamicsResponse>("/api/dynamics", { quiver, c, d, steps });
  }

  async gadgetSubsetSum(values: number[]): Promise<QuiverDocument> {
    const out = await this.post<{ quiver: QuiverDocument }>(
      "/api/gadget/subset-sum",
      { values },
    );
    return out.quiver;
  }

  async gadgetX3C(n: number, triples: number[][]): Promise<QuiverDocument> {
    const out = await this.post<{ quiver: QuiverDocument }>("/api/gadget/x3c", {
      n,
      triples,
    });
    return out.quiver;
  }
}
