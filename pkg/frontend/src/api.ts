import type { Analysis, CreateSessionRequest, PublicState, Role, GraphSpec } from "./types.js";

/** Service rejections carry the HTTP status and the server's message. */
export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail);
    this.name = "ApiError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin typed wrapper over the five session endpoints. */
export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  async createSession(graph: GraphSpec, role: Role): Promise<PublicState> {
    const body: CreateSessionRequest = { graph, human_role: role };
    return this.request<PublicState>("POST", "/sessions", body);
  }

  async getSession(id: string): Promise<PublicState> {
    return this.request<PublicState>("GET", `/sessions/${id}`);
  }

  async submitMove(id: string, vertex: number): Promise<PublicState> {
    return this.request<PublicState>("POST", `/sessions/${id}/moves`, { vertex });
  }

  async getAnalysis(id: string): Promise<Analysis> {
    return this.request<Analysis>("GET", `/sessions/${id}/analysis`);
  }

  async deleteSession(id: string): Promise<void> {
    await this.request<void>("DELETE", `/sessions/${id}`);
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { "content-type": "application/json" } };
    if (body !== undefined) init.body = JSON.stringify(body);
    const response = await this.fetchImpl(this.base + path, init);
    if (!response.ok) {
      let detail = `${response.status}`;
      try {
        const parsed = (await response.json()) as { detail?: string };
        if (parsed.detail) detail = parsed.detail;
      } catch {
        /* non-JSON error body; keep the status text */
      }
      throw new ApiError(response.status, detail);
    }
    if (response.status === 204) return undefined as T;
    return (await response.json()) as T;
  }
}
