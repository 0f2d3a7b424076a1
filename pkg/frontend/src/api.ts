/** Thin typed client for the planner HTTP API. */

import type {
  FrontierReport,
  GreyPair,
  IngestResponse,
  SessionDoc,
} from "./types.js";

export class ApiRequestError extends Error {
  constructor(
    readonly status: number,
    message: string,
    readonly advisory?: string,
  ) {
    super(message);
    this.name = "ApiRequestError";
  }
}

export interface StepPayload {
  risk_weight?: GreyPair;
  positioned?: Record<string, number>;
}

export interface CreateSessionPayload {
  model: string;
  target_floor: number;
  positioned?: Record<string, number>;
  theta_lambda?: number;
}

export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: typeof fetch = fetch,
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method,
      headers: { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const text = await response.text();
    const payload = text ? JSON.parse(text) : null;
    if (!response.ok) {
      const message =
        payload && typeof payload.error === "string"
          ? payload.error
          : `request failed with status ${response.status}`;
      throw new ApiRequestError(response.status, message, payload?.advisory);
    }
    return payload as T;
  }

  ingestModel(document: unknown): Promise<IngestResponse> {
    return this.request("POST", "/models", document);
  }

  createSession(payload: CreateSessionPayload): Promise<SessionDoc> {
    return this.request("POST", "/sessions", payload);
  }

  getSession(sessionId: string): Promise<SessionDoc> {
    return this.request("GET", `/sessions/${sessionId}`);
  }

  stepSession(sessionId: string, payload: StepPayload): Promise<SessionDoc> {
    return this.request("POST", `/sessions/${sessionId}/step`, payload);
  }

  abandonSession(sessionId: string): Promise<SessionDoc> {
    return this.request("POST", `/sessions/${sessionId}/abandon`);
  }

  fetchFrontier(handle: string, theta: number, epsilons: number[]): Promise<FrontierReport> {
    return this.request("POST", `/portfolios/${handle}/frontier`, { theta, epsilons });
  }
}
