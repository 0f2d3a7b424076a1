/** Session controller: validates input, talks to the API, renders state.
 *
 * State is exactly the last server response; nothing is recomputed
 * client-side.  Invalid interval input is rejected before any request.
 */

import { ApiClient, ApiRequestError } from "./api.js";
import type { CreateSessionPayload } from "./api.js";
import type { SessionDoc } from "./types.js";
import { parseInterval, parseRiskWeight } from "./validate.js";
import { renderSessionView } from "./views.js";

export interface StepInput {
  riskWeight?: { lower: string; upper: string };
  positioned?: Record<string, number>;
}

export interface SubmitOutcome {
  ok: boolean;
  message?: string;
}

export class SessionController {
  session: SessionDoc | null = null;
  lastError: string | null = null;

  constructor(private readonly api: ApiClient) {}

  async create(payload: CreateSessionPayload): Promise<SessionDoc> {
    this.session = await this.api.createSession(payload);
    this.lastError = null;
    return this.session;
  }

  /** Reconnect to an existing session; the full history comes back. */
  async connect(sessionId: string): Promise<SessionDoc> {
    this.session = await this.api.getSession(sessionId);
    this.lastError = null;
    return this.session;
  }

  async submitStep(input: StepInput): Promise<SubmitOutcome> {
    if (!this.session) {
      return { ok: false, message: "no session connected" };
    }
    if (!input.riskWeight && !input.positioned) {
      return { ok: false, message: "enter a risk weight or new positions" };
    }
    const payload: { risk_weight?: [number, number]; positioned?: Record<string, number> } = {};
    if (input.riskWeight) {
      const check =
        this.session.kind === "portfolio"
          ? parseRiskWeight(input.riskWeight.lower, input.riskWeight.upper)
          : parseInterval(input.riskWeight.lower, input.riskWeight.upper);
      if (!check.ok) {
        this.lastError = check.message;
        return { ok: false, message: check.message };
      }
      payload.risk_weight = check.value;
    }
    if (input.positioned) {
      payload.positioned = input.positioned;
    }
    try {
      this.session = await this.api.stepSession(this.session.session_id, payload);
      this.lastError = null;
      return { ok: true };
    } catch (error) {
      if (error instanceof ApiRequestError) {
        this.lastError = error.advisory ? `${error.message} (${error.advisory})` : error.message;
        return { ok: false, message: this.lastError };
      }
      throw error;
    }
  }

  render(): string {
    if (!this.session) {
      return `<section class="session-view empty"><p>no session</p></section>`;
    }
    return renderSessionView(this.session, this.lastError);
  }
}
