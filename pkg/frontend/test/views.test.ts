/** Snapshot and traceability checks on fixed fixtures. */

import { describe, expect, it } from "vitest";

import type { SessionDoc } from "../src/types.js";
import {
  renderAllocationBars,
  renderGauge,
  renderSessionView,
  renderTimeline,
} from "../src/views.js";
import { FRONTIER_FIXTURE, freshSession, stepRecordFor } from "./fixtures.js";
import { renderFrontier } from "../src/views.js";

function steppedSession(): SessionDoc {
  const base = freshSession();
  const first = stepRecordFor([0.6, 0.8]);
  const second = stepRecordFor([0.1, 0.3]);
  return {
    ...base,
    risk_weight: [0.1, 0.3],
    status: second.assessment.pleased ? "pleased" : "awaiting_lambda",
    history: [first, second],
  };
}

describe("view snapshots on fixed fixtures", () => {
  it("gauge", () => {
    expect(renderGauge(0.8, 0.5)).toMatchSnapshot();
  });

  it("allocation bars", () => {
    expect(renderAllocationBars([0.55, 0.25, 0.15, 0.05])).toMatchSnapshot();
  });

  it("timeline", () => {
    expect(renderTimeline(steppedSession().history)).toMatchSnapshot();
  });

  it("session view", () => {
    expect(renderSessionView(steppedSession())).toMatchSnapshot();
  });

  it("frontier plot", () => {
    expect(renderFrontier(FRONTIER_FIXTURE, 2)).toMatchSnapshot();
  });
});

describe("numbers on screen trace back to response fields", () => {
  it("session view data attributes come from the session document", () => {
    const session = steppedSession();
    const markup = renderSessionView(session);
    const degrees = [...markup.matchAll(/data-degree="([^"]+)"/g)].map((m) => Number(m[1]));
    for (const degree of degrees) {
      expect(session.history.map((h) => h.assessment.degree)).toContain(degree);
    }
    const allocations = [...markup.matchAll(/data-value="([^"]+)"/g)].map((m) => Number(m[1]));
    expect(allocations).toEqual(session.history.at(-1)!.allocation);
  });

  it("the pleased flag is exactly the server's", () => {
    const session = steppedSession();
    const markup = renderSessionView(session);
    expect(markup).toContain(`data-pleased="${session.history.at(-1)!.assessment.pleased}"`);
  });
});
