/** Canned API payloads used by the fixture server and snapshot tests. */

import type { FrontierReport, SessionDoc, StepRecord } from "../src/types.js";

export const TARGET_FLOOR = 0.5;

export function freshSession(): SessionDoc {
  return {
    session_id: "fix-session-1",
    model: "fix-model-1",
    kind: "portfolio",
    target_floor: TARGET_FLOOR,
    positioned: { theta: 0.5 },
    theta_lambda: 0.5,
    risk_weight: null,
    status: "awaiting_lambda",
    history: [],
  };
}

/** Deterministic canned grading: cautious weights please the analyst. */
export function degreeFor(weight: [number, number]): number {
  const midpoint = (weight[0] + weight[1]) / 2;
  return Number((1 - midpoint).toFixed(4));
}

export function stepRecordFor(weight: [number, number]): StepRecord {
  const degree = degreeFor(weight);
  return {
    risk_weight: weight,
    positioned: { theta: 0.5 },
    assessment: {
      ideal_value: 0.25,
      critical_value: 0.01,
      positioned_value: 0.1,
      degree,
      target_floor: TARGET_FLOOR,
      pleased: degree >= TARGET_FLOOR,
    },
    allocation: [0.55, 0.25, 0.15, 0.05],
    risk_level: 0.021,
  };
}

/** Ten-point frontier with the ideal and a mid-sweep compromise. */
export const FRONTIER_FIXTURE: FrontierReport = {
  mode: "frontier",
  handle: "fix-model-1",
  points: Array.from({ length: 10 }, (_, i) => ({
    epsilon: i * 10_000,
    profit: 25_000 + 16_000 * i - 450 * i * i,
    risk: i * 9_200,
    tradeoff: i === 0 ? null : Number((-(16_000 - 450 * (2 * i - 1)) / 9_200).toFixed(6)),
    allocation: [Math.max(0, 1 - 0.1 * i), Math.min(0.6, 0.06 * i), Math.min(0.4, 0.04 * i), 0],
  })),
  ideal: { profit: 25_000 + 16_000 * 9 - 450 * 81, risk: 0 },
  compromise: {
    epsilon: 50_000,
    profit: 25_000 + 16_000 * 5 - 450 * 25,
    risk: 46_000,
    allocation: [0.5, 0.3, 0.2, 0],
  },
  csv: "e2,Z1,Z2,tradeoff,x_0,x_1,x_2,x_3\n",
};
