/** Client-side checks for interval widgets: bad input never leaves the form. */

import type { GreyPair } from "./types.js";

export type IntervalCheck =
  | { ok: true; value: GreyPair }
  | { ok: false; message: string };

export interface IntervalBounds {
  min?: number;
  max?: number;
}

export function parseInterval(
  lowerText: string,
  upperText: string,
  bounds: IntervalBounds = {},
): IntervalCheck {
  const lower = Number(lowerText.trim());
  const upper = Number(upperText.trim());
  if (lowerText.trim() === "" || upperText.trim() === "" || Number.isNaN(lower) || Number.isNaN(upper)) {
    return { ok: false, message: "both interval bounds must be numbers" };
  }
  if (lower > upper) {
    return { ok: false, message: `lower bound ${lower} exceeds upper bound ${upper}` };
  }
  if (bounds.min !== undefined && lower < bounds.min) {
    return { ok: false, message: `lower bound ${lower} is below ${bounds.min}` };
  }
  if (bounds.max !== undefined && upper > bounds.max) {
    return { ok: false, message: `upper bound ${upper} is above ${bounds.max}` };
  }
  return { ok: true, value: [lower, upper] };
}

/** Risk weights live inside [0, 1]. */
export function parseRiskWeight(lowerText: string, upperText: string): IntervalCheck {
  return parseInterval(lowerText, upperText, { min: 0, max: 1 });
}
