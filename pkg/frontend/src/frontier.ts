/** Frontier explorer: request a sweep, plot it, inspect a point's allocation. */

import { ApiClient } from "./api.js";
import type { FrontierReport } from "./types.js";
import { renderAllocationTable, renderFrontier } from "./views.js";

/** Evenly spaced risk caps for the sweep request (parameter entry, not math). */
export function epsilonSweep(min: number, max: number, steps: number): number[] {
  if (!(steps >= 1) || !(max >= min) || min < 0) {
    throw new Error("sweep needs min >= 0, max >= min and at least one step");
  }
  if (steps === 1) return [min];
  const out: number[] = [];
  for (let i = 0; i < steps; i++) {
    out.push(min + ((max - min) * i) / (steps - 1));
  }
  return out;
}

export class FrontierExplorer {
  report: FrontierReport | null = null;
  selectedIndex: number | null = null;

  constructor(private readonly api: ApiClient) {}

  async explore(handle: string, min: number, max: number, steps: number, theta = 0.5): Promise<FrontierReport> {
    this.report = await this.api.fetchFrontier(handle, theta, epsilonSweep(min, max, steps));
    this.selectedIndex = null;
    return this.report;
  }

  select(index: number): void {
    if (!this.report || index < 0 || index >= this.report.points.length) {
      this.selectedIndex = null;
      return;
    }
    this.selectedIndex = index;
  }

  render(): string {
    if (!this.report) {
      return `<section class="frontier-view empty"><p>no frontier loaded</p></section>`;
    }
    if (!this.report.points.length) {
      return `<section class="frontier-view empty"><p class="empty-note">frontier is empty</p></section>`;
    }
    const plot = renderFrontier(this.report, this.selectedIndex);
    const detail =
      this.selectedIndex !== null && this.report.points[this.selectedIndex]
        ? renderAllocationTable(this.report.points[this.selectedIndex]!)
        : "";
    return `<section class="frontier-view">${plot}${detail}</section>`;
  }
}
