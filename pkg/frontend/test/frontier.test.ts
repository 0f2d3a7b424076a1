/** Frontier-view acceptance: ten fixture points, ideal/compromise markers. */

import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { FrontierExplorer, epsilonSweep } from "../src/frontier.js";
import { renderFrontier } from "../src/views.js";
import { FRONTIER_FIXTURE } from "./fixtures.js";
import { FixtureServer } from "./fixture-server.js";

function attr(markup: string, selectorClass: string, name: string): string[] {
  const pattern = new RegExp(`class="[^"]*${selectorClass}[^"]*"[^>]*${name}="([^"]*)"`, "g");
  const out: string[] = [];
  for (const match of markup.matchAll(pattern)) {
    out.push(match[1]!);
  }
  return out;
}

describe("frontier view from the fixture report", () => {
  it("renders all ten points with their server-reported coordinates", () => {
    const markup = renderFrontier(FRONTIER_FIXTURE);
    expect(markup).toContain('data-points="10"');
    expect(markup.match(/class="frontier-point/g)).toHaveLength(10);
    const profits = attr(markup, "frontier-point", "data-profit").map(Number);
    expect(profits).toEqual(FRONTIER_FIXTURE.points.map((p) => p.profit));
    const risks = attr(markup, "frontier-point", "data-risk").map(Number);
    expect(risks).toEqual(FRONTIER_FIXTURE.points.map((p) => p.risk));
  });

  it("marks the ideal and compromise with the fixture's fields", () => {
    const markup = renderFrontier(FRONTIER_FIXTURE);
    expect(markup).toContain(
      `class="ideal-marker" data-profit="${FRONTIER_FIXTURE.ideal.profit}" data-risk="${FRONTIER_FIXTURE.ideal.risk}"`,
    );
    expect(markup).toContain(`class="compromise-marker" data-profit="${FRONTIER_FIXTURE.compromise.profit}"`);
    expect(markup).toContain(`data-risk="${FRONTIER_FIXTURE.compromise.risk}"`);
  });

  it("carries the trade-off rate into each point's hover title", () => {
    const markup = renderFrontier(FRONTIER_FIXTURE);
    for (const point of FRONTIER_FIXTURE.points.slice(1)) {
      expect(markup).toContain(`data-tradeoff="${point.tradeoff}"`);
    }
    expect(markup).toContain("λ12");
    // the first point has no predecessor, so no trade-off in its title
    const first = markup.slice(markup.indexOf('data-index="0"'), markup.indexOf('data-index="1"'));
    expect(first).not.toContain("λ12");
  });
});

describe("frontier explorer against the fixture server", () => {
  let server: FixtureServer;
  let explorer: FrontierExplorer;

  beforeEach(async () => {
    server = new FixtureServer();
    const baseUrl = await server.start();
    explorer = new FrontierExplorer(new ApiClient(baseUrl));
  });

  afterEach(async () => {
    await server.stop();
  });

  it("requests the sweep and renders the returned report", async () => {
    const report = await explorer.explore("fix-model-1", 0, 90_000, 10);
    expect(report.points).toHaveLength(10);
    const request = server.requests.at(-1)!;
    expect(request.path).toBe("/portfolios/fix-model-1/frontier");
    expect((request.body as { epsilons: number[] }).epsilons).toHaveLength(10);
    expect(explorer.render()).toContain('data-points="10"');
  });

  it("clicking a point shows its allocation table", async () => {
    await explorer.explore("fix-model-1", 0, 90_000, 10);
    explorer.select(3);
    const markup = explorer.render();
    expect(markup).toContain("allocation-table");
    expect(markup).toContain(`data-epsilon="${FRONTIER_FIXTURE.points[3]!.epsilon}"`);
    const rows = markup.match(/data-alloc="/g);
    expect(rows).toHaveLength(FRONTIER_FIXTURE.points[3]!.allocation.length);
  });
});

describe("epsilon sweep construction", () => {
  it("spaces the requested caps evenly", () => {
    expect(epsilonSweep(0, 90, 10)).toEqual([0, 10, 20, 30, 40, 50, 60, 70, 80, 90]);
    expect(epsilonSweep(5, 5, 1)).toEqual([5]);
  });

  it("rejects bad ranges", () => {
    expect(() => epsilonSweep(-1, 10, 5)).toThrow();
    expect(() => epsilonSweep(10, 0, 5)).toThrow();
    expect(() => epsilonSweep(0, 10, 0)).toThrow();
  });
});
