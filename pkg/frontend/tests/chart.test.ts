import { describe, expect, it } from "vitest";

import { INDEX_TITLES, renderChart } from "../src/chart";
import type { SimResponse } from "../src/types";
import simulateFixture from "./fixtures/simulate.json";

const fixture = simulateFixture as SimResponse;

function polylinePoints(svg: string): number[] {
  const lengths: number[] = [];
  for (const match of svg.matchAll(/<polyline[^>]*points="([^"]*)"/g)) {
    lengths.push(match[1].trim().split(/\s+/).length);
  }
  return lengths;
}

function polygonPoints(svg: string): number[] {
  const lengths: number[] = [];
  for (const match of svg.matchAll(/<polygon[^>]*points="([^"]*)"/g)) {
    lengths.push(match[1].trim().split(/\s+/).length);
  }
  return lengths;
}

function legendLabels(svg: string): string[] {
  return [...svg.matchAll(/<text class="legend"[^>]*>([^<]*)<\/text>/g)].map(
    (m) => m[1]
  );
}

describe("chart determinism against the mocked simulate fixture", () => {
  const input = [{ label: "Current", result: fixture }];

  it("two renders produce identical markup", () => {
    expect(renderChart(input)).toBe(renderChart(input));
  });

  it("every mean series has exactly the fixture's point count", () => {
    const first = renderChart(input);
    const second = renderChart(input);
    for (const svg of [first, second]) {
      expect(polylinePoints(svg)).toEqual([
        fixture.times.length,
        fixture.times.length,
        fixture.times.length,
      ]);
    }
  });

  it("every band traces the fixture forward and back", () => {
    const svg = renderChart(input);
    expect(polygonPoints(svg)).toEqual([
      2 * fixture.times.length,
      2 * fixture.times.length,
      2 * fixture.times.length,
    ]);
  });

  it("legend and panel titles are stable across renders", () => {
    const first = renderChart(input);
    const second = renderChart(input);
    const expected = [`Current (${fixture.n_runs} runs, seed ${fixture.base_seed})`];
    expect(legendLabels(first)).toEqual(expected);
    expect(legendLabels(second)).toEqual(expected);
    for (const title of Object.values(INDEX_TITLES)) {
      expect(first).toContain(title);
      expect(second).toContain(title);
    }
  });

  it("labels the x axis as time", () => {
    expect(renderChart(input)).toContain(">time</text>");
  });
});

describe("chart with a pinned comparison", () => {
  const two = [
    { label: "Current", result: fixture },
    { label: "pinned: Optimistic Future", result: fixture },
  ];

  it("renders one mean line and one band per series per panel", () => {
    const svg = renderChart(two);
    expect(polylinePoints(svg)).toHaveLength(6);
    expect(polygonPoints(svg)).toHaveLength(6);
  });

  it("lists both series in the legend", () => {
    const labels = legendLabels(renderChart(two));
    expect(labels[0]).toContain("Current");
    expect(labels[1]).toContain("pinned: Optimistic Future");
  });
});

describe("chart empty state", () => {
  it("renders a no-data placeholder", () => {
    const svg = renderChart([]);
    expect(svg).toContain("no data");
    expect(polylinePoints(svg)).toHaveLength(0);
  });
});
