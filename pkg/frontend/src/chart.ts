/** SVG fan chart for simulation results: one panel per index, the mean
 * line over a 5-95% quantile band, up to two overlaid results (current
 * vs pinned). Pure string builder, so identical inputs render identical
 * markup.
 */

import type { IndexName, SimResponse } from "./types";

export interface ChartInput {
  label: string;
  result: SimResponse;
}

export const INDEX_ORDER: IndexName[] = ["E", "S", "T"];

export const INDEX_TITLES: Record<IndexName, string> = {
  E: "Economic Growth",
  S: "Social Well-being",
  T: "Technology Advancement",
};

const SERIES_COLORS = ["#1f77b4", "#d62728"];
const BAND_OPACITY = "0.18";

const WIDTH = 720;
const PANEL_H = 190;
const LEGEND_H = 28;
const MARGIN = { left: 56, right: 16, top: 30, bottom: 30 };

const px = (v: number): string => v.toFixed(2);

interface Domain {
  lo: number;
  hi: number;
}

function valueDomain(inputs: ChartInput[], index: IndexName): Domain {
  let lo = 0;
  let hi = 1e-9;
  for (const { result } of inputs) {
    const s = result.stats[index];
    for (const arr of [s.q05, s.q95, s.mean]) {
      for (const v of arr) {
        if (v < lo) lo = v;
        if (v > hi) hi = v;
      }
    }
  }
  return { lo, hi };
}

function scale(v: number, d: Domain, outLo: number, outHi: number): number {
  return outLo + ((v - d.lo) / (d.hi - d.lo)) * (outHi - outLo);
}

function panel(inputs: ChartInput[], index: IndexName, yOffset: number): string {
  const xDom: Domain = {
    lo: inputs[0].result.times[0],
    hi: inputs[0].result.times[inputs[0].result.times.length - 1],
  };
  const yDom = valueDomain(inputs, index);
  const plotTop = yOffset + MARGIN.top;
  const plotBottom = yOffset + PANEL_H - MARGIN.bottom;
  const plotLeft = MARGIN.left;
  const plotRight = WIDTH - MARGIN.right;
  const X = (t: number) => scale(t, xDom, plotLeft, plotRight);
  const Y = (v: number) => scale(v, yDom, plotBottom, plotTop);

  const parts: string[] = [];
  parts.push(
    `<text class="panel-title" x="${px(plotLeft)}" y="${px(yOffset + 18)}">` +
      `${INDEX_TITLES[index]}</text>`
  );
  parts.push(
    `<rect class="panel-frame" x="${px(plotLeft)}" y="${px(plotTop)}" ` +
      `width="${px(plotRight - plotLeft)}" height="${px(plotBottom - plotTop)}"/>`
  );
  inputs.forEach(({ result }, i) => {
    const color = SERIES_COLORS[i % SERIES_COLORS.length];
    const s = result.stats[index];
    const t = result.times;
    // band vertices: q05 forward then q95 backward, exactly as delivered
    const band: string[] = [];
    for (let j = 0; j < t.length; j++) band.push(`${px(X(t[j]))},${px(Y(s.q05[j]))}`);
    for (let j = t.length - 1; j >= 0; j--) band.push(`${px(X(t[j]))},${px(Y(s.q95[j]))}`);
    parts.push(
      `<polygon class="band" fill="${color}" fill-opacity="${BAND_OPACITY}" ` +
        `stroke="none" points="${band.join(" ")}"/>`
    );
    const mean = t.map((tv, j) => `${px(X(tv))},${px(Y(s.mean[j]))}`);
    parts.push(
      `<polyline class="mean" fill="none" stroke="${color}" stroke-width="1.5" ` +
        `points="${mean.join(" ")}"/>`
    );
  });
  // axis labels and extremes
  parts.push(
    `<text class="axis-label" x="${px((plotLeft + plotRight) / 2)}" ` +
      `y="${px(plotBottom + 22)}" text-anchor="middle">time</text>`
  );
  parts.push(
    `<text class="tick" x="${px(plotLeft)}" y="${px(plotBottom + 14)}">` +
      `${xDom.lo}</text>`
  );
  parts.push(
    `<text class="tick" x="${px(plotRight)}" y="${px(plotBottom + 14)}" ` +
      `text-anchor="end">${xDom.hi}</text>`
  );
  parts.push(
    `<text class="tick" x="${px(plotLeft - 6)}" y="${px(plotTop + 4)}" ` +
      `text-anchor="end">${yDom.hi.toFixed(2)}</text>`
  );
  parts.push(
    `<text class="tick" x="${px(plotLeft - 6)}" y="${px(plotBottom + 4)}" ` +
      `text-anchor="end">${yDom.lo.toFixed(2)}</text>`
  );
  return parts.join("\n");
}

function legend(inputs: ChartInput[]): string {
  const parts: string[] = [];
  let x = MARGIN.left;
  inputs.forEach(({ label, result }, i) => {
    const color = SERIES_COLORS[i % SERIES_COLORS.length];
    const runs = `${result.n_runs} run${result.n_runs === 1 ? "" : "s"}`;
    const text = `${label} (${runs}, seed ${result.base_seed})`;
    parts.push(`<rect class="swatch" x="${px(x)}" y="8" width="12" height="12" fill="${color}"/>`);
    parts.push(`<text class="legend" x="${px(x + 18)}" y="18">${escapeXml(text)}</text>`);
    x += 18 + 7 * text.length + 24;
  });
  return parts.join("\n");
}

function escapeXml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Render up to two results into a stacked three-panel SVG string. */
export function renderChart(inputs: ChartInput[]): string {
  const height = LEGEND_H + INDEX_ORDER.length * PANEL_H;
  const head =
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${WIDTH} ${height}" ` +
    `width="${WIDTH}" height="${height}" role="img">`;
  if (inputs.length === 0) {
    return (
      `${head}\n<text class="empty" x="${WIDTH / 2}" y="${height / 2}" ` +
      `text-anchor="middle">no data</text>\n</svg>`
    );
  }
  const body = INDEX_ORDER.map((index, i) =>
    panel(inputs, index, LEGEND_H + i * PANEL_H)
  );
  return [head, legend(inputs), ...body, "</svg>"].join("\n");
}
