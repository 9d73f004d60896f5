/** Pure HTML builders for the topics and matrix views. */

import type { MatrixPayload, TopicsPayload } from "./types";

const TOPIC_COLORS = [
  "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
];

function escapeHtml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Per-year topic weights as a small multi-line SVG; "no data" when empty. */
export function renderTrendChart(payload: TopicsPayload): string {
  const { years, weights } = payload.trends;
  const w = 640;
  const h = 180;
  const head =
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${w} ${h}" ` +
    `width="${w}" height="${h}" role="img">`;
  if (years.length === 0) {
    return (
      `${head}<text class="empty" x="${w / 2}" y="${h / 2}" ` +
      `text-anchor="middle">no data</text></svg>`
    );
  }
  const left = 40;
  const right = w - 16;
  const top = 12;
  const bottom = h - 24;
  let hi = 1e-9;
  for (const row of weights) for (const v of row) if (v > hi) hi = v;
  const span = Math.max(years[years.length - 1] - years[0], 1);
  const X = (year: number) => left + ((year - years[0]) / span) * (right - left);
  const Y = (v: number) => bottom - (v / hi) * (bottom - top);
  const lines = payload.topics.map((t, k) => {
    const pts = years
      .map((year, i) => `${X(year).toFixed(2)},${Y(weights[i][k]).toFixed(2)}`)
      .join(" ");
    const color = TOPIC_COLORS[k % TOPIC_COLORS.length];
    return `<polyline class="trend" fill="none" stroke="${color}" points="${pts}"/>`;
  });
  const ticks =
    `<text class="tick" x="${left}" y="${h - 8}">${years[0]}</text>` +
    `<text class="tick" x="${right}" y="${h - 8}" text-anchor="end">` +
    `${years[years.length - 1]}</text>`;
  return [head, ...lines, ticks, "</svg>"].join("\n");
}

export function renderTopicsView(payload: TopicsPayload): string {
  const rows = payload.topics
    .map((t, k) => {
      const color = TOPIC_COLORS[k % TOPIC_COLORS.length];
      return (
        `<li><span class="swatch" style="background:${color}"></span>` +
        `<strong>topic ${t.topic}</strong> ` +
        `<span class="categories">[${t.categories.map(escapeHtml).join(", ")}]</span> ` +
        `${t.top_words.map(escapeHtml).join(" ")}</li>`
      );
    })
    .join("\n");
  return (
    `<p>${payload.n_docs} documents modeled</p>\n<ul class="topics">\n${rows}\n</ul>\n` +
    `<h3>Topic weight by year</h3>\n${renderTrendChart(payload)}`
  );
}

export function renderMatrixView(payload: MatrixPayload): string {
  const rows = payload.factors
    .map((f) => {
      const rel = payload.relevance[f.name] ?? "";
      const cls = rel === "Critical" ? ' class="critical"' : "";
      return (
        `<tr${cls}><td>${escapeHtml(f.name)}</td>` +
        `<td>${escapeHtml(f.impact)}</td><td>${escapeHtml(f.uncertainty)}</td>` +
        `<td><span class="badge badge-${rel.toLowerCase()}">${rel}</span></td>` +
        `<td>${escapeHtml(f.implications)}</td><td>${escapeHtml(f.strategies)}</td></tr>`
      );
    })
    .join("\n");
  return (
    `<table class="matrix">\n<thead><tr><th>Factor</th><th>Impact</th>` +
    `<th>Uncertainty</th><th>Relevance</th><th>Implications</th>` +
    `<th>Strategies</th></tr></thead>\n<tbody>\n${rows}\n</tbody>\n</table>`
  );
}
