/** Pure view rendering: server JSON in, HTML/SVG markup strings out.
 *
 * Every displayed number comes verbatim from a response field (modulo
 * display rounding); scaling below only projects values onto pixels.
 */

import { escapeHtml, fmt, fmtPair, fmtPercent } from "./format.js";
import type {
  FrontierPointDoc,
  FrontierReport,
  SessionDoc,
  StepRecord,
} from "./types.js";

const GAUGE_WIDTH = 320;
const GAUGE_HEIGHT = 46;

/** Horizontal pleased-degree gauge with the acceptance band [floor, 1]. */
export function renderGauge(degree: number, targetFloor: number): string {
  const x = (v: number) => 10 + Math.max(0, Math.min(1, v)) * (GAUGE_WIDTH - 20);
  const bandStart = x(targetFloor);
  const needle = x(degree);
  return [
    `<svg class="degree-gauge" viewBox="0 0 ${GAUGE_WIDTH} ${GAUGE_HEIGHT}" role="img" aria-label="pleased degree">`,
    `<rect class="gauge-track" x="${x(0)}" y="18" width="${x(1) - x(0)}" height="10" rx="5"></rect>`,
    `<rect class="gauge-target" x="${bandStart}" y="18" width="${x(1) - bandStart}" height="10" rx="5"></rect>`,
    `<line class="gauge-needle" x1="${needle}" y1="10" x2="${needle}" y2="36"></line>`,
    `<text class="gauge-label" x="${x(0)}" y="44">0</text>`,
    `<text class="gauge-label gauge-floor" x="${bandStart}" y="12">floor ${fmt(targetFloor)}</text>`,
    `<text class="gauge-label" x="${x(1) - 8}" y="44">1</text>`,
    `<text class="gauge-value" x="${needle + 4}" y="44" data-degree="${degree}">${fmt(degree)}</text>`,
    `</svg>`,
  ].join("");
}

/** Allocation bar chart over x_0..x_n (x_0 is the bank deposit). */
export function renderAllocationBars(allocation: number[]): string {
  const width = 360;
  const height = 150;
  const floor = height - 24;
  const n = allocation.length;
  const band = (width - 20) / Math.max(n, 1);
  const bars = allocation
    .map((value, i) => {
      const h = Math.max(0, Math.min(1, value)) * (floor - 14);
      const xPos = 10 + i * band;
      const label = i === 0 ? "bank" : `x_${i}`;
      return (
        `<rect class="alloc-bar" data-index="${i}" data-value="${value}" ` +
        `x="${xPos + 2}" y="${floor - h}" width="${band - 4}" height="${h}"></rect>` +
        `<text class="alloc-label" x="${xPos + band / 2}" y="${height - 10}" text-anchor="middle">${label}</text>` +
        `<text class="alloc-value" x="${xPos + band / 2}" y="${floor - h - 3}" text-anchor="middle">${fmtPercent(value)}</text>`
      );
    })
    .join("");
  return `<svg class="allocation-chart" viewBox="0 0 ${width} ${height}">${bars}</svg>`;
}

/** History timeline: one entry per step with its weight interval and degree. */
export function renderTimeline(history: StepRecord[]): string {
  if (!history.length) {
    return `<ol class="timeline" data-steps="0"></ol>`;
  }
  const items = history
    .map((record, i) => {
      const cls = record.assessment.pleased ? "timeline-entry pleased" : "timeline-entry";
      return (
        `<li class="${cls}" data-step="${i}" data-degree="${record.assessment.degree}">` +
        `<span class="step-number">${i + 1}</span>` +
        `<span class="step-weight">λ ${fmtPair(record.risk_weight)}</span>` +
        `<span class="step-degree">μ = ${fmt(record.assessment.degree)}</span>` +
        `</li>`
      );
    })
    .join("");
  return `<ol class="timeline" data-steps="${history.length}">${items}</ol>`;
}

export function renderPleasedIndicator(pleased: boolean): string {
  const cls = pleased ? "indicator pleased" : "indicator not-pleased";
  const text = pleased ? "pleased" : "not pleased";
  return `<span class="${cls}" data-pleased="${pleased}">${text}</span>`;
}

/** Full session panel: indicator, gauge, latest allocation, timeline. */
export function renderSessionView(session: SessionDoc, errorText: string | null = null): string {
  const latest = session.history[session.history.length - 1];
  const header =
    `<header class="session-header">` +
    `<h2>session ${escapeHtml(session.session_id)}</h2>` +
    `<span class="session-status" data-status="${session.status}">${session.status}</span>` +
    renderPleasedIndicator(latest ? latest.assessment.pleased : false) +
    `</header>`;
  const gauge = latest
    ? renderGauge(latest.assessment.degree, session.target_floor)
    : `<p class="empty-note">no steps yet; enter a risk weight</p>`;
  const values = latest
    ? `<dl class="assessment-values">` +
      `<dt>critical</dt><dd data-field="critical_value">${fmt(latest.assessment.critical_value)}</dd>` +
      `<dt>positioned</dt><dd data-field="positioned_value">${fmt(latest.assessment.positioned_value)}</dd>` +
      `<dt>ideal</dt><dd data-field="ideal_value">${fmt(latest.assessment.ideal_value)}</dd>` +
      `</dl>`
    : "";
  const allocation = latest ? renderAllocationBars(latest.allocation) : "";
  const error = errorText
    ? `<p class="advisory" role="alert">${escapeHtml(errorText)}</p>`
    : "";
  return (
    `<section class="session-view">` +
    header +
    error +
    gauge +
    values +
    allocation +
    renderTimeline(session.history) +
    `</section>`
  );
}

const PLOT_W = 480;
const PLOT_H = 320;
const MARGIN = 42;

interface Scale {
  x: (risk: number) => number;
  y: (profit: number) => number;
}

function frontierScale(report: FrontierReport): Scale {
  const risks = report.points.map((p) => p.risk).concat([report.ideal.risk]);
  const profits = report.points.map((p) => p.profit).concat([report.ideal.profit]);
  const rMin = Math.min(...risks);
  const rMax = Math.max(...risks);
  const pMin = Math.min(...profits);
  const pMax = Math.max(...profits);
  const rSpan = rMax - rMin || 1;
  const pSpan = pMax - pMin || 1;
  return {
    x: (risk) => MARGIN + ((risk - rMin) / rSpan) * (PLOT_W - 2 * MARGIN),
    y: (profit) => PLOT_H - MARGIN - ((profit - pMin) / pSpan) * (PLOT_H - 2 * MARGIN),
  };
}

function frontierPointMarkup(p: FrontierPointDoc, i: number, scale: Scale, selected: boolean): string {
  const title = `e2 ${fmt(p.epsilon)}: Z1 ${fmt(p.profit)}, Z2 ${fmt(p.risk)}` +
    (p.tradeoff === null ? "" : `, λ12 ${fmt(p.tradeoff)}`);
  const cls = selected ? "frontier-point selected" : "frontier-point";
  return (
    `<circle class="${cls}" data-index="${i}" data-profit="${p.profit}" data-risk="${p.risk}"` +
    ` data-epsilon="${p.epsilon}" data-tradeoff="${p.tradeoff ?? ""}"` +
    ` cx="${scale.x(p.risk)}" cy="${scale.y(p.profit)}" r="5">` +
    `<title>${title}</title></circle>`
  );
}

/** Frontier scatter (risk on x, profit on y) with ideal and compromise marks. */
export function renderFrontier(report: FrontierReport, selectedIndex: number | null = null): string {
  const scale = frontierScale(report);
  const path = report.points
    .map((p, i) => `${i === 0 ? "M" : "L"}${scale.x(p.risk)},${scale.y(p.profit)}`)
    .join(" ");
  const points = report.points
    .map((p, i) => frontierPointMarkup(p, i, scale, i === selectedIndex))
    .join("");
  const ix = scale.x(report.ideal.risk);
  const iy = scale.y(report.ideal.profit);
  const ideal =
    `<g class="ideal-marker" data-profit="${report.ideal.profit}" data-risk="${report.ideal.risk}">` +
    `<path d="M${ix - 6},${iy} L${ix},${iy - 6} L${ix + 6},${iy} L${ix},${iy + 6} Z"></path>` +
    `<title>ideal: Z1 ${fmt(report.ideal.profit)}, Z2 ${fmt(report.ideal.risk)}</title></g>`;
  const cx = scale.x(report.compromise.risk);
  const cy = scale.y(report.compromise.profit);
  const compromise =
    `<circle class="compromise-marker" data-profit="${report.compromise.profit}"` +
    ` data-risk="${report.compromise.risk}" cx="${cx}" cy="${cy}" r="9">` +
    `<title>compromise: Z1 ${fmt(report.compromise.profit)}, Z2 ${fmt(report.compromise.risk)}</title></circle>`;
  return (
    `<svg class="frontier-plot" viewBox="0 0 ${PLOT_W} ${PLOT_H}" data-points="${report.points.length}">` +
    `<text class="axis-label" x="${PLOT_W / 2}" y="${PLOT_H - 6}" text-anchor="middle">risk Z2</text>` +
    `<text class="axis-label" x="12" y="${PLOT_H / 2}" transform="rotate(-90 12 ${PLOT_H / 2})" text-anchor="middle">profit Z1</text>` +
    `<path class="frontier-path" d="${path}"></path>` +
    points +
    ideal +
    compromise +
    `</svg>`
  );
}

/** Allocation detail table for a clicked frontier point. */
export function renderAllocationTable(point: FrontierPointDoc): string {
  const rows = point.allocation
    .map((value, i) => {
      const label = i === 0 ? "bank" : `x_${i}`;
      return `<tr><td>${label}</td><td data-alloc="${i}">${fmtPercent(value)}</td></tr>`;
    })
    .join("");
  return (
    `<table class="allocation-table" data-epsilon="${point.epsilon}">` +
    `<caption>allocation at e2 = ${fmt(point.epsilon)}</caption>` +
    `<thead><tr><th>asset</th><th>share</th></tr></thead>` +
    `<tbody>${rows}</tbody></table>`
  );
}
