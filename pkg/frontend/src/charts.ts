// Pure SVG builders. They format and place numbers; they never derive them.

import type { GaugeReference } from './viewmodel.js';

const XMLNS = 'http://www.w3.org/2000/svg';

function esc(text: string): string {
  return text.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;');
}

export function fmtMoney(value: number): string {
  const abs = Math.abs(value);
  if (abs >= 1e9) return `${(value / 1e9).toFixed(2)}bn`;
  if (abs >= 1e6) return `${(value / 1e6).toFixed(1)}M`;
  if (abs >= 1e3) return `${(value / 1e3).toFixed(1)}k`;
  return value.toFixed(2);
}

/** Contribution-margin waterfall: baseline bar plus one delta bar per lever. */
export function waterfallSvg(
  steps: Array<{ lever: string; delta: number }>,
  width = 560,
  height = 240,
): string {
  const margin = { top: 16, right: 8, bottom: 42, left: 8 };
  const innerW = width - margin.left - margin.right;
  const innerH = height - margin.top - margin.bottom;

  // running cumulative positions, baseline first
  const levels: number[] = [];
  let running = 0;
  for (const step of steps) {
    levels.push(running);
    running += step.delta;
  }
  levels.push(running);
  const lo = Math.min(0, ...levels);
  const hi = Math.max(0, ...levels);
  const span = hi - lo || 1;
  const y = (v: number) => margin.top + (hi - v) * (innerH / span);
  const slot = innerW / (steps.length + 1);
  const barW = slot * 0.68;

  const parts: string[] = [];
  let cursor = 0;
  steps.forEach((step, i) => {
    const x = margin.left + i * slot + (slot - barW) / 2;
    const from = cursor;
    const to = cursor + step.delta;
    const top = Math.min(y(from), y(to));
    const h = Math.max(Math.abs(y(from) - y(to)), 1);
    const cls = step.delta >= 0 ? 'bar-up' : 'bar-down';
    parts.push(
      `<rect class="${i === 0 ? 'bar-base' : cls}" x="${x.toFixed(1)}" ` +
      `y="${top.toFixed(1)}" width="${barW.toFixed(1)}" height="${h.toFixed(1)}"/>`,
      `<text class="bar-label" x="${(x + barW / 2).toFixed(1)}" ` +
      `y="${height - 26}" text-anchor="middle">${esc(step.lever)}</text>`,
      `<text class="bar-value" x="${(x + barW / 2).toFixed(1)}" ` +
      `y="${height - 12}" text-anchor="middle">${esc(fmtMoney(step.delta))}</text>`,
    );
    cursor = i === 0 ? step.delta : to;
  });
  // final cumulative bar
  const x = margin.left + steps.length * slot + (slot - barW) / 2;
  const top = Math.min(y(0), y(cursor));
  const h = Math.max(Math.abs(y(0) - y(cursor)), 1);
  parts.push(
    `<rect class="bar-total" x="${x.toFixed(1)}" y="${top.toFixed(1)}" ` +
    `width="${barW.toFixed(1)}" height="${h.toFixed(1)}"/>`,
    `<text class="bar-label" x="${(x + barW / 2).toFixed(1)}" y="${height - 26}" ` +
    `text-anchor="middle">margin</text>`,
    `<text class="bar-value" x="${(x + barW / 2).toFixed(1)}" y="${height - 12}" ` +
    `text-anchor="middle">${esc(fmtMoney(cursor))}</text>`,
    `<line class="axis" x1="${margin.left}" y1="${y(0).toFixed(1)}" ` +
    `x2="${width - margin.right}" y2="${y(0).toFixed(1)}"/>`,
  );
  return `<svg xmlns="${XMLNS}" viewBox="0 0 ${width} ${height}">${parts.join('')}</svg>`;
}

/** Horizontal max-CAPEX gauge with published reference markers. */
export function gaugeSvg(
  value: number,
  references: GaugeReference[],
  width = 560,
  height = 120,
): string {
  const margin = { left: 8, right: 8 };
  const innerW = width - margin.left - margin.right;
  const values = [0, value, ...references.map((r) => r.value)];
  const lo = Math.min(...values);
  const hi = Math.max(...values);
  const span = hi - lo || 1;
  const x = (v: number) => margin.left + ((v - lo) / span) * innerW;

  const barY = 44;
  const barH = 22;
  const parts: string[] = [
    `<line class="axis" x1="${x(0).toFixed(1)}" y1="30" x2="${x(0).toFixed(1)}" y2="${barY + barH + 10}"/>`,
  ];
  const left = Math.min(x(0), x(value));
  const w = Math.max(Math.abs(x(value) - x(0)), 1);
  parts.push(
    `<rect class="${value >= 0 ? 'gauge-pos' : 'gauge-neg'}" x="${left.toFixed(1)}" ` +
    `y="${barY}" width="${w.toFixed(1)}" height="${barH}"/>`,
    `<text class="gauge-value" x="${x(value).toFixed(1)}" y="${barY - 8}" ` +
    `text-anchor="middle">${esc(fmtMoney(value))}</text>`,
  );
  references.forEach((ref, i) => {
    const rx = x(ref.value);
    parts.push(
      `<line class="ref-line" x1="${rx.toFixed(1)}" y1="${barY - 4}" ` +
      `x2="${rx.toFixed(1)}" y2="${barY + barH + 4}"/>`,
      `<text class="ref-label" x="${rx.toFixed(1)}" y="${barY + barH + 18 + (i % 2) * 12}" ` +
      `text-anchor="middle">${esc(ref.label)}</text>`,
    );
  });
  return `<svg xmlns="${XMLNS}" viewBox="0 0 ${width} ${height}">${parts.join('')}</svg>`;
}

/** Demand trajectory: lower and higher carbon-intensity bounds, kt/y. */
export function demandSvg(
  years: number[],
  lowerKt: number[],
  higherKt: number[],
  width = 560,
  height = 200,
): string {
  const margin = { top: 12, right: 12, bottom: 26, left: 12 };
  const innerW = width - margin.left - margin.right;
  const innerH = height - margin.top - margin.bottom;
  const maxV = Math.max(...higherKt, ...lowerKt, 1);
  const x = (i: number) =>
    margin.left + (years.length === 1 ? 0 : (i / (years.length - 1)) * innerW);
  const y = (v: number) => margin.top + (1 - v / maxV) * innerH;

  const path = (series: number[]) =>
    series.map((v, i) => `${i === 0 ? 'M' : 'L'}${x(i).toFixed(1)},${y(v).toFixed(1)}`).join(' ');

  const parts: string[] = [
    `<path class="demand-higher" d="${path(higherKt)}" fill="none"/>`,
    `<path class="demand-lower" d="${path(lowerKt)}" fill="none"/>`,
  ];
  years.forEach((year, i) => {
    parts.push(
      `<text class="tick" x="${x(i).toFixed(1)}" y="${height - 8}" ` +
      `text-anchor="middle">${year}</text>`,
      `<circle class="dot-lower" cx="${x(i).toFixed(1)}" cy="${y(lowerKt[i]).toFixed(1)}" r="3"/>`,
      `<circle class="dot-higher" cx="${x(i).toFixed(1)}" cy="${y(higherKt[i]).toFixed(1)}" r="3"/>`,
      `<text class="tick" x="${x(i).toFixed(1)}" y="${(y(higherKt[i]) - 8).toFixed(1)}" ` +
      `text-anchor="middle">${higherKt[i]}</text>`,
    );
  });
  return `<svg xmlns="${XMLNS}" viewBox="0 0 ${width} ${height}">${parts.join('')}</svg>`;
}
