// Series extraction for the dynamics panel plots.

import { decimalLog10, decimalRatio } from "./format.js";
import type { DynamicsResponse } from "./types.js";

export interface SeriesPoint {
  step: number;
  value: number;
}

/** Total arrows after each full alternation step (log10 when asked: the
 * exponential regime overflows doubles quickly). */
export function totalSeries(resp: DynamicsResponse, logScale: boolean): SeriesPoint[] {
  const out: SeriesPoint[] = [];
  for (const state of resp.states) {
    if (state.index % 2 !== 0) continue;
    const value = logScale ? decimalLog10(state.total) : Number(state.total);
    out.push({ step: state.index / 2, value });
  }
  return out;
}

/** delta(A,C)/delta(A,D) per full step for a frozen vertex A; NaN while the
 * denominator is still zero. */
export function ratioSeries(resp: DynamicsResponse, vertex: string): SeriesPoint[] {
  const { c, d } = resp;
  const out: SeriesPoint[] = [];
  for (const state of resp.states) {
    if (state.index % 2 !== 0) continue;
    const num = pairValue(state.pairs, vertex, c);
    const den = pairValue(state.pairs, vertex, d);
    const value = den === "0" ? NaN : decimalRatio(num, den);
    out.push({ step: state.index / 2, value });
  }
  return out;
}

function pairValue(pairs: Record<string, string>, u: string, v: string): string {
  return pairs[`${u},${v}`] ?? pairs[`${v},${u}`] ?? "0";
}

/** The straight line the ratio should approach, when defined. */
export function ratioTargetLine(resp: DynamicsResponse): number | null {
  return resp.ratio.target;
}

export function classificationLabel(resp: DynamicsResponse): string {
  const c = resp.classification;
  if (c.kind === "periodic") {
    return `finite class: periodic with period ${c.period}`;
  }
  if (c.kind === "inconclusive") {
    return `inconclusive (${c.message ?? "short trace"})`;
  }
  return `${c.kind} arrow growth`;
}
