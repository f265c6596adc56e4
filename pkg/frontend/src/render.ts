// SVG rendering of a quiver document: boxed frozen vertices, highlighted
// icebound arrows, one edge per pair with a weight label, draggable nodes.

import { forceLayout, type Point } from "./layout.js";
import { abbreviateWeight } from "./format.js";
import { type QuiverDocument } from "./types.js";

const SVG = "http://www.w3.org/2000/svg";

export interface RenderCallbacks {
  onVertexClick: (id: string) => void;
  onFrozenClick?: (id: string) => void;
}

export class QuiverRenderer {
  private positions = new Map<string, Point>();

  constructor(
    private svg: SVGSVGElement,
    private callbacks: RenderCallbacks,
  ) {}

  render(doc: QuiverDocument): void {
    const width = this.svg.clientWidth || 640;
    const height = this.svg.clientHeight || 480;
    const ids = doc.vertices.map((v) => v.id);
    const kept = new Map<string, Point>();
    let needLayout = false;
    for (const id of ids) {
      const p = this.positions.get(id);
      if (p) kept.set(id, p);
      else needLayout = true;
    }
    if (needLayout || kept.size !== this.positions.size) {
      this.positions = forceLayout(
        ids,
        doc.arrows.map((a) => [a.from, a.to] as [string, string]),
        width,
        height,
      );
    }
    this.svg.replaceChildren();
    this.drawArrowheadDefs();

    const frozen = new Set(doc.vertices.filter((v) => v.frozen).map((v) => v.id));
    for (const arrow of doc.arrows) {
      const from = this.positions.get(arrow.from);
      const to = this.positions.get(arrow.to);
      if (!from || !to) continue;
      const icebound = frozen.has(arrow.from) && frozen.has(arrow.to);
      this.drawArrow(from, to, arrow.weight, icebound);
    }
    for (const vertex of doc.vertices) {
      const p = this.positions.get(vertex.id);
      if (!p) continue;
      this.drawVertex(vertex.id, vertex.frozen, p);
    }
  }

  private drawArrowheadDefs(): void {
    const defs = document.createElementNS(SVG, "defs");
    for (const [id, color] of [
      ["arrowhead", "#445"],
      ["arrowhead-ice", "#0b79d0"],
    ] as const) {
      const marker = document.createElementNS(SVG, "marker");
      marker.setAttribute("id", id);
      marker.setAttribute("viewBox", "0 0 10 10");
      marker.setAttribute("refX", "9");
      marker.setAttribute("refY", "5");
      marker.setAttribute("markerWidth", "7");
      marker.setAttribute("markerHeight", "7");
      marker.setAttribute("orient", "auto-start-reverse");
      const path = document.createElementNS(SVG, "path");
      path.setAttribute("d", "M 0 0 L 10 5 L 0 10 z");
      path.setAttribute("fill", color);
      marker.appendChild(path);
      defs.appendChild(marker);
    }
    this.svg.appendChild(defs);
  }

  private drawArrow(from: Point, to: Point, weight: string, icebound: boolean): void {
    const dx = to.x - from.x;
    const dy = to.y - from.y;
    const dist = Math.sqrt(dx * dx + dy * dy) + 1e-9;
    const pad = 22;
    const x1 = from.x + (dx / dist) * pad;
    const y1 = from.y + (dy / dist) * pad;
    const x2 = to.x - (dx / dist) * pad;
    const y2 = to.y - (dy / dist) * pad;

    const line = document.createElementNS(SVG, "line");
    line.setAttribute("x1", String(x1));
    line.setAttribute("y1", String(y1));
    line.setAttribute("x2", String(x2));
    line.setAttribute("y2", String(y2));
    line.setAttribute("stroke", icebound ? "#0b79d0" : "#445");
    line.setAttribute("stroke-width", icebound ? "2.5" : "1.5");
    if (icebound) line.setAttribute("stroke-dasharray", "7 3");
    line.setAttribute(
      "marker-end",
      icebound ? "url(#arrowhead-ice)" : "url(#arrowhead)",
    );
    this.svg.appendChild(line);

    const { text, full } = abbreviateWeight(weight);
    if (text !== "1" || icebound) {
      const label = document.createElementNS(SVG, "text");
      label.setAttribute("x", String((x1 + x2) / 2 + 6));
      label.setAttribute("y", String((y1 + y2) / 2 - 4));
      label.setAttribute("class", "edge-label");
      label.textContent = text;
      const title = document.createElementNS(SVG, "title");
      title.textContent = full;
      label.appendChild(title);
      this.svg.appendChild(label);
    }
  }

  private drawVertex(id: string, frozen: boolean, p: Point): void {
    const group = document.createElementNS(SVG, "g");
    group.setAttribute("class", frozen ? "vertex frozen" : "vertex mutable");
    group.setAttribute("transform", `translate(${p.x},${p.y})`);

    const shape = frozen
      ? document.createElementNS(SVG, "rect")
      : document.createElementNS(SVG, "circle");
    if (frozen) {
      shape.setAttribute("x", "-18");
      shape.setAttribute("y", "-14");
      shape.setAttribute("width", "36");
      shape.setAttribute("height", "28");
    } else {
      shape.setAttribute("r", "17");
    }
    group.appendChild(shape);

    const label = document.createElementNS(SVG, "text");
    label.setAttribute("class", "vertex-label");
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("dy", "5");
    label.textContent = id;
    group.appendChild(label);

    if (frozen) {
      const tip = document.createElementNS(SVG, "title");
      tip.textContent = `${id} is frozen: mutation not allowed`;
      group.appendChild(tip);
    }

    group.addEventListener("click", () => {
      if (frozen) this.callbacks.onFrozenClick?.(id);
      else this.callbacks.onVertexClick(id);
    });
    this.attachDrag(group, id);
    this.svg.appendChild(group);
  }

  private attachDrag(group: SVGGElement, id: string): void {
    let dragging = false;
    group.addEventListener("mousedown", () => (dragging = true));
    this.svg.addEventListener("mousemove", (ev) => {
      if (!dragging) return;
      const rect = this.svg.getBoundingClientRect();
      const p = { x: ev.clientX - rect.left, y: ev.clientY - rect.top };
      this.positions.set(id, p);
      group.setAttribute("transform", `translate(${p.x},${p.y})`);
    });
    this.svg.addEventListener("mouseup", () => (dragging = false));
  }
}

export interface PlotSeries {
  points: { step: number; value: number }[];
  color: string;
}

/** Minimal polyline plot with an optional horizontal target line. */
export function drawPlot(
  svg: SVGSVGElement,
  series: PlotSeries[],
  targetLine: number | null,
): void {
  svg.replaceChildren();
  const width = svg.clientWidth || 420;
  const height = svg.clientHeight || 200;
  const finite = series
    .flatMap((s) => s.points.map((p) => p.value))
    .filter((v) => Number.isFinite(v));
  if (targetLine !== null && Number.isFinite(targetLine)) finite.push(targetLine);
  if (finite.length === 0) return;
  const lo = Math.min(...finite);
  const hi = Math.max(...finite);
  const span = hi - lo || 1;
  const maxStep = Math.max(...series.flatMap((s) => s.points.map((p) => p.step)), 1);
  const sx = (step: number) => 30 + (step / maxStep) * (width - 45);
  const sy = (value: number) => height - 18 - ((value - lo) / span) * (height - 36);

  if (targetLine !== null && Number.isFinite(targetLine)) {
    const line = document.createElementNS(SVG, "line");
    line.setAttribute("x1", String(sx(0)));
    line.setAttribute("x2", String(sx(maxStep)));
    line.setAttribute("y1", String(sy(targetLine)));
    line.setAttribute("y2", String(sy(targetLine)));
    line.setAttribute("stroke", "#c33");
    line.setAttribute("stroke-dasharray", "4 3");
    svg.appendChild(line);
    const label = document.createElementNS(SVG, "text");
    label.setAttribute("x", String(sx(0) + 4));
    label.setAttribute("y", String(sy(targetLine) - 4));
    label.setAttribute("class", "plot-label");
    label.textContent = `target ${targetLine.toFixed(6)}`;
    svg.appendChild(label);
  }
  for (const s of series) {
    const pts = s.points
      .filter((p) => Number.isFinite(p.value))
      .map((p) => `${sx(p.step)},${sy(p.value)}`)
      .join(" ");
    const poly = document.createElementNS(SVG, "polyline");
    poly.setAttribute("points", pts);
    poly.setAttribute("fill", "none");
    poly.setAttribute("stroke", s.color);
    poly.setAttribute("stroke-width", "1.8");
    svg.appendChild(poly);
  }
}
