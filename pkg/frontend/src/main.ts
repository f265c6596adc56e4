// Application wiring: session state, service client, renderer, panels.

import { ApiError, QmutClient } from "./api.js";
import {
  classificationLabel,
  ratioSeries,
  ratioTargetLine,
  totalSeries,
} from "./dynamics.js";
import { QuiverRenderer, drawPlot } from "./render.js";
import {
  applyMutation,
  canMutate,
  emptySession,
  jumpTo,
  loadDocument,
  pairMultiplicity,
  redo,
  undo,
  type SessionState,
} from "./session.js";
import {
  iceboundArrows,
  mutableVertices,
  type DynamicsResponse,
  type QuiverDocument,
} from "./types.js";

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

const SAMPLE: QuiverDocument = {
  vertices: [
    { id: "A", frozen: false },
    { id: "B", frozen: false },
    { id: "C", frozen: false },
    { id: "D", frozen: false },
    { id: "E", frozen: false },
  ],
  arrows: [
    { from: "A", to: "B", weight: "2" },
    { from: "B", to: "E", weight: "3" },
    { from: "C", to: "B", weight: "1" },
    { from: "E", to: "A", weight: "1" },
    { from: "E", to: "D", weight: "1" },
  ],
};

class App {
  state: SessionState = emptySession();
  client = new QmutClient(
    (document.body.dataset.apiBase as string) || "http://127.0.0.1:8642",
  );
  renderer: QuiverRenderer;
  lastDynamics: DynamicsResponse | null = null;
  busy = false;

  constructor() {
    this.renderer = new QuiverRenderer($("canvas") as unknown as SVGSVGElement, {
      onVertexClick: (id) => void this.clickMutate(id),
      onFrozenClick: (id) => this.note(`${id} is frozen; mutation is not allowed.`),
    });
    this.bind();
    this.state = loadDocument(this.state, SAMPLE);
    this.refresh();
  }

  bind(): void {
    $("btn-undo").addEventListener("click", () => {
      this.state = undo(this.state);
      this.refresh();
    });
    $("btn-redo").addEventListener("click", () => {
      this.state = redo(this.state);
      this.refresh();
    });
    $("btn-load").addEventListener("click", () => {
      try {
        const doc = JSON.parse(($("doc-text") as HTMLTextAreaElement).value);
        this.state = loadDocument(this.state, doc);
        this.note("document loaded.");
        this.refresh();
      } catch (err) {
        this.note(`could not parse document: ${err}`);
      }
    });
    $("btn-export").addEventListener("click", () => {
      if (!this.state.current) return;
      ($("doc-text") as HTMLTextAreaElement).value = JSON.stringify(
        this.state.current,
        null,
        2,
      );
    });
    $("btn-sample").addEventListener("click", () => {
      this.state = loadDocument(this.state, SAMPLE);
      this.refresh();
    });
    $("btn-gadget-subset").addEventListener("click", () => void this.buildSubsetSum());
    $("btn-gadget-x3c").addEventListener("click", () => void this.buildX3C());
    $("btn-gadget-path").addEventListener("click", () => this.buildPath());
    $("btn-dynamics").addEventListener("click", () => void this.runDynamics());
    $("dyn-log").addEventListener("change", () => this.plotDynamics());
    $("dyn-step").addEventListener("change", () => this.jumpToStep());
  }

  note(text: string): void {
    $("status").textContent = text;
  }

  async clickMutate(vertex: string): Promise<void> {
    if (this.busy) return; // one in-flight mutation at a time
    if (!this.state.current) return;
    if (!canMutate(this.state, vertex)) {
      this.note(`${vertex} is frozen; mutation is not allowed.`);
      return;
    }
    this.busy = true;
    try {
      const result = await this.client.mutate(this.state.current, vertex);
      this.state = applyMutation(this.state, vertex, result);
      this.note(`mutated at ${vertex}.`);
    } catch (err) {
      this.note(err instanceof ApiError ? `${err.code}: ${err.message}` : String(err));
    } finally {
      this.busy = false;
      this.refresh();
    }
  }

  async buildSubsetSum(): Promise<void> {
    const values = (($("in-subset") as HTMLInputElement).value || "3,5")
      .split(",")
      .map((t) => parseInt(t.trim(), 10))
      .filter((v) => Number.isFinite(v));
    try {
      const doc = await this.client.gadgetSubsetSum(values);
      this.state = loadDocument(this.state, doc);
      this.refresh();
    } catch (err) {
      this.note(String(err));
    }
  }

  async buildX3C(): Promise<void> {
    const n = parseInt(($("in-x3c-n") as HTMLInputElement).value || "3", 10);
    const triples = (($("in-x3c-triples") as HTMLInputElement).value || "1 2 3")
      .split(";")
      .map((part) => part.trim().split(/\s+/).map((t) => parseInt(t, 10)));
    try {
      const doc = await this.client.gadgetX3C(n, triples);
      this.state = loadDocument(this.state, doc);
      this.refresh();
    } catch (err) {
      this.note(String(err));
    }
  }

  buildPath(): void {
    const weights = (($("in-path") as HTMLInputElement).value || "1,3,1")
      .split(",")
      .map((t) => parseInt(t.trim(), 10));
    // path quivers are plain documents; build locally
    const k = weights.length - 1;
    const vertices = [
      { id: "A", frozen: true },
      ...Array.from({ length: k }, (_, i) => ({ id: `C${i + 1}`, frozen: false })),
      { id: "B", frozen: true },
    ];
    const chain = vertices.map((v) => v.id);
    const arrows = weights.map((w, i) => ({
      from: chain[i],
      to: chain[i + 1],
      weight: String(w),
    }));
    this.state = loadDocument(this.state, { vertices, arrows });
    this.refresh();
  }

  async runDynamics(): Promise<void> {
    if (!this.state.current) return;
    const mutable = mutableVertices(this.state.current);
    if (mutable.length !== 2) {
      this.note(
        `dynamics needs exactly two mutable vertices; this quiver has ${mutable.length}.`,
      );
      return;
    }
    const steps = parseInt(($("in-steps") as HTMLInputElement).value || "30", 10);
    try {
      this.lastDynamics = await this.client.dynamics(
        this.state.current,
        mutable[0],
        mutable[1],
        steps,
      );
      const slider = $("dyn-step") as HTMLInputElement;
      slider.max = String(this.lastDynamics.states.length - 1);
      slider.value = "0";
      $("dyn-class").textContent = classificationLabel(this.lastDynamics);
      this.plotDynamics();
    } catch (err) {
      this.note(err instanceof ApiError ? `${err.code}: ${err.message}` : String(err));
    }
  }

  plotDynamics(): void {
    if (!this.lastDynamics) return;
    const log = ($("dyn-log") as HTMLInputElement).checked;
    drawPlot(
      $("plot-total") as unknown as SVGSVGElement,
      [{ points: totalSeries(this.lastDynamics, log), color: "#284" }],
      null,
    );
    const frozenIds = this.lastDynamics.states[0].quiver.vertices
      .filter((v) => v.frozen)
      .map((v) => v.id);
    const first = frozenIds[0];
    drawPlot(
      $("plot-ratio") as unknown as SVGSVGElement,
      first
        ? [{ points: ratioSeries(this.lastDynamics, first), color: "#36c" }]
        : [],
      ratioTargetLine(this.lastDynamics),
    );
  }

  jumpToStep(): void {
    if (!this.lastDynamics) return;
    const idx = parseInt(($("dyn-step") as HTMLInputElement).value, 10);
    const entry = this.lastDynamics.states[idx];
    if (!entry) return;
    this.state = jumpTo(this.state, entry.quiver);
    this.note(`jumped to trace step ${idx}; continue mutating from here.`);
    this.refresh();
  }

  refresh(): void {
    const doc = this.state.current;
    if (!doc) return;
    this.renderer.render(doc);
    $("btn-undo").toggleAttribute("disabled", this.state.history.length === 0);
    $("btn-redo").toggleAttribute("disabled", this.state.redoStack.length === 0);
    const ice = iceboundArrows(doc);
    $("icebound").textContent = ice.length
      ? `icebound arrows: ${ice.map((a) => `${a.from}->${a.to} (${a.weight})`).join(", ")}`
      : "no icebound arrows";
    const stats = this.state.pinned
      .map(([u, v]) => `${u}-${v}: ${pairMultiplicity(doc, u, v)}`)
      .join("   ");
    $("pinned").textContent = stats || "no pinned pairs";
    $("history-depth").textContent = `history: ${this.state.history.length}`;
  }
}

window.addEventListener("DOMContentLoaded", () => {
  new App();
});
