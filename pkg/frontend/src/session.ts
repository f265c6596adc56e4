// Session state: current document, undo/redo history, pinned pair statistics.
//
// History entries store the document BEFORE the recorded mutation, so
// replaying history[0].doc through every entry's vertex via the service
// reproduces the current document (the session invariant).  Undo and redo
// are pure stack moves over stored documents; no server round trips.

import {
  cloneDocument,
  hasVertex,
  isFrozen,
  type QuiverDocument,
} from "./types.js";

export interface HistoryEntry {
  doc: QuiverDocument;
  vertex: string;
}

export interface SessionState {
  current: QuiverDocument | null;
  history: HistoryEntry[];
  redoStack: HistoryEntry[];
  pinned: [string, string][];
}

export function emptySession(): SessionState {
  return { current: null, history: [], redoStack: [], pinned: [] };
}

export function loadDocument(state: SessionState, doc: QuiverDocument): SessionState {
  return {
    current: cloneDocument(doc),
    history: [],
    redoStack: [],
    pinned: state.pinned,
  };
}

/** Jump to an arbitrary document (e.g. a dynamics trace step) and start a
 * fresh what-if lineage from there. */
export function jumpTo(state: SessionState, doc: QuiverDocument): SessionState {
  return loadDocument(state, doc);
}

/** Is a click-to-mutate on this vertex allowed? Frozen vertices are not
 * clickable and must produce no request. */
export function canMutate(state: SessionState, vertex: string): boolean {
  if (!state.current || !hasVertex(state.current, vertex)) return false;
  return !isFrozen(state.current, vertex);
}

/** Record a completed mutation: the service mapped `current` to `result` by
 * mutating `vertex`. Clears the redo stack. */
export function applyMutation(
  state: SessionState,
  vertex: string,
  result: QuiverDocument,
): SessionState {
  if (!state.current) throw new Error("no document loaded");
  return {
    current: cloneDocument(result),
    history: [...state.history, { doc: state.current, vertex }],
    redoStack: [],
    pinned: state.pinned,
  };
}

export function undo(state: SessionState): SessionState {
  const last = state.history[state.history.length - 1];
  if (!last || !state.current) return state;
  return {
    current: last.doc,
    history: state.history.slice(0, -1),
    redoStack: [...state.redoStack, { doc: state.current, vertex: last.vertex }],
    pinned: state.pinned,
  };
}

export function redo(state: SessionState): SessionState {
  const top = state.redoStack[state.redoStack.length - 1];
  if (!top || !state.current) return state;
  return {
    current: top.doc,
    history: [...state.history, { doc: state.current, vertex: top.vertex }],
    redoStack: state.redoStack.slice(0, -1),
    pinned: state.pinned,
  };
}

export function pinPair(state: SessionState, u: string, v: string): SessionState {
  const key: [string, string] = u < v ? [u, v] : [v, u];
  if (state.pinned.some(([a, b]) => a === key[0] && b === key[1])) return state;
  return { ...state, pinned: [...state.pinned, key] };
}

export function unpinPair(state: SessionState, u: string, v: string): SessionState {
  const key: [string, string] = u < v ? [u, v] : [v, u];
  return {
    ...state,
    pinned: state.pinned.filter(([a, b]) => !(a === key[0] && b === key[1])),
  };
}

/** Signed net arrow count between a pair, from the document. */
export function pairMultiplicity(doc: QuiverDocument, u: string, v: string): string {
  for (const arrow of doc.arrows) {
    if ((arrow.from === u && arrow.to === v) || (arrow.from === v && arrow.to === u)) {
      return arrow.weight;
    }
  }
  return "0";
}

/** Replay the history through a mutation function; the result must equal the
 * current document (used by tests and by the integrity check in the UI). */
export async function replayHistory(
  state: SessionState,
  mutate: (doc: QuiverDocument, vertex: string) => Promise<QuiverDocument>,
): Promise<QuiverDocument | null> {
  if (state.history.length === 0) return state.current;
  let doc = state.history[0].doc;
  for (const entry of state.history) {
    doc = await mutate(doc, entry.vertex);
  }
  return doc;
}
