// Wire formats of the qmut HTTP service.

export interface VertexRecord {
  id: string;
  frozen: boolean;
}

export interface ArrowRecord {
  from: string;
  to: string;
  /** decimal integer string, arbitrary precision */
  weight: string;
}

export interface QuiverDocument {
  vertices: VertexRecord[];
  arrows: ArrowRecord[];
}

export interface ExplorationReport {
  visited: number;
  dedup: "labeled" | "isomorphism";
  exhausted: boolean;
  witness: string[] | null;
  truncated_by: string[];
  collected: string[] | null;
}

export interface DynamicsStateEntry {
  index: number;
  mutated: string | null;
  quiver: QuiverDocument;
  /** "U,V" -> decimal multiplicity string */
  pairs: Record<string, string>;
  total: string;
}

export interface DynamicsResponse {
  c: string;
  d: string;
  alpha: number;
  states: DynamicsStateEntry[];
  classification: { kind: string; period?: number | null; message?: string };
  ratio: {
    alpha: number;
    target: number | null;
    per_vertex: Record<string, number>;
  };
}

export interface ApiErrorBody {
  error: { code: string; message: string };
}

export function isFrozen(doc: QuiverDocument, id: string): boolean {
  const v = doc.vertices.find((v) => v.id === id);
  return v ? v.frozen : false;
}

export function hasVertex(doc: QuiverDocument, id: string): boolean {
  return doc.vertices.some((v) => v.id === id);
}

export function mutableVertices(doc: QuiverDocument): string[] {
  return doc.vertices.filter((v) => !v.frozen).map((v) => v.id);
}

/** Arrows between two frozen endpoints ("icebound"). */
export function iceboundArrows(doc: QuiverDocument): ArrowRecord[] {
  const frozen = new Set(doc.vertices.filter((v) => v.frozen).map((v) => v.id));
  return doc.arrows.filter((a) => frozen.has(a.from) && frozen.has(a.to));
}

export function documentsEqual(a: QuiverDocument, b: QuiverDocument): boolean {
  return JSON.stringify(a) === JSON.stringify(b);
}

export function cloneDocument(doc: QuiverDocument): QuiverDocument {
  return JSON.parse(JSON.stringify(doc)) as QuiverDocument;
}
