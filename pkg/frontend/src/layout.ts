// Deterministic force-directed layout: spring attraction along arrows,
// inverse-square repulsion between all vertex pairs, mild centering.

export interface Point {
  x: number;
  y: number;
}

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a |= 0;
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function forceLayout(
  ids: string[],
  edges: [string, string][],
  width = 640,
  height = 480,
  iterations = 250,
  seed = 7,
): Map<string, Point> {
  const rand = mulberry32(seed);
  const n = ids.length;
  const index = new Map(ids.map((id, i) => [id, i]));
  const xs = ids.map(() => (rand() - 0.5) * width * 0.8);
  const ys = ids.map(() => (rand() - 0.5) * height * 0.8);
  const springLength = Math.min(width, height) / Math.max(2, Math.sqrt(n) + 1);
  const pairs: [number, number][] = [];
  for (const [a, b] of edges) {
    const i = index.get(a);
    const j = index.get(b);
    if (i !== undefined && j !== undefined && i !== j) pairs.push([i, j]);
  }

  for (let it = 0; it < iterations; it++) {
    const temp = 0.1 * Math.min(width, height) * (1 - it / iterations) + 1;
    const fx = new Array(n).fill(0);
    const fy = new Array(n).fill(0);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = xs[i] - xs[j];
        let dy = ys[i] - ys[j];
        let d2 = dx * dx + dy * dy;
        if (d2 < 1e-6) {
          dx = rand() - 0.5;
          dy = rand() - 0.5;
          d2 = dx * dx + dy * dy;
        }
        const rep = (springLength * springLength) / d2;
        fx[i] += dx * rep;
        fy[i] += dy * rep;
        fx[j] -= dx * rep;
        fy[j] -= dy * rep;
      }
    }
    for (const [i, j] of pairs) {
      const dx = xs[j] - xs[i];
      const dy = ys[j] - ys[i];
      const dist = Math.sqrt(dx * dx + dy * dy) + 1e-9;
      const pull = (dist - springLength) / dist / 8;
      fx[i] += dx * pull;
      fy[i] += dy * pull;
      fx[j] -= dx * pull;
      fy[j] -= dy * pull;
    }
    for (let i = 0; i < n; i++) {
      fx[i] -= xs[i] / 200; // centering
      fy[i] -= ys[i] / 200;
      const mag = Math.sqrt(fx[i] * fx[i] + fy[i] * fy[i]) + 1e-9;
      const cap = Math.min(mag, temp);
      xs[i] += (fx[i] / mag) * cap;
      ys[i] += (fy[i] / mag) * cap;
    }
  }

  const out = new Map<string, Point>();
  ids.forEach((id, i) => {
    out.set(id, { x: xs[i] + width / 2, y: ys[i] + height / 2 });
  });
  return out;
}
