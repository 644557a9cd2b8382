/**
 * Deterministic force-directed layout.
 *
 * Positions are a pure function of the node id list and the edge list: the
 * starting position of each node is seeded from a hash of its id, and the
 * simulation runs a fixed number of iterations with no randomness, so the
 * same bundle always lays out identically (which keeps visual output
 * testable).
 */

export interface Point {
  x: number;
  y: number;
}

export interface LayoutEdge {
  source: string;
  target: string;
}

/** FNV-1a, good enough to scatter ids around the unit disc. */
export function hashId(id: string): number {
  let h = 0x811c9dc5;
  for (let i = 0; i < id.length; i++) {
    h ^= id.charCodeAt(i);
    h = Math.imul(h, 0x01000193);
  }
  return h >>> 0;
}

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export interface LayoutOptions {
  width: number;
  height: number;
  iterations: number;
  repulsion: number;
  springLength: number;
  springStrength: number;
  gravity: number;
}

export const DEFAULT_LAYOUT: LayoutOptions = {
  width: 1000,
  height: 700,
  iterations: 150,
  repulsion: 12000,
  springLength: 90,
  springStrength: 0.02,
  gravity: 0.03,
};

export function computeLayout(
  nodeIds: readonly string[],
  edges: readonly LayoutEdge[],
  options: Partial<LayoutOptions> = {},
): Map<string, Point> {
  const opt = { ...DEFAULT_LAYOUT, ...options };
  // canonicalize the simulation order so positions depend only on the node
  // id set, not on the caller's list order
  const ids = [...new Set(nodeIds)].sort();
  const n = ids.length;
  const positions = new Map<string, Point>();
  if (n === 0) return positions;

  const cx = opt.width / 2;
  const cy = opt.height / 2;
  const radius = Math.min(opt.width, opt.height) * 0.38;
  for (const id of ids) {
    const rand = mulberry32(hashId(id));
    const angle = rand() * 2 * Math.PI;
    const r = radius * (0.35 + 0.65 * Math.sqrt(rand()));
    positions.set(id, { x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  }

  const index = new Map(ids.map((id, i) => [id, i]));
  const xs = ids.map((id) => positions.get(id)!.x);
  const ys = ids.map((id) => positions.get(id)!.y);
  const springs: [number, number][] = [];
  for (const e of edges) {
    const a = index.get(e.source);
    const b = index.get(e.target);
    if (a !== undefined && b !== undefined && a !== b) springs.push([a, b]);
  }
  springs.sort((p, q) => p[0] - q[0] || p[1] - q[1]);

  const dx = new Float64Array(n);
  const dy = new Float64Array(n);
  for (let step = 0; step < opt.iterations; step++) {
    const cool = 1 - step / opt.iterations;
    dx.fill(0);
    dy.fill(0);

    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let ddx = xs[i]! - xs[j]!;
        let ddy = ys[i]! - ys[j]!;
        let dist2 = ddx * ddx + ddy * ddy;
        if (dist2 < 1e-4) {
          // deterministic nudge for coincident points
          ddx = 0.01 * ((i - j) % 7);
          ddy = 0.01 * (((i + j) % 5) - 2);
          dist2 = ddx * ddx + ddy * ddy + 1e-6;
        }
        const force = opt.repulsion / dist2;
        const dist = Math.sqrt(dist2);
        const fx = (ddx / dist) * force;
        const fy = (ddy / dist) * force;
        dx[i]! += fx;
        dy[i]! += fy;
        dx[j]! -= fx;
        dy[j]! -= fy;
      }
    }

    for (const [a, b] of springs) {
      const ddx = xs[b]! - xs[a]!;
      const ddy = ys[b]! - ys[a]!;
      const dist = Math.sqrt(ddx * ddx + ddy * ddy) || 1;
      const stretch = (dist - opt.springLength) * opt.springStrength;
      const fx = (ddx / dist) * stretch;
      const fy = (ddy / dist) * stretch;
      dx[a]! += fx;
      dy[a]! += fy;
      dx[b]! -= fx;
      dy[b]! -= fy;
    }

    for (let i = 0; i < n; i++) {
      dx[i]! += (cx - xs[i]!) * opt.gravity;
      dy[i]! += (cy - ys[i]!) * opt.gravity;
      const limit = 18 * cool + 1;
      const len = Math.sqrt(dx[i]! * dx[i]! + dy[i]! * dy[i]!) || 1;
      const scale = Math.min(limit, len) / len;
      xs[i] = Math.min(opt.width - 10, Math.max(10, xs[i]! + dx[i]! * scale));
      ys[i] = Math.min(opt.height - 10, Math.max(10, ys[i]! + dy[i]! * scale));
    }
  }

  ids.forEach((id, i) => positions.set(id, { x: xs[i]!, y: ys[i]! }));
  return positions;
}
