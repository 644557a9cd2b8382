import { describe, expect, it } from "vitest";

import { computeLayout, hashId } from "../src/layout.js";

const IDS = Array.from({ length: 40 }, (_, i) => `user-${i}`);
const EDGES = IDS.slice(1).map((id, i) => ({ source: IDS[i]!, target: id }));

describe("deterministic layout", () => {
  it("identical inputs produce identical positions", () => {
    const a = computeLayout(IDS, EDGES);
    const b = computeLayout(IDS, EDGES);
    expect([...a.entries()]).toEqual([...b.entries()]);
  });

  it("positions are seeded from node ids, not list order", () => {
    const reversed = computeLayout([...IDS].reverse(), EDGES);
    const forward = computeLayout(IDS, EDGES);
    for (const id of IDS) {
      expect(reversed.get(id)).toEqual(forward.get(id));
    }
  });

  it("keeps every node inside the viewport", () => {
    const layout = computeLayout(IDS, EDGES, { width: 500, height: 300 });
    for (const { x, y } of layout.values()) {
      expect(x).toBeGreaterThanOrEqual(0);
      expect(x).toBeLessThanOrEqual(500);
      expect(y).toBeGreaterThanOrEqual(0);
      expect(y).toBeLessThanOrEqual(300);
    }
  });

  it("separates coincident seeds", () => {
    const layout = computeLayout(["a", "a2", "b", "c"], []);
    const points = [...layout.values()];
    for (let i = 0; i < points.length; i++) {
      for (let j = i + 1; j < points.length; j++) {
        const dx = points[i]!.x - points[j]!.x;
        const dy = points[i]!.y - points[j]!.y;
        expect(Math.hypot(dx, dy)).toBeGreaterThan(1);
      }
    }
  });

  it("empty graph yields an empty layout", () => {
    expect(computeLayout([], []).size).toBe(0);
  });

  it("hash is stable", () => {
    expect(hashId("blogger-c00-000")).toBe(hashId("blogger-c00-000"));
    expect(hashId("a")).not.toBe(hashId("b"));
  });
});
