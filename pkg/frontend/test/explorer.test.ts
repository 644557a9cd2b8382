/**
 * Acceptance checks against the live fixture: the bundle is fetched from
 * the Python serving endpoint started by the global setup, exactly as the
 * browser app does it.
 */

import { beforeAll, describe, expect, it } from "vitest";

import {
  GraphModel,
  initialViewState,
  loadBundle,
  nodeDetail,
  selectNode,
  setLayer,
  toggleTagFilter,
  visibleEdges,
  visibleNodes,
} from "../src/model.js";
import { computeLayout } from "../src/layout.js";
import { renderDetailPanel, renderGraphSvg, renderStatusLine } from "../src/render.js";

let model: GraphModel;

beforeAll(async () => {
  const base = process.env.TAGBRIDGE_URL;
  if (!base) throw new Error("global setup did not provide TAGBRIDGE_URL");
  model = await loadBundle(`${base}/bundle`);
});

describe("served fixture", () => {
  it("shows exactly the bundle's node count on load", () => {
    const state = initialViewState();
    const nodes = visibleNodes(model, state);
    expect(nodes).toHaveLength(model.bundle.nodes.length);

    const layout = computeLayout(
      model.bundle.nodes.map((n) => n.user),
      model.bundle.layers.explicit,
    );
    const svg = renderGraphSvg(model, state, layout);
    const circles = svg.match(/<circle /g) ?? [];
    expect(circles).toHaveLength(model.bundle.nodes.length);
    expect(renderStatusLine(model, state)).toContain(
      `data-visible-nodes="${model.bundle.nodes.length}"`,
    );
  });

  it("a tag filter held by exactly m nodes shows exactly m nodes", () => {
    // derive m independently from the raw bundle for several tags
    const tags = model.bundle.tagVocabulary.slice(0, 5).map((t) => t.label);
    for (const tag of tags) {
      const m = model.bundle.nodes.filter((n) => n.tags.includes(tag)).length;
      expect(m).toBeGreaterThan(0);
      const state = toggleTagFilter(model, initialViewState(), tag).state;
      expect(visibleNodes(model, state)).toHaveLength(m);
    }
  });

  it("a tag held by no node empties the canvas with a notice", () => {
    const ghost = { ...model, knownTags: new Set([...model.knownTags, "ghost-tag"]) };
    const state = toggleTagFilter(ghost, initialViewState(), "ghost-tag").state;
    expect(visibleNodes(ghost, state)).toHaveLength(0);
    const svg = renderGraphSvg(ghost, state, new Map());
    expect(svg).toContain('data-empty="true"');
    expect(svg).toContain("no nodes match");
  });

  it("selecting a node lists its tracks in descending popularity order", () => {
    const withTracks = model.bundle.nodes.filter((n) => n.tracks.length >= 3);
    expect(withTracks.length).toBeGreaterThan(0);
    for (const node of withTracks.slice(0, 10)) {
      const state = selectNode(model, initialViewState(), node.user).state;
      const detail = nodeDetail(model, state)!;
      const pops = detail.tracks.map((t) => t.popularity);
      expect(pops).toEqual([...pops].sort((a, b) => b - a));
      expect(new Set(detail.tracks.map((t) => t.label))).toEqual(
        new Set(node.tracks.map((t) => t.label)),
      );
      const html = renderDetailPanel(model, state);
      const rendered = [...html.matchAll(/data-popularity="(\d+)"/g)].map((m) =>
        Number(m[1]),
      );
      expect(rendered).toEqual(pops);
    }
  });

  it("the optimal-tag layer shows at most k edges per node", () => {
    const k = model.bundle.parameters.k;
    const state = setLayer(model, initialViewState(), "optimal-tag").state;
    const perSource = new Map<string, number>();
    for (const edge of visibleEdges(model, state)) {
      perSource.set(edge.source, (perSource.get(edge.source) ?? 0) + 1);
    }
    expect(perSource.size).toBeGreaterThan(0);
    for (const count of perSource.values()) {
      expect(count).toBeLessThanOrEqual(k);
    }
    // detail panel agrees for every selectable node
    for (const node of model.bundle.nodes.slice(0, 20)) {
      const selected = selectNode(model, state, node.user).state;
      expect(nodeDetail(model, selected)!.neighbors.length).toBeLessThanOrEqual(k);
    }
  });

  it("all edge scores sit in (0, 1]", () => {
    for (const layer of ["optimal-track", "optimal-tag"] as const) {
      for (const edge of model.bundle.layers[layer]) {
        expect(edge.score).toBeGreaterThan(0);
        expect(edge.score).toBeLessThanOrEqual(1);
      }
    }
  });

  it("a failing bundle fetch surfaces as a load error", async () => {
    const base = process.env.TAGBRIDGE_URL!;
    await expect(loadBundle(`${base}/missing`)).rejects.toThrow(/HTTP 404/);
  });
});
