/**
 * Bundle parsing and the explorer's view model.
 *
 * Everything here is pure: the ViewState is immutable, transitions return a
 * new state (plus an optional user-facing notice), and the visible-set
 * selectors are functions of (bundle, state) only.  Rendering and DOM glue
 * live elsewhere.
 */

export const SUPPORTED_FORMAT_VERSION = 1;

export interface TrackRef {
  label: string;
  popularity: number;
}

export interface BundleNode {
  user: string;
  tracks: TrackRef[];
  tags: string[];
}

export interface Edge {
  source: string;
  target: string;
  /** Explicit edges carry no score in the bundle; they count as 1. */
  score: number;
}

export type LayerName = "explicit" | "optimal-track" | "optimal-tag";

export const LAYERS: readonly LayerName[] = ["explicit", "optimal-track", "optimal-tag"];

export interface Bundle {
  formatVersion: number;
  parameters: { k: number; tagCap: number | null; binWidth: number | null };
  nodes: BundleNode[];
  layers: Record<LayerName, Edge[]>;
  tagVocabulary: { label: string; count: number }[];
  report: unknown;
}

export class BundleFormatError extends Error {}

function fail(message: string): never {
  throw new BundleFormatError(message);
}

function asArray(value: unknown, what: string): unknown[] {
  if (!Array.isArray(value)) fail(`${what} is not an array`);
  return value;
}

function asString(value: unknown, what: string): string {
  if (typeof value !== "string") fail(`${what} is not a string`);
  return value;
}

function asNumber(value: unknown, what: string): number {
  if (typeof value !== "number" || !Number.isFinite(value)) {
    fail(`${what} is not a number`);
  }
  return value;
}

function parseEdges(value: unknown, what: string, defaultScore?: number): Edge[] {
  return asArray(value, what).map((raw, i) => {
    const row = raw as Record<string, unknown>;
    const score =
      row.score === undefined && defaultScore !== undefined
        ? defaultScore
        : asNumber(row.score, `${what}[${i}].score`);
    return {
      source: asString(row.source, `${what}[${i}].source`),
      target: asString(row.target, `${what}[${i}].target`),
      score,
    };
  });
}

/** Validate a decoded bundle document; rejects unknown format versions. */
export function parseBundle(raw: unknown): Bundle {
  if (typeof raw !== "object" || raw === null) fail("bundle is not an object");
  const doc = raw as Record<string, unknown>;
  const version = asNumber(doc.format_version, "format_version");
  if (version !== SUPPORTED_FORMAT_VERSION) {
    fail(`unsupported bundle format_version ${version} (expected ${SUPPORTED_FORMAT_VERSION})`);
  }
  const params = (doc.parameters ?? {}) as Record<string, unknown>;
  const nodes = asArray(doc.nodes, "nodes").map((raw, i) => {
    const row = raw as Record<string, unknown>;
    const tracks = asArray(row.tracks ?? [], `nodes[${i}].tracks`).map((t, j) => {
      const track = t as Record<string, unknown>;
      return {
        label: asString(track.label, `nodes[${i}].tracks[${j}].label`),
        popularity: asNumber(track.popularity, `nodes[${i}].tracks[${j}].popularity`),
      };
    });
    return {
      user: asString(row.user, `nodes[${i}].user`),
      tracks,
      tags: asArray(row.tags ?? [], `nodes[${i}].tags`).map((t, j) =>
        asString(t, `nodes[${i}].tags[${j}]`),
      ),
    };
  });
  const seen = new Set<string>();
  for (const node of nodes) {
    if (seen.has(node.user)) fail(`duplicate node ${node.user}`);
    seen.add(node.user);
  }
  return {
    formatVersion: version,
    parameters: {
      k: typeof params.k === "number" ? params.k : 10,
      tagCap: typeof params.tag_cap === "number" ? params.tag_cap : null,
      binWidth: typeof params.bin_width === "number" ? params.bin_width : null,
    },
    nodes,
    layers: {
      explicit: parseEdges(doc.explicit_edges, "explicit_edges", 1),
      "optimal-track": parseEdges(doc.optimal_track_edges, "optimal_track_edges"),
      "optimal-tag": parseEdges(doc.optimal_tag_edges, "optimal_tag_edges"),
    },
    tagVocabulary: asArray(doc.tag_vocabulary, "tag_vocabulary").map((raw, i) => {
      const row = raw as Record<string, unknown>;
      return {
        label: asString(row.label, `tag_vocabulary[${i}].label`),
        count: asNumber(row.count, `tag_vocabulary[${i}].count`),
      };
    }),
    report: doc.report ?? null,
  };
}

/** Bundle plus the lookup indexes every selector needs. */
export interface GraphModel {
  bundle: Bundle;
  nodeByUser: Map<string, BundleNode>;
  nodesByTag: Map<string, Set<string>>;
  knownTags: Set<string>;
}

export function buildModel(bundle: Bundle): GraphModel {
  const nodeByUser = new Map<string, BundleNode>();
  const nodesByTag = new Map<string, Set<string>>();
  for (const node of bundle.nodes) {
    nodeByUser.set(node.user, node);
    for (const tag of node.tags) {
      let holder = nodesByTag.get(tag);
      if (!holder) nodesByTag.set(tag, (holder = new Set()));
      holder.add(node.user);
    }
  }
  const knownTags = new Set(bundle.tagVocabulary.map((t) => t.label));
  for (const tag of nodesByTag.keys()) knownTags.add(tag);
  return { bundle, nodeByUser, nodesByTag, knownTags };
}

export async function loadBundle(url: string): Promise<GraphModel> {
  const response = await fetch(url);
  if (!response.ok) fail(`bundle request failed: HTTP ${response.status}`);
  let decoded: unknown;
  try {
    decoded = await response.json();
  } catch {
    fail("bundle is not valid JSON");
  }
  return buildModel(parseBundle(decoded));
}

// ---------------------------------------------------------------------------
// ViewState and transitions

export interface ViewState {
  layer: LayerName;
  tagFilters: ReadonlySet<string>;
  minScore: number;
  selected: string | null;
}

export interface Transition {
  state: ViewState;
  notice: string | null;
}

export function initialViewState(): ViewState {
  return { layer: "explicit", tagFilters: new Set(), minScore: 0, selected: null };
}

/** A node is visible iff it carries every active filter tag. */
export function isNodeVisible(model: GraphModel, state: ViewState, user: string): boolean {
  const node = model.nodeByUser.get(user);
  if (!node) return false;
  for (const tag of state.tagFilters) {
    if (!model.nodesByTag.get(tag)?.has(user)) return false;
  }
  return true;
}

export function visibleNodes(model: GraphModel, state: ViewState): BundleNode[] {
  return model.bundle.nodes.filter((n) => isNodeVisible(model, state, n.user));
}

/** Active-layer edges with both endpoints visible and score >= threshold. */
export function visibleEdges(model: GraphModel, state: ViewState): Edge[] {
  return model.bundle.layers[state.layer].filter(
    (e) =>
      e.score >= state.minScore &&
      isNodeVisible(model, state, e.source) &&
      isNodeVisible(model, state, e.target),
  );
}

/** Clear the selection when the selected node fell out of view. */
function reestablish(model: GraphModel, state: ViewState): ViewState {
  if (state.selected !== null && !isNodeVisible(model, state, state.selected)) {
    return { ...state, selected: null };
  }
  return state;
}

export function setLayer(model: GraphModel, state: ViewState, layer: LayerName): Transition {
  // selection survives a layer switch as long as the node stays visible
  return { state: reestablish(model, { ...state, layer }), notice: null };
}

export function setThreshold(model: GraphModel, state: ViewState, value: number): Transition {
  const minScore = Math.min(1, Math.max(0, value));
  return { state: reestablish(model, { ...state, minScore }), notice: null };
}

export function toggleTagFilter(model: GraphModel, state: ViewState, tag: string): Transition {
  if (!model.knownTags.has(tag)) {
    return { state, notice: `unknown tag ${JSON.stringify(tag)} ignored` };
  }
  const tagFilters = new Set(state.tagFilters);
  if (tagFilters.has(tag)) tagFilters.delete(tag);
  else tagFilters.add(tag);
  return { state: reestablish(model, { ...state, tagFilters }), notice: null };
}

export function applyTagFilters(
  model: GraphModel,
  state: ViewState,
  tags: Iterable<string>,
): Transition {
  const accepted = new Set<string>();
  const unknown: string[] = [];
  for (const tag of tags) {
    if (model.knownTags.has(tag)) accepted.add(tag);
    else unknown.push(tag);
  }
  const next = reestablish(model, { ...state, tagFilters: accepted });
  return {
    state: next,
    notice: unknown.length ? `unknown tags ignored: ${unknown.join(", ")}` : null,
  };
}

export function selectNode(model: GraphModel, state: ViewState, user: string | null): Transition {
  if (user === null) return { state: { ...state, selected: null }, notice: null };
  if (!isNodeVisible(model, state, user)) {
    return { state, notice: `node ${JSON.stringify(user)} is not visible` };
  }
  return { state: { ...state, selected: user }, notice: null };
}

// ---------------------------------------------------------------------------
// Detail panel data

export interface NodeDetail {
  user: string;
  /** Tracks in descending popularity, ties by label. */
  tracks: TrackRef[];
  tags: string[];
  /** Outgoing neighbors in the active layer, in layer order. */
  neighbors: { user: string; score: number }[];
}

export function nodeDetail(model: GraphModel, state: ViewState): NodeDetail | null {
  if (state.selected === null) return null;
  const node = model.nodeByUser.get(state.selected);
  if (!node) return null;
  const tracks = [...node.tracks].sort(
    (a, b) => b.popularity - a.popularity || a.label.localeCompare(b.label),
  );
  const neighbors = model.bundle.layers[state.layer]
    .filter((e) => e.source === node.user)
    .map((e) => ({ user: e.target, score: e.score }));
  neighbors.sort((a, b) => b.score - a.score || a.user.localeCompare(b.user));
  return { user: node.user, tracks, tags: [...node.tags].sort(), neighbors };
}
