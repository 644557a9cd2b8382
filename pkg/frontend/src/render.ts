/**
 * String renderers: (model, state, layout) -> markup.
 *
 * Pure functions so the rendered output is testable without a DOM; the app
 * shell assigns the strings to innerHTML and handles events by delegation
 * on data-* attributes.
 */

import type { GraphModel, NodeDetail, ViewState } from "./model.js";
import { visibleEdges, visibleNodes, nodeDetail, LAYERS } from "./model.js";
import type { Point } from "./layout.js";

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

const LAYER_COLORS: Record<string, string> = {
  explicit: "#8899aa",
  "optimal-track": "#d08a2e",
  "optimal-tag": "#3f8f5f",
};

export function renderGraphSvg(
  model: GraphModel,
  state: ViewState,
  layout: Map<string, Point>,
  width = 1000,
  height = 700,
): string {
  const nodes = visibleNodes(model, state);
  const edges = visibleEdges(model, state);
  if (nodes.length === 0) {
    return (
      `<svg viewBox="0 0 ${width} ${height}" data-empty="true">` +
      `<text x="${width / 2}" y="${height / 2}" text-anchor="middle" class="empty-notice">` +
      `no nodes match the active filters</text></svg>`
    );
  }
  const color = LAYER_COLORS[state.layer] ?? "#888";
  const parts: string[] = [`<svg viewBox="0 0 ${width} ${height}">`, `<g class="edges">`];
  for (const edge of edges) {
    const a = layout.get(edge.source);
    const b = layout.get(edge.target);
    if (!a || !b) continue;
    const opacity = (0.25 + 0.6 * edge.score).toFixed(3);
    parts.push(
      `<line class="edge" x1="${a.x.toFixed(1)}" y1="${a.y.toFixed(1)}"` +
        ` x2="${b.x.toFixed(1)}" y2="${b.y.toFixed(1)}"` +
        ` stroke="${color}" stroke-opacity="${opacity}"` +
        ` data-score="${edge.score}"></line>`,
    );
  }
  parts.push(`</g><g class="nodes">`);
  for (const node of nodes) {
    const p = layout.get(node.user);
    if (!p) continue;
    const selected = state.selected === node.user;
    parts.push(
      `<circle class="node${selected ? " selected" : ""}"` +
        ` cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="${selected ? 9 : 6}"` +
        ` data-user="${escapeHtml(node.user)}">` +
        `<title>${escapeHtml(node.user)}</title></circle>`,
    );
  }
  parts.push(`</g></svg>`);
  return parts.join("");
}

export function renderStatusLine(model: GraphModel, state: ViewState): string {
  const nodes = visibleNodes(model, state).length;
  const edges = visibleEdges(model, state).length;
  const filters = state.tagFilters.size
    ? ` | filters: ${[...state.tagFilters].sort().map(escapeHtml).join(", ")}`
    : "";
  return (
    `<span data-visible-nodes="${nodes}" data-visible-edges="${edges}">` +
    `${nodes} nodes, ${edges} ${escapeHtml(state.layer)} edges` +
    ` (score &ge; ${state.minScore.toFixed(2)})${filters}</span>`
  );
}

export function renderLayerControls(state: ViewState): string {
  return LAYERS.map(
    (layer) =>
      `<label><input type="radio" name="layer" value="${layer}"` +
      `${state.layer === layer ? " checked" : ""}> ${layer}</label>`,
  ).join("\n");
}

export function renderTagFilters(model: GraphModel, state: ViewState): string {
  const parts: string[] = [];
  for (const { label, count } of model.bundle.tagVocabulary) {
    const active = state.tagFilters.has(label);
    parts.push(
      `<button class="tag-chip${active ? " active" : ""}"` +
        ` data-tag="${escapeHtml(label)}">${escapeHtml(label)}` +
        ` <span class="count">${count}</span></button>`,
    );
  }
  return parts.join("\n");
}

export function renderDetailPanel(model: GraphModel, state: ViewState): string {
  const detail: NodeDetail | null = nodeDetail(model, state);
  if (!detail) {
    return `<p class="placeholder">Select a node to inspect its tracks, tags and neighbors.</p>`;
  }
  const tracks = detail.tracks.length
    ? `<ol class="tracks">` +
      detail.tracks
        .map(
          (t) =>
            `<li data-popularity="${t.popularity}">${escapeHtml(t.label)}` +
            ` <span class="count">${t.popularity}</span></li>`,
        )
        .join("") +
      `</ol>`
    : `<p class="placeholder">no tracks on record</p>`;
  const tags = detail.tags.length
    ? `<p class="tags">${detail.tags.map(escapeHtml).join(", ")}</p>`
    : `<p class="placeholder">no tags reached this user</p>`;
  const neighbors = detail.neighbors.length
    ? `<ul class="neighbors">` +
      detail.neighbors
        .map(
          (n) =>
            `<li data-user="${escapeHtml(n.user)}">${escapeHtml(n.user)}` +
            ` <span class="score">${n.score.toFixed(3)}</span></li>`,
        )
        .join("") +
      `</ul>`
    : `<p class="placeholder">no outgoing ${escapeHtml(state.layer)} edges</p>`;
  return (
    `<h2>${escapeHtml(detail.user)}</h2>` +
    `<h3>tracks (${detail.tracks.length})</h3>${tracks}` +
    `<h3>tags (${detail.tags.length})</h3>${tags}` +
    `<h3>${escapeHtml(state.layer)} neighbors (${detail.neighbors.length})</h3>${neighbors}`
  );
}

export function renderErrorBanner(message: string): string {
  return `<div class="error-banner" role="alert">${escapeHtml(message)}</div>`;
}
