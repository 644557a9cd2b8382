/**
 * App shell: fetch the bundle from the serving endpoint, hold the current
 * ViewState, and re-render the pure views after every transition.
 */

import {
  GraphModel,
  Transition,
  ViewState,
  initialViewState,
  loadBundle,
  selectNode,
  setLayer,
  setThreshold,
  toggleTagFilter,
  type LayerName,
} from "./model.js";
import { computeLayout, type Point } from "./layout.js";
import {
  renderDetailPanel,
  renderErrorBanner,
  renderGraphSvg,
  renderLayerControls,
  renderStatusLine,
  renderTagFilters,
} from "./render.js";

function el(id: string): HTMLElement {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found;
}

class ExplorerApp {
  private state: ViewState = initialViewState();
  private layout: Map<string, Point>;

  constructor(private model: GraphModel) {
    // one layout per bundle: node positions stay put across layer/filter
    // changes, only visibility changes
    this.layout = computeLayout(
      model.bundle.nodes.map((n) => n.user),
      model.bundle.layers.explicit,
    );
  }

  apply(transition: Transition): void {
    this.state = transition.state;
    this.showNotice(transition.notice);
    this.render();
  }

  private showNotice(notice: string | null): void {
    const box = el("notice");
    box.textContent = notice ?? "";
    box.classList.toggle("visible", notice !== null);
  }

  render(): void {
    el("graph").innerHTML = renderGraphSvg(this.model, this.state, this.layout);
    el("status").innerHTML = renderStatusLine(this.model, this.state);
    el("layers").innerHTML = renderLayerControls(this.state);
    el("tags").innerHTML = renderTagFilters(this.model, this.state);
    el("detail").innerHTML = renderDetailPanel(this.model, this.state);
  }

  wire(): void {
    el("graph").addEventListener("click", (event) => {
      const target = event.target as Element | null;
      const circle = target?.closest?.("circle[data-user]");
      if (circle) {
        this.apply(selectNode(this.model, this.state, circle.getAttribute("data-user")));
      }
    });
    el("layers").addEventListener("change", (event) => {
      const input = event.target as HTMLInputElement;
      if (input.name === "layer") {
        this.apply(setLayer(this.model, this.state, input.value as LayerName));
      }
    });
    el("tags").addEventListener("click", (event) => {
      const chip = (event.target as Element | null)?.closest?.("button[data-tag]");
      if (chip) {
        this.apply(toggleTagFilter(this.model, this.state, chip.getAttribute("data-tag")!));
      }
    });
    const slider = el("threshold") as HTMLInputElement;
    slider.addEventListener("input", () => {
      this.apply(setThreshold(this.model, this.state, Number(slider.value)));
      el("threshold-value").textContent = Number(slider.value).toFixed(2);
    });
  }
}

async function boot(): Promise<void> {
  try {
    const model = await loadBundle("/bundle");
    const app = new ExplorerApp(model);
    app.wire();
    app.render();
  } catch (error) {
    el("graph").innerHTML = renderErrorBanner(
      error instanceof Error ? error.message : String(error),
    );
  }
}

boot();
