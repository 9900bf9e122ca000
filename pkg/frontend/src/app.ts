/**
 * Browser wiring: presets, sliders, vertex dragging, overlay toggles.
 *
 * Everything numeric comes from Transport.evaluate / Transport.render; this
 * file only moves documents between widgets and the canvas.  In the browser
 * the transport must be backed by a server (or in-process build) exposing
 * the same JSON documents as the CLI; tests use the subprocess transport.
 */

import { PRESETS } from "./presets.js";
import { renderCanvas } from "./renderer.js";
import { SceneT } from "./schema.js";
import { Transport } from "./transport.js";
import { UiState, lambdaFromSlider, sliderFromLambda } from "./state.js";

export interface Widgets {
  canvas: { getContext(kind: "2d"): CanvasRenderingContext2D | null };
  presetSelect: { value: string; onchange: null | (() => void) };
  lambdaSlider: { value: string; oninput: null | (() => void) };
  muSlider: { value: string; oninput: null | (() => void) };
  nuReadout: { textContent: string | null };
  badge: { textContent: string | null };
}

export const DEFAULT_VIEWPORT: [number, number, number, number] = [-5, -5, 5, 5];

export class App {
  state: UiState;

  constructor(
    private readonly transport: Transport,
    private readonly widgets: Widgets,
    preset: keyof typeof PRESETS = "incenter",
  ) {
    this.state = new UiState(transport, structuredClone(PRESETS[preset]) as SceneT);
  }

  repaint(viewport = DEFAULT_VIEWPORT): void {
    const doc = this.state.renderPrimitives(viewport);
    const ctx = this.widgets.canvas.getContext("2d");
    if (ctx) renderCanvas(ctx, doc.primitives, viewport);
  }

  onLambdaSlider(): void {
    this.state.lam = lambdaFromSlider(Number(this.widgets.lambdaSlider.value));
    this.syncNu();
  }

  onMuSlider(): void {
    this.state.mu = lambdaFromSlider(Number(this.widgets.muSlider.value));
    this.syncNu();
  }

  private syncNu(): void {
    const [p, q] = this.state.nu;
    this.widgets.nuReadout.textContent = `nu = [${p}, ${q}] (slider ${sliderFromLambda([p, q]).toFixed(4)})`;
  }

  toggleIncenter(triangle: string): void {
    this.state.overlays.incenter = !this.state.overlays.incenter;
    if (!this.state.overlays.incenter) return;
    const res = this.state.evaluate({ op: "centers", triangle });
    const incenter = res["incenter"] as { kind: string };
    this.widgets.badge.textContent = `incenter: ${incenter.kind}`;
  }
}
