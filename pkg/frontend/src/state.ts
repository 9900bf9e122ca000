/**
 * UI state: the current scene, slider bindings, and overlay toggles.
 *
 * This module is deliberately geometry-free.  It edits scene documents,
 * completes the third cevian parameter from the Ceva or Menelaus
 * constraint (pure projective pair arithmetic), and forwards everything
 * else to the core through a Transport.  Slider positions use an algebraic
 * compactification of the projective line so that infinity is reachable.
 */

import { CevianRangeDoc, CevianRangeT, QueryT, RenderDocT, SceneT } from "./schema.js";
import { Transport } from "./transport.js";

export type ProjectivePair = [number, number];

export type ConstraintMode = "ceva" | "menelaus";

export interface SliderGap {
  /** forbidden closed interval in slider coordinates, when present */
  lo: number;
  hi: number;
  /** the raw splitting-factor endpoints reported by the core */
  lambdaLo: number;
  lambdaHi: number;
}

export interface Overlays {
  incenter: boolean;
  excenters: boolean;
  orthocenter: boolean;
  duality: boolean;
  isogonal: boolean;
}

/** Compactify a projective value p/q onto (-2, 2]: the identity on [-1, 1],
 * the reciprocal branch 2 - 1/lam on (1, 2], its mirror on [-2, -1), and
 * infinity exactly at t = 2 (the slider wraps around). */
export function sliderFromLambda(pair: ProjectivePair): number {
  let [p, q] = pair;
  if (q < 0 || (q === 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  if (Math.abs(p) <= Math.abs(q)) {
    return p / q;
  }
  return p > 0 ? 2 - q / p : -2 - q / p;
}

export function lambdaFromSlider(t: number): ProjectivePair {
  if (Math.abs(t) <= 1) {
    return [t, 1];
  }
  return t > 0 ? [1, 2 - t] : [1, -2 - t];
}

export function multiplyPairs(a: ProjectivePair, b: ProjectivePair): ProjectivePair {
  return [a[0] * b[0], a[1] * b[1]];
}

/** Complete nu so that lam * mu * nu equals 1 (Ceva) or -1 (Menelaus). */
export function completeNu(
  lam: ProjectivePair,
  mu: ProjectivePair,
  mode: ConstraintMode,
): ProjectivePair {
  const sign = mode === "ceva" ? 1 : -1;
  return [sign * lam[1] * mu[1], lam[0] * mu[0]];
}

export class UiState {
  scene: SceneT;
  selectedFrame: string | null = null;
  mode: ConstraintMode = "ceva";
  lam: ProjectivePair = [1, 1];
  mu: ProjectivePair = [1, 1];
  overlays: Overlays = {
    incenter: false,
    excenters: false,
    orthocenter: false,
    duality: false,
    isogonal: false,
  };

  constructor(
    private readonly transport: Transport,
    scene: SceneT,
  ) {
    this.scene = scene;
    const triangles = Object.keys(scene.triangles ?? {});
    this.selectedFrame = triangles.length ? triangles[0] : null;
  }

  get nu(): ProjectivePair {
    return completeNu(this.lam, this.mu, this.mode);
  }

  evaluate(query: QueryT): Record<string, unknown> {
    return this.transport.evaluate(this.scene, query);
  }

  renderPrimitives(viewport: [number, number, number, number]): RenderDocT {
    return this.transport.render(this.scene, viewport);
  }

  /** Move a triangle vertex; the next render re-synthesizes through the core. */
  dragVertex(triangle: string, index: 0 | 1 | 2, to: [number, number]): void {
    const tri = this.scene.triangles?.[triangle];
    if (!tri) throw new Error(`unknown triangle ${triangle}`);
    const vertices = tri.vertices.map((v, i) => (i === index ? to : v)) as [
      [number, number],
      [number, number],
      [number, number],
    ];
    this.scene = {
      ...this.scene,
      triangles: { ...this.scene.triangles, [triangle]: { ...tri, vertices } },
    };
  }

  setAngles(triangle: string, angles: [number, number, number]): void {
    const tri = this.scene.triangles?.[triangle];
    if (!tri) throw new Error(`unknown triangle ${triangle}`);
    this.scene = {
      ...this.scene,
      triangles: { ...this.scene.triangles, [triangle]: { ...tri, angles } },
    };
  }

  /** The lambda-slider gap for the digon of two named cycles, from the
   * core's cevian-range document.  Returns null for elliptic pencils. */
  sliderGap(cycleA: string, cycleB: string): SliderGap | null {
    const res = this.evaluate({
      op: "cevian-range",
      cycles: [cycleA, cycleB],
    });
    const range: CevianRangeT = CevianRangeDoc.parse(res["range"]);
    if (!range.forbidden) return null;
    const [lambdaLo, lambdaHi] = range.forbidden;
    return {
      lo: sliderFromLambda([lambdaLo, 1]),
      hi: sliderFromLambda([lambdaHi, 1]),
      lambdaLo,
      lambdaHi,
    };
  }

  cevianQuery(frameOrTriangle: { frame?: string[]; triangle?: string }): QueryT {
    return {
      op: this.mode,
      ...frameOrTriangle,
      lambdas: [this.lam, this.mu, this.nu],
    };
  }
}
