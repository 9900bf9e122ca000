/**
 * Paint render primitives onto a 2D canvas context.
 *
 * The world-to-screen transform matches the CLI's SVG writer exactly
 * (isotropic scale, y axis flipped), so the painted frame and the SVG
 * figure coincide for the same primitive list.
 */

import { PrimitiveT } from "./schema.js";

export interface Canvas2DLike {
  beginPath(): void;
  arc(
    x: number,
    y: number,
    r: number,
    start: number,
    end: number,
    counterclockwise?: boolean,
  ): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  stroke(): void;
  fill(): void;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  fillStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
  setLineDash(segments: number[]): void;
}

export const STYLE_TABLE: Record<string, [string, number, number[] | null]> = {
  cycle: ["#4878a8", 1.5, null],
  side: ["#202020", 2.5, null],
  circumcircle: ["#b0b0b0", 1.0, [6, 4]],
  cevian: ["#c03030", 1.5, null],
  common: ["#2858c8", 1.5, [6, 4]],
  perp: ["#309048", 1.5, [4, 3]],
  bisector: ["#c03030", 1.5, null],
  altitude: ["#c03030", 1.5, null],
  vertex: ["#000000", 0.0, null],
  default: ["#666666", 1.0, null],
};

export interface ScreenTransform {
  scale: number;
  sx(x: number): number;
  sy(y: number): number;
  width: number;
  height: number;
}

export function screenTransform(
  viewport: [number, number, number, number],
  widthPx = 640,
): ScreenTransform {
  const [xmin, ymin, xmax, ymax] = viewport;
  const scale = widthPx / (xmax - xmin);
  return {
    scale,
    sx: (x) => (x - xmin) * scale,
    sy: (y) => (ymax - y) * scale,
    width: widthPx,
    height: (ymax - ymin) * scale,
  };
}

const POINT_RADIUS_PX = 3;

/** One stroke (or fill, for points) per primitive, in list order. */
export function renderCanvas(
  ctx: Canvas2DLike,
  primitives: PrimitiveT[],
  viewport: [number, number, number, number],
  widthPx = 640,
): void {
  const t = screenTransform(viewport, widthPx);
  for (const pr of primitives) {
    const [stroke, width, dash] = STYLE_TABLE[pr.style] ?? STYLE_TABLE.default;
    ctx.beginPath();
    if (pr.kind === "point") {
      ctx.fillStyle = stroke;
      ctx.arc(t.sx(pr.x), t.sy(pr.y), POINT_RADIUS_PX, 0, 2 * Math.PI);
      ctx.fill();
      continue;
    }
    ctx.strokeStyle = stroke;
    ctx.lineWidth = width;
    ctx.setLineDash(dash ?? []);
    if (pr.kind === "circle") {
      ctx.arc(t.sx(pr.cx), t.sy(pr.cy), pr.r * t.scale, 0, 2 * Math.PI);
    } else if (pr.kind === "line") {
      ctx.moveTo(t.sx(pr.x1), t.sy(pr.y1));
      ctx.lineTo(t.sx(pr.x2), t.sy(pr.y2));
    } else {
      // world angles run counterclockwise with y up; the y flip mirrors the
      // sweep direction, so screen angles are negated
      ctx.arc(
        t.sx(pr.cx),
        t.sy(pr.cy),
        pr.r * t.scale,
        -pr.theta1,
        -pr.theta2,
        pr.ccw,
      );
    }
    ctx.stroke();
  }
}

/** A recording context for tests: captures every painted command. */
export class RecordingContext implements Canvas2DLike {
  calls: Array<Record<string, unknown>> = [];
  private pending: Array<Record<string, unknown>> = [];
  private style: Record<string, unknown> = {};

  beginPath(): void {
    this.pending = [];
  }
  arc(x: number, y: number, r: number, start: number, end: number, ccw?: boolean): void {
    this.pending.push({ op: "arc", x, y, r, start, end, ccw: !!ccw });
  }
  moveTo(x: number, y: number): void {
    this.pending.push({ op: "moveTo", x, y });
  }
  lineTo(x: number, y: number): void {
    this.pending.push({ op: "lineTo", x, y });
  }
  stroke(): void {
    this.calls.push({ op: "stroke", path: this.pending, ...this.style });
  }
  fill(): void {
    this.calls.push({ op: "fill", path: this.pending, ...this.style });
  }
  set strokeStyle(v: string | CanvasGradient | CanvasPattern) {
    this.style = { ...this.style, strokeStyle: String(v) };
  }
  get strokeStyle(): string {
    return String(this.style.strokeStyle ?? "");
  }
  set fillStyle(v: string | CanvasGradient | CanvasPattern) {
    this.style = { ...this.style, fillStyle: String(v) };
  }
  get fillStyle(): string {
    return String(this.style.fillStyle ?? "");
  }
  set lineWidth(v: number) {
    this.style = { ...this.style, lineWidth: v };
  }
  get lineWidth(): number {
    return Number(this.style.lineWidth ?? 0);
  }
  setLineDash(segments: number[]): void {
    this.style = { ...this.style, dash: segments.join(",") };
  }
}
