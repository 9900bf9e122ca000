/**
 * Shared document schemas: scenes, queries, results, render primitives.
 *
 * These mirror the CLI's JSON formats exactly; the explorer never invents
 * its own geometry encodings.
 */

import { z } from "zod";

export const Pair = z.tuple([z.number(), z.number()]);
export type PairT = z.infer<typeof Pair>;

export const CycleForm = z.union([
  z.object({
    circle: z.object({
      center: Pair,
      r: z.number().positive(),
      ccw: z.boolean().optional(),
    }),
  }),
  z.object({ line: z.object({ point: Pair, dir: Pair }) }),
  z.object({ matrix: z.object({ k: z.number(), l: Pair, n: z.number() }) }),
]);

export const TriangleForm = z.object({
  vertices: z.tuple([Pair, Pair, Pair]),
  angles: z.tuple([z.number(), z.number(), z.number()]),
  orientation: z.enum(["ABC", "ACB"]),
});

export const Query = z
  .object({ op: z.string() })
  .catchall(z.unknown());
export type QueryT = z.infer<typeof Query>;

export const Scene = z.object({
  cycles: z.record(CycleForm).optional(),
  triangles: z.record(TriangleForm).optional(),
  queries: z.array(Query).optional(),
});
export type SceneT = z.infer<typeof Scene>;

export const Primitive = z.discriminatedUnion("kind", [
  z.object({
    kind: z.literal("circle"),
    cx: z.number(),
    cy: z.number(),
    r: z.number(),
    style: z.string(),
  }),
  z.object({
    kind: z.literal("line"),
    x1: z.number(),
    y1: z.number(),
    x2: z.number(),
    y2: z.number(),
    style: z.string(),
  }),
  z.object({
    kind: z.literal("arc"),
    cx: z.number(),
    cy: z.number(),
    r: z.number(),
    theta1: z.number(),
    theta2: z.number(),
    ccw: z.boolean(),
    style: z.string(),
  }),
  z.object({
    kind: z.literal("point"),
    x: z.number(),
    y: z.number(),
    style: z.string(),
  }),
]);
export type PrimitiveT = z.infer<typeof Primitive>;

export const RenderDoc = z.object({
  primitives: z.array(Primitive),
  viewport: z.tuple([z.number(), z.number(), z.number(), z.number()]),
});
export type RenderDocT = z.infer<typeof RenderDoc>;

export const ResultDoc = z.object({ results: z.array(z.record(z.unknown())) });

export const CevianRangeDoc = z.object({
  kind: z.enum(["elliptic", "parabolic", "hyperbolic"]),
  bisector: z.number(),
  external_bisector: z.number().optional(),
  forbidden: Pair.optional(),
  excluded: z.number().optional(),
});
export type CevianRangeT = z.infer<typeof CevianRangeDoc>;

export const ErrorDoc = z.object({
  error: z.enum(["schema", "geometry"]),
  message: z.string(),
});
export type ErrorDocT = z.infer<typeof ErrorDoc>;

/**
 * Canonical scene serialization: stable key order, two-space indentation,
 * trailing newline.  Export/import round-trips are byte identical and the
 * CLI parses the output directly.
 */
export function canonicalScene(scene: SceneT): string {
  return JSON.stringify(sortKeys(scene), null, 2) + "\n";
}

function sortKeys(value: unknown): unknown {
  if (Array.isArray(value)) return value.map(sortKeys);
  if (value !== null && typeof value === "object") {
    const out: Record<string, unknown> = {};
    for (const key of Object.keys(value as object).sort()) {
      out[key] = sortKeys((value as Record<string, unknown>)[key]);
    }
    return out;
  }
  return value;
}

export function parseScene(text: string): SceneT {
  return Scene.parse(JSON.parse(text));
}
