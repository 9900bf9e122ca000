/**
 * API-only architecture: the UI modules must not compute geometry.  Every
 * displayed number traces to an evaluate() or render() response; the only
 * numeric code allowed outside the renderer's coordinate transform is
 * projective pair bookkeeping for the sliders.
 */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

const SRC = join(dirname(fileURLToPath(import.meta.url)), "..", "src");

const GEOMETRY_TOKENS = [
  "Math.cos",
  "Math.sin",
  "Math.tan",
  "Math.acos",
  "Math.asin",
  "Math.atan",
  "Math.cosh",
  "Math.sinh",
  "Math.acosh",
  "Math.sqrt",
  "Math.hypot",
  "Math.exp",
  "Math.log",
];

describe("geometry stays in the core", () => {
  for (const file of ["state.ts", "app.ts", "schema.ts", "transport.ts", "presets.ts"]) {
    it(`${file} contains no trigonometry or norms`, () => {
      const text = readFileSync(join(SRC, file), "utf-8");
      for (const token of GEOMETRY_TOKENS) {
        expect(text.includes(token), `${file} uses ${token}`).toBe(false);
      }
    });
  }

  it("renderer only maps coordinates (no inverse trig, roots, or logs)", () => {
    const text = readFileSync(join(SRC, "renderer.ts"), "utf-8");
    for (const token of GEOMETRY_TOKENS) {
      expect(text.includes(token), `renderer uses ${token}`).toBe(false);
    }
  });
});
