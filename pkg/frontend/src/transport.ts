/**
 * Access to the geometry core.  The explorer computes nothing itself: every
 * number comes back from an evaluate() call against the core's JSON API.
 *
 * CliTransport shells out to the `moebius` command (used by the test suite
 * and local tooling); a browser deployment substitutes a transport that
 * POSTs the same documents to an in-process or remote core.
 */

import { spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import {
  ErrorDocT,
  QueryT,
  RenderDoc,
  RenderDocT,
  ResultDoc,
  SceneT,
  canonicalScene,
} from "./schema.js";

export interface Transport {
  evaluate(scene: SceneT, query: QueryT): Record<string, unknown>;
  render(scene: SceneT, viewport: [number, number, number, number]): RenderDocT;
}

export class TransportError extends Error {
  doc: ErrorDocT;
  constructor(doc: ErrorDocT) {
    super(doc.message);
    this.doc = doc;
  }
}

/** Map each query op onto the CLI subcommand that owns it. */
export const OP_COMMANDS: Record<string, string> = {
  "classify-cycle": "classify",
  pencil: "pencil",
  "cevian-range": "pencil",
  bisector: "pencil",
  midcycles: "pencil",
  regime: "pencil",
  "orthogonal-pencil": "pencil",
  split: "split",
  triangle: "triangle",
  ceva: "ceva",
  menelaus: "menelaus",
  centers: "centers",
  altitudes: "centers",
  excircle: "centers",
  dual: "dual",
  isogonal: "isogonal",
  "model-line": "model",
  "interpret-pencil": "model",
  perpendicular: "model",
  "menelaus-case": "model",
  "hyperbolic-point": "model",
};

export class CliTransport implements Transport {
  constructor(
    private readonly command: string[] = ["python3", "-m", "moebius.cli"],
    private readonly cwd?: string,
  ) {}

  private run(args: string[], scene: SceneT): string {
    const dir = mkdtempSync(join(tmpdir(), "moebius-"));
    try {
      const scenePath = join(dir, "scene.json");
      writeFileSync(scenePath, canonicalScene(scene));
      const outPath = join(dir, "out.json");
      const proc = spawnSync(
        this.command[0],
        [...this.command.slice(1), ...args, "--scene", scenePath, "--out", outPath],
        { cwd: this.cwd, encoding: "utf-8" },
      );
      if (proc.status !== 0) {
        const kind = proc.status === 2 ? "schema" : "geometry";
        throw new TransportError({
          error: kind,
          message: (proc.stderr || "core invocation failed").trim(),
        });
      }
      return readFileSync(outPath, "utf-8");
    } finally {
      rmSync(dir, { recursive: true, force: true });
    }
  }

  evaluate(scene: SceneT, query: QueryT): Record<string, unknown> {
    const command = OP_COMMANDS[query.op];
    if (command === undefined) {
      throw new TransportError({ error: "schema", message: `unknown op ${query.op}` });
    }
    const text = this.run([command, "--query", JSON.stringify(query)], scene);
    const doc = ResultDoc.parse(JSON.parse(text));
    return doc.results[0];
  }

  render(scene: SceneT, viewport: [number, number, number, number]): RenderDocT {
    const text = this.run(
      ["render", "--viewport", ...viewport.map((v) => String(v))],
      scene,
    );
    return RenderDoc.parse(JSON.parse(text));
  }
}
