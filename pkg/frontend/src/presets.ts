/**
 * Shipped figure presets.  The incenter, orthocenter, and ceva scenes are
 * byte-for-byte the documents under ../scenes/ (the CLI golden figures);
 * the tests enforce structural equality with those files.
 */

import { SceneT } from "./schema.js";

export const PRESETS: Record<string, SceneT> = {
  incenter: {
    triangles: {
      t: {
        vertices: [[4.0, 0.0], [0.0, 2.0], [0.0, -2.0]],
        angles: [0.7853981633974483, 2.356194490192345, 2.356194490192345],
        orientation: "ABC",
      },
    },
    queries: [
      { op: "triangle", triangle: "t" },
      { op: "centers", triangle: "t" },
      { op: "ceva", triangle: "t", lambdas: [[1, 1], [1, 1], [1, 1]], draw: true },
    ],
  },
  orthocenter: {
    triangles: {
      t: {
        vertices: [[0.0, 3.195406859853687], [-2.0, 0.5], [2.0, 0.5]],
        angles: [2.268869645993498, 0.10268677027022848, 0.10268677027022828],
        orientation: "ABC",
      },
    },
    queries: [
      { op: "triangle", triangle: "t" },
      { op: "centers", triangle: "t" },
      { op: "altitudes", triangle: "t", draw: true },
    ],
  },
  ceva: {
    triangles: {
      t: {
        vertices: [[0.0, 2.5], [-2.0, -1.0], [2.5, -0.5]],
        angles: [0.9, 1.1, 0.7],
        orientation: "ABC",
      },
    },
    queries: [
      { op: "triangle", triangle: "t" },
      { op: "ceva", triangle: "t", lambdas: [[2, 1], [3, 1], [1, 6]], draw: true },
      { op: "menelaus", triangle: "t", lambdas: [[2, 1], [3, 1], [-1, 6]] },
    ],
  },
  excircle: {
    triangles: {
      t: {
        vertices: [[0.0, 2.0], [-2.0, -1.0], [2.0, -1.0]],
        angles: [2.2, 0.465, 0.465],
        orientation: "ABC",
      },
    },
    queries: [
      { op: "triangle", triangle: "t" },
      { op: "excircle", angles: [2.2, 0.465, 0.465], side: "a" },
      { op: "excircle", angles: [2.2, 0.465, 0.465], side: "b" },
      { op: "centers", triangle: "t" },
    ],
  },
  menelaus: {
    triangles: {
      t: {
        vertices: [[0.0, 2.5], [-2.0, -1.0], [2.5, -0.5]],
        angles: [0.9, 1.1, 0.7],
        orientation: "ABC",
      },
    },
    queries: [
      { op: "triangle", triangle: "t" },
      { op: "menelaus", triangle: "t", lambdas: [[2, 1], [3, 1], [-1, 6]], draw: true },
    ],
  },
  isogonal: {
    triangles: {
      t: {
        vertices: [[0.0, 2.5], [-2.0, -1.0], [2.5, -0.5]],
        angles: [0.9, 1.1, 0.7],
        orientation: "ABC",
      },
    },
    queries: [
      { op: "ceva", triangle: "t", lambdas: [[2, 1], [3, 1], [1, 6]], draw: true },
      { op: "ceva", triangle: "t", lambdas: [[1, 2], [1, 3], [6, 1]], draw: true },
      { op: "isogonal", pencil: [1, 6, 3] },
    ],
  },
};

export const GOLDEN_PRESETS = ["incenter", "orthocenter", "ceva"] as const;
