"""Batch command line: scene in, JSON results and SVG figures out.

Every subcommand reads a scene file, executes the matching queries (from the
scene's query list, or a single inline --query document), and writes a
deterministic JSON result document.  `render` additionally emits SVG.

Exit codes: 0 success, 2 schema error, 3 geometric precondition failure.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import errors
from .projective import DEFAULT_TOL
from .render import Viewport, render_svg
from .scene import OP_FAMILIES, Scene, dumps, parse_scene, run_query, scene_primitives

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_GEOMETRY = 3

COMMANDS = ("classify", "pencil", "split", "triangle", "ceva", "menelaus",
            "centers", "dual", "isogonal", "model", "render")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moebius",
        description="Cycle geometry of the Moebius plane: pencils, triangles, "
                    "Ceva/Menelaus, centers, duality, isogonal conjugation.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, help=f"run {name} queries from a scene")
        p.add_argument("--scene", required=True, help="scene JSON file")
        p.add_argument("--out", help="output file (default stdout)")
        p.add_argument("--query", help="inline JSON query document")
        p.add_argument("--tol", type=float, default=None,
                       help="classification tolerance (default 1e-9, "
                            "env MOEBIUS_TOL)")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized search subqueries")
        if name == "render":
            p.add_argument("--svg", help="SVG output file")
            p.add_argument("--viewport", nargs=4, type=float,
                           metavar=("XMIN", "YMIN", "XMAX", "YMAX"),
                           default=[-5.0, -5.0, 5.0, 5.0])
    return parser


def resolve_tol(flag_value) -> float:
    if flag_value is not None:
        return float(flag_value)
    env = os.environ.get("MOEBIUS_TOL")
    if env:
        try:
            return float(env)
        except ValueError as exc:
            raise errors.SchemaError(f"bad MOEBIUS_TOL {env!r}") from exc
    return DEFAULT_TOL


def _load_scene(path: str, tol: float) -> Scene:
    try:
        with open(path, "rb") as fh:
            text = fh.read().decode("utf-8")
    except OSError as exc:
        raise errors.SchemaError(f"cannot read scene {path!r}: {exc}") from exc
    return parse_scene(text, tol)


def _select_queries(scene: Scene, command: str, inline: str | None) -> list[dict]:
    if inline is not None:
        import json
        try:
            q = json.loads(inline)
        except json.JSONDecodeError as exc:
            raise errors.SchemaError(f"bad --query JSON: {exc}") from exc
        if not isinstance(q, dict) or not isinstance(q.get("op"), str):
            raise errors.SchemaError("--query must be an object with 'op'")
        return [q]
    family = OP_FAMILIES[command]
    return [q for q in scene.queries if q["op"] in family]


def _write(path: str | None, data: bytes):
    if path is None:
        sys.stdout.buffer.write(data)
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        tol = resolve_tol(args.tol)
        scene = _load_scene(args.scene, tol)
        if args.command == "render":
            vp = Viewport(*args.viewport)
            prims = scene_primitives(scene, vp, tol)
            doc = {"primitives": prims,
                   "viewport": [vp.xmin, vp.ymin, vp.xmax, vp.ymax]}
            _write(args.out, dumps(doc).encode())
            if args.svg:
                _write(args.svg, render_svg(prims, vp))
            return EXIT_OK
        queries = _select_queries(scene, args.command, args.query)
        results = [run_query(scene, q, tol, args.seed) for q in queries]
        _write(args.out, dumps({"results": results}).encode())
        return EXIT_OK
    except errors.SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except errors.MoebiusError as exc:
        print(f"geometry error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY


if __name__ == "__main__":
    sys.exit(main())
