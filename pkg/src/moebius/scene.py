"""Scene documents: named cycles and triangles plus a query list.

Scenes are JSON; homogeneous values are always serialized as pairs or
triples (never divided into floats) and results are emitted with sorted
keys so identical inputs produce identical bytes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from . import errors, models, pencils, theorems, triangles
from .cycles import (CycleVec, OrientedCycle, classify, cosine_regime,
                     from_circle, from_line, midcycles, normalize)
from .frames import TriangleFrame, coords, cycle_at, frame
from .projective import DEFAULT_TOL, Point, ProjectiveReal
from .render import (Viewport, arc_primitives, cycle_primitives,
                     point_primitive, triangle_primitives)
from .theorems import (CenterReport, altitude_cycle, ceva, complement_cycle,
                       complement_pencil, duality, excircle_class,
                       incenter_excenters, isogonal_cycle, isogonal_pencil,
                       menelaus, orthocenter, pencil_type_X, cycle_type_Y)


@dataclass
class Scene:
    cycles: dict[str, OrientedCycle] = field(default_factory=dict)
    triangles: dict[str, triangles.TriangleSides] = field(default_factory=dict)
    triangle_specs: dict[str, triangles.TriangleSpec] = field(default_factory=dict)
    queries: list[dict] = field(default_factory=list)


def _require(cond: bool, msg: str):
    if not cond:
        raise errors.SchemaError(msg)


def _as_complex(val, what: str) -> complex:
    _require(isinstance(val, (list, tuple)) and len(val) == 2
             and all(isinstance(x, (int, float)) for x in val),
             f"{what} must be a [re, im] pair")
    return complex(val[0], val[1])


def _parse_cycle(name: str, spec, tol: float) -> OrientedCycle:
    _require(isinstance(spec, dict) and len(spec) == 1,
             f"cycle {name!r} needs exactly one form")
    (form, body), = spec.items()
    if form == "circle":
        center = _as_complex(body.get("center"), f"cycle {name!r} center")
        r = body.get("r")
        _require(isinstance(r, (int, float)) and r > 0,
                 f"cycle {name!r} needs a positive radius")
        signed = float(r) if body.get("ccw", True) else -float(r)
        return from_circle(center, signed)
    if form == "line":
        point = _as_complex(body.get("point"), f"cycle {name!r} point")
        d = _as_complex(body.get("dir"), f"cycle {name!r} dir")
        _require(abs(d) > 0, f"cycle {name!r} direction must be nonzero")
        return from_line(point, d)
    if form == "matrix":
        for key in ("k", "n"):
            _require(isinstance(body.get(key), (int, float)),
                     f"cycle {name!r} matrix needs real {key}")
        l = body.get("l")
        _require(isinstance(l, (list, tuple)) and len(l) == 2,
                 f"cycle {name!r} matrix needs l as [re, im]")
        vec = CycleVec(float(body["k"]), float(l[0]), float(l[1]), float(body["n"]))
        try:
            return normalize(vec, tol=tol)
        except errors.MoebiusError as exc:
            raise errors.SchemaError(f"cycle {name!r}: {exc}") from exc
    raise errors.SchemaError(f"cycle {name!r} has unknown form {form!r}")


def _parse_triangle(name: str, body, tol: float) -> triangles.TriangleSpec:
    _require(isinstance(body, dict), f"triangle {name!r} must be an object")
    verts = body.get("vertices")
    _require(isinstance(verts, list) and len(verts) == 3,
             f"triangle {name!r} needs three vertices")
    pts = []
    for v in verts:
        if v == "inf":
            pts.append(Point.infinity())
        else:
            pts.append(Point.of(_as_complex(v, f"triangle {name!r} vertex")))
    ang = body.get("angles")
    _require(isinstance(ang, list) and len(ang) == 3
             and all(isinstance(x, (int, float)) for x in ang),
             f"triangle {name!r} needs three angles")
    orientation = body.get("orientation", "ABC")
    _require(orientation in ("ABC", "ACB"),
             f"triangle {name!r} orientation must be ABC or ACB")
    return triangles.TriangleSpec(pts[0], pts[1], pts[2],
                                  float(ang[0]), float(ang[1]), float(ang[2]),
                                  orientation)


def parse_scene(text: str, tol: float = DEFAULT_TOL) -> Scene:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise errors.SchemaError(f"invalid JSON: {exc}") from exc
    _require(isinstance(doc, dict), "scene must be a JSON object")
    scene = Scene()
    for name, spec in (doc.get("cycles") or {}).items():
        _require(name not in scene.cycles, f"duplicate cycle {name!r}")
        scene.cycles[name] = _parse_cycle(name, spec, tol)
    for name, body in (doc.get("triangles") or {}).items():
        _require(name not in scene.triangles, f"duplicate triangle {name!r}")
        spec = _parse_triangle(name, body, tol)
        try:
            scene.triangles[name] = triangles.synthesize(spec, tol)
        except errors.MoebiusError as exc:
            raise errors.SchemaError(f"triangle {name!r}: {exc}") from exc
        scene.triangle_specs[name] = spec
    queries = doc.get("queries") or []
    _require(isinstance(queries, list), "queries must be a list")
    for q in queries:
        _require(isinstance(q, dict) and isinstance(q.get("op"), str),
                 "each query needs an 'op' string")
        scene.queries.append(q)
    return scene


# --------------------------------------------------------------------------
# serialization helpers

def vec_json(v) -> list[float]:
    v = CycleVec.of(v)
    return [v.k, v.l_re, v.l_im, v.n]


def point_json(p: Point):
    if p.is_infinite:
        return "inf"
    z = p.value()
    return [z.real, z.imag]


def lam_json(lam: ProjectiveReal) -> list[float]:
    return [lam.p, lam.q]


def triple_json(t) -> list[float]:
    arr = t.as_array()
    return [float(x) for x in arr]


def _json_default(obj):
    import numpy as np
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON serializable: {type(obj)}")


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"),
                      allow_nan=False, default=_json_default) + "\n"


# --------------------------------------------------------------------------
# query execution

OP_FAMILIES = {
    "classify": ("classify-cycle",),
    "pencil": ("pencil", "cevian-range", "bisector", "midcycles", "regime",
               "orthogonal-pencil"),
    "split": ("split",),
    "triangle": ("triangle",),
    "ceva": ("ceva",),
    "menelaus": ("menelaus",),
    "centers": ("centers", "altitudes", "excircle"),
    "dual": ("dual",),
    "isogonal": ("isogonal",),
    "model": ("model-line", "interpret-pencil", "perpendicular",
              "menelaus-case", "hyperbolic-point"),
    "render": (),
}


class QueryContext:
    def __init__(self, scene: Scene, tol: float = DEFAULT_TOL, seed: int = 0):
        self.scene = scene
        self.tol = tol
        self.seed = seed

    def cycle(self, name) -> OrientedCycle:
        _require(isinstance(name, str) and name in self.scene.cycles,
                 f"unknown cycle {name!r}")
        return self.scene.cycles[name]

    def cycle_list(self, q, key, count) -> list[OrientedCycle]:
        names = q.get(key)
        _require(isinstance(names, list) and len(names) == count,
                 f"query needs {count} names under {key!r}")
        return [self.cycle(n) for n in names]

    def frame_of(self, q) -> TriangleFrame:
        if "triangle" in q:
            name = q["triangle"]
            _require(name in self.scene.triangles, f"unknown triangle {name!r}")
            t = self.scene.triangles[name]
            if t.degenerate:
                raise errors.NotProper("degenerate triangle has no frame")
            return frame(t.a, t.b, t.c, self.tol)
        sides = self.cycle_list(q, "frame", 3)
        return frame(*sides, self.tol)

    def lambdas(self, q) -> tuple[ProjectiveReal, ProjectiveReal, ProjectiveReal]:
        lams = q.get("lambdas")
        _require(isinstance(lams, list) and len(lams) == 3
                 and all(isinstance(x, list) and len(x) == 2 for x in lams),
                 "query needs 'lambdas': three [p, q] pairs")
        return tuple(ProjectiveReal(float(p), float(qq)) for p, qq in lams)


def _class_json(cls) -> dict:
    out = {"tag": cls.tag, "det": cls.det}
    if cls.point is not None:
        out["point"] = point_json(cls.point)
    if cls.center is not None:
        out["center"] = point_json(cls.center)
        if cls.radius_sq is not None:
            out["radius_sq"] = cls.radius_sq
    return out


def _range_json(rng: pencils.CevianRange) -> dict:
    out = {"kind": rng.kind, "bisector": rng.bisector}
    if rng.external_bisector is not None:
        out["external_bisector"] = rng.external_bisector
    if rng.forbidden is not None:
        out["forbidden"] = [rng.forbidden[0], rng.forbidden[1]]
    if rng.excluded is not None:
        out["excluded"] = rng.excluded
    return out


def _center_json(rep: CenterReport) -> dict:
    return {"coords": triple_json(rep.coords), "kind": rep.kind,
            "splitter": rep.splitter, "values": list(rep.values), "X": rep.X}


def run_query(scene: Scene, q: dict, tol: float = DEFAULT_TOL,
              seed: int = 0) -> dict:
    """Execute one query against the scene, returning a result document."""
    ctx = QueryContext(scene, tol, seed)
    op = q["op"]
    handler = _HANDLERS.get(op)
    _require(handler is not None, f"unknown op {op!r}")
    try:
        out = handler(ctx, q)
    except (TypeError, ValueError, KeyError) as exc:
        raise errors.SchemaError(f"bad arguments for {op!r}: {exc}") from exc
    out["op"] = op
    return out


def _op_classify_cycle(ctx: QueryContext, q) -> dict:
    a = ctx.cycle(q.get("cycle"))
    return {"class": _class_json(classify(a.v, ctx.tol)), "vec": vec_json(a)}


def _op_pencil(ctx: QueryContext, q) -> dict:
    a, b = ctx.cycle_list(q, "cycles", 2)
    p = pencils.span(a, b, ctx.tol)
    pts = pencils.distinguished_points(p, ctx.tol)
    return {"type": p.kind, "gram": p.gram, "gram_det": p.gram_det,
            "distinguished": [point_json(x) for x in pts],
            "range": _range_json(pencils.cevian_range(a, b, ctx.tol))}


def _op_cevian_range(ctx: QueryContext, q) -> dict:
    a, b = ctx.cycle_list(q, "cycles", 2)
    return {"range": _range_json(pencils.cevian_range(a, b, ctx.tol)),
            "gram": a.inner(b)}


def _op_bisector(ctx: QueryContext, q) -> dict:
    a, b = ctx.cycle_list(q, "cycles", 2)
    bis, ext = pencils.bisector(a, b, ctx.tol)
    out = {"bisector": vec_json(bis)}
    if ext is not None:
        out["external"] = vec_json(ext)
    return out


def _op_midcycles(ctx: QueryContext, q) -> dict:
    a, b = ctx.cycle_list(q, "cycles", 2)
    return {"midcycles": [vec_json(m) for m in midcycles(a, b, ctx.tol)]}


def _op_regime(ctx: QueryContext, q) -> dict:
    a, b = ctx.cycle_list(q, "cycles", 2)
    reg = cosine_regime(a, b, ctx.tol)
    out = {"kind": reg.kind, "inner": reg.inner}
    if reg.angle is not None:
        out["angle"] = reg.angle
    if reg.points:
        out["points"] = [point_json(p) for p in reg.points]
    if reg.xi is not None:
        out["xi"] = reg.xi
    if reg.mu is not None:
        out["mu"] = reg.mu
        out["side"] = reg.side
    return out


def _op_orthogonal_pencil(ctx: QueryContext, q) -> dict:
    a, b = ctx.cycle_list(q, "cycles", 2)
    p = pencils.orthogonal_pencil(pencils.span(a, b, ctx.tol), ctx.tol)
    return {"type": p.kind, "basis": [vec_json(p.a), vec_json(p.b)]}


def _op_split(ctx: QueryContext, q) -> dict:
    a, b, c = ctx.cycle_list(q, "cycles", 3)
    lam = pencils.splitting_factor(a, b, c.v)
    return {"lambda": lam_json(lam)}


def _op_triangle(ctx: QueryContext, q) -> dict:
    name = q.get("triangle")
    _require(name in ctx.scene.triangles, f"unknown triangle {name!r}")
    t = ctx.scene.triangles[name]
    meas = triangles.measure_angles(t)
    out = {
        "sides": {"a": vec_json(t.a), "b": vec_json(t.b), "c": vec_json(t.c)},
        "circumcircle": vec_json(t.s),
        "measured_angles": list(meas),
        "degenerate": t.degenerate,
    }
    if not t.degenerate and all(x < math.pi for x in meas):
        out["model"] = triangles.classify_model(meas, ctx.tol)
        out["side_split"] = {w: triangles.side_split(meas, w, ctx.tol)
                             for w in ("a", "b", "c")}
    return out


def _op_ceva(ctx: QueryContext, q) -> dict:
    fr = ctx.frame_of(q)
    res = ceva(fr, *ctx.lambdas(q), ctx.tol)
    out = {"collinear": res.collinear,
           "cevians": [triple_json(c) for c in res.cevians]}
    if res.collinear:
        out["pencil"] = triple_json(res.pencil)
        out["pencil_type"] = res.pencil_type
        out["X"] = res.X
        if res.mutual is not None:
            out["mutual"] = lam_json(res.mutual)
    return out


def _op_menelaus(ctx: QueryContext, q) -> dict:
    fr = ctx.frame_of(q)
    res = menelaus(fr, *ctx.lambdas(q), ctx.tol)
    out = {"concurrent": res.concurrent,
           "cevians": [triple_json(c) for c in res.cevians]}
    if res.concurrent:
        out["common"] = triple_json(res.common)
        out["cycle_class"] = res.cycle_class
        out["Y"] = res.Y
        if res.factor is not None:
            out["factor"] = lam_json(res.factor)
    return out


def _op_centers(ctx: QueryContext, q) -> dict:
    fr = ctx.frame_of(q)
    reps = incenter_excenters(fr, ctx.tol)
    out = {name: _center_json(rep) for name, rep in reps.items()}
    h = orthocenter(fr, ctx.tol)
    if h is None:
        out["orthocenter"] = None
    else:
        x_val, kind = pencil_type_X(fr, h, ctx.tol)
        out["orthocenter"] = {"coords": triple_json(h), "kind": kind, "X": x_val}
    return out


def _op_altitudes(ctx: QueryContext, q) -> dict:
    fr = ctx.frame_of(q)
    out = {}
    for v in ("a", "b", "c"):
        lam = theorems.altitude(fr, v, ctx.tol)
        out[v] = None if lam is None else {
            "lambda": lam_json(lam), "vec": vec_json(altitude_cycle(fr, v))}
    h = orthocenter(fr, ctx.tol)
    out["orthocenter"] = None if h is None else triple_json(h)
    return out


def _op_excircle(ctx: QueryContext, q) -> dict:
    ang = q.get("angles")
    _require(isinstance(ang, list) and len(ang) == 3, "needs 'angles' triple")
    side = q.get("side")
    _require(side in ("a", "b", "c"), "needs 'side' in a|b|c")
    return {"excircle": excircle_class(*(float(x) for x in ang), side, ctx.tol)}


def _op_dual(ctx: QueryContext, q) -> dict:
    fr = ctx.frame_of(q)
    dm = duality(fr, ctx.tol)
    out = {"det_gram": dm.det_gram,
           "T": [[float(x) for x in row] for row in dm.T]}
    if "pencil" in q:
        t = complement_pencil(dm, q["pencil"])
        vec, cls = cycle_at(fr, t)
        out["complement"] = triple_json(t)
        out["complement_class"] = _class_json(classify(vec, ctx.tol))
    elif "cycle" in q:
        out["complement"] = triple_json(complement_cycle(dm, q["cycle"]))
    return out


def _op_isogonal(ctx: QueryContext, q) -> dict:
    if "pencil" in q:
        return {"conjugate": triple_json(isogonal_pencil(q["pencil"], ctx.tol))}
    if "cycle" in q:
        return {"conjugate": triple_json(isogonal_cycle(q["cycle"], ctx.tol))}
    raise errors.SchemaError("isogonal needs 'pencil' or 'cycle' coordinates")


def _op_model_line(ctx: QueryContext, q) -> dict:
    a = ctx.cycle(q.get("cycle"))
    model = q.get("model")
    _require(model in models.MODELS, "needs 'model' in spherical|euclidean|hyperbolic")
    return {"is_line": models.is_model_line(model, a, math.sqrt(ctx.tol))}


def _op_interpret_pencil(ctx: QueryContext, q) -> dict:
    a, b = ctx.cycle_list(q, "cycles", 2)
    model = q.get("model")
    _require(model in models.MODELS, "needs 'model' in spherical|euclidean|hyperbolic")
    itp = models.interpret_pencil(model, pencils.span(a, b, ctx.tol), ctx.tol)
    out = {"model": itp.model, "kind": itp.kind}
    if itp.point is not None:
        out["point"] = point_json(itp.point)
    if itp.points:
        out["points"] = [point_json(p) for p in itp.points]
    if itp.direction is not None:
        out["direction"] = [itp.direction.real, itp.direction.imag]
    if itp.line is not None:
        out["line"] = vec_json(itp.line)
    return out


def _op_perpendicular(ctx: QueryContext, q) -> dict:
    a, b = ctx.cycle_list(q, "cycles", 2)
    p = models.common_perpendicular(a, b, ctx.tol)
    return {"perpendicular": vec_json(p),
            "distance": models.hyperbolic_line_distance(a, b, ctx.tol)}


def _op_menelaus_case(ctx: QueryContext, q) -> dict:
    fr = ctx.frame_of(q)
    cevs = ctx.cycle_list(q, "cevians", 3)
    mc = models.menelaus_case(fr, cevs, ctx.tol)
    return {"case": mc.case, "crossing": [bool(x) for x in mc.crossing],
            "common": triple_json(mc.result.common),
            "cycle_class": mc.result.cycle_class,
            "perpendiculars": [None if p is None else vec_json(p)
                               for p in mc.perpendiculars]}


def _op_hyperbolic_point(ctx: QueryContext, q) -> dict:
    if "point" in q:
        z = _as_complex(q["point"], "hyperbolic point")
        return {"vec": vec_json(models.hyperbolic_point_to_cycle(z))}
    if "cycle" in q:
        body = q["cycle"]
        _require(isinstance(body, list) and len(body) == 4,
                 "needs 'cycle' as a 4-vector")
        vec = CycleVec(*(float(x) for x in body))
        return {"point": point_json(models.cycle_to_hyperbolic_point(vec, ctx.tol))}
    raise errors.SchemaError("hyperbolic-point needs 'point' or 'cycle'")


_HANDLERS = {
    "classify-cycle": _op_classify_cycle,
    "pencil": _op_pencil,
    "cevian-range": _op_cevian_range,
    "bisector": _op_bisector,
    "midcycles": _op_midcycles,
    "regime": _op_regime,
    "orthogonal-pencil": _op_orthogonal_pencil,
    "split": _op_split,
    "triangle": _op_triangle,
    "ceva": _op_ceva,
    "menelaus": _op_menelaus,
    "centers": _op_centers,
    "altitudes": _op_altitudes,
    "excircle": _op_excircle,
    "dual": _op_dual,
    "isogonal": _op_isogonal,
    "model-line": _op_model_line,
    "interpret-pencil": _op_interpret_pencil,
    "perpendicular": _op_perpendicular,
    "menelaus-case": _op_menelaus_case,
    "hyperbolic-point": _op_hyperbolic_point,
}


# --------------------------------------------------------------------------
# rendering of scenes plus drawable query results

def scene_primitives(scene: Scene, vp: Viewport, tol: float = DEFAULT_TOL) -> list[dict]:
    """Primitives for every named object and every drawable query result."""
    prims: list[dict] = []
    for name in sorted(scene.cycles):
        prims.extend(cycle_primitives(scene.cycles[name], vp))
    for name in sorted(scene.triangles):
        t = scene.triangles[name]
        prims.extend(triangle_primitives(t, vp))
        prims.extend(cycle_primitives(t.s, vp, "circumcircle"))
    for q in scene.queries:
        if not q.get("draw"):
            continue
        prims.extend(_query_primitives(scene, q, vp, tol))
    return prims


def _query_primitives(scene: Scene, q: dict, vp: Viewport, tol: float) -> list[dict]:
    ctx = QueryContext(scene, tol)
    op = q["op"]
    prims: list[dict] = []
    if op == "ceva":
        fr = ctx.frame_of(q)
        res = ceva(fr, *ctx.lambdas(q), tol)
        for t in res.cevians:
            vec, cls = cycle_at(fr, t)
            if cls.tag == "elliptic":
                prims.extend(cycle_primitives(normalize(vec), vp, "cevian"))
    elif op == "menelaus":
        fr = ctx.frame_of(q)
        res = menelaus(fr, *ctx.lambdas(q), tol)
        for t in res.cevians:
            vec, cls = cycle_at(fr, t)
            if cls.tag == "elliptic":
                prims.extend(cycle_primitives(normalize(vec), vp, "cevian"))
        if res.concurrent:
            vec, cls = cycle_at(fr, res.common)
            if cls.tag == "elliptic":
                prims.extend(cycle_primitives(normalize(vec), vp, "common"))
    elif op == "altitudes":
        fr = ctx.frame_of(q)
        for v in ("a", "b", "c"):
            if theorems.altitude(fr, v, tol) is not None:
                vec = altitude_cycle(fr, v)
                if classify(vec, tol).tag == "elliptic":
                    prims.extend(cycle_primitives(normalize(vec), vp, "altitude"))
        h = orthocenter(fr, tol)
        if h is not None:
            x_val, kind = pencil_type_X(fr, h, tol)
            if kind == "hyperbolic" and all(
                    models.is_model_line("hyperbolic", s, 1e-6) for s in fr.basis):
                try:
                    na, _ = cycle_at(fr, (0.0, h.z, -h.y))
                    nb, _ = cycle_at(fr, (h.z, 0.0, -h.x))
                    p = pencils.span(normalize(na), normalize(nb), tol)
                    itp = models.interpret_pencil("hyperbolic", p, tol)
                    if itp.line is not None:
                        prims.extend(cycle_primitives(itp.line, vp, "perp"))
                except errors.MoebiusError:
                    pass
    elif op == "perpendicular":
        a, b = ctx.cycle_list(q, "cycles", 2)
        prims.extend(cycle_primitives(models.common_perpendicular(a, b, tol),
                                      vp, "perp"))
    return prims
