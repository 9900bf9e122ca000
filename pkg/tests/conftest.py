"""Shared random generators for the property suites."""

from __future__ import annotations

import math

import numpy as np
import pytest

from moebius.cycles import (MoebiusMap, OrientedCycle, apply_map, from_circle,
                            from_line, from_points, normalize)
from moebius.pencils import member, span
from moebius.projective import Point


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def rand_circle(rng, spread=3.0) -> OrientedCycle:
    center = complex(rng.normal(0, spread), rng.normal(0, spread))
    r = rng.uniform(0.2, 3.0) * (1 if rng.random() < 0.5 else -1)
    return from_circle(center, r)


def rand_line(rng, spread=3.0) -> OrientedCycle:
    p = complex(rng.normal(0, spread), rng.normal(0, spread))
    t = rng.uniform(0, 2 * math.pi)
    return from_line(p, complex(math.cos(t), math.sin(t)))


def rand_cycle(rng, line_prob=0.25) -> OrientedCycle:
    return rand_line(rng) if rng.random() < line_prob else rand_circle(rng)


def rand_map(rng, allow_anti=True) -> MoebiusMap:
    while True:
        a, b, c, d = (complex(rng.normal(), rng.normal()) for _ in range(4))
        if abs(a * d - b * c) > 0.1:
            break
    anti = allow_anti and rng.random() < 0.5
    return MoebiusMap.build(a, b, c, d, anti=anti)


def rand_point(rng, spread=3.0) -> Point:
    return Point.of(complex(rng.normal(0, spread), rng.normal(0, spread)))


def coaxial_triple(rng, kind: str):
    """Three distinct oriented elliptic cycles on one pencil of the given kind.

    Built canonically (common points / concentric / parallels), then pushed
    through a random isometry so the configurations are generic.
    """
    g = rand_map(rng)
    if kind == "elliptic":
        p, q = rand_point(rng), rand_point(rng)
        while q.isclose(p, 1e-2):
            q = rand_point(rng)
        cycles = []
        while len(cycles) < 3:
            r = rand_point(rng)
            if r.isclose(p, 1e-2) or r.isclose(q, 1e-2):
                continue
            cand = from_points(p, q, r)
            if all(not cand.same_set(x, 1e-6) for x in cycles):
                cycles.append(cand)
    elif kind == "hyperbolic":
        radii = sorted(rng.uniform(0.3, 4.0, size=3))
        if radii[1] / radii[0] < 1.05 or radii[2] / radii[1] < 1.05:
            return coaxial_triple(rng, kind)
        cycles = [from_circle(0.0, r * (1 if rng.random() < 0.5 else -1))
                  for r in radii]
    elif kind == "parabolic":
        xs = rng.normal(0, 2, size=3)
        if min(abs(xs[0] - xs[1]), abs(xs[1] - xs[2]), abs(xs[0] - xs[2])) < 0.1:
            return coaxial_triple(rng, kind)
        cycles = [from_line(x, 1j if rng.random() < 0.5 else -1j) for x in xs]
    else:
        raise ValueError(kind)
    return tuple(apply_map(g, x) for x in cycles)


def rand_frame_cycles(rng, min_resid=1e-3):
    """Three random non-collinear oriented cycles."""
    from moebius.pencils import collinear3
    while True:
        a, b, c = (rand_cycle(rng) for _ in range(3))
        try:
            flat, resid = collinear3(a, b, c)
        except Exception:
            continue
        if not flat and resid > min_resid and not a.same_set(b, 1e-6) \
                and not b.same_set(c, 1e-6) and not a.same_set(c, 1e-6):
            return a, b, c


def rand_proper_triangle_frame(rng, margin=0.15):
    """Frame from a synthesized proper triangle with comfortable margins."""
    from moebius.frames import frame
    from moebius.triangles import TriangleSpec, check_angles, synthesize
    while True:
        ang = rng.uniform(margin, math.pi - margin, size=3)
        if not check_angles(*ang).feasible:
            continue
        pts = []
        while len(pts) < 3:
            cand = rand_point(rng)
            if all(not cand.isclose(p, 1e-2) for p in pts):
                pts.append(cand)
        orient = "ABC" if rng.random() < 0.5 else "ACB"
        t = synthesize(TriangleSpec(pts[0], pts[1], pts[2], *ang, orient))
        try:
            return frame(t.a, t.b, t.c), tuple(ang), t
        except Exception:
            continue
