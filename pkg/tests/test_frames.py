"""Frames, trilinear coordinates, join/meet, and the degenerate-frame theorem."""

import cmath
import math

import numpy as np
import pytest

from conftest import rand_frame_cycles, rand_map, rand_point
from moebius import errors
from moebius.cycles import (apply_map, classify, from_circle, from_line,
                            from_points, normalize)
from moebius.frames import (PencilTrilinear, Trilinear, collinear_det,
                            concurrent_det, coords, cycle_at, frame, incidence,
                            join, meet)
from moebius.pencils import distinguished_points, member, span, splitting_factor


def test_frame_type_examples():
    f1 = frame(from_circle(0, 1.0), from_line(0, 1), from_line(0, 1j))
    assert f1.kind == "spherical"
    assert np.allclose(f1.gram, np.eye(3), atol=1e-12)
    from moebius.triangles import TriangleSpec, synthesize
    eq = synthesize(TriangleSpec.make(cmath.exp(1j * math.pi / 2),
                                      cmath.exp(1j * 7 * math.pi / 6),
                                      cmath.exp(1j * 11 * math.pi / 6),
                                      math.pi / 3, math.pi / 3, math.pi / 3))
    f2 = frame(eq.a, eq.b, eq.c)
    assert f2.kind == "euclidean"
    assert np.allclose(f2.gram - np.eye(3), -0.5 * (np.ones((3, 3)) - np.eye(3)),
                       atol=1e-9)
    f3 = frame(from_circle(0, 1.0), from_circle(3, 1.0), from_circle(6, 1.0))
    assert f3.kind == "hyperbolic"
    assert f3.det_gram == pytest.approx(-729.0)
    with pytest.raises(errors.CollinearCycles):
        frame(from_circle(0, 1.0), from_circle(0, 2.0), from_circle(0, 3.0))


def test_coords_and_cycle_at_roundtrip(rng):
    for _ in range(200):
        a, b, c = rand_frame_cycles(rng)
        fr = frame(a, b, c)
        assert coords(fr, a.v).isclose((1, 0, 0))
        t = rng.normal(size=3)
        while np.linalg.norm(t) < 0.1:
            t = rng.normal(size=3)
        vec, _ = cycle_at(fr, t)
        got = coords(fr, vec)
        assert got.isclose(tuple(t), 1e-8)


def test_coords_of_pencil_member(rng):
    for _ in range(100):
        a, b, c = rand_frame_cycles(rng)
        fr = frame(a, b, c)
        lam = float(rng.normal())
        vec, _ = member(span(a, b), lam)
        assert coords(fr, vec).isclose((1.0, -lam, 0.0), 1e-8)
        # bisector of the (a, b) digon sits at the lambda = 1 landmark
        from moebius.pencils import cevian_range
        lam_b = cevian_range(a, b).bisector
        from moebius.pencils import bisector
        bis, _ = bisector(a, b)
        assert coords(fr, bis.v).isclose((1.0, -lam_b, 0.0), 1e-8)


def test_coords_outside_plane():
    fr = frame(from_circle(0, 1.0), from_circle(3, 1.0), from_circle(6, 1.0))
    with pytest.raises(errors.OutsidePlane):
        coords(fr, from_circle(1j, 1.0).v)


def test_join_meet_examples():
    assert join((1, 0, 0), (0, 1, 0)).isclose((0, 0, 1))
    assert meet((1, 0, 0), (0, 1, 0)).isclose((0, 0, 1))
    lam, mu = 0.7, -1.3
    p = join((0, 1, -lam), (-mu, 0, 1))
    for t in ((0, 1, -lam), (-mu, 0, 1)):
        assert abs(incidence(t, p)) < 1e-12
    with pytest.raises(errors.ProportionalArguments):
        join((1, 2, 3), (-2, -4, -6))


def test_duality_pairing(rng):
    for _ in range(100):
        a, b, c = rand_frame_cycles(rng)
        fr = frame(a, b, c)
        xyz = rng.normal(size=3)
        while np.linalg.norm(xyz) < 0.1:
            xyz = rng.normal(size=3)
        p = PencilTrilinear(*xyz)
        # sample member cycles of the pencil and check annihilation
        u = np.array([0.0, p.z, -p.y])
        v = np.array([p.z, 0.0, -p.x])
        for t in (u, v, u + 0.3 * v, 2 * u - v):
            if np.linalg.norm(t) < 1e-6:
                continue
            assert abs(incidence(tuple(t), p)) < 1e-9


def test_collinear_concurrent_det():
    assert collinear_det((1, 0, 0), (0, 1, 0), (1, 1, 0))
    assert not collinear_det((1, 0, 0), (0, 1, 0), (0, 0, 1))
    lam, mu = 2.0, 3.0
    nu = 1.0 / (lam * mu)
    assert collinear_det((0, 1, -lam), (-mu, 0, 1), (1, -nu, 0))
    assert concurrent_det((1, 0, 0), (0, 1, 0), (1, 1, 0))


def test_frame_type_is_isometry_invariant(rng):
    for _ in range(500):
        a, b, c = rand_frame_cycles(rng)
        fr = frame(a, b, c)
        g = rand_map(rng)
        fr2 = frame(apply_map(g, a), apply_map(g, b), apply_map(g, c))
        assert fr.kind == fr2.kind


def test_degenerate_frame_theorem(rng):
    # frames through one common point have det Gamma ~ 0, and the point is
    # recovered from distinguished points of the basis pencils
    done = 0
    while done < 80:
        z = rand_point(rng)
        others = [rand_point(rng) for _ in range(6)]
        try:
            a = from_points(z, others[0], others[1])
            b = from_points(z, others[2], others[3])
            c = from_points(z, others[4], others[5])
            fr = frame(a, b, c, tol=1e-12)
        except errors.MoebiusError:
            continue
        assert abs(fr.det_gram) < 1e-9
        found = None
        sp = span(a, b)
        for pt in distinguished_points(sp):
            if abs(c.eval_q(pt)) < 1e-6:
                found = pt
        assert found is not None and found.isclose(z, 1e-5)
        done += 1


def test_nondegenerate_frames_have_no_common_point(rng):
    for _ in range(100):
        a, b, c = rand_frame_cycles(rng)
        fr = frame(a, b, c)
        if abs(fr.det_gram) < 1e-3:
            continue
        for pt in distinguished_points(span(a, b)):
            assert abs(c.eval_q(pt)) > 1e-9
