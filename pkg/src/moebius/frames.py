"""Triangle frames and homogeneous trilinear coordinates.

Three non-collinear oriented cycles span a 3-space of generalized cycles;
cycles get coordinates [u:v:w] and pencils inside the span get dual
coordinates (x:y:z) through the annihilation pairing u x + v y + w z = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import errors
from .cycles import CycleClass, CycleVec, OrientedCycle, classify
from .pencils import collinear3
from .projective import DEFAULT_TOL

SPHERICAL = "spherical"
EUCLIDEAN = "euclidean"
HYPERBOLIC_FRAME = "hyperbolic"


def _triple_close(t1, t2, tol: float) -> bool:
    """Projective comparison of homogeneous triples via the cross product."""
    u = np.asarray(t1, dtype=float)
    v = np.asarray(t2, dtype=float)
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        raise ValueError("zero triple")
    return np.linalg.norm(np.cross(u / nu, v / nv)) <= tol


@dataclass(frozen=True)
class Trilinear:
    u: float
    v: float
    w: float

    @staticmethod
    def of(value) -> "Trilinear":
        if isinstance(value, Trilinear):
            return value
        u, v, w = (float(x) for x in value)
        if u == v == w == 0.0:
            raise ValueError("trilinear triple must be nonzero")
        return Trilinear(u, v, w)

    def as_array(self) -> np.ndarray:
        return np.array([self.u, self.v, self.w])

    def isclose(self, other, tol: float = DEFAULT_TOL) -> bool:
        return _triple_close(self.as_array(), Trilinear.of(other).as_array(), tol)


@dataclass(frozen=True)
class PencilTrilinear:
    x: float
    y: float
    z: float

    @staticmethod
    def of(value) -> "PencilTrilinear":
        if isinstance(value, PencilTrilinear):
            return value
        x, y, z = (float(v) for v in value)
        if x == y == z == 0.0:
            raise ValueError("pencil triple must be nonzero")
        return PencilTrilinear(x, y, z)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def isclose(self, other, tol: float = DEFAULT_TOL) -> bool:
        return _triple_close(self.as_array(), PencilTrilinear.of(other).as_array(), tol)


@dataclass(frozen=True)
class TriangleFrame:
    a: OrientedCycle
    b: OrientedCycle
    c: OrientedCycle
    gram: np.ndarray          # 3x3, unit diagonal
    det_gram: float
    kind: str                 # spherical | euclidean | hyperbolic

    @property
    def basis(self) -> tuple[OrientedCycle, OrientedCycle, OrientedCycle]:
        return self.a, self.b, self.c

    def basis_matrix(self) -> np.ndarray:
        """Columns are the three basis 4-vectors."""
        return np.stack([self.a.v.as_array(), self.b.v.as_array(),
                         self.c.v.as_array()], axis=1)

    def angles(self) -> tuple[float, float, float]:
        """Inner angles of the underlying proper triangle: cos t = -<pair>."""
        g = self.gram
        for v in (g[1, 2], g[0, 2], g[0, 1]):
            if abs(v) > 1.0:
                raise errors.NotProper("frame sides do not pairwise intersect")
        return (math.acos(-g[1, 2]), math.acos(-g[0, 2]), math.acos(-g[0, 1]))


def frame(a: OrientedCycle, b: OrientedCycle, c: OrientedCycle,
          tol: float = DEFAULT_TOL) -> TriangleFrame:
    flat, _ = collinear3(a, b, c, tol)
    if flat:
        raise errors.CollinearCycles("frame basis lies in one pencil")
    g = np.array([
        [1.0, a.inner(b), a.inner(c)],
        [a.inner(b), 1.0, b.inner(c)],
        [a.inner(c), b.inner(c), 1.0],
    ])
    det = float(np.linalg.det(g))
    if det > tol:
        kind = SPHERICAL
    elif det < -tol:
        kind = HYPERBOLIC_FRAME
    else:
        kind = EUCLIDEAN
    return TriangleFrame(a, b, c, g, det, kind)


def coords(fr: TriangleFrame, n, tol: float = 1e-8) -> Trilinear:
    """Trilinear coordinates of a generalized cycle in the frame's 3-space."""
    nv = CycleVec.of(n)
    rhs = nv.as_array()
    scale = np.linalg.norm(rhs)
    if scale == 0.0:
        raise errors.ZeroMatrix("zero cycle vector")
    basis = fr.basis_matrix()
    if abs(fr.det_gram) > 1e-6:
        gram_rhs = np.array([fr.a.v.inner(nv), fr.b.v.inner(nv), fr.c.v.inner(nv)])
        sol = np.linalg.solve(fr.gram, gram_rhs)
    else:
        sol, *_ = np.linalg.lstsq(basis, rhs, rcond=None)
    resid = np.linalg.norm(basis @ sol - rhs)
    if resid > tol * scale:
        raise errors.OutsidePlane(f"projection residual {resid / scale:.3g}")
    return Trilinear(*sol)


def cycle_at(fr: TriangleFrame, t) -> tuple[CycleVec, CycleClass]:
    """The cycle u L + v M + w N and its type."""
    t = Trilinear.of(t)
    arr = fr.basis_matrix() @ t.as_array()
    vec = CycleVec(*arr)
    return vec, classify(vec)


def join(n1, n2, tol: float = DEFAULT_TOL) -> PencilTrilinear:
    """Coordinates of the pencil spanned by two cycles of the frame plane."""
    u = Trilinear.of(n1).as_array()
    v = Trilinear.of(n2).as_array()
    cr = np.cross(u, v)
    if np.linalg.norm(cr) <= tol * np.linalg.norm(u) * np.linalg.norm(v):
        raise errors.ProportionalArguments("cycles coincide projectively")
    return PencilTrilinear(*cr)


def meet(p1, p2, tol: float = DEFAULT_TOL) -> Trilinear:
    """The unique common cycle of two distinct pencils of the frame plane."""
    x = PencilTrilinear.of(p1).as_array()
    y = PencilTrilinear.of(p2).as_array()
    cr = np.cross(x, y)
    if np.linalg.norm(cr) <= tol * np.linalg.norm(x) * np.linalg.norm(y):
        raise errors.ProportionalArguments("pencils coincide projectively")
    return Trilinear(*cr)


def incidence(n, p) -> float:
    """Annihilation pairing u x + v y + w z on unit-normalized triples."""
    u = Trilinear.of(n).as_array()
    x = PencilTrilinear.of(p).as_array()
    return float(u @ x / (np.linalg.norm(u) * np.linalg.norm(x)))


def _det_rows(rows) -> float:
    m = np.array([np.asarray(r, dtype=float) for r in rows])
    m = m / np.max(np.abs(m), axis=1, keepdims=True)
    return float(np.linalg.det(m))


def collinear_det(n1, n2, n3, tol: float = DEFAULT_TOL) -> bool:
    """Do three cycles of the plane lie on one pencil?"""
    rows = [Trilinear.of(n).as_array() for n in (n1, n2, n3)]
    return abs(_det_rows(rows)) <= tol


def concurrent_det(p1, p2, p3, tol: float = DEFAULT_TOL) -> bool:
    """Do three pencils of the plane share a cycle?"""
    rows = [PencilTrilinear.of(p).as_array() for p in (p1, p2, p3)]
    return abs(_det_rows(rows)) <= tol
