"""Generalized Ceva and Menelaus, type forms, centers, duality, isogonality.

The cevians of a frame (a, b, c) live in the pencils spanned by pairs of
sides; three of them are collinear exactly when the product of their
splitting factors is 1 (Ceva) and the side pencils they define are
concurrent exactly when it is -1 (Menelaus).  The quadratic forms X and Y
classify the resulting pencil / cycle by sign.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import errors
from .cycles import (CycleClass, CycleVec, ELLIPTIC, HYPERBOLIC, OrientedCycle,
                     PARABOLIC, classify, normalize)
from .frames import (PencilTrilinear, TriangleFrame, Trilinear, cycle_at,
                     incidence, join, meet)
from .pencils import splitting_factor
from .projective import DEFAULT_TOL, ProjectiveReal


def adjugate3(m: np.ndarray) -> np.ndarray:
    out = np.empty((3, 3))
    for i in range(3):
        for j in range(3):
            minor = np.delete(np.delete(m, j, axis=0), i, axis=1)
            out[i, j] = ((-1) ** (i + j)) * np.linalg.det(minor)
    return out


def _quadratic_sign(form: np.ndarray, triple: np.ndarray,
                    tol: float) -> tuple[float, str]:
    """Value of a symmetric form and its sign banded by the largest monomial."""
    value = float(triple @ form @ triple)
    terms = [form[i, j] * triple[i] * triple[j]
             for i in range(3) for j in range(3)]
    scale = max(abs(t) for t in terms)
    band = tol * max(scale, 1e-300)
    if value > band:
        tag = ELLIPTIC
    elif value < -band:
        tag = HYPERBOLIC
    else:
        tag = PARABOLIC
    return value, tag


def pencil_type_X(fr: TriangleFrame, p, tol: float = DEFAULT_TOL) -> tuple[float, str]:
    """X > 0 elliptic, X = 0 parabolic, X < 0 hyperbolic, via the adjugate form."""
    triple = PencilTrilinear.of(p).as_array()
    return _quadratic_sign(adjugate3(fr.gram), triple, tol)


def cycle_type_Y(fr: TriangleFrame, t, tol: float = DEFAULT_TOL) -> tuple[float, str]:
    """Y = <uL+vM+wN, uL+vM+wN> expressed through the Gram matrix."""
    triple = Trilinear.of(t).as_array()
    return _quadratic_sign(fr.gram, triple, tol)


@dataclass(frozen=True)
class CevaResult:
    collinear: bool
    lambdas: tuple[ProjectiveReal, ProjectiveReal, ProjectiveReal]
    cevians: tuple[Trilinear, Trilinear, Trilinear]
    pencil: PencilTrilinear | None = None
    pencil_type: str | None = None
    X: float | None = None
    mutual: ProjectiveReal | None = None


@dataclass(frozen=True)
class MenelausResult:
    concurrent: bool
    lambdas: tuple[ProjectiveReal, ProjectiveReal, ProjectiveReal]
    cevians: tuple[Trilinear, Trilinear, Trilinear]
    common: Trilinear | None = None
    cycle_class: str | None = None
    Y: float | None = None
    factor: ProjectiveReal | None = None


def _check_cevian_params(lams, tol):
    out = []
    for lam in lams:
        lam = ProjectiveReal.of(lam)
        if lam.is_zero(tol) or lam.is_infinite:
            raise errors.DegenerateCevian("cevian coincides with a frame cycle")
        out.append(lam)
    return tuple(out)


def _product_matches(lams, target: float, tol: float) -> bool:
    num = lams[0].p * lams[1].p * lams[2].p
    den = lams[0].q * lams[1].q * lams[2].q
    return abs(num - target * den) <= tol * max(abs(num), abs(den), 1e-300)


def _best_join(triples, tol):
    best, best_rel = None, -1.0
    for i, j in ((0, 1), (0, 2), (1, 2)):
        u, v = triples[i].as_array(), triples[j].as_array()
        cr = np.cross(u, v)
        rel = np.linalg.norm(cr) / (np.linalg.norm(u) * np.linalg.norm(v))
        if rel > best_rel:
            best, best_rel = cr, rel
    if best_rel <= tol:
        raise errors.ProportionalArguments("cevians do not span a pencil")
    return best


def ceva(fr: TriangleFrame, lam, mu, nu, tol: float = DEFAULT_TOL) -> CevaResult:
    """Ceva's criterion for cevians at splitting factors lam, mu, nu.

    The cevians are n_a = [0:1:-lam], n_b = [-mu:0:1], n_c = [1:-nu:0];
    they are collinear iff lam mu nu = 1, and then lie on the pencil
    (x:y:z) with y/z = lam, z/x = mu, x/y = nu.
    """
    lam, mu, nu = _check_cevian_params((lam, mu, nu), tol)
    n_a = Trilinear(0.0, lam.q, -lam.p)
    n_b = Trilinear(-mu.p, 0.0, mu.q)
    n_c = Trilinear(nu.q, -nu.p, 0.0)
    cevians = (n_a, n_b, n_c)
    if not _product_matches((lam, mu, nu), 1.0, tol):
        return CevaResult(False, (lam, mu, nu), cevians)
    pencil = PencilTrilinear(*_best_join(cevians, tol))
    x_val, kind = pencil_type_X(fr, pencil, tol)
    mutual = None
    va, ca = cycle_at(fr, n_a)
    vb, cb = cycle_at(fr, n_b)
    vc, _ = cycle_at(fr, n_c)
    if ca.tag == ELLIPTIC and cb.tag == ELLIPTIC:
        mutual = splitting_factor(normalize(va), normalize(vb), vc)
    return CevaResult(True, (lam, mu, nu), cevians, pencil, kind, x_val, mutual)


def menelaus(fr: TriangleFrame, lam, mu, nu, tol: float = DEFAULT_TOL) -> MenelausResult:
    """Menelaus's criterion: the pencils joining each side to its cevian are
    concurrent iff lam mu nu = -1; the common cycle is returned with its type."""
    lam, mu, nu = _check_cevian_params((lam, mu, nu), tol)
    n_a = Trilinear(0.0, lam.q, -lam.p)
    n_b = Trilinear(-mu.p, 0.0, mu.q)
    n_c = Trilinear(nu.q, -nu.p, 0.0)
    cevians = (n_a, n_b, n_c)
    if not _product_matches((lam, mu, nu), -1.0, tol):
        return MenelausResult(False, (lam, mu, nu), cevians)
    side_pencils = [
        PencilTrilinear(0.0, lam.p, lam.q),    # join of a and n_a
        PencilTrilinear(mu.q, 0.0, mu.p),      # join of b and n_b
        PencilTrilinear(nu.p, nu.q, 0.0),      # join of c and n_c
    ]
    best, best_norm = None, -1.0
    for i, j in ((0, 1), (0, 2), (1, 2)):
        cr = np.cross(side_pencils[i].as_array(), side_pencils[j].as_array())
        nn = np.linalg.norm(cr)
        if nn > best_norm:
            best, best_norm = cr, nn
    common = Trilinear(*best)
    y_val, kind = cycle_type_Y(fr, common, tol)
    factor = None
    va, ca = cycle_at(fr, n_a)
    nv, _ = cycle_at(fr, common)
    if ca.tag == ELLIPTIC:
        factor = splitting_factor(fr.a, normalize(va), nv)
    return MenelausResult(True, (lam, mu, nu), cevians, common, kind, y_val, factor)


# --------------------------------------------------------------------------
# splitting cevian (triangle-inequality trichotomy)

@dataclass(frozen=True)
class SplitVerdict:
    kind: str                      # elliptic | parabolic | hyperbolic
    splitter: str | None           # 'a' | 'b' | 'c' for the splitting cevian
    values: tuple[float, float, float]


def splitting_cevian(fr: TriangleFrame, p, tol: float = DEFAULT_TOL) -> SplitVerdict:
    """Classify the pencil (x:y:z) by the triangle inequalities on the
    derived side values; the largest value marks the splitting cevian."""
    p = PencilTrilinear.of(p)
    x, y, z = p.x, p.y, p.z
    scale = max(abs(x), abs(y), abs(z))
    if min(abs(x), abs(y), abs(z)) <= tol * scale:
        raise errors.ZeroCoordinate("classification needs x y z != 0")
    n_a, _ = cycle_at(fr, (0.0, z, -y))
    n_b, _ = cycle_at(fr, (z, 0.0, -x))
    n_c, _ = cycle_at(fr, (y, -x, 0.0))
    va = abs(splitting_factor(fr.b, normalize(n_a), fr.c.v).value() / y)
    vb = abs(splitting_factor(fr.c, normalize(n_b), fr.a.v).value() / z)
    vc = abs(splitting_factor(fr.a, normalize(n_c), fr.b.v).value() / x)
    values = (va, vb, vc)
    order = sorted(range(3), key=lambda i: values[i])
    hi = values[order[2]]
    rest = values[order[0]] + values[order[1]]
    band = tol * max(hi, rest)
    if abs(hi - rest) <= band:
        kind, splitter = PARABOLIC, "abc"[order[2]]
    elif hi > rest:
        kind, splitter = HYPERBOLIC, "abc"[order[2]]
    else:
        kind, splitter = ELLIPTIC, None
    return SplitVerdict(kind, splitter, values)


def split_values_proper(fr: TriangleFrame, p) -> tuple[float, float, float]:
    """Closed forms of the three side values for a proper triangle frame."""
    p = PencilTrilinear.of(p)
    alpha, beta, gamma = fr.angles()
    x, y, z = p.x, p.y, p.z
    a = math.sqrt(y * y + 2 * y * z * math.cos(alpha) + z * z) / abs(y * z)
    b = math.sqrt(x * x + 2 * x * z * math.cos(beta) + z * z) / abs(x * z)
    c = math.sqrt(x * x + 2 * x * y * math.cos(gamma) + y * y) / abs(x * y)
    return a, b, c


# --------------------------------------------------------------------------
# cevian trigonometry and centers

def cevian_cos(fr: TriangleFrame, side: str, lam, tol: float = DEFAULT_TOL) -> float:
    """<a, n> for the cevian n at factor lam in the pencil opposite `side`,
    through the splitting-factor expansion (cross-checked in tests)."""
    lam = ProjectiveReal.of(lam)
    pair = {"a": (fr.b, fr.c, fr.a), "b": (fr.c, fr.a, fr.b),
            "c": (fr.a, fr.b, fr.c)}[side]
    first, second, opposite = pair
    if lam.is_zero(tol):
        return opposite.inner(first)
    if lam.is_infinite:
        return -opposite.inner(second)
    vec = first.v.scaled(lam.q).plus(second.v, -lam.p)
    if classify(vec, tol).tag != ELLIPTIC:
        raise errors.NotInPencil("cevian at this factor is not an ordinary cycle")
    n = normalize(vec)
    s1 = splitting_factor(n, first, second.v).value()
    s2 = splitting_factor(n, second, first.v).value()
    return s1 * opposite.inner(first) + s2 * opposite.inner(second)


def altitude(fr: TriangleFrame, vertex: str,
             tol: float = DEFAULT_TOL) -> ProjectiveReal | None:
    """Splitting factor of the altitude through the vertex, or None when
    both adjacent inner products vanish (two right angles)."""
    g = fr.gram
    idx = {"a": (0, 1, 2), "b": (1, 2, 0), "c": (2, 0, 1)}[vertex.lower()]
    i, j, k = idx
    p, q = g[i, j], g[i, k]
    if abs(p) <= tol and abs(q) <= tol:
        return None
    return ProjectiveReal(p, q)


def altitude_cycle(fr: TriangleFrame, vertex: str) -> CycleVec:
    """The altitude as a member of the opposite side pencil; <side, h> = 0."""
    lam = altitude(fr, vertex)
    if lam is None:
        raise errors.NotInPencil("altitude undefined: two right angles")
    sides = {"a": (fr.b, fr.c), "b": (fr.c, fr.a), "c": (fr.a, fr.b)}[vertex.lower()]
    first, second = sides
    return first.v.scaled(lam.q).plus(second.v, -lam.p)


def orthocenter(fr: TriangleFrame, tol: float = DEFAULT_TOL) -> PencilTrilinear | None:
    """The pencil of the altitudes, in reciprocal-cosine product form."""
    ca, cb, cc = -fr.gram[1, 2], -fr.gram[0, 2], -fr.gram[0, 1]
    rights = sum(1 for v in (ca, cb, cc) if abs(v) <= tol)
    if rights >= 2:
        return None
    return PencilTrilinear(cb * cc, ca * cc, ca * cb)


def orthocenter_x_closed_form(fr: TriangleFrame) -> float:
    """X of the orthocenter in reciprocal coordinates (1/cos a : ...)."""
    alpha, beta, gamma = fr.angles()
    ca, cb, cc = math.cos(alpha), math.cos(beta), math.cos(gamma)
    return (math.tan(alpha) ** 2 + math.tan(beta) ** 2 + math.tan(gamma) ** 2
            + 6.0 + 2.0 * (ca * ca + cb * cb + cc * cc) / (ca * cb * cc))


INCENTER = PencilTrilinear(1.0, 1.0, 1.0)
EXCENTERS = {
    "a": PencilTrilinear(1.0, -1.0, -1.0),
    "b": PencilTrilinear(-1.0, 1.0, -1.0),
    "c": PencilTrilinear(-1.0, -1.0, 1.0),
}


@dataclass(frozen=True)
class CenterReport:
    coords: PencilTrilinear
    kind: str
    splitter: str | None
    values: tuple[float, float, float]
    X: float


def _center_report(fr: TriangleFrame, p: PencilTrilinear,
                   tol: float) -> CenterReport:
    verdict = splitting_cevian(fr, p, tol)
    x_val, kind = pencil_type_X(fr, p, tol)
    return CenterReport(p, verdict.kind, verdict.splitter, verdict.values, x_val)


def incenter_excenters(fr: TriangleFrame, tol: float = DEFAULT_TOL) -> dict:
    """The incenter (1:1:1) and the three excenters with their verdicts."""
    fr.angles()   # raises NotProper when the sides do not pairwise intersect
    out = {"incenter": _center_report(fr, INCENTER, tol)}
    for name, p in EXCENTERS.items():
        out["excenter_" + name] = _center_report(fr, p, tol)
    return out


CIRCLE = "circle"
HOROCYCLE = "horocycle"
EQUIDISTANT = "equidistant"


def excircle_class(alpha: float, beta: float, gamma: float, side: str,
                   tol: float = DEFAULT_TOL) -> str:
    """Type of the excircle tangent to the named side of a hyperbolic triangle."""
    if not (alpha > 0 and beta > 0 and gamma > 0
            and alpha + beta + gamma < math.pi - tol):
        raise errors.NotHyperbolicTriangle("needs positive angles summing below pi")
    opp, o1, o2 = {"a": (alpha, beta, gamma), "b": (beta, gamma, alpha),
                   "c": (gamma, alpha, beta)}[side]
    lhs = math.cos(opp / 2.0)
    rhs = math.sin(o1 / 2.0) + math.sin(o2 / 2.0)
    if abs(lhs - rhs) <= tol * max(lhs, rhs):
        return HOROCYCLE
    return CIRCLE if lhs < rhs else EQUIDISTANT


# --------------------------------------------------------------------------
# duality and isogonal conjugation

@dataclass(frozen=True)
class DualityMap:
    T: np.ndarray
    gram: np.ndarray
    det_gram: float


def duality(fr: TriangleFrame, tol: float = DEFAULT_TOL) -> DualityMap:
    if abs(fr.det_gram) <= tol:
        raise errors.DegenerateFrame("complement undefined on Euclidean frames")
    return DualityMap(adjugate3(fr.gram), fr.gram, fr.det_gram)


def complement_pencil(dm: DualityMap, p) -> Trilinear:
    """The cycle orthogonal to every member of the pencil (x:y:z)."""
    return Trilinear(*(dm.T @ PencilTrilinear.of(p).as_array()))


def complement_cycle(dm: DualityMap, t) -> PencilTrilinear:
    """The pencil of cycles orthogonal to the cycle [u:v:w]."""
    return PencilTrilinear(*(dm.gram @ Trilinear.of(t).as_array()))


def _reciprocal(triple, tol):
    arr = np.asarray(triple, dtype=float)
    scale = np.max(np.abs(arr))
    zeros = np.abs(arr) <= tol * scale
    if zeros.sum() >= 2:
        raise errors.UndefinedOnFrameAxes("conjugation undefined on frame elements")
    x, y, z = arr
    return np.array([y * z, x * z, x * y])


def isogonal_pencil(p, tol: float = DEFAULT_TOL) -> PencilTrilinear:
    """Reflection of a pencil in the bisectors: (x:y:z) -> (yz:xz:xy)."""
    return PencilTrilinear(*_reciprocal(PencilTrilinear.of(p).as_array(), tol))


def isogonal_cycle(t, tol: float = DEFAULT_TOL) -> Trilinear:
    """Reflection of a cycle in the bisectors: [u:v:w] -> [vw:uw:uv]."""
    return Trilinear(*_reciprocal(Trilinear.of(t).as_array(), tol))


SELF_CONJUGATE_PENCILS = (
    PencilTrilinear(1.0, 1.0, 1.0),
    PencilTrilinear(1.0, -1.0, -1.0),
    PencilTrilinear(-1.0, 1.0, -1.0),
    PencilTrilinear(-1.0, -1.0, 1.0),
)

# Frozen counterexample witnesses for the negative conjugation results; the
# circles were found by randomized search and re-verify on every test run.
# Each frame entry is (center, signed radius).
ISOGONAL_WITNESSES = {
    "type-flip": {
        "frame": (((0.0, 0.0), 1.0), ((3.0, 0.0), 1.0), ((1.5, 2.5), 1.0)),
        "pencil": (1.0, 8.0, 8.0),
    },
    "complement-noncommute": {
        "frame": (((0.0, 0.0), 1.0), ((3.0, 0.0), 1.0), ((1.5, 2.5), 1.0)),
        "pencil": (1.0, 2.0, 3.0),
    },
    "not-pointwise": {
        "frame": (((0.0, 0.0), 1.0), ((3.0, 0.0), 1.0), ((1.5, 2.5), 1.0)),
        "pencil": (1.0, 2.0, 3.0),
        "member": (1.0, 1.0, -1.0),
    },
}
