"""Homogeneous scalar and point types shared by all modules.

Values of the extended real line and of the Riemann sphere are kept as
homogeneous pairs so that infinity never needs a special arithmetic path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class ProjectiveReal:
    """A value of the extended real line stored as a pair p/q."""

    p: float
    q: float

    def __post_init__(self):
        if self.p == 0.0 and self.q == 0.0:
            raise ValueError("projective value needs a nonzero pair")

    @staticmethod
    def of(value) -> "ProjectiveReal":
        if isinstance(value, ProjectiveReal):
            return value
        value = float(value)
        if math.isinf(value):
            return ProjectiveReal(math.copysign(1.0, value), 0.0)
        return ProjectiveReal(value, 1.0)

    @staticmethod
    def infinity() -> "ProjectiveReal":
        return ProjectiveReal(1.0, 0.0)

    @property
    def is_infinite(self) -> bool:
        scale = max(abs(self.p), abs(self.q))
        return abs(self.q) <= 1e-14 * scale

    def value(self) -> float:
        if self.is_infinite:
            return math.inf
        return self.p / self.q

    def inverse(self) -> "ProjectiveReal":
        return ProjectiveReal(self.q, self.p)

    def __neg__(self) -> "ProjectiveReal":
        return ProjectiveReal(-self.p, self.q)

    def __mul__(self, other) -> "ProjectiveReal":
        other = ProjectiveReal.of(other)
        return ProjectiveReal(self.p * other.p, self.q * other.q)

    def isclose(self, other, tol: float = DEFAULT_TOL) -> bool:
        other = ProjectiveReal.of(other)
        cross = self.p * other.q - other.p * self.q
        scale = max(abs(self.p * other.q), abs(other.p * self.q),
                    abs(self.p * other.p), abs(self.q * other.q))
        if scale == 0.0:
            return True
        return abs(cross) <= tol * scale

    def is_zero(self, tol: float = DEFAULT_TOL) -> bool:
        return self.isclose(ProjectiveReal(0.0, 1.0), tol)


@dataclass(frozen=True)
class Point:
    """A point of the Riemann sphere as a homogeneous complex pair."""

    z1: complex
    z2: complex

    def __post_init__(self):
        if self.z1 == 0 and self.z2 == 0:
            raise ValueError("homogeneous point needs a nonzero pair")

    @staticmethod
    def of(value) -> "Point":
        if isinstance(value, Point):
            return value
        return Point(complex(value), 1.0 + 0.0j)

    @staticmethod
    def infinity() -> "Point":
        return Point(1.0 + 0.0j, 0.0j)

    def normalized(self) -> "Point":
        s = max(abs(self.z1), abs(self.z2))
        return Point(self.z1 / s, self.z2 / s)

    @property
    def is_infinite(self) -> bool:
        return abs(self.z2) <= 1e-14 * max(abs(self.z1), abs(self.z2))

    def value(self) -> complex:
        """Finite complex value; raises for the point at infinity."""
        if self.is_infinite:
            raise ValueError("point at infinity has no finite value")
        return self.z1 / self.z2

    def conjugate(self) -> "Point":
        return Point(self.z1.conjugate(), self.z2.conjugate())

    def isclose(self, other, tol: float = DEFAULT_TOL) -> bool:
        other = Point.of(other)
        a, b = self.normalized(), other.normalized()
        return abs(a.z1 * b.z2 - a.z2 * b.z1) <= tol

    def __repr__(self):
        if self.is_infinite:
            return "Point(inf)"
        return f"Point({self.value()!r})"


INF = Point.infinity()
