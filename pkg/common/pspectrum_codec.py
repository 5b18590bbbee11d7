"""
Frequency encoding of a state index on the p-spectrum parabaloid.

A maintained state is a pair (a, b): `a` is the integer radial index on a
g-curve and `b` in [-1, 1] the second coordinate. The encoder maps it to two
angles (phi, theta); on hardware phi becomes a frequency omega = phi * C_d.

Key functions:
    - `encode(a, b, g)` closed-form encoder, returns (phi, theta).
    - `encode_phi_array(a_values, g)` the same phi formula over a numpy array
      of indices (used by the census and by `decode_a`).
    - `geometric_phi_oracle(a, b, g)` builds the sphere/plane intersections
      explicitly and measures the angle between the reference and data
      vectors. Used to cross-check `encode`.
    - `decode_a(phi, g, a_max_hint)` / `decode_b(theta)` inverses.
    - `error_bound(a, x)` / `hsam_delta(h, pt_d)` worst-case analog error.

Notes for a new Python learner:
    - NaN is a legitimate result: an index whose angle leaves the arcsin
      domain is "unencodable". `Encoding.encodable` is the check to use;
      never compare NaN with `==`.
    - `numpy.errstate(invalid="ignore")` silences the warning numpy emits
      while producing those NaNs.
"""

# Import libraries
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from common.errors import DomainError, UndecodableError


@dataclass(frozen=True)
class Encoding:
    a: int
    b: float
    g: float
    phi: float
    theta: float
    omega: float

    @property
    def encodable(self) -> bool:
        return math.isfinite(self.phi)


@dataclass(frozen=True)
class GeometryPoint:
    x: float
    y: float
    z: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)


def _check_args(a: int, b: float, g: float) -> None:
    if int(a) != a or a < 1:
        raise DomainError(f"a must be an integer >= 1, got {a}")
    if not g > 0:
        raise DomainError(f"g must be > 0, got {g}")
    if not -1.0 <= b <= 1.0:
        raise DomainError(f"b must lie in [-1, 1], got {b}")


def encode_phi_array(a_values, g: float) -> np.ndarray:
    """
    Vectorized phi for integer indices `a_values` on curve `g`.

    Terms are evaluated in float64 in the census program's operation order.
    Squares and int-to-float conversions are both correctly rounded, so for
    indices below 2**26 the doubles match that program's Python-int
    arithmetic, and large indices cannot overflow.
    """
    a = np.asarray(a_values, dtype=np.int64).astype(np.float64)
    e = a ** 2 + a
    radius = a + a / (2 * g)
    with np.errstate(invalid="ignore", divide="ignore"):
        root = np.sqrt(np.absolute((2 * e - 1) ** 2 - 4 * (e ** 2 + 1 / 4 - radius ** 2)))
        dz = np.absolute(((2 * e - 1) + root) / 2 - ((2 * e - 1) - root) / 2)
        # only the square root is divided by 2g
        dx = np.absolute(a - (-1 + np.sqrt(np.absolute(1 - 4 * g * ((2 * e - 1) - root) / 2)) / (2 * g)))
        c = np.sqrt(dx ** 2 + dz ** 2)
        phi = np.arcsin(c * np.sin(np.pi - np.arcsin(dx / c)) / radius)
    return phi


def encode(a: int, b: float, g: float) -> Tuple[float, float]:
    _check_args(a, b, g)
    phi = float(encode_phi_array([a], g)[0])
    theta = float(np.arcsin(b))
    return phi, theta


def make_encoding(a: int, b: float, g: float, cd: Optional[float] = None) -> Encoding:
    phi, theta = encode(a, b, g)
    omega = phi * cd if cd is not None else phi
    return Encoding(a=int(a), b=float(b), g=float(g), phi=phi, theta=theta, omega=omega)


def decode_b(theta: float) -> float:
    if abs(theta) > math.pi / 2 + 1e-15:
        raise DomainError(f"theta must lie in [-pi/2, pi/2], got {theta}")
    return math.sin(theta)


def decode_a(phi: float, g: float, a_max_hint: int) -> int:
    """Nearest index on curve `g`; ties go to the smaller index."""
    if not math.isfinite(phi):
        raise DomainError(f"phi must be finite, got {phi}")
    if not g > 0:
        raise DomainError(f"g must be > 0, got {g}")
    if a_max_hint < 1:
        raise DomainError(f"a_max_hint must be >= 1, got {a_max_hint}")

    candidates = encode_phi_array(np.arange(1, a_max_hint + 1), g)
    finite = np.isfinite(candidates)
    if not finite.any():
        raise UndecodableError(f"no index in [1, {a_max_hint}] is encodable on g={g}")

    dist = np.where(finite, np.absolute(candidates - phi), np.inf)
    best = dist.min()
    ties = np.flatnonzero(np.isclose(dist, best, rtol=1e-9, atol=1e-15))
    return int(ties[0]) + 1


def error_bound(a: int, x: float) -> Tuple[float, int]:
    """
    Worst-case analog encoding error for a data point at distance `x`.

    |delta| never exceeds |pT_d| = x + 1/2; at the worst case x = a the
    recovered index can be off by 2a.
    """
    if a < 1:
        raise DomainError(f"a must be >= 1, got {a}")
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x}")
    return x + 0.5, 2 * int(a)


def hsam_delta(h: float, pt_d: float, sign: int = 1) -> float:
    """Error of the analog module for gain ratio `h`: (h - 1)|pT_d| / (1 +/- h)."""
    denom = 1 + h if sign >= 0 else 1 - h
    if denom == 0:
        raise DomainError("gain ratio makes the denominator vanish")
    return (h - 1) * abs(pt_d) / denom


# ---------- Geometric oracle ----------
#
# Every point is found by intersecting explicit objects in the plane y = b:
#   sphere s_a          centre p, radius a + a/(2g)
#   stacking profile    the same circle lowered to height E - 1/2 (E = a^2 + a)
#   guide column        the vertical line sqrt(E) from the sphere axis
#   guide parabola      z = g u^2 + 1/(4g) with u = x + 1
# The column meets the lowered profile at height t; the guide parabola
# reaches t at x = X, and the data point rises |a - X| above p.

def sphere_center(a: int, b: float) -> GeometryPoint:
    return GeometryPoint(float(a), float(b), float(a * a + a + b * b + b))


def sphere_radius(a: int, g: float) -> float:
    return a + a / (2 * g)


def vector_angle(u, v) -> float:
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    norm = np.linalg.norm(u) * np.linalg.norm(v)
    if norm == 0:
        raise DomainError("angle undefined for a zero vector")
    return float(np.arccos(np.clip(np.dot(u, v) / norm, -1.0, 1.0)))


def _quadratic_roots(qa: float, qb: float, qc: float) -> Optional[Tuple[float, float]]:
    """Real roots (low, high) of qa*t^2 + qb*t + qc, or None."""
    disc = qb * qb - 4 * qa * qc
    if disc < 0:
        return None
    root = math.sqrt(disc)
    q = -0.5 * (qb + math.copysign(root, qb))
    if q == 0:
        return 0.0, 0.0
    t0, t1 = q / qa, qc / q
    return min(t0, t1), max(t0, t1)


def _column_crossing(a: int, radius: float) -> Optional[float]:
    """Lower height where the guide column cuts the stacking profile, or None."""
    e = a * a + a
    z0 = e - 0.5
    # (z - z0)^2 + E = radius^2
    roots = _quadratic_roots(1.0, -2.0 * z0, z0 * z0 + e - radius ** 2)
    return None if roots is None else roots[0]


def _guide_crossing(level: float, g: float) -> Optional[float]:
    """x where the right branch of the guide parabola reaches `level`, or None."""
    roots = _quadratic_roots(g, 0.0, 1 / (4 * g) - level)
    return None if roots is None else roots[1] - 1


def _circle_point(center: GeometryPoint, radius: float, rise: float) -> Optional[GeometryPoint]:
    """Point of the sphere's great circle in y = b that lies `rise` above the centre, x > a."""
    roots = _quadratic_roots(1.0, 0.0, rise * rise - radius * radius)
    if roots is None:
        return None
    return GeometryPoint(center.x + roots[1], center.y, center.z + rise)


def data_points(a: int, b: float, g: float) -> Optional[Tuple[GeometryPoint, GeometryPoint, GeometryPoint]]:
    """
    Return (center, reference point, data point), or None when an intersection is missing.

    The reference point lies in the horizontal plane through the centre. When
    the sphere is narrower than the guide column (radius^2 < a^2 + a) there is
    no crossing and the index has no geometric data point.
    """
    _check_args(a, b, g)
    center = sphere_center(a, b)
    radius = sphere_radius(a, g)

    level = _column_crossing(a, radius)
    if level is None:
        return None
    x = _guide_crossing(level, g)
    if x is None:
        return None
    data = _circle_point(center, radius, abs(a - x))
    if data is None:
        return None
    reference = _circle_point(center, radius, 0.0)
    return center, reference, data


def geometric_phi_oracle(a: int, b: float, g: float) -> float:
    points = data_points(a, b, g)
    if points is None:
        return float("nan")
    center, reference, data = points
    p = center.as_array()
    return vector_angle(reference.as_array() - p, data.as_array() - p)
