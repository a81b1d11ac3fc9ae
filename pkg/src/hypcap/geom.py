"""Primitive planar shapes, hulls in the half-plane and compacts in the disk.

Shapes come in five parametric families.  Three live in the upper
half-plane and are rooted on the real axis (vertical slits, axis-aligned
boxes, half-disks centered on the axis); two live in the unit disk and are
rooted on the unit circle (radial slits, annular sectors).  A hull is a
finite disjoint union of rooted half-plane shapes whose complement in the
half-plane stays simply connected; a disk compact is the analogous union
inside the disk.  Disjointness is checked with exact pairwise predicates,
contact along the rooting boundary (real axis / unit circle) is allowed.

All distance queries are exact closed forms, vectorized over numpy arrays
of points encoded as complex numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

TWO_PI = 2.0 * math.pi


class InvalidShapeError(ValueError):
    """Raised when shape parameters violate the family's invariants."""


class InvalidHullError(ValueError):
    """Raised when a shape list cannot form a valid hull / disk compact."""


@dataclass(frozen=True)
class Point:
    """A point of the plane; immutable, finite coordinates."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidShapeError("point coordinates must be finite")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    @staticmethod
    def of(z: complex) -> "Point":
        return Point(z.real, z.imag)


def _as_complex(z) -> np.ndarray:
    if isinstance(z, Point):
        z = z.z
    return np.asarray(z, dtype=complex)


# ---------------------------------------------------------------------------
# shape families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VSlit:
    """Vertical slit {x} x [0, h] rooted on the real axis."""

    x: float
    h: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.h)) or self.h <= 0:
            raise InvalidShapeError("VSlit needs finite x and h > 0")

    def dist(self, z) -> np.ndarray:
        z = _as_complex(z)
        dy = z.imag - np.clip(z.imag, 0.0, self.h)
        return np.hypot(z.real - self.x, dy)

    def nearest(self, z) -> np.ndarray:
        z = _as_complex(z)
        return self.x + 1j * np.clip(z.imag, 0.0, self.h)

    @property
    def sup_abs(self) -> float:
        return math.hypot(self.x, self.h)

    @property
    def y_range(self) -> tuple[float, float]:
        return (0.0, self.h)

    @property
    def x_range(self) -> tuple[float, float]:
        return (self.x, self.x)

    def to_spec(self) -> dict:
        return {"type": "vslit", "x": self.x, "h": self.h}


@dataclass(frozen=True)
class BoxShape:
    """Axis-aligned solid box [x0, x1] x [y0, y1]; rooted iff y0 == 0."""

    x0: float
    x1: float
    y0: float
    y1: float

    def __post_init__(self):
        vals = (self.x0, self.x1, self.y0, self.y1)
        if not all(math.isfinite(v) for v in vals):
            raise InvalidShapeError("BoxShape needs finite corners")
        if not (self.x0 < self.x1 and 0 <= self.y0 < self.y1):
            raise InvalidShapeError("BoxShape needs x0 < x1 and 0 <= y0 < y1")

    def dist(self, z) -> np.ndarray:
        z = _as_complex(z)
        dx = np.maximum(np.maximum(self.x0 - z.real, z.real - self.x1), 0.0)
        dy = np.maximum(np.maximum(self.y0 - z.imag, z.imag - self.y1), 0.0)
        return np.hypot(dx, dy)

    def nearest(self, z) -> np.ndarray:
        z = _as_complex(z)
        return np.clip(z.real, self.x0, self.x1) + 1j * np.clip(z.imag, self.y0, self.y1)

    @property
    def sup_abs(self) -> float:
        return max(math.hypot(x, y) for x in (self.x0, self.x1) for y in (self.y0, self.y1))

    @property
    def y_range(self) -> tuple[float, float]:
        return (self.y0, self.y1)

    @property
    def x_range(self) -> tuple[float, float]:
        return (self.x0, self.x1)

    @property
    def area(self) -> float:
        return (self.x1 - self.x0) * (self.y1 - self.y0)

    def to_spec(self) -> dict:
        return {"type": "box", "x0": self.x0, "x1": self.x1, "y0": self.y0, "y1": self.y1}


@dataclass(frozen=True)
class HalfDisk:
    """Solid half-disk |z - c| <= r in the closed upper half-plane."""

    c: float
    r: float

    def __post_init__(self):
        if not (math.isfinite(self.c) and math.isfinite(self.r)) or self.r <= 0:
            raise InvalidShapeError("HalfDisk needs finite c and r > 0")

    def dist(self, z) -> np.ndarray:
        z = _as_complex(z)
        above = z.imag >= 0
        rad = np.maximum(np.abs(z - self.c) - self.r, 0.0)
        # below the axis the nearest set point is on the diameter segment
        seg = np.hypot(np.maximum(np.abs(z.real - self.c) - self.r, 0.0), np.abs(z.imag))
        return np.where(above, rad, seg)

    def nearest(self, z) -> np.ndarray:
        z = _as_complex(z)
        w = z - self.c
        aw = np.abs(w)
        on_arc = self.c + np.where(aw > 0, w / np.where(aw == 0, 1.0, aw), 1.0) * self.r
        inside = (aw <= self.r) & (z.imag >= 0)
        out = np.where(inside, z, on_arc)
        below = z.imag < 0
        if np.any(below):
            seg = np.clip(z.real, self.c - self.r, self.c + self.r) + 0j
            out = np.where(below, seg, out)
        return out

    @property
    def sup_abs(self) -> float:
        return abs(self.c) + self.r

    @property
    def y_range(self) -> tuple[float, float]:
        return (0.0, self.r)

    @property
    def x_range(self) -> tuple[float, float]:
        return (self.c - self.r, self.c + self.r)

    @property
    def area(self) -> float:
        return 0.5 * math.pi * self.r * self.r

    def to_spec(self) -> dict:
        return {"type": "halfdisk", "c": self.c, "r": self.r}


def _norm_angle(a) -> np.ndarray:
    """Reduce angles to [0, 2*pi)."""
    return np.mod(a, TWO_PI)


@dataclass(frozen=True)
class RadialSlit:
    """Radial segment from rho*e^{i theta} out to the unit circle."""

    theta: float
    rho: float

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.rho)):
            raise InvalidShapeError("RadialSlit needs finite parameters")
        if not (0.0 < self.rho < 1.0):
            raise InvalidShapeError("RadialSlit needs rho in (0, 1)")

    def dist(self, z) -> np.ndarray:
        z = _as_complex(z)
        w = z * np.exp(-1j * self.theta)
        dr = w.real - np.clip(w.real, self.rho, 1.0)
        return np.hypot(dr, w.imag)

    def nearest(self, z) -> np.ndarray:
        z = _as_complex(z)
        w = z * np.exp(-1j * self.theta)
        s = np.clip(w.real, self.rho, 1.0)
        return s * np.exp(1j * self.theta) * np.ones_like(z)

    @property
    def rho_min(self) -> float:
        return self.rho

    def angle_interval(self) -> tuple[float, float]:
        a = float(_norm_angle(self.theta))
        return (a, 0.0)

    def to_spec(self) -> dict:
        return {"type": "rslit", "theta": self.theta, "rho": self.rho}


@dataclass(frozen=True)
class ArcBox:
    """Annular sector {rho <= |z| < 1, arg z in [theta0, theta1]}.

    theta1 - theta0 == 2*pi gives the full ring.  The annulus constraint
    rho > 1/2 is enforced at the DiskCompact level, not here, so that
    dyadic cover squares (rho = 1 - 2^-n) remain representable.
    """

    theta0: float
    theta1: float
    rho: float

    def __post_init__(self):
        ok = (
            math.isfinite(self.theta0)
            and math.isfinite(self.theta1)
            and math.isfinite(self.rho)
            and self.theta0 < self.theta1
            and (self.theta1 - self.theta0) <= TWO_PI
            and 0.0 < self.rho < 1.0
        )
        if not ok:
            raise InvalidShapeError("ArcBox needs theta0 < theta1 <= theta0 + 2*pi, rho in (0,1)")

    @property
    def width(self) -> float:
        return self.theta1 - self.theta0

    def _angle_in(self, z: np.ndarray) -> np.ndarray:
        if self.width >= TWO_PI:
            return np.ones(z.shape, dtype=bool)
        d = _norm_angle(np.angle(z) - self.theta0)
        return d <= self.width

    def dist(self, z) -> np.ndarray:
        z = _as_complex(z)
        r = np.abs(z)
        inside_ang = self._angle_in(z)
        d_radial = np.maximum(np.maximum(self.rho - r, r - 1.0), 0.0)
        if self.width >= TWO_PI:
            return d_radial
        e0 = RadialSlit(self.theta0, self.rho).dist(z)
        e1 = RadialSlit(self.theta1, self.rho).dist(z)
        return np.where(inside_ang, d_radial, np.minimum(e0, e1))

    def nearest(self, z) -> np.ndarray:
        z = _as_complex(z)
        r = np.abs(z)
        safe = np.where(r == 0, 1.0, r)
        radial = np.clip(r, self.rho, 1.0) * (z / safe)
        radial = np.where(r == 0, self.rho * np.exp(1j * 0.5 * (self.theta0 + self.theta1)), radial)
        if self.width >= TWO_PI:
            return radial
        inside_ang = self._angle_in(z)
        s0 = RadialSlit(self.theta0, self.rho)
        s1 = RadialSlit(self.theta1, self.rho)
        pick0 = s0.dist(z) <= s1.dist(z)
        edge = np.where(pick0, s0.nearest(z), s1.nearest(z))
        return np.where(inside_ang, radial, edge)

    @property
    def rho_min(self) -> float:
        return self.rho

    @property
    def area(self) -> float:
        return 0.5 * self.width * (1.0 - self.rho * self.rho)

    def angle_interval(self) -> tuple[float, float]:
        return (float(_norm_angle(self.theta0)), float(self.width))

    def to_spec(self) -> dict:
        return {"type": "arcbox", "theta0": self.theta0, "theta1": self.theta1, "rho": self.rho}


@dataclass(frozen=True)
class PointProbe:
    """Degenerate single-point obstacle, used by tests and area oracles."""

    x: float
    y: float

    def dist(self, z) -> np.ndarray:
        z = _as_complex(z)
        return np.abs(z - complex(self.x, self.y))

    def nearest(self, z) -> np.ndarray:
        z = _as_complex(z)
        return np.full_like(z, complex(self.x, self.y))

    @property
    def sup_abs(self) -> float:
        return math.hypot(self.x, self.y)

    @property
    def y_range(self) -> tuple[float, float]:
        return (self.y, self.y)

    @property
    def x_range(self) -> tuple[float, float]:
        return (self.x, self.x)

    def to_spec(self) -> dict:
        return {"type": "point", "x": self.x, "y": self.y}


HalfPlaneShape = Union[VSlit, BoxShape, HalfDisk, PointProbe]
DiskShape = Union[RadialSlit, ArcBox]
Shape = Union[HalfPlaneShape, DiskShape]


# ---------------------------------------------------------------------------
# exact pairwise disjointness predicates
# ---------------------------------------------------------------------------


def _overlap_off_axis(a: HalfPlaneShape, b: HalfPlaneShape) -> bool:
    """True iff the closures of a and b share a point strictly above the axis."""
    if isinstance(a, (BoxShape, HalfDisk)) and isinstance(b, VSlit):
        return _overlap_off_axis(b, a)
    if isinstance(a, HalfDisk) and isinstance(b, BoxShape):
        return _overlap_off_axis(b, a)

    if isinstance(a, VSlit) and isinstance(b, VSlit):
        return a.x == b.x
    if isinstance(a, VSlit) and isinstance(b, BoxShape):
        return b.x0 <= a.x <= b.x1 and b.y0 <= a.h
    if isinstance(a, VSlit) and isinstance(b, HalfDisk):
        return abs(a.x - b.c) < b.r
    if isinstance(a, BoxShape) and isinstance(b, BoxShape):
        return max(a.x0, b.x0) <= min(a.x1, b.x1) and max(a.y0, b.y0) <= min(a.y1, b.y1)
    if isinstance(a, BoxShape) and isinstance(b, HalfDisk):
        dx = max(0.0, a.x0 - b.c, b.c - a.x1)
        if a.y0 > 0:
            return math.hypot(dx, a.y0) <= b.r
        return dx < b.r
    if isinstance(a, HalfDisk) and isinstance(b, HalfDisk):
        return abs(a.c - b.c) < a.r + b.r
    raise TypeError(f"no overlap predicate for {type(a).__name__}/{type(b).__name__}")


def _arc_intervals_touch(i0: tuple[float, float], i1: tuple[float, float]) -> bool:
    """Closed circular-interval intersection; intervals are (start, width)."""
    a0, w0 = i0
    a1, w1 = i1
    if w0 >= TWO_PI or w1 >= TWO_PI:
        return True
    d01 = (a1 - a0) % TWO_PI
    d10 = (a0 - a1) % TWO_PI
    return d01 <= w0 or d10 <= w1


def _overlap_in_disk(a: DiskShape, b: DiskShape) -> bool:
    """True iff the closures of a and b meet strictly inside the unit disk."""
    return _arc_intervals_touch(a.angle_interval(), b.angle_interval())


# ---------------------------------------------------------------------------
# hulls and disk compacts
# ---------------------------------------------------------------------------


def validate_halfplane_shapes(shapes: Sequence[HalfPlaneShape]) -> str | None:
    """Return None when the list forms a valid hull, else a description."""
    for i, s in enumerate(shapes):
        if not isinstance(s, (VSlit, BoxShape, HalfDisk)):
            return f"shape {i}: {type(s).__name__} is not a half-plane hull family"
        if isinstance(s, BoxShape) and s.y0 != 0.0:
            return f"shape {i}: box is not rooted on the real axis (y0 = {s.y0})"
    for i in range(len(shapes)):
        for j in range(i + 1, len(shapes)):
            if _overlap_off_axis(shapes[i], shapes[j]):
                return f"shapes {i} and {j} overlap off the real axis"
    return None


def validate_disk_shapes(shapes: Sequence[DiskShape], require_annulus: bool = True) -> str | None:
    for i, s in enumerate(shapes):
        if not isinstance(s, (RadialSlit, ArcBox)):
            return f"shape {i}: {type(s).__name__} is not a disk family"
        if require_annulus and not (s.rho_min > 0.5):
            return f"shape {i}: not contained in the annulus 1/2 < |z| < 1 (rho = {s.rho_min})"
    for i in range(len(shapes)):
        for j in range(i + 1, len(shapes)):
            if _overlap_in_disk(shapes[i], shapes[j]):
                return f"shapes {i} and {j} overlap inside the disk"
    return None


class _ShapeUnion:
    """Shared implementation for finite unions of shapes."""

    shapes: tuple

    def dist(self, z) -> np.ndarray:
        z = _as_complex(z)
        if not self.shapes:
            return np.full(z.shape, np.inf)
        d = self.shapes[0].dist(z)
        for s in self.shapes[1:]:
            d = np.minimum(d, s.dist(z))
        return d

    def dist_argmin(self, z) -> tuple[np.ndarray, np.ndarray]:
        """(min distance, index of the first nearest shape)."""
        z = _as_complex(z)
        if not self.shapes:
            return np.full(z.shape, np.inf), np.full(z.shape, -1, dtype=int)
        ds = np.stack([s.dist(z) for s in self.shapes])
        idx = np.argmin(ds, axis=0)
        return np.min(ds, axis=0), idx

    def nearest(self, z) -> np.ndarray:
        z = _as_complex(z)
        _, idx = self.dist_argmin(z)
        out = np.empty_like(z)
        for k, s in enumerate(self.shapes):
            m = idx == k
            if np.any(m):
                out[m] = s.nearest(z[m])
        return out

    def member(self, z) -> np.ndarray:
        return self.dist(z) <= 0.0

    @property
    def is_empty(self) -> bool:
        return len(self.shapes) == 0

    def __len__(self) -> int:
        return len(self.shapes)


class HalfPlaneHull(_ShapeUnion):
    """Bounded union of rooted shapes with simply connected complement in H."""

    def __init__(self, shapes: Iterable[HalfPlaneShape] = (), validate: bool = True):
        self.shapes = tuple(shapes)
        if validate:
            msg = validate_halfplane_shapes(self.shapes)
            if msg is not None:
                raise InvalidHullError(msg)

    @property
    def sup_abs(self) -> float:
        return max((s.sup_abs for s in self.shapes), default=0.0)

    @property
    def y_max(self) -> float:
        return max((s.y_range[1] for s in self.shapes), default=0.0)

    @property
    def x_bounds(self) -> tuple[float, float]:
        if not self.shapes:
            return (0.0, 0.0)
        return (
            min(s.x_range[0] for s in self.shapes),
            max(s.x_range[1] for s in self.shapes),
        )

    def translate(self, t: float) -> "HalfPlaneHull":
        return HalfPlaneHull([_translate(s, t) for s in self.shapes], validate=False)

    def scale(self, s: float) -> "HalfPlaneHull":
        return HalfPlaneHull([_scale(sh, s) for sh in self.shapes], validate=False)

    def mirror(self) -> "HalfPlaneHull":
        return HalfPlaneHull([_mirror(sh) for sh in self.shapes], validate=False)

    def to_spec(self) -> dict:
        return {"space": "halfplane", "shapes": [s.to_spec() for s in self.shapes]}


class DiskCompact(_ShapeUnion):
    """Union of circle-rooted shapes inside the annulus 1/2 < |z| < 1."""

    def __init__(
        self,
        shapes: Iterable[DiskShape] = (),
        validate: bool = True,
        require_annulus: bool = True,
    ):
        self.shapes = tuple(shapes)
        if validate:
            msg = validate_disk_shapes(self.shapes, require_annulus=require_annulus)
            if msg is not None:
                raise InvalidHullError(msg)

    @property
    def rho_min(self) -> float:
        return min((s.rho_min for s in self.shapes), default=1.0)

    def to_spec(self) -> dict:
        return {"space": "disk", "shapes": [s.to_spec() for s in self.shapes]}


def _translate(s: HalfPlaneShape, t: float) -> HalfPlaneShape:
    if isinstance(s, VSlit):
        return VSlit(s.x + t, s.h)
    if isinstance(s, BoxShape):
        return BoxShape(s.x0 + t, s.x1 + t, s.y0, s.y1)
    if isinstance(s, HalfDisk):
        return HalfDisk(s.c + t, s.r)
    if isinstance(s, PointProbe):
        return PointProbe(s.x + t, s.y)
    raise TypeError(type(s).__name__)


def _scale(s: HalfPlaneShape, k: float) -> HalfPlaneShape:
    if k <= 0:
        raise ValueError("scale factor must be positive")
    if isinstance(s, VSlit):
        return VSlit(s.x * k, s.h * k)
    if isinstance(s, BoxShape):
        return BoxShape(s.x0 * k, s.x1 * k, s.y0 * k, s.y1 * k)
    if isinstance(s, HalfDisk):
        return HalfDisk(s.c * k, s.r * k)
    if isinstance(s, PointProbe):
        return PointProbe(s.x * k, s.y * k)
    raise TypeError(type(s).__name__)


def _mirror(s: HalfPlaneShape) -> HalfPlaneShape:
    if isinstance(s, VSlit):
        return VSlit(-s.x, s.h)
    if isinstance(s, BoxShape):
        return BoxShape(-s.x1, -s.x0, s.y0, s.y1)
    if isinstance(s, HalfDisk):
        return HalfDisk(-s.c, s.r)
    if isinstance(s, PointProbe):
        return PointProbe(-s.x, s.y)
    raise TypeError(type(s).__name__)


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------


def euclid_dist(p: Point | complex, s) -> float:
    """Exact euclidean distance from a point to a shape (0 if inside)."""
    z = p.z if isinstance(p, Point) else complex(p)
    return float(s.dist(np.asarray([z]))[0])


def shape_intersects_disk(s, center: Point | complex, radius: float) -> bool:
    """True iff the closed disk of given center/radius meets the shape."""
    if radius <= 0:
        raise ValueError("radius must be positive")
    return euclid_dist(center, s) <= radius


def validate_hull(hull_or_shapes) -> str | None:
    """Validate a hull (or raw shape list); None means ok."""
    if isinstance(hull_or_shapes, HalfPlaneHull):
        return validate_halfplane_shapes(hull_or_shapes.shapes)
    if isinstance(hull_or_shapes, DiskCompact):
        return validate_disk_shapes(hull_or_shapes.shapes)
    shapes = tuple(hull_or_shapes)
    if shapes and isinstance(shapes[0], (RadialSlit, ArcBox)):
        return validate_disk_shapes(shapes)
    return validate_halfplane_shapes(shapes)


# ---------------------------------------------------------------------------
# shape specification files
# ---------------------------------------------------------------------------

_SHAPE_PARSERS = {
    "vslit": (VSlit, ("x", "h")),
    "box": (BoxShape, ("x0", "x1", "y0", "y1")),
    "halfdisk": (HalfDisk, ("c", "r")),
    "rslit": (RadialSlit, ("theta", "rho")),
    "arcbox": (ArcBox, ("theta0", "theta1", "rho")),
}


def shape_from_spec(doc: dict):
    try:
        kind = doc["type"]
    except (TypeError, KeyError):
        raise InvalidShapeError("shape entry missing 'type'") from None
    if kind not in _SHAPE_PARSERS:
        raise InvalidShapeError(f"unknown shape type {kind!r}")
    cls, fields = _SHAPE_PARSERS[kind]
    missing = [f for f in fields if f not in doc]
    if missing:
        raise InvalidShapeError(f"shape {kind!r} missing field {missing[0]!r}")
    kwargs = {}
    for f in fields:
        v = doc[f]
        if not isinstance(v, (int, float)) or isinstance(v, bool):
            raise InvalidShapeError(f"shape {kind!r} field {f!r} must be a number")
        kwargs[f] = float(v)
    return cls(**kwargs)


def set_from_spec(doc: dict) -> HalfPlaneHull | DiskCompact:
    """Parse the JSON shape-file document into a hull or disk compact."""
    space = doc.get("space")
    if space not in ("halfplane", "disk"):
        raise InvalidShapeError("top-level 'space' must be 'halfplane' or 'disk'")
    raw = doc.get("shapes")
    if not isinstance(raw, list):
        raise InvalidShapeError("top-level 'shapes' must be an array")
    shapes = [shape_from_spec(d) for d in raw]
    if space == "halfplane":
        return HalfPlaneHull(shapes)
    return DiskCompact(shapes)
