"""Hyperbolic metric (curvature -1) on the half-plane and the unit disk.

Conventions: density 1/Im z on the half-plane and 2/(1 - |z|^2) on the
disk, so the Moebius transport maps between the two spaces are isometries
and "radius one" means the same thing on both sides.

Hyperbolic balls are euclidean disks with closed-form center and radius,
which lets neighborhood membership be decided exactly by one disk-shape
intersection test per primitive shape: no iterative minimization of the
hyperbolic distance enters the certification chain.  Neighborhood areas
are bracketed by an adaptive quadtree whose cell tests use the exact ball
membership at radii shrunk/grown by a certified bound on the cell's
hyperbolic radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import connected_components
from scipy.spatial import cKDTree

from . import quadtree
from .geom import DiskCompact, HalfPlaneHull, Point, _as_complex
from .quadtree import INSIDE, OUTSIDE, UNKNOWN, AreaBounds, Leaves

SQRT2 = math.sqrt(2.0)


class DomainError(ValueError):
    """A point lies outside the space an operation requires."""


# ---------------------------------------------------------------------------
# distances and balls
# ---------------------------------------------------------------------------


def hyp_dist_h(z: Point | complex, w: Point | complex) -> float:
    """Hyperbolic distance in the upper half-plane."""
    a = z.z if isinstance(z, Point) else complex(z)
    b = w.z if isinstance(w, Point) else complex(w)
    if a.imag <= 0 or b.imag <= 0:
        raise DomainError("hyp_dist_h needs points with positive imaginary part")
    q = abs(a - b) ** 2 / (2.0 * a.imag * b.imag)
    return math.acosh(1.0 + q)


def hyp_dist_d(z: Point | complex, w: Point | complex) -> float:
    """Hyperbolic distance in the unit disk."""
    a = z.z if isinstance(z, Point) else complex(z)
    b = w.z if isinstance(w, Point) else complex(w)
    if abs(a) >= 1 or abs(b) >= 1:
        raise DomainError("hyp_dist_d needs points inside the open unit disk")
    p = abs(a - b) / abs(1.0 - a.conjugate() * b)
    return 2.0 * math.atanh(p)


@dataclass(frozen=True)
class HypBall:
    """A closed hyperbolic ball, stored with its euclidean realization."""

    euclidean_center: Point
    euclidean_radius: float
    hyp_center: Point
    hyp_radius: float
    space: str


def _ball_halfplane(z: np.ndarray, rho) -> tuple[np.ndarray, np.ndarray]:
    y = z.imag
    c = z.real + 1j * (y * np.cosh(rho))
    return c, y * np.sinh(rho)


def _ball_disk(z: np.ndarray, rho) -> tuple[np.ndarray, np.ndarray]:
    t = np.tanh(np.asarray(rho) / 2.0)
    a2 = np.abs(z) ** 2
    den = 1.0 - t * t * a2
    return z * (1.0 - t * t) / den, t * (1.0 - a2) / den


def hyp_ball(space: str, center: Point | complex, rho: float) -> HypBall:
    """The euclidean disk equal to the closed hyperbolic ball."""
    if rho <= 0:
        raise ValueError("rho must be positive")
    a = center.z if isinstance(center, Point) else complex(center)
    if space == "halfplane":
        if a.imag <= 0:
            raise DomainError("ball center must lie in the open half-plane")
        c, r = _ball_halfplane(np.asarray([a]), rho)
    elif space == "disk":
        if abs(a) >= 1:
            raise DomainError("ball center must lie in the open disk")
        c, r = _ball_disk(np.asarray([a]), rho)
    else:
        raise ValueError("space must be 'halfplane' or 'disk'")
    return HypBall(Point.of(complex(c[0])), float(r[0]), Point.of(a), float(rho), space)


def _space_of(S) -> str:
    if isinstance(S, HalfPlaneHull):
        return "halfplane"
    if isinstance(S, DiskCompact):
        return "disk"
    space = getattr(S, "space", None)
    if space in ("halfplane", "disk"):
        return space
    raise TypeError(f"cannot infer the ambient space of {type(S).__name__}")


def _member_mask(S, space: str, z: np.ndarray, rho) -> np.ndarray:
    """Exact N-membership for an array of points (rho may be per-point)."""
    if getattr(S, "is_empty", False):
        return np.zeros(z.shape, dtype=bool)
    if space == "halfplane":
        c, r = _ball_halfplane(z, rho)
    else:
        c, r = _ball_disk(z, rho)
    ball_test = getattr(S, "ball_intersects", None)
    if ball_test is not None:
        return ball_test(c, r)
    return S.dist(c) <= r


def neighborhood_member(z: Point | complex, S, rho: float = 1.0) -> bool:
    """True iff z lies in the closed hyperbolic rho-neighborhood of S."""
    space = _space_of(S)
    a = z.z if isinstance(z, Point) else complex(z)
    if space == "halfplane" and a.imag <= 0:
        raise DomainError("point must lie in the open half-plane")
    if space == "disk" and abs(a) >= 1:
        raise DomainError("point must lie in the open unit disk")
    return bool(_member_mask(S, space, np.asarray([a]), rho)[0])


# ---------------------------------------------------------------------------
# certified reach bounds (how far, in euclidean terms, N can extend from S)
# ---------------------------------------------------------------------------


def _reach_halfplane(rho: float, y_max: float) -> float:
    # the farthest euclidean displacement of a radius-rho ball from its
    # hyperbolic center (x, y) is y (e^rho - 1)
    return (math.exp(rho) - 1.0) * y_max


def _reach_disk(rho: float, min_abs: float) -> float:
    # displacement t (1 - s^2) / (1 - t s) at |center| = s, bounded using
    # s >= min_abs in the numerator and s <= 1 in the denominator
    t = math.tanh(rho / 2.0)
    return t * (1.0 - min_abs * min_abs) / (1.0 - t)


# ---------------------------------------------------------------------------
# neighborhood area
# ---------------------------------------------------------------------------


def _classifier_halfplane(S, rho: float):
    reach = _reach_halfplane(rho, S.y_max)

    def classify(cx, cy, half):
        z = cx + 1j * cy
        halfdiag = half * SQRT2
        out = np.full(cx.shape, UNKNOWN, dtype=np.int8)
        d = S.dist(z)
        out[d - halfdiag > reach] = OUTSIDE
        ymin = cy - half
        test = (out == UNKNOWN) & (ymin > 0)
        if np.any(test):
            rc = halfdiag[test] / ymin[test]
            zc = z[test]
            sub = np.full(zc.shape, UNKNOWN, dtype=np.int8)
            grown = _member_mask(S, "halfplane", zc, rho + rc)
            sub[~grown] = OUTSIDE
            can_in = (rc < rho) & (sub == UNKNOWN)
            if np.any(can_in):
                shrunk = _member_mask(S, "halfplane", zc[can_in], rho - rc[can_in])
                tmp = sub[can_in]
                tmp[shrunk] = INSIDE
                sub[can_in] = tmp
            out[test] = sub
        return out

    return classify


def _classifier_disk(S, rho: float):
    reach = _reach_disk(rho, getattr(S, "min_abs", getattr(S, "rho_min", 0.0)))

    def classify(cx, cy, half):
        z = cx + 1j * cy
        halfdiag = half * SQRT2
        out = np.full(cx.shape, UNKNOWN, dtype=np.int8)
        d = S.dist(z)
        out[d - halfdiag > reach] = OUTSIDE
        # cells fully outside the closed disk cannot meet N
        out[(np.abs(z) - halfdiag) > 1.0] = OUTSIDE
        maxabs = np.hypot(np.abs(z.real) + half, np.abs(z.imag) + half)
        test = (out == UNKNOWN) & (maxabs < 1.0)
        if np.any(test):
            dens = 2.0 / (1.0 - maxabs[test] ** 2)
            rc = halfdiag[test] * dens
            zc = z[test]
            sub = np.full(zc.shape, UNKNOWN, dtype=np.int8)
            grown = _member_mask(S, "disk", zc, rho + rc)
            sub[~grown] = OUTSIDE
            can_in = (rc < rho) & (sub == UNKNOWN)
            if np.any(can_in):
                shrunk = _member_mask(S, "disk", zc[can_in], rho - rc[can_in])
                tmp = sub[can_in]
                tmp[shrunk] = INSIDE
                sub[can_in] = tmp
            out[test] = sub
        return out

    return classify


def _root_square_halfplane(S, rho: float) -> tuple[float, float, float]:
    pad = _reach_halfplane(rho, S.y_max)
    x_lo, x_hi = S.x_bounds
    x_lo -= pad * 1.01
    x_hi += pad * 1.01
    top = S.y_max * math.exp(rho) * 1.01
    size = max(x_hi - x_lo, top)
    return x_lo, 0.0, size


def neighborhood_area(
    S,
    rho: float = 1.0,
    tol: float = 1e-3,
    relative: bool = False,
    max_depth: int = 24,
) -> AreaBounds:
    """Certified bounds on the euclidean area of the rho-neighborhood of S."""
    if rho <= 0 or tol <= 0:
        raise ValueError("rho and tol must be positive")
    if getattr(S, "is_empty", False):
        return AreaBounds(0.0, 0.0, 0, True)
    space = _space_of(S)
    if space == "halfplane":
        gx0, gy0, size = _root_square_halfplane(S, rho)
        classify = _classifier_halfplane(S, rho)
    else:
        gx0, gy0, size = -1.05, -1.05, 2.10
        classify = _classifier_disk(S, rho)
    goal = (lambda lo, up: tol * up) if relative else (lambda lo, up: tol)
    _, bounds = quadtree.refine(gx0, gy0, size, classify, goal, max_depth)
    return bounds


# ---------------------------------------------------------------------------
# filled neighborhoods
# ---------------------------------------------------------------------------


@dataclass
class FilledRegion:
    """Quadtree description of the filled neighborhood of a disk compact.

    Cells certified free of N that are grid-connected to the cell holding
    the origin form the *passable* region, a guaranteed subset of the
    complement of the filled neighborhood; everything else is *blocked*.
    """

    leaves: Leaves
    n_bounds: AreaBounds
    bounds: AreaBounds
    passable: np.ndarray
    rho: float

    def blocked_rects(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Geometric rects of blocked cells adjacent to the passable region."""
        x0, x1, y0, y1 = self.leaves.rects()
        blocked = ~self.passable
        pi, pj = quadtree.adjacency_pairs(self.leaves, np.ones_like(blocked), corners=True)
        frontier = np.zeros(blocked.shape, dtype=bool)
        mask = self.passable[pi] & blocked[pj]
        frontier[pj[mask]] = True
        mask = self.passable[pj] & blocked[pi]
        frontier[pi[mask]] = True
        keep = frontier
        return x0[keep], x1[keep], y0[keep], y1[keep]


def _segment_reaches_disk(p0x, p0y, p1x, p1y) -> np.ndarray:
    """True when the segment has a point with |z| < 1 (vectorized)."""
    dx = p1x - p0x
    dy = p1y - p0y
    den = dx * dx + dy * dy
    t = np.zeros_like(p0x)
    nz = den > 0
    t[nz] = np.clip(-(p0x[nz] * dx[nz] + p0y[nz] * dy[nz]) / den[nz], 0.0, 1.0)
    qx = p0x + t * dx
    qy = p0y + t * dy
    return np.hypot(qx, qy) < 1.0


def _cell_of_origin(leaves: Leaves) -> int:
    x0, x1, y0, y1 = leaves.rects()
    hit = np.flatnonzero((x0 <= 0.0) & (0.0 < x1) & (y0 <= 0.0) & (0.0 < y1))
    if hit.size == 0:
        raise RuntimeError("origin not covered by the refinement root")
    return int(hit[0])


def _flood_masks(leaves: Leaves, cls: np.ndarray):
    """(reached_strict, reached_generous) connectivity to the origin cell."""
    n = cls.size
    free = cls == OUTSIDE
    origin = _cell_of_origin(leaves)

    def components(passable: np.ndarray, corners: bool, check_edges: bool) -> np.ndarray:
        if not passable[origin]:
            return np.zeros(n, dtype=bool)
        pi, pj = quadtree.adjacency_pairs(leaves, passable, corners=corners)
        if check_edges and pi.size:
            x0, x1, y0, y1 = leaves.rects()
            ex0 = np.maximum(x0[pi], x0[pj])
            ex1 = np.minimum(x1[pi], x1[pj])
            ey0 = np.maximum(y0[pi], y0[pj])
            ey1 = np.minimum(y1[pi], y1[pj])
            ok = _segment_reaches_disk(ex0, ey0, ex1, ey1)
            pi, pj = pi[ok], pj[ok]
        graph = sparse.coo_matrix(
            (np.ones(pi.size, dtype=np.int8), (pi, pj)), shape=(n, n)
        )
        _, labels = connected_components(graph, directed=False)
        return passable & (labels == labels[origin])

    reached_strict = components(free, corners=False, check_edges=True)
    # a genuine path in the disk complement only ever crosses free or
    # unknown cells, possibly through corners
    reached_gen = components(free | (cls == UNKNOWN), corners=True, check_edges=False)
    return reached_strict, reached_gen


def _unit_disk_chord_integral(x: float) -> float:
    """Antiderivative of sqrt(1 - x^2) on [-1, 1]."""
    x = max(-1.0, min(1.0, x))
    return 0.5 * (x * math.sqrt(max(1.0 - x * x, 0.0)) + math.asin(x))


def circle_rect_area(a: float, b: float, c: float, d: float) -> float:
    """Exact area of [a, b] x [c, d] intersected with the unit disk."""
    a, b = max(a, -1.0), min(b, 1.0)
    if a >= b or c >= 1.0 or d <= -1.0:
        return 0.0
    cuts = {a, b}
    for yy in (c, d):
        if -1.0 < yy < 1.0:
            t = math.sqrt(1.0 - yy * yy)
            for x in (-t, t):
                if a < x < b:
                    cuts.add(x)
    xs = sorted(cuts)
    total = 0.0
    for lo, hi in zip(xs[:-1], xs[1:]):
        mid = 0.5 * (lo + hi)
        s_mid = math.sqrt(max(1.0 - mid * mid, 0.0))
        top_const = d <= s_mid
        bot_const = c >= -s_mid
        top_mid = d if top_const else s_mid
        bot_mid = c if bot_const else -s_mid
        if top_mid <= bot_mid:
            continue
        seg = _unit_disk_chord_integral(hi) - _unit_disk_chord_integral(lo)
        width = hi - lo
        val = (d * width if top_const else seg) - (c * width if bot_const else -seg)
        total += val
    return total


def _indisk_areas(leaves: Leaves) -> np.ndarray:
    """Exact area of each cell's intersection with the closed unit disk."""
    x0, x1, y0, y1 = leaves.rects()
    areas = leaves.areas()
    far = np.hypot(np.maximum(np.abs(x0), np.abs(x1)), np.maximum(np.abs(y0), np.abs(y1)))
    near = np.hypot(np.clip(0.0, x0, x1), np.clip(0.0, y0, y1))
    out = np.where(far <= 1.0, areas, 0.0)
    crossing = np.flatnonzero((far > 1.0) & (near < 1.0))
    for i in crossing:
        out[i] = circle_rect_area(x0[i], x1[i], y0[i], y1[i])
    return out


def filled_region(
    B,
    rho: float = 1.0,
    tol: float = 1e-3,
    max_depth: int = 24,
) -> FilledRegion:
    """Refine until the filled-neighborhood area bracket is tol-tight."""
    if rho <= 0 or tol <= 0:
        raise ValueError("rho and tol must be positive")
    space = _space_of(B)
    if space != "disk":
        raise ValueError("filled neighborhoods are defined in the disk")
    if neighborhood_member(0j, B, rho):
        raise DomainError("the origin lies in the rho-neighborhood; filling undefined")

    classify = _classifier_disk(B, rho)
    goal = tol / 2.0
    prev_gap = math.inf
    while True:
        leaves, n_bounds = quadtree.refine(
            -1.05, -1.05, 2.10, classify, lambda lo, up: goal, max_depth
        )
        reached_strict, reached_gen = _flood_masks(leaves, leaves.cls)
        free = leaves.cls == OUTSIDE
        indisk = _indisk_areas(leaves)
        fill_lo = float(np.sum(indisk[free & ~reached_gen]))
        fill_hi = float(np.sum(indisk[free & ~reached_strict]))
        lower = n_bounds.lower + fill_lo
        upper = n_bounds.upper + fill_hi
        gap = upper - lower
        met = gap <= tol
        # a pinched boundary can leave the trapped-or-not status of a pocket
        # undecidable at any finite depth; stop once refining stops helping
        plateau = gap >= 0.7 * prev_gap
        done = met or not n_bounds.tolerance_met or plateau or goal < tol / 64.0
        if done:
            passable = reached_strict
            bounds = AreaBounds(lower, upper, n_bounds.cells_refined, met)
            return FilledRegion(leaves, n_bounds, bounds, passable, rho)
        prev_gap = gap
        goal /= 4.0


def filled_neighborhood_area(
    B,
    rho: float = 1.0,
    tol: float = 1e-3,
    max_depth: int = 24,
) -> AreaBounds:
    """Certified bounds on the area of the filled rho-neighborhood of B."""
    if getattr(B, "is_empty", False):
        return AreaBounds(0.0, 0.0, 0, True)
    return filled_region(B, rho, tol, max_depth).bounds


# ---------------------------------------------------------------------------
# distance queries against unions of rectangles (walk support for filled sets)
# ---------------------------------------------------------------------------


class RectSet:
    """Exact distance to a finite union of axis-aligned rectangles."""

    space = "disk"

    def __init__(self, x0, x1, y0, y1):
        self.x0 = np.asarray(x0, dtype=float)
        self.x1 = np.asarray(x1, dtype=float)
        self.y0 = np.asarray(y0, dtype=float)
        self.y1 = np.asarray(y1, dtype=float)
        if self.x0.size == 0:
            raise ValueError("RectSet needs at least one rectangle")
        cx = 0.5 * (self.x0 + self.x1)
        cy = 0.5 * (self.y0 + self.y1)
        self._half = 0.5 * np.hypot(self.x1 - self.x0, self.y1 - self.y0)
        self._maxhalf = float(self._half.max())
        self._tree = cKDTree(np.column_stack([cx, cy]))
        self.min_abs = float(
            np.min(
                np.hypot(
                    np.clip(0.0, self.x0, self.x1),
                    np.clip(0.0, self.y0, self.y1),
                )
            )
        )
        self.is_empty = False

    def _rect_dist(self, z: np.ndarray, idx: np.ndarray) -> np.ndarray:
        dx = np.maximum(np.maximum(self.x0[idx] - z.real[..., None], z.real[..., None] - self.x1[idx]), 0.0)
        dy = np.maximum(np.maximum(self.y0[idx] - z.imag[..., None], z.imag[..., None] - self.y1[idx]), 0.0)
        return np.hypot(dx, dy)

    def dist(self, z) -> np.ndarray:
        z = _as_complex(z)
        flat = z.ravel()
        pts = np.column_stack([flat.real, flat.imag])
        n_rect = self.x0.size
        out = np.full(flat.shape, np.inf)
        unresolved = np.arange(flat.size)
        k = min(8, n_rect)
        while unresolved.size:
            d_center, idx = self._tree.query(pts[unresolved], k=k)
            if k == 1:
                d_center = d_center[:, None]
                idx = idx[:, None]
            exact = self._rect_dist(flat[unresolved], idx).min(axis=1)
            # rects beyond the k-th center are at least d_k - maxhalf away
            certified = (k >= n_rect) | (exact <= d_center[:, -1] - self._maxhalf)
            out[unresolved[certified]] = exact[certified]
            unresolved = unresolved[~certified]
            if k >= n_rect:
                break
            k = min(k * 4, n_rect)
        return out.reshape(z.shape)

    def nearest(self, z) -> np.ndarray:
        z = _as_complex(z)
        flat = z.ravel()
        pts = np.column_stack([flat.real, flat.imag])
        n_rect = self.x0.size
        best = np.zeros(flat.shape, dtype=np.int64)
        unresolved = np.arange(flat.size)
        k = min(8, n_rect)
        while unresolved.size:
            d_center, idx = self._tree.query(pts[unresolved], k=k)
            if k == 1:
                d_center = d_center[:, None]
                idx = idx[:, None]
            d = self._rect_dist(flat[unresolved], idx)
            pick = np.argmin(d, axis=1)
            exact = d[np.arange(unresolved.size), pick]
            certified = (k >= n_rect) | (exact <= d_center[:, -1] - self._maxhalf)
            best[unresolved[certified]] = idx[np.arange(unresolved.size), pick][certified]
            unresolved = unresolved[~certified]
            if k >= n_rect:
                break
            k = min(k * 4, n_rect)
        nx = np.clip(flat.real, self.x0[best], self.x1[best])
        ny = np.clip(flat.imag, self.y0[best], self.y1[best])
        return (nx + 1j * ny).reshape(z.shape)
