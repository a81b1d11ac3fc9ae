"""Walk-on-spheres sampling of Brownian exit points.

Domains are "half-plane minus hull" and "disk minus compact".  A walk
jumps from z to a uniform point on the circle of radius dist(z, boundary)
until that distance drops below eps_stop, then reports the nearest
boundary point as its terminal.  Angles come from counter-based substreams
keyed by (seed, global walk index, step), and aggregation uses a
fixed-order pairwise tree, so estimates are bit-identical for any worker
count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .geom import DiskCompact, HalfPlaneHull, _as_complex
from .rng import uniform_angle

LABEL_OUTER = -1
DEFAULT_STEP_CAP = 100_000
MAX_FLAGGED_FRACTION = 1e-3
_CHUNK = 16384


class EstimatorError(RuntimeError):
    """Raised when too many walks fail to terminate within the step cap."""


@dataclass(frozen=True)
class WalkResult:
    """Outcome of one walk."""

    terminal: complex
    label: int
    steps: int
    stop_dist: float
    flagged: bool = False

    def label_name(self, space: str) -> str:
        if self.label == LABEL_OUTER:
            return "real-axis" if space == "halfplane" else "unit-circle"
        return f"obstacle-{self.label}"


@dataclass(frozen=True)
class Estimate:
    """Monte Carlo mean with reproducibility metadata."""

    mean: float
    std_error: float
    n_walks: int
    eps_stop: float
    seed: int
    bias_note: str = ""

    def within(self, value: float, sigmas: float = 3.0, extra: float = 0.0) -> bool:
        return abs(self.mean - value) <= sigmas * self.std_error + extra


# ---------------------------------------------------------------------------
# domains
# ---------------------------------------------------------------------------


class HalfPlaneDomain:
    """The region above the real axis with a hull removed."""

    space = "halfplane"

    def __init__(self, hull: HalfPlaneHull):
        self.hull = hull
        x_lo, x_hi = hull.x_bounds
        self.scale = max(x_hi - x_lo, hull.y_max) + 1.0

    def dist(self, z: np.ndarray) -> np.ndarray:
        d = z.imag
        if not self.hull.is_empty:
            d = np.minimum(d, self.hull.dist(z))
        return d

    def terminal(self, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        if self.hull.is_empty:
            return z.real + 0j, np.full(z.shape, LABEL_OUTER, dtype=np.int64)
        d_obs, idx = self.hull.dist_argmin(z)
        on_obstacle = d_obs <= z.imag
        term = np.where(on_obstacle, self.hull.nearest(z), z.real + 0j)
        labels = np.where(on_obstacle, idx, LABEL_OUTER)
        return term, labels


class DiskDomain:
    """The unit disk with an obstacle removed.

    The obstacle must expose dist(z) (a lower bound vanishing exactly on
    the set; exact for the primitive families) and nearest(z).
    """

    space = "disk"
    scale = 1.0

    def __init__(self, obstacle):
        self.obstacle = obstacle

    def dist(self, z: np.ndarray) -> np.ndarray:
        d = 1.0 - np.abs(z)
        if not getattr(self.obstacle, "is_empty", False):
            d = np.minimum(d, self.obstacle.dist(z))
        return d

    def terminal(self, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        az = np.abs(z)
        circle = np.where(az > 0, z / np.where(az == 0, 1.0, az), 1.0 + 0j)
        if getattr(self.obstacle, "is_empty", False):
            return circle, np.full(z.shape, LABEL_OUTER, dtype=np.int64)
        if hasattr(self.obstacle, "dist_argmin"):
            d_obs, idx = self.obstacle.dist_argmin(z)
        else:
            d_obs = self.obstacle.dist(z)
            idx = np.zeros(z.shape, dtype=np.int64)
        on_obstacle = d_obs <= (1.0 - az)
        term = np.where(on_obstacle, self.obstacle.nearest(z), circle)
        labels = np.where(on_obstacle, idx, LABEL_OUTER)
        return term, labels


DomainOracle = HalfPlaneDomain | DiskDomain


def domain_for(S) -> DomainOracle:
    if isinstance(S, HalfPlaneHull):
        return HalfPlaneDomain(S)
    if isinstance(S, DiskCompact):
        return DiskDomain(S)
    space = getattr(S, "space", None)
    if space == "disk":
        return DiskDomain(S)
    raise TypeError(f"no domain for {type(S).__name__}")


def default_eps_stop(domain: DomainOracle) -> float:
    return 1e-4 * domain.scale


# ---------------------------------------------------------------------------
# the engine
# ---------------------------------------------------------------------------


@dataclass
class WalkEnsemble:
    """Per-walk terminals for one (domain, start, seed) configuration."""

    terminals: np.ndarray
    labels: np.ndarray
    steps: np.ndarray
    stop_dists: np.ndarray
    flagged: np.ndarray
    eps_stop: float
    seed: int
    space: str

    @property
    def n_walks(self) -> int:
        return int(self.terminals.size)

    def check_flagged(self) -> None:
        frac = float(np.mean(self.flagged)) if self.flagged.size else 0.0
        if frac > MAX_FLAGGED_FRACTION:
            raise EstimatorError(
                f"{frac:.2%} of walks hit the step cap (limit {MAX_FLAGGED_FRACTION:.2%})"
            )


def _simulate_chunk(domain, start, first_id, m, eps, seed, step_cap):
    term = np.empty(m, dtype=complex)
    labels = np.empty(m, dtype=np.int64)
    steps_out = np.zeros(m, dtype=np.int64)
    stopd = np.zeros(m, dtype=float)
    flagged = np.zeros(m, dtype=bool)

    pos = np.full(m, complex(start), dtype=complex)
    ids = np.arange(first_id, first_id + m, dtype=np.uint64)
    local = np.arange(m)
    nstep = np.zeros(m, dtype=np.int64)

    while local.size:
        d = domain.dist(pos)
        fin = d <= eps
        capped = (~fin) & (nstep >= step_cap)
        done = fin | capped
        if np.any(done):
            tz, tl = domain.terminal(pos[done])
            sel = local[done]
            term[sel] = tz
            labels[sel] = tl
            steps_out[sel] = nstep[done]
            stopd[sel] = d[done]
            flagged[sel] = capped[done]
        cont = ~done
        if not np.any(cont):
            break
        theta = uniform_angle(seed, ids[cont], nstep[cont].astype(np.uint64))
        pos = pos[cont] + d[cont] * np.exp(1j * theta)
        ids = ids[cont]
        local = local[cont]
        nstep = nstep[cont] + 1

    return term, labels, steps_out, stopd, flagged


def run_walks(
    domain: DomainOracle,
    start: complex,
    n_walks: int,
    eps_stop: float | None = None,
    seed: int = 0,
    step_cap: int = DEFAULT_STEP_CAP,
    threads: int = 1,
) -> WalkEnsemble:
    """Run n_walks independent walks from start; reproducible per (seed, index)."""
    if n_walks <= 0:
        raise ValueError("n_walks must be positive")
    eps = default_eps_stop(domain) if eps_stop is None else float(eps_stop)
    if eps <= 0:
        raise ValueError("eps_stop must be positive")
    start = complex(start)
    d0 = float(domain.dist(np.asarray([start]))[0])
    if d0 <= eps:
        raise ValueError("start point is not strictly inside the domain")

    term = np.empty(n_walks, dtype=complex)
    labels = np.empty(n_walks, dtype=np.int64)
    steps = np.zeros(n_walks, dtype=np.int64)
    stopd = np.zeros(n_walks, dtype=float)
    flagged = np.zeros(n_walks, dtype=bool)

    chunks = [(i, min(_CHUNK, n_walks - i)) for i in range(0, n_walks, _CHUNK)]

    def work(args):
        first, m = args
        return first, m, _simulate_chunk(domain, start, first, m, eps, seed, step_cap)

    if threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, chunks))
    else:
        results = [work(c) for c in chunks]

    for first, m, (t, l, s, sd, fl) in results:
        sl = slice(first, first + m)
        term[sl] = t
        labels[sl] = l
        steps[sl] = s
        stopd[sl] = sd
        flagged[sl] = fl

    return WalkEnsemble(term, labels, steps, stopd, flagged, eps, seed, domain.space)


def wos_walk(
    domain: DomainOracle,
    start: complex,
    eps_stop: float | None = None,
    seed: int = 0,
    walk_index: int = 0,
) -> WalkResult:
    """One walk, identified by its (seed, walk_index) substream."""
    eps = default_eps_stop(domain) if eps_stop is None else float(eps_stop)
    t, l, s, sd, fl = _simulate_chunk(domain, complex(start), walk_index, 1, eps, seed, DEFAULT_STEP_CAP)
    return WalkResult(complex(t[0]), int(l[0]), int(s[0]), float(sd[0]), bool(fl[0]))


# ---------------------------------------------------------------------------
# reduction and estimators
# ---------------------------------------------------------------------------


def pairwise_sum(values: np.ndarray) -> float:
    """Deterministic pairwise-tree sum, independent of chunking or workers."""
    a = np.asarray(values, dtype=float).copy()
    n = a.size
    if n == 0:
        return 0.0
    while n > 1:
        half = n // 2
        a[:half] = a[0 : 2 * half : 2] + a[1 : 2 * half : 2]
        if n % 2:
            a[half] = a[n - 1]
            n = half + 1
        else:
            n = half
    return float(a[0])


def estimate_from_values(
    values: np.ndarray, eps_stop: float, seed: int, bias_note: str = ""
) -> Estimate:
    n = values.size
    mean = pairwise_sum(values) / n
    if n > 1:
        var = pairwise_sum((values - mean) ** 2) / (n - 1)
    else:
        var = 0.0
    return Estimate(mean, math.sqrt(var / n), n, eps_stop, seed, bias_note)


def harmonic_measure(
    domain: DomainOracle,
    start: complex,
    target: Callable[[np.ndarray, np.ndarray], np.ndarray],
    n_walks: int,
    seed: int = 0,
    eps_stop: float | None = None,
    threads: int = 1,
) -> Estimate:
    """Probability that the exit point satisfies target(labels, terminals)."""
    ens = run_walks(domain, start, n_walks, eps_stop, seed, threads=threads)
    ens.check_flagged()
    hits = np.asarray(target(ens.labels, ens.terminals), dtype=float)
    return estimate_from_values(hits, ens.eps_stop, seed, "hit fraction; O(eps_stop) labeling bias")


def expected_log_modulus(
    domain: DiskDomain,
    n_walks: int,
    seed: int = 0,
    eps_stop: float | None = None,
    threads: int = 1,
    start: complex = 0j,
) -> tuple[Estimate, WalkEnsemble]:
    """Mean of log|terminal| for walks from the origin of a disk domain."""
    ens = run_walks(domain, start, n_walks, eps_stop, seed, threads=threads)
    ens.check_flagged()
    # circle exits contribute log 1 = 0 exactly
    vals = np.where(ens.labels >= 0, np.log(np.abs(ens.terminals)), 0.0)
    est = estimate_from_values(vals, ens.eps_stop, seed, "projection bias O(eps_stop)")
    return est, ens


def expected_height(
    domain: HalfPlaneDomain,
    start: complex,
    n_walks: int,
    seed: int = 0,
    eps_stop: float | None = None,
    threads: int = 1,
) -> Estimate:
    """Mean of Im(terminal); exits through the real axis contribute zero."""
    ens = run_walks(domain, start, n_walks, eps_stop, seed, threads=threads)
    ens.check_flagged()
    vals = ens.terminals.imag
    return estimate_from_values(vals, ens.eps_stop, seed, "projection bias O(eps_stop)")
