"""Capacity estimators and their exact closed-form oracles.

dcap(B) = -log crad(D \\ B, 0) is sampled through the identity
log crad = E[log |W_exit|] for Brownian motion started at the origin: the
function w -> E_w[log |W_exit|] is harmonic with boundary values log|w|,
and composing with the Riemann map of D \\ B turns its value at 0 into the
circle average of log|f|, which is log|f'(0)| by the mean value property.

hcap(A) is sampled through E_{iy}[Im W_exit] = Im(iy - g(iy)) for the
hydrodynamically normalized map g (Im(z - g) is bounded harmonic with
boundary values Im z), and y * Im(iy - g(iy)) -> hcap(A) with an O(1/y)
bias, so a least-squares fit of h + c/y over a y grid removes the leading
error term.

Transport: crad(H \\ A, iy) = 2 y exp(-dcap(T_y(A))), and dcap of the
pushforward is sampled with half-plane walks, using conformal invariance
of the exit distribution: -E_{iy}[ log |T_y(W_exit)| ].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .dyadic import layer_of_radius
from .geom import ArcBox, DiskCompact, HalfDisk, HalfPlaneHull, VSlit
from .mobius import pushforward_set, t_y
from .wos import (
    DiskDomain,
    Estimate,
    HalfPlaneDomain,
    estimate_from_values,
    expected_height,
    expected_log_modulus,
    run_walks,
)

TWO_PI = 2.0 * math.pi
LN2 = math.log(2.0)


# ---------------------------------------------------------------------------
# canonical families with closed-form maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CanonicalHull:
    """Obstacles whose normalized maps are known in closed form."""

    kind: str  # "halfdisk" | "vslit" | "ring"
    param: float
    shift: float = 0.0
    scale: float = 1.0

    def __post_init__(self):
        if self.kind not in ("halfdisk", "vslit", "ring"):
            raise ValueError(f"unknown canonical kind {self.kind!r}")
        if self.param <= 0 or self.scale <= 0:
            raise ValueError("param and scale must be positive")
        if self.kind == "ring" and not (0.5 < self.param < 1.0):
            raise ValueError("ring needs rho in (1/2, 1)")

    def hull(self) -> HalfPlaneHull:
        if self.kind == "halfdisk":
            return HalfPlaneHull([HalfDisk(self.shift, self.param * self.scale)])
        if self.kind == "vslit":
            return HalfPlaneHull([VSlit(self.shift, self.param * self.scale)])
        raise ValueError("ring is a disk-space obstacle")

    def compact(self) -> DiskCompact:
        if self.kind != "ring":
            raise ValueError("only the ring kind lives in the disk")
        return DiskCompact([ArcBox(0.0, TWO_PI, self.param)])


def ring(rho: float) -> DiskCompact:
    return CanonicalHull("ring", rho).compact()


def hcap_exact(C: CanonicalHull) -> float:
    """HalfDisk(r) -> r^2, VSlit(h) -> h^2/2; translation invariant, scales as s^2."""
    if C.kind == "halfdisk":
        return (C.param * C.scale) ** 2
    if C.kind == "vslit":
        return 0.5 * (C.param * C.scale) ** 2
    raise ValueError("hcap is undefined for disk obstacles")


def dcap_exact_ring(rho: float) -> float:
    return -math.log(rho)


def g_halfdisk(z, r: float):
    """Hydrodynamic map of H minus the half-disk of radius r at the origin."""
    z = np.asarray(z, dtype=complex)
    return z + (r * r) / z


def g_vslit(z, h: float):
    """Hydrodynamic map of H minus the vertical slit of height h at 0.

    Written as z sqrt(1 + (h/z)^2) so the principal branch cut falls on the
    slit itself.
    """
    z = np.asarray(z, dtype=complex)
    return z * np.sqrt(1.0 + (h / z) ** 2)


def crad_exact_at_i(kind: str, eps: float) -> float:
    """crad(H \\ A, i) for the canonical families of size eps at the origin."""
    if kind == "halfdisk":
        return 2.0 * (1.0 - eps * eps) / (1.0 + eps * eps)
    if kind == "vslit":
        return 2.0 * (1.0 - eps * eps)
    raise ValueError(kind)


def crad_exact_at_iy(kind: str, size: float, y: float) -> float:
    """crad(H \\ A, iy) for HalfDisk(size) or VSlit(size) rooted at 0."""
    if kind == "halfdisk":
        q = (size / y) ** 2
        return 2.0 * y * (1.0 - q) / (1.0 + q)
    if kind == "vslit":
        return 2.0 * (y * y - size * size) / y
    raise ValueError(kind)


# ---------------------------------------------------------------------------
# disk capacity
# ---------------------------------------------------------------------------


def dcap_mc(
    B,
    n_walks: int = 200_000,
    eps_stop: float | None = None,
    seed: int = 0,
    threads: int = 1,
) -> Estimate:
    """Monte Carlo estimate of dcap(B) = -E_0[log |W_exit|]."""
    domain = DiskDomain(B)
    est, _ = expected_log_modulus(domain, n_walks, seed, eps_stop, threads)
    return Estimate(-est.mean, est.std_error, est.n_walks, est.eps_stop, seed, est.bias_note)


@dataclass
class LayerSum:
    """Per-layer hitting frequencies with the deterministic dcap sandwich."""

    estimate: Estimate
    omega: dict[int, float] = field(default_factory=dict)
    lower: float = 0.0
    upper: float = 0.0

    def omega_vector(self, n_max: int) -> np.ndarray:
        return np.array([self.omega.get(n, 0.0) for n in range(1, n_max + 1)])


def dcap_layer_sum(
    B,
    n_walks: int = 200_000,
    eps_stop: float | None = None,
    seed: int = 0,
    threads: int = 1,
) -> LayerSum:
    """dcap estimate plus layer frequencies and the pathwise sandwich.

    A terminal at depth 1 - |u| in layer n contributes a value -log|u| in
    [2^-(n+1), 2 log 2 * 2^-n), so the sandwich holds walk by walk, not
    just in expectation.
    """
    domain = DiskDomain(B)
    est, ens = expected_log_modulus(domain, n_walks, seed, eps_stop, threads)
    hits = ens.labels >= 0
    omega: dict[int, float] = {}
    lower = 0.0
    upper = 0.0
    if np.any(hits):
        depths = 1.0 - np.abs(ens.terminals[hits])
        layers = layer_of_radius(depths)
        for n in np.unique(layers):
            w = float(np.sum(layers == n)) / ens.n_walks
            omega[int(n)] = w
            lower += w * 2.0 ** -(int(n) + 1)
            upper += 2.0 * LN2 * w * 2.0 ** -int(n)
    dcap_est = Estimate(-est.mean, est.std_error, est.n_walks, est.eps_stop, seed, est.bias_note)
    return LayerSum(dcap_est, omega, lower, upper)


# ---------------------------------------------------------------------------
# half-plane capacity
# ---------------------------------------------------------------------------


def default_y_grid(A: HalfPlaneHull, factors=(8.0, 16.0, 32.0, 64.0)) -> list[float]:
    base = A.sup_abs
    if base <= 0:
        base = 1.0
    return [f * base for f in factors]


@dataclass
class HcapResult:
    """Fitted hcap with the raw per-height values behind it."""

    estimate: Estimate
    per_y: list[tuple[float, Estimate]]
    slope: float
    fit_ok: bool

    @property
    def value(self) -> float:
        return self.estimate.mean


def _fit_h_plus_c_over_y(ys, values, sigmas):
    ys = np.asarray(ys, dtype=float)
    v = np.asarray(values, dtype=float)
    sig = np.asarray(sigmas, dtype=float)
    if np.max(sig) <= 0.0:
        return float(v[-1]), 0.0, 0.0, True
    floor = 1e-3 * float(np.max(sig))
    w = 1.0 / np.maximum(sig, floor) ** 2
    X = np.column_stack([np.ones_like(ys), 1.0 / ys])
    XtW = X.T * w
    cov = np.linalg.inv(XtW @ X)
    beta = cov @ (XtW @ v)
    resid = v - X @ beta
    ok = bool(np.all(np.abs(resid) <= 5.0 * np.maximum(sig, floor)))
    return float(beta[0]), float(beta[1]), float(math.sqrt(max(cov[0, 0], 0.0))), ok


def hcap_mc(
    A: HalfPlaneHull,
    y_grid: list[float] | None = None,
    n_walks: int = 200_000,
    eps_stop: float | None = None,
    seed: int = 0,
    threads: int = 1,
) -> HcapResult:
    """Estimate hcap(A) from y * E_{iy}[Im W_exit] fitted as h + c/y."""
    ys = sorted(default_y_grid(A) if y_grid is None else list(y_grid))
    if len(ys) < 3:
        raise ValueError("y_grid needs at least 3 heights")
    bound = 2.0 * A.sup_abs
    if ys[0] <= bound:
        raise ValueError(f"every y must exceed 2 sup|z| = {bound}")
    domain = HalfPlaneDomain(A)
    per_y = []
    for i, y in enumerate(ys):
        est = expected_height(domain, 1j * y, n_walks, seed + i, eps_stop, threads)
        per_y.append(
            (y, Estimate(y * est.mean, y * est.std_error, est.n_walks, est.eps_stop, seed + i, est.bias_note))
        )
    h, c, h_se, ok = _fit_h_plus_c_over_y(
        [y for y, _ in per_y],
        [e.mean for _, e in per_y],
        [e.std_error for _, e in per_y],
    )
    eps = per_y[0][1].eps_stop
    if ok:
        fitted = Estimate(h, h_se, n_walks * len(ys), eps, seed, "fit of h + c/y over y grid")
    else:
        y_last, e_last = per_y[-1]
        fitted = Estimate(
            e_last.mean,
            e_last.std_error,
            e_last.n_walks,
            eps,
            seed,
            f"fit rejected (residuals > 5 sigma); raw value at y={y_last}",
        )
    return HcapResult(fitted, per_y, c, ok)


# ---------------------------------------------------------------------------
# transport: dcap of pushforwards, conformal radius in the half-plane
# ---------------------------------------------------------------------------


def dcap_transport(
    A: HalfPlaneHull,
    y: float,
    n_walks: int = 200_000,
    eps_stop: float | None = None,
    seed: int = 0,
    threads: int = 1,
    require_annulus: bool = True,
) -> Estimate:
    """dcap(T_y(A)) sampled with half-plane walks from iy.

    The exit point of Brownian motion in D \\ T_y(A) from 0 is the image
    under T_y of the exit point in H \\ A from iy, so the disk functional
    -log|w| pulls back to -log|T_y(z)|; real-axis exits contribute exactly 0.
    """
    pf = pushforward_set(A, y)
    if require_annulus:
        pf.require_annulus()
    domain = HalfPlaneDomain(A)
    ens = run_walks(domain, 1j * y, n_walks, eps_stop, seed, threads=threads)
    ens.check_flagged()
    # real-axis exits map onto the unit circle: contribution exactly 0
    vals = np.where(ens.labels >= 0, -np.log(np.abs(t_y(y, ens.terminals))), 0.0)
    return estimate_from_values(vals, ens.eps_stop, seed, "transported log-modulus; O(eps_stop) bias")


def crad_halfplane(
    A: HalfPlaneHull,
    y: float = 1.0,
    n_walks: int = 200_000,
    eps_stop: float | None = None,
    seed: int = 0,
    threads: int = 1,
) -> tuple[float, Estimate]:
    """crad(H \\ A, iy) = 2 y exp(-dcap(T_y(A))); returns (crad, dcap estimate)."""
    if A.is_empty:
        zero = Estimate(0.0, 0.0, 0, 0.0, seed, "empty hull")
        return 2.0 * y, zero
    d = dcap_transport(A, y, n_walks, eps_stop, seed, threads)
    return 2.0 * y * math.exp(-d.mean), d
