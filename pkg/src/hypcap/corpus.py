"""Seeded random families of hulls and disk compacts.

Generation is rejection-based against the exact disjointness predicates,
keyed entirely by (seed, element index), so a corpus is reproducible from
its spec.  Element sizes are drawn log-uniformly over three octaves so the
corpus spans several dyadic scales of hull diameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geom import (
    ArcBox,
    BoxShape,
    DiskCompact,
    HalfDisk,
    HalfPlaneHull,
    RadialSlit,
    VSlit,
    validate_disk_shapes,
    validate_halfplane_shapes,
)
from .rng import CounterRNG

TWO_PI = 2.0 * math.pi

KINDS = ("slit-forest", "staircase", "halfdisk-mix", "radial-slit-set", "arcbox-set")

_RETRY_CAP = 400


class CorpusError(RuntimeError):
    """Rejection sampling failed to produce a valid element."""


@dataclass(frozen=True)
class CorpusSpec:
    kind: str
    count: int
    seed: int
    scale_octaves: float = 3.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown corpus kind {self.kind!r}; pick one of {KINDS}")
        if self.count < 0:
            raise ValueError("count must be nonnegative")


def _log_uniform(r: CounterRNG, lo: float, hi: float) -> float:
    return math.exp(r.uniform(math.log(lo), math.log(hi)))


def _element_scale(r: CounterRNG, octaves: float) -> float:
    return 2.0 ** r.uniform(-octaves / 2.0, octaves / 2.0)


def _slit_forest(r: CounterRNG, scale: float) -> HalfPlaneHull:
    k = r.randint(3, 12)
    for _ in range(_RETRY_CAP):
        xs = sorted(r.uniform(-1.5, 1.5) for _ in range(k))
        if all(b - a >= 0.06 for a, b in zip(xs[:-1], xs[1:])):
            shapes = [VSlit(x * scale, _log_uniform(r, 0.1, 1.0) * scale) for x in xs]
            return HalfPlaneHull(shapes)
    raise CorpusError("slit-forest rejection cap reached")


def _staircase(r: CounterRNG, scale: float) -> HalfPlaneHull:
    k = r.randint(3, 8)
    boxes = []
    x = r.uniform(-1.5, -1.0)
    for _ in range(k):
        w = r.uniform(0.1, 0.45)
        h = _log_uniform(r, 0.08, 0.9)
        boxes.append(BoxShape(x * scale, (x + w) * scale, 0.0, h * scale))
        x += w + r.uniform(0.05, 0.3)
    return HalfPlaneHull(boxes)


def _halfdisk_mix(r: CounterRNG, scale: float) -> HalfPlaneHull:
    k = r.randint(3, 8)
    shapes: list = []
    for _ in range(_RETRY_CAP):
        if len(shapes) == k:
            break
        pick = r.randint(0, 2)
        x = r.uniform(-1.8, 1.8) * scale
        if pick == 0:
            cand = VSlit(x, _log_uniform(r, 0.1, 0.8) * scale)
        elif pick == 1:
            w = r.uniform(0.08, 0.35) * scale
            cand = BoxShape(x, x + w, 0.0, _log_uniform(r, 0.08, 0.5) * scale)
        else:
            cand = HalfDisk(x, r.uniform(0.08, 0.4) * scale)
        if validate_halfplane_shapes(shapes + [cand]) is None:
            shapes.append(cand)
    if len(shapes) < 3:
        raise CorpusError("halfdisk-mix rejection cap reached")
    return HalfPlaneHull(shapes)


def _radial_slit_set(r: CounterRNG) -> DiskCompact:
    k = r.randint(3, 12)
    for _ in range(_RETRY_CAP):
        th = sorted(r.uniform(0.0, TWO_PI) for _ in range(k))
        gaps = [b - a for a, b in zip(th[:-1], th[1:])] + [TWO_PI - (th[-1] - th[0])]
        if all(g >= 0.08 for g in gaps):
            shapes = [RadialSlit(t, r.uniform(0.55, 0.95)) for t in th]
            return DiskCompact(shapes)
    raise CorpusError("radial-slit-set rejection cap reached")


def _arcbox_set(r: CounterRNG) -> DiskCompact:
    k = r.randint(2, 5)
    shapes: list = []
    for _ in range(_RETRY_CAP):
        if len(shapes) == k:
            break
        t0 = r.uniform(0.0, TWO_PI)
        width = r.uniform(0.05, 0.6)
        cand = ArcBox(t0, t0 + width, r.uniform(0.6, 0.95))
        if validate_disk_shapes(shapes + [cand]) is None:
            shapes.append(cand)
    if len(shapes) < 2:
        raise CorpusError("arcbox-set rejection cap reached")
    return DiskCompact(shapes)


def generate_element(kind: str, seed: int, index: int, scale_octaves: float = 3.0):
    """One deterministic corpus element, keyed by (seed, index)."""
    r = CounterRNG(seed, stream=index)
    scale = _element_scale(r, scale_octaves)
    if kind == "slit-forest":
        return _slit_forest(r, scale)
    if kind == "staircase":
        return _staircase(r, scale)
    if kind == "halfdisk-mix":
        return _halfdisk_mix(r, scale)
    if kind == "radial-slit-set":
        return _radial_slit_set(r)
    if kind == "arcbox-set":
        return _arcbox_set(r)
    raise ValueError(f"unknown corpus kind {kind!r}")


def corpus_generate(spec: CorpusSpec) -> list:
    """Deterministic corpus satisfying all hull / compact invariants."""
    return [
        generate_element(spec.kind, spec.seed, i, spec.scale_octaves)
        for i in range(spec.count)
    ]


def mixed_disk_corpus(count: int, seed: int) -> list[DiskCompact]:
    """Alternating radial-slit and arcbox elements."""
    out = []
    for i in range(count):
        kind = "radial-slit-set" if i % 2 == 0 else "arcbox-set"
        out.append(generate_element(kind, seed, i))
    return out


def mixed_halfplane_corpus(count: int, seed: int) -> list[HalfPlaneHull]:
    kinds = ("slit-forest", "staircase", "halfdisk-mix")
    return [generate_element(kinds[i % 3], seed, i) for i in range(count)]


def small_hull_corpus(count: int, seed: int, sup_bound: float = 0.3) -> list[HalfPlaneHull]:
    """Hulls rescaled into sup|z| <= sup_bound (for transport at y = 1)."""
    out = []
    for i in range(count):
        h = generate_element("halfdisk-mix", seed, i)
        r = h.sup_abs
        out.append(h.scale(sup_bound / r * CounterRNG(seed, 10_000 + i).uniform(0.5, 1.0)))
    return out


def nested_halfplane_pairs(count: int, seed: int) -> list[tuple[HalfPlaneHull, HalfPlaneHull]]:
    """(A, A') with A contained in A': every slit grows in height."""
    pairs = []
    for i in range(count):
        a = generate_element("slit-forest", seed, i)
        grown = [VSlit(s.x, s.h * 1.4) for s in a.shapes]
        pairs.append((a, HalfPlaneHull(grown)))
    return pairs


def nested_disk_pairs(count: int, seed: int) -> list[tuple[DiskCompact, DiskCompact]]:
    """(B, B') with B contained in B': slits extend inward."""
    pairs = []
    for i in range(count):
        b = generate_element("radial-slit-set", seed, i)
        grown = [RadialSlit(s.theta, max(0.52, s.rho - 0.06)) for s in b.shapes]
        pairs.append((b, DiskCompact(grown)))
    return pairs
