"""Tropical double description: extreme rays of ``{x | A x <= B x}``.

Rows are added one at a time.  When cutting a cone generated by ``G`` with the
halfspace ``a x <= b x``, the generators on the good side are kept and every
pair ``(g, h)`` with ``g`` on the good side and ``h`` on the bad side yields the
candidate ``(a h) g (+) (b g) h``.  Candidates that are not extreme in the cone
cut out by the rows processed so far are discarded.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Iterable, Sequence

from . import extremality
from .oracle import is_extreme_residuation
from .semiring import (
    NEG_INF,
    DimensionError,
    IneqSystem,
    Scalar,
    Vector,
    as_scalar,
    combine,
    dot,
    is_zero,
    normalize,
)

FILTERS = ("hypergraph", "residuation")
ORDERS = ("dynamic", "fixed")
PARALLEL_THRESHOLD = 256  # candidates per step below which workers are not used


@dataclass(frozen=True)
class GeneratorSet:
    """Normalized, duplicate-free, lexicographically sorted ray representatives."""

    dim: int
    gens: tuple[Vector, ...]

    @classmethod
    def from_vectors(cls, dim: int, vectors: Iterable[Sequence[Scalar]]) -> "GeneratorSet":
        seen = set()
        for v in vectors:
            if len(v) != dim:
                raise DimensionError(f"expected dimension {dim}, got {len(v)}")
            seen.add(normalize(v))
        return cls(dim, tuple(sorted(seen)))

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __contains__(self, v):
        return not is_zero(v) and normalize(v) in self.gens


def canonical_basis(d: int) -> GeneratorSet:
    return GeneratorSet(
        d, tuple(sorted(tuple(0 if i == j else NEG_INF for j in range(d)) for i in range(d)))
    )


@dataclass
class DDStats:
    """Counters collected along a run; ``sizes[k]`` is the size after k steps."""

    sizes: list[int] = field(default_factory=list)
    order: list[int] = field(default_factory=list)
    candidates: int = 0
    tested: int = 0
    kept_rejected: int = 0  # good-side generators found non-extreme when re-tested
    filter_time: float = 0.0

    @property
    def mean_intermediate(self) -> float:
        inner = self.sizes[1:-1]
        if not inner:
            return float(self.sizes[-1]) if self.sizes else 0.0
        return sum(inner) / len(inner)


def default_workers() -> int:
    """Worker count from ``TROPDD_THREADS`` (unset means 1, 0 means all cores)."""
    raw = os.environ.get("TROPDD_THREADS", "").strip()
    if not raw:
        return 1
    n = int(raw)
    if n < 0:
        raise ValueError("TROPDD_THREADS must be >= 0")
    return n or (os.cpu_count() or 1)


def _split(gens, a, b):
    leq, gt = [], []
    for g in gens:
        (leq if dot(a, g) <= dot(b, g) else gt).append(g)
    return leq, gt


def _hypergraph_keep(sys, batch):
    return [extremality.is_extreme(sys, h) for h in batch]


def _map_parallel(fn, items, workers):
    chunk = max(1, len(items) // (workers * 4))
    batches = [items[i:i + chunk] for i in range(0, len(items), chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        out = []
        for part in pool.map(fn, batches):
            out.extend(part)
    return out


def intersect_halfspace(
    gens: GeneratorSet,
    a: Sequence[Scalar],
    b: Sequence[Scalar],
    accumulated: IneqSystem,
    *,
    filter: str = "hypergraph",
    stats: DDStats | None = None,
    workers: int = 1,
) -> GeneratorSet:
    """Extreme rays of ``cone(gens) ∩ {a x <= b x}``.

    ``gens`` must be the extreme rays of the cone of ``accumulated`` without its
    last row, and that last row must be ``a x <= b x``.
    """
    d = gens.dim
    if len(a) != d or len(b) != d or accumulated.dim != d:
        raise DimensionError("row and generator dimensions differ")
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}")
    leq, gt = _split(gens, a, b)
    combos = []
    for gi in leq:
        bgi = dot(b, gi)
        for gj in gt:
            combos.append(combine(dot(a, gj), gi, bgi, gj))
    kept = set(leq)
    candidates = list(leq) + sorted({normalize(h) for h in combos} - kept)
    start = time.perf_counter()
    if filter == "hypergraph":
        if workers > 1 and len(candidates) >= PARALLEL_THRESHOLD:
            flags = _map_parallel(partial(_hypergraph_keep, accumulated), candidates, workers)
        else:
            flags = [extremality.is_extreme(accumulated, h) for h in candidates]
    else:
        flags = [is_extreme_residuation(candidates, h) for h in candidates]
    elapsed = time.perf_counter() - start
    if stats is not None:
        stats.candidates += len(combos)
        stats.tested += len(candidates)
        stats.filter_time += elapsed
        stats.kept_rejected += sum(1 for h, ok in zip(candidates, flags) if not ok and h in kept)
    return GeneratorSet.from_vectors(d, (h for h, ok in zip(candidates, flags) if ok))


def select_next(sys: IneqSystem, remaining: Sequence[int], current: GeneratorSet) -> int:
    """The remaining row producing the fewest combinations; lowest index on ties."""
    if not remaining:
        raise ValueError("no rows left to choose from")
    best = None
    for k in sorted(remaining):
        leq, gt = _split(current, sys.a[k], sys.b[k])
        cost = len(leq) * len(gt)
        if best is None or cost < best[0]:
            best = (cost, k)
            if cost == 0:
                break
    return best[1]


def compute_extreme(
    sys: IneqSystem,
    *,
    order: str = "dynamic",
    filter: str = "hypergraph",
    stats: DDStats | None = None,
    workers: int | None = None,
) -> GeneratorSet:
    """One normalized representative of every extreme ray of ``{x | A x <= B x}``."""
    if order not in ORDERS:
        raise ValueError(f"unknown order {order!r}")
    if workers is None:
        workers = default_workers()
    gens = canonical_basis(sys.dim)
    if stats is not None:
        stats.sizes.append(len(gens))
    remaining = list(range(sys.n))
    done: list[int] = []
    while remaining:
        k = select_next(sys, remaining, gens) if order == "dynamic" else remaining[0]
        remaining.remove(k)
        done.append(k)
        gens = intersect_halfspace(
            gens, sys.a[k], sys.b[k], sys.subsystem(done),
            filter=filter, stats=stats, workers=workers,
        )
        if stats is not None:
            stats.sizes.append(len(gens))
            stats.order.append(k)
    return gens


@dataclass(frozen=True)
class AffineSystem:
    """``A x (+) c <= B x (+) e`` with ``c`` and ``e`` column vectors."""

    a: tuple
    c: tuple
    b: tuple
    e: tuple
    dim: int

    def __post_init__(self):
        inner = IneqSystem(self.a, self.b, self.dim)
        if len(self.c) != inner.n or len(self.e) != inner.n:
            raise DimensionError("constant columns must have one entry per row")
        object.__setattr__(self, "a", inner.a)
        object.__setattr__(self, "b", inner.b)
        object.__setattr__(self, "c", tuple(as_scalar(x) for x in self.c))
        object.__setattr__(self, "e", tuple(as_scalar(x) for x in self.e))

    @property
    def n(self) -> int:
        return len(self.a)

    def contains(self, x: Sequence[Scalar]) -> bool:
        return homogenize(self).contains(tuple(x) + (0,))


@dataclass(frozen=True)
class AffineGenerators:
    """Extreme points and extreme rays of a tropical polyhedron, each sorted."""

    dim: int
    points: tuple[Vector, ...]
    rays: tuple[Vector, ...]


def homogenize(asys: AffineSystem) -> IneqSystem:
    """Cone in dimension ``d + 1`` whose last coordinate carries the constants."""
    a = tuple(row + (c,) for row, c in zip(asys.a, asys.c))
    b = tuple(row + (e,) for row, e in zip(asys.b, asys.e))
    return IneqSystem(a, b, asys.dim + 1)


def dehomogenize(g: GeneratorSet) -> AffineGenerators:
    """Read extreme points (finite last coordinate) and rays off a homogenized cone."""
    if g.dim < 2:
        raise DimensionError("a homogenized cone has dimension at least 2")
    points, rays = [], []
    for v in g:
        last = v[-1]
        if last is NEG_INF:
            r = v[:-1]
            if is_zero(r):
                raise ValueError(f"generator {v} is zero once dehomogenized")
            rays.append(r)
        else:
            points.append(tuple(NEG_INF if x is NEG_INF else x - last for x in v[:-1]))
    points = [tuple(_int_if_whole(x) for x in p) for p in points]
    return AffineGenerators(g.dim - 1, tuple(sorted(set(points))), tuple(sorted(set(rays))))


def _int_if_whole(x):
    if x is not NEG_INF and not isinstance(x, int) and x.denominator == 1:
        return x.numerator
    return x


def compute_polyhedron(asys: AffineSystem, **kwargs) -> AffineGenerators:
    return dehomogenize(compute_extreme(homogenize(asys), **kwargs))
