"""Synthetic spectrum generators and the timing/scaling harness.

Generators place points on concentric circles or in a row of axis-aligned
squares; both are bitwise-reproducible given a seed (PCG64).  The harness
times single-threaded clustering runs, records them as CSV rows, and
estimates local scaling exponents from consecutive problem sizes.
"""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .delaunay_cluster import cluster_delaunay
from .naive_cluster import cluster_naive
from .real_cluster import cluster_real
from .spectrum import Spectrum

DEFAULT_DELTA = 0.1
DEFAULT_TIMEOUT_SECONDS = 600.0

CSV_FIELDS = ("algorithm", "mode", "distribution", "n", "seed", "rep",
              "seconds", "k", "censored")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _even_split(count: int, bins: int) -> list[int]:
    base, extra = divmod(count, bins)
    return [base + (1 if i < extra else 0) for i in range(bins)]


def gen_circles(n: int, circles: int = 5, spacing: float = 0.2,
                origin_multiplicity: int = 1, seed: int = 0) -> Spectrum:
    """Points at the origin plus uniform-random angles on concentric circles.

    ``origin_multiplicity`` exact copies sit at the origin (positions 0..m-1);
    the rest are split evenly across circles of radius spacing*1..spacing*c.
    """
    if n < 1 or circles < 1 or origin_multiplicity < 0 or origin_multiplicity > n:
        raise ValueError(f"invalid counts: n={n}, circles={circles}, "
                         f"origin_multiplicity={origin_multiplicity}")
    if not spacing > 0:
        raise ValueError(f"spacing must be > 0, got {spacing!r}")
    rest = n - origin_multiplicity
    counts = _even_split(rest, circles)
    rng = _rng(seed)
    pts = [(0.0, 0.0)] * origin_multiplicity
    for ring, count in enumerate(counts, start=1):
        radius = spacing * ring
        angles = rng.uniform(0.0, 2.0 * math.pi, size=count)
        pts.extend((radius * math.cos(a), radius * math.sin(a)) for a in angles)
    return Spectrum.from_points(pts)


def gen_squares(n: int, side: float = 0.04, center_spacing: float = 0.15,
                squares: int = 5, seed: int = 0) -> Spectrum:
    """Points split evenly among squares whose centers sit on a line.

    Square i is centered at (i * center_spacing, 0); points are uniform
    within their square.
    """
    if n < 1 or squares < 1:
        raise ValueError(f"invalid counts: n={n}, squares={squares}")
    if not (side > 0 and center_spacing > 0):
        raise ValueError(f"side and center_spacing must be > 0, got {side!r}, {center_spacing!r}")
    counts = _even_split(n, squares)
    rng = _rng(seed)
    half = side / 2.0
    pts = []
    for i, count in enumerate(counts):
        cx = i * center_spacing
        offsets = rng.uniform(-half, half, size=(count, 2))
        pts.extend((cx + float(dx), float(dy)) for dx, dy in offsets)
    return Spectrum.from_points(pts)


@dataclass(frozen=True)
class Distribution:
    """Named generator configuration; ``label`` doubles as the CSV id."""

    kind: str  # "circles" or "squares"
    circles: int = 5
    spacing: float = 0.2
    origin_multiplicity: int = 1
    origin_fraction: Optional[float] = None  # overrides multiplicity as round(n * f)
    side: float = 0.04
    center_spacing: float = 0.15
    squares: int = 5

    def label(self) -> str:
        if self.kind == "circles":
            parts = [("c", self.circles, 5), ("sp", self.spacing, 0.2),
                     ("m", self.origin_multiplicity, 1)]
            if self.origin_fraction is not None:
                parts.append(("mf", self.origin_fraction, None))
        elif self.kind == "squares":
            parts = [("side", self.side, 0.04), ("cs", self.center_spacing, 0.15),
                     ("q", self.squares, 5)]
        else:
            raise ValueError(f"unknown distribution kind {self.kind!r}")
        suffix = "".join(f"-{name}{value:g}" for name, value, default in parts
                         if value != default)
        return self.kind + suffix

    def generate(self, n: int, seed: int) -> Spectrum:
        if self.kind == "circles":
            mult = self.origin_multiplicity
            if self.origin_fraction is not None:
                mult = int(round(n * self.origin_fraction))
            return gen_circles(n, self.circles, self.spacing, mult, seed)
        if self.kind == "squares":
            return gen_squares(n, self.side, self.center_spacing, self.squares, seed)
        raise ValueError(f"unknown distribution kind {self.kind!r}")


@dataclass(frozen=True)
class BenchCase:
    """One timed configuration: algorithm id, arithmetic mode, instance shape."""

    algorithm: str  # naive | naive-labels | naive-forest | real | delaunay
    mode: str       # float | filtered | exact (meaningful for delaunay)
    distribution: Distribution
    n: int
    repetitions: int = 1
    delta: float = DEFAULT_DELTA
    dedup: bool = True
    perturb_magnitude: Optional[float] = None
    on_duplicate: str = "raise"


@dataclass(frozen=True)
class BenchRecord:
    """One timed run; censored runs carry no wall time."""

    algorithm: str
    mode: str
    distribution: str
    n: int
    seed: int
    rep: int
    seconds: Optional[float]
    k: Optional[int]
    censored: bool

    def __post_init__(self):
        if not self.censored:
            if self.seconds is None or not self.seconds > 0:
                raise ValueError("an uncensored record needs a positive wall time")
        if self.n < 1:
            raise ValueError("n must be >= 1")


def _dsu_kind(algorithm: str) -> str:
    return "labels" if algorithm.endswith("-labels") else "forest"


def _run_once(case: BenchCase, s: Spectrum, seed: int):
    if case.algorithm.startswith("naive"):
        return cluster_naive(s, case.delta, _dsu_kind(case.algorithm))
    if case.algorithm == "real":
        return cluster_real(s, case.delta)
    if case.algorithm == "delaunay":
        return cluster_delaunay(
            s, case.delta, seed=seed, mode=case.mode, dedup=case.dedup,
            perturb_magnitude=case.perturb_magnitude,
            on_duplicate=case.on_duplicate,
        )
    raise ValueError(f"unknown algorithm {case.algorithm!r}")


def run_bench(plan: Sequence[BenchCase],
              timeout_seconds: float = DEFAULT_TIMEOUT_SECONDS,
              base_seed: int = 0) -> list[BenchRecord]:
    """Time every case in the plan, single-threaded, one record per repetition.

    A run whose wall time exceeds the timeout is recorded as censored, and
    all larger sizes of the same (algorithm, mode, distribution) series are
    skipped and recorded as censored without running.
    """
    records: list[BenchRecord] = []
    censored_from: dict[tuple[str, str, str], int] = {}
    for idx, case in enumerate(plan):
        dist_label = case.distribution.label()
        series = (case.algorithm, case.mode, dist_label)
        for rep in range(case.repetitions):
            seed = base_seed * 1_000_003 + idx * 101 + rep
            if series in censored_from and case.n >= censored_from[series]:
                records.append(BenchRecord(case.algorithm, case.mode, dist_label,
                                           case.n, seed, rep, None, None, True))
                continue
            s = case.distribution.generate(case.n, seed)
            start = time.perf_counter()
            clustering = _run_once(case, s, seed)
            elapsed = time.perf_counter() - start
            if elapsed > timeout_seconds:
                censored_from[series] = min(censored_from.get(series, case.n), case.n)
                records.append(BenchRecord(case.algorithm, case.mode, dist_label,
                                           case.n, seed, rep, None, None, True))
            else:
                records.append(BenchRecord(case.algorithm, case.mode, dist_label,
                                           case.n, seed, rep, elapsed,
                                           clustering.k, False))
    return records


@dataclass(frozen=True)
class ExponentEstimate:
    """Local power-law exponent between two problem sizes of one series."""

    algorithm: str
    mode: str
    distribution: str
    n_low: int
    n_high: int
    harmonic_mean_n: float
    exponent: float


def exponent_estimates(records: Iterable[BenchRecord]) -> list[ExponentEstimate]:
    """log(T(n2)/T(n1)) / log(n2/n1) for consecutive sizes of each series.

    Repetitions at the same size are aggregated by their minimum wall time;
    censored records are ignored.  The abscissa reported for each pair is the
    harmonic mean ((1/n1 + 1/n2) / 2)^-1.
    """
    best: dict[tuple[str, str, str], dict[int, float]] = {}
    for r in records:
        if r.censored or r.seconds is None:
            continue
        series = best.setdefault((r.algorithm, r.mode, r.distribution), {})
        series[r.n] = min(series.get(r.n, math.inf), r.seconds)
    out: list[ExponentEstimate] = []
    for (algorithm, mode, dist), by_n in sorted(best.items()):
        sizes = sorted(by_n)
        for n1, n2 in zip(sizes, sizes[1:]):
            t1, t2 = by_n[n1], by_n[n2]
            out.append(ExponentEstimate(
                algorithm, mode, dist, n1, n2,
                harmonic_mean_n=((1.0 / n1 + 1.0 / n2) / 2.0) ** -1.0,
                exponent=math.log(t2 / t1) / math.log(n2 / n1),
            ))
    return out


def write_records_csv(records: Iterable[BenchRecord], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_FIELDS)
        for r in records:
            writer.writerow([
                r.algorithm, r.mode, r.distribution, r.n, r.seed, r.rep,
                "" if r.seconds is None else repr(r.seconds),
                "" if r.k is None else r.k,
                "true" if r.censored else "false",
            ])


def read_records_csv(path) -> list[BenchRecord]:
    out = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != list(CSV_FIELDS):
            raise ValueError(f"unexpected benchmark CSV header: {reader.fieldnames}")
        for row in reader:
            out.append(BenchRecord(
                algorithm=row["algorithm"],
                mode=row["mode"],
                distribution=row["distribution"],
                n=int(row["n"]),
                seed=int(row["seed"]),
                rep=int(row["rep"]),
                seconds=float(row["seconds"]) if row["seconds"] else None,
                k=int(row["k"]) if row["k"] else None,
                censored=row["censored"] == "true",
            ))
    return out
