"""End-to-end orchestration shared by the CLI and the HTTP service.

Composes preprocessing (conjugate reduction, perturbation, deduplication),
one of the three clustering algorithms, and label broadcasting back to the
raw input order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .delaunay_cluster import cluster_delaunay
from .genbench import Distribution
from .naive_cluster import cluster_naive
from .real_cluster import cluster_real
from .spectrum import (
    Clustering,
    Spectrum,
    broadcast_labels,
    deduplicate,
    perturb,
    reduce_conjugate_pairs,
)
from .validate import is_admissible, oracle_components

ALGORITHMS = ("naive", "real", "delaunay")

# Stand-in scale for the usual norm-times-sqrt(machine-eps) perturbation: the
# matrix itself is not available here, so the data's largest coordinate is
# used instead of its norm.
AUTO_PERTURB_FACTOR = 2.0 ** -26


def default_perturb_magnitude(points: Sequence) -> float:
    s = points if isinstance(points, Spectrum) else Spectrum.from_points(points)
    return s.max_abs_coordinate() * AUTO_PERTURB_FACTOR


def cluster_points(points: Iterable, delta: float, *, algorithm: str = "delaunay",
                   dsu_kind: str = "forest", mode: str = "filtered",
                   dedup: bool = True,
                   perturb_magnitude: Optional[float] = None,
                   conjugate_pairs: bool = False, seed: int = 0,
                   on_duplicate: str = "raise") -> Clustering:
    """Cluster raw points and return labels in raw input order."""
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")
    if conjugate_pairs:
        reduced = reduce_conjugate_pairs(points)
    else:
        reduced = Spectrum.from_points(points)

    if algorithm == "delaunay":
        c = cluster_delaunay(
            reduced, delta, seed=seed, dsu_kind=dsu_kind, mode=mode,
            dedup=dedup, perturb_magnitude=perturb_magnitude,
            on_duplicate=on_duplicate,
        )
        return broadcast_labels(c, reduced)

    work = reduced
    if perturb_magnitude is not None:
        work = perturb(work, perturb_magnitude, seed)
    if dedup:
        work = deduplicate(work)
    if algorithm == "naive":
        c = cluster_naive(work, delta, dsu_kind)
    else:
        c = cluster_real(work, delta)
    # provenance composes through the preprocessing chain, so one broadcast
    # lands on the raw input positions
    return broadcast_labels(c, work)


@dataclass(frozen=True)
class CheckOutcome:
    """How a user-supplied labelling relates to the connected components."""

    admissible: bool
    matches_components: bool
    failed_criterion: Optional[int]
    witness: Optional[Union[tuple[int, int], int]]
    components_k: int
    given_k: int


def check_labels(points: Iterable, labels: Sequence[int], delta: float) -> CheckOutcome:
    """Validate a labelling against the two separation criteria and the oracle."""
    s = Spectrum.from_points(points)
    given = Clustering.from_raw_labels(labels)
    report = is_admissible(s, delta, given)
    comps = oracle_components(s, delta)
    return CheckOutcome(
        admissible=report.admissible,
        matches_components=comps.labels == given.labels,
        failed_criterion=report.failed_criterion,
        witness=report.witness,
        components_k=comps.k,
        given_k=given.k,
    )


def generate_points(dist: str, n: int, seed: int = 0, **params) -> Spectrum:
    """Generate a synthetic spectrum from a named distribution."""
    return Distribution(kind=dist, **params).generate(n, seed)
