"""Quadratic baseline clusterer: test every pair, merge the close ones.

For each i the algorithm scans all j > i, skipping pairs already known to be
in the same cluster, and merges when the squared distance is at most
``delta * delta`` (boundary inclusive).  Distances within a couple of ulps of
delta can round either way; the comparator is shared with every other
algorithm here so they all flip together.
"""

from __future__ import annotations

from .dsu import make_dsu
from .errors import EmptySpectrumError
from .spectrum import Clustering, Spectrum


def _check_args(s: Spectrum, delta: float):
    if len(s.points) == 0:
        raise EmptySpectrumError("cannot cluster an empty spectrum")
    if not delta > 0:
        raise ValueError(f"delta must be > 0, got {delta!r}")


def _run(s: Spectrum, delta: float, dsu_kind: str, shortcut: bool):
    _check_args(s, delta)
    n = len(s.points)
    dsu = make_dsu(dsu_kind, n)
    xs = [p.re for p in s.points]
    ys = [p.im for p in s.points]
    delta_sq = delta * delta
    evals = 0
    same = dsu.same
    union = dsu.union
    for i in range(n):
        xi = xs[i]
        yi = ys[i]
        for j in range(i + 1, n):
            if shortcut and same(i, j):
                continue
            dx = xs[j] - xi
            dy = ys[j] - yi
            evals += 1
            if dx * dx + dy * dy <= delta_sq:
                union(i, j)
    return dsu, evals


def cluster_naive(s: Spectrum, delta: float, dsu_kind: str = "forest", *,
                  shortcut: bool = True) -> Clustering:
    """Connected components of the delta-closeness graph by pairwise scan."""
    dsu, _ = _run(s, delta, dsu_kind, shortcut)
    return dsu.partition()


def count_distance_evaluations(s: Spectrum, delta: float, *, shortcut: bool = True,
                               dsu_kind: str = "forest") -> int:
    """Number of pair distances computed by the same run as :func:`cluster_naive`.

    With the skip-same-cluster shortcut disabled this is exactly n(n-1)/2.
    """
    _, evals = _run(s, delta, dsu_kind, shortcut)
    return evals
