"""Delaunay-based clustering: triangulate, prune long edges, take components.

The triangulation restricted to edges of length at most delta has exactly the
same connected components as the full closeness graph, so unioning endpoint
pairs over the kept edges reproduces the pairwise algorithm's output at
O(n log n) cost.  Pruning uses the same squared-distance comparator as the
pairwise algorithm, so the equality is exact rather than tolerance-based.
"""

from __future__ import annotations

from typing import Optional

from . import delaunay
from .dsu import make_dsu
from .errors import EmptySpectrumError
from .predicates import ArithmeticMode
from .spectrum import Clustering, Spectrum, broadcast_labels, deduplicate, perturb


def _prepare(s: Spectrum, delta: float, seed: int, mode, dedup: bool,
             perturb_magnitude: Optional[float], on_duplicate: str):
    if not delta > 0:
        raise ValueError(f"delta must be > 0, got {delta!r}")
    if len(s.points) == 0:
        raise EmptySpectrumError("cannot cluster an empty spectrum")
    base = Spectrum.from_points(s.points)
    if perturb_magnitude is not None:
        base = perturb(base, perturb_magnitude, seed)
    if dedup:
        base = deduplicate(base)
    tri = delaunay.build(base, seed, mode, on_duplicate=on_duplicate)
    return base, tri


def cluster_delaunay(s: Spectrum, delta: float, *, seed: int = 0,
                     dsu_kind: str = "forest",
                     mode: ArithmeticMode | str = ArithmeticMode.FILTERED,
                     dedup: bool = True,
                     perturb_magnitude: Optional[float] = None,
                     on_duplicate: str = "raise") -> Clustering:
    """Connected components of the closeness graph via the pruned triangulation.

    Pipeline: optional perturbation, optional exact deduplication, Delaunay
    build, keep finite edges with squared length <= delta^2, union their
    endpoints, broadcast labels back to the positions of ``s``.  Exact
    duplicates are an error when deduplication is disabled and no
    perturbation is requested, unless ``on_duplicate="merge"`` opts into
    merging coincident inserts (each still pays its point-location cost).
    """
    base, tri = _prepare(s, delta, seed, mode, dedup, perturb_magnitude, on_duplicate)
    dsu = make_dsu(dsu_kind, len(base.points))
    for dup, rep in tri.aliases.items():
        dsu.union(dup, rep)
    delta_sq = delta * delta
    for e in tri.finite_edges():
        if e.squared_length <= delta_sq:
            dsu.union(e.u, e.v)
    return broadcast_labels(dsu.partition(), base)


def pruned_edge_count(s: Spectrum, delta: float, *, seed: int = 0,
                      mode: ArithmeticMode | str = ArithmeticMode.FILTERED,
                      dedup: bool = True,
                      perturb_magnitude: Optional[float] = None,
                      on_duplicate: str = "raise") -> int:
    """Number of triangulation edges that survive the length-delta pruning."""
    _, tri = _prepare(s, delta, seed, mode, dedup, perturb_magnitude, on_duplicate)
    delta_sq = delta * delta
    return sum(1 for e in tri.finite_edges() if e.squared_length <= delta_sq)
