"""Admissibility checker and the independent brute-force clustering oracle.

The oracle builds the closeness graph explicitly and runs a breadth-first
search over a numpy adjacency matrix.  It deliberately shares no code with
the disjoint-set structures or the pairwise clusterer so it can stand as an
independent witness for them; the closeness comparison is the same
``squared distance <= delta * delta`` rule, restated here on purpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .errors import LabelDomainError
from .spectrum import Clustering, Spectrum


def _close_matrix(s: Spectrum, delta: float) -> np.ndarray:
    pts = np.array([(p.re, p.im) for p in s.points], dtype=np.float64)
    dx = pts[:, 0:1] - pts[:, 0:1].T
    dy = pts[:, 1:2] - pts[:, 1:2].T
    return dx * dx + dy * dy <= delta * delta


def oracle_components(s: Spectrum, delta: float) -> Clustering:
    """Connected components of the explicit closeness graph, via BFS."""
    if not delta > 0:
        raise ValueError(f"delta must be > 0, got {delta!r}")
    n = len(s.points)
    if n == 0:
        return Clustering((), 0)
    close = _close_matrix(s, delta)
    labels = [0] * n
    current = 0
    for seed in range(n):
        if labels[seed]:
            continue
        current += 1
        frontier = np.zeros(n, dtype=bool)
        frontier[seed] = True
        member = np.zeros(n, dtype=bool)
        while frontier.any():
            member |= frontier
            reached = close[frontier].any(axis=0)
            frontier = reached & ~member
        for idx in np.nonzero(member)[0]:
            labels[idx] = current
    return Clustering.from_raw_labels(labels)


@dataclass(frozen=True)
class AdmissibilityReport:
    """Verdict of the two separation criteria, with a violation witness.

    ``failed_criterion`` is 1 when two clusters come within delta of each
    other (witness: the offending pair of positions) and 2 when a point in a
    non-singleton cluster has no neighbor of its own cluster within delta
    (witness: that position).
    """

    admissible: bool
    failed_criterion: Optional[int] = None
    witness: Optional[Union[tuple[int, int], int]] = None

    def __bool__(self) -> bool:
        return self.admissible


def is_admissible(s: Spectrum, delta: float, c: Clustering) -> AdmissibilityReport:
    """Check between-cluster (> delta) and within-cluster (<= delta) separation."""
    if not delta > 0:
        raise ValueError(f"delta must be > 0, got {delta!r}")
    n = len(s.points)
    if len(c.labels) != n:
        raise LabelDomainError(
            f"clustering covers {len(c.labels)} positions but spectrum has {n} points"
        )
    if n == 0:
        return AdmissibilityReport(True)
    close = _close_matrix(s, delta)
    labels = np.array(c.labels)
    same = labels[:, None] == labels[None, :]

    cross_close = close & ~same
    if cross_close.any():
        i, j = np.argwhere(cross_close)[0]
        return AdmissibilityReport(False, failed_criterion=1, witness=(int(i), int(j)))

    off_diag = ~np.eye(n, dtype=bool)
    has_neighbor = (close & same & off_diag).any(axis=1)
    counts = np.bincount(labels)
    in_big_cluster = counts[labels] > 1
    lonely = in_big_cluster & ~has_neighbor
    if lonely.any():
        return AdmissibilityReport(
            False, failed_criterion=2, witness=int(np.nonzero(lonely)[0][0])
        )
    return AdmissibilityReport(True)


def components_refine_admissible(s: Spectrum, delta: float, c: Clustering) -> bool:
    """True when every connected component lies wholly inside one cluster of c."""
    comps = oracle_components(s, delta)
    if len(c.labels) != len(s.points):
        raise LabelDomainError(
            f"clustering covers {len(c.labels)} positions but spectrum has {len(s.points)} points"
        )
    for group in comps.groups():
        if len({c.labels[i] for i in group}) > 1:
            return False
    return True
