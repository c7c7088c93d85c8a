"""Two disjoint-set representations behind one interface.

``LabelVectorDsu`` reproduces the classic label-vector scheme: every element
carries the label of its cluster, labels stay contiguous ``1..k`` after every
merge, and each merge rewrites the whole vector.  ``ForestDsu`` is the usual
rooted forest with union by rank and path compression.  Clustering algorithms
take either via :func:`make_dsu`, which lets benchmarks attribute cost to the
set structure.
"""

from __future__ import annotations

import numpy as np

from .spectrum import Clustering

DSU_KINDS = ("labels", "forest")


class LabelVectorDsu:
    """Label vector with merge-and-decrement relabeling.

    Merging labels ``x < y`` rewrites every ``y`` to ``x`` and decrements every
    label above ``y``, keeping labels contiguous at all times.  Each merge
    scans the whole vector, so ``relabel_scans`` grows by ``n`` per effective
    merge; for at most ``n - 1`` merges the total scan work is O(n^2).
    """

    kind = "labels"

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("n must be >= 0")
        self.n = n
        self._labels = np.arange(1, n + 1, dtype=np.int64)
        self.relabel_scans = 0
        self.merges = 0

    def _check(self, i: int):
        if not 0 <= i < self.n:
            raise IndexError(f"element {i} out of range for n={self.n}")

    def find(self, i: int) -> int:
        self._check(i)
        return int(self._labels[i])

    def same(self, i: int, j: int) -> bool:
        self._check(i)
        self._check(j)
        return self._labels[i] == self._labels[j]

    def union(self, i: int, j: int) -> bool:
        x = self.find(i)
        y = self.find(j)
        if x == y:
            return False
        if x > y:
            x, y = y, x
        labels = self._labels
        labels[labels == y] = x
        labels[labels > y] -= 1
        self.relabel_scans += self.n
        self.merges += 1
        return True

    def labels(self) -> list[int]:
        return [int(v) for v in self._labels]

    def partition(self) -> Clustering:
        # The merge rule preserves first-appearance ordering, so the vector is
        # already canonical; from_raw_labels re-derives it defensively.
        return Clustering.from_raw_labels(self.labels())


class ForestDsu:
    """Rooted forest with union by rank and full path compression."""

    kind = "forest"

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("n must be >= 0")
        self.n = n
        self.parent = list(range(n))
        self.rank = [0] * n
        self.merges = 0

    def find(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(f"element {i} out of range for n={self.n}")
        parent = self.parent
        root = i
        while parent[root] != root:
            root = parent[root]
        while parent[i] != root:
            parent[i], i = root, parent[i]
        return root

    def same(self, i: int, j: int) -> bool:
        return self.find(i) == self.find(j)

    def union(self, i: int, j: int) -> bool:
        ri = self.find(i)
        rj = self.find(j)
        if ri == rj:
            return False
        if self.rank[ri] < self.rank[rj]:
            ri, rj = rj, ri
        self.parent[rj] = ri
        if self.rank[ri] == self.rank[rj]:
            self.rank[ri] += 1
        self.merges += 1
        return True

    def partition(self) -> Clustering:
        return Clustering.from_raw_labels(self.find(i) for i in range(self.n))


def make_dsu(kind: str, n: int):
    if kind == "labels":
        return LabelVectorDsu(n)
    if kind == "forest":
        return ForestDsu(n)
    raise ValueError(f"unknown dsu kind {kind!r}; expected one of {DSU_KINDS}")
