"""Point-set representation and preprocessing.

A :class:`Spectrum` carries the points to cluster together with enough
provenance (conjugate links, duplicate groups) to map cluster labels back to
the raw input positions after conjugate-pair reduction and deduplication.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import LabelDomainError


@dataclass(frozen=True)
class PlanePoint:
    """A point in the plane standing for a real or complex eigenvalue.

    Coordinates must be finite binary64 values.  Negative zero is normalized
    to positive zero on construction so that bitwise equality of stored
    coordinates coincides with numeric equality of the points.
    """

    re: float
    im: float

    def __post_init__(self):
        re = float(self.re)
        im = float(self.im)
        if not (math.isfinite(re) and math.isfinite(im)):
            raise ValueError(f"coordinates must be finite, got ({self.re!r}, {self.im!r})")
        object.__setattr__(self, "re", re + 0.0)
        object.__setattr__(self, "im", im + 0.0)

    @property
    def conjugate(self) -> "PlanePoint":
        return PlanePoint(self.re, -self.im)


def as_plane_point(value) -> PlanePoint:
    """Coerce a PlanePoint, complex number, or (re, im) pair to a PlanePoint."""
    if isinstance(value, PlanePoint):
        return value
    if isinstance(value, complex):
        return PlanePoint(value.real, value.imag)
    re, im = value
    return PlanePoint(re, im)


def squared_distance(p: PlanePoint, q: PlanePoint) -> float:
    """Squared Euclidean distance, evaluated in binary64.

    Every clustering algorithm in this package decides closeness by comparing
    this value against ``delta * delta`` (boundary inclusive), so that all of
    them accept exactly the same edge set.
    """
    dx = p.re - q.re
    dy = p.im - q.im
    return dx * dx + dy * dy


@dataclass(frozen=True)
class Clustering:
    """Cluster labels for a sequence of positions.

    Labels are contiguous ``1..k`` and ordered by first appearance: position 0
    always has label 1, and a label ``m+1`` first appears only after label
    ``m`` has appeared.  This canonical form makes two clusterings equal as
    set partitions if and only if their label tuples are equal.
    """

    labels: tuple[int, ...]
    k: int

    def __post_init__(self):
        seen = 0
        for lab in self.labels:
            if lab == seen + 1:
                seen += 1
            elif not 1 <= lab <= seen:
                raise ValueError(f"labels are not contiguous by first appearance: {self.labels}")
        if seen != self.k:
            raise ValueError(f"k={self.k} does not match {seen} distinct labels")

    @classmethod
    def from_raw_labels(cls, raw: Iterable) -> "Clustering":
        """Renumber arbitrary hashable labels into the canonical form."""
        mapping: dict = {}
        out = []
        for lab in raw:
            canon = mapping.get(lab)
            if canon is None:
                canon = len(mapping) + 1
                mapping[lab] = canon
            out.append(canon)
        return cls(tuple(out), len(mapping))

    def groups(self) -> list[list[int]]:
        """Positions of each cluster, indexed by label - 1."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for pos, lab in enumerate(self.labels):
            out[lab - 1].append(pos)
        return out

    def as_partition(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(g) for g in self.groups())


def _group_ids(points: Sequence[PlanePoint]) -> tuple[int, ...]:
    # Duplicate-group ids by first appearance; -0.0 is normalized away, so
    # float equality of (re, im) pairs is bitwise equality.
    groups: dict[tuple[float, float], int] = {}
    out = []
    for p in points:
        key = (p.re, p.im)
        gid = groups.get(key)
        if gid is None:
            gid = len(groups)
            groups[key] = gid
        out.append(gid)
    return tuple(out)


@dataclass(frozen=True)
class Spectrum:
    """An ordered point multiset plus provenance back to the raw input.

    ``points[i]`` represents every raw input position in ``represents[i]``:
    its own origin, a dropped conjugate partner if any, and any exact
    duplicates collapsed onto it.  ``represents`` always partitions
    ``range(raw_size)``, which is what :func:`broadcast_labels` relies on.
    """

    points: tuple[PlanePoint, ...]
    origin_index: tuple[int, ...]
    conjugate_of: tuple[Optional[int], ...]
    multiplicity_group: tuple[int, ...]
    raw_size: int
    represents: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.points)
        if not (len(self.origin_index) == len(self.conjugate_of)
                == len(self.multiplicity_group) == len(self.represents) == n):
            raise ValueError("provenance fields must have one entry per point")
        covered = [r for reps in self.represents for r in reps]
        if sorted(covered) != list(range(self.raw_size)):
            raise ValueError("represents must partition the raw input positions")
        by_gid: dict[int, tuple[float, float]] = {}
        for p, gid in zip(self.points, self.multiplicity_group):
            key = (p.re, p.im)
            if by_gid.setdefault(gid, key) != key:
                raise ValueError("multiplicity groups must contain bitwise-equal points only")

    def __len__(self) -> int:
        return len(self.points)

    @classmethod
    def from_points(cls, pts: Iterable) -> "Spectrum":
        points = tuple(as_plane_point(p) for p in pts)
        n = len(points)
        return cls(
            points=points,
            origin_index=tuple(range(n)),
            conjugate_of=(None,) * n,
            multiplicity_group=_group_ids(points),
            raw_size=n,
            represents=tuple((i,) for i in range(n)),
        )

    def coordinate_arrays(self) -> tuple[list[float], list[float]]:
        return [p.re for p in self.points], [p.im for p in self.points]

    def max_abs_coordinate(self) -> float:
        if not self.points:
            return 0.0
        return max(max(abs(p.re), abs(p.im)) for p in self.points)


def reduce_conjugate_pairs(raw: Iterable) -> Spectrum:
    """Keep one member of each exact complex-conjugate pair.

    Points with ``im >= 0`` always pass through.  A point with ``im < 0`` is
    matched (greedily, in input order, by exact coordinate equality) against
    an unmatched point at ``(re, -im)``; when a partner exists the negative
    point is dropped and recorded so its cluster label can be recovered, and
    otherwise it is retained as an ordinary point.
    """
    pts = [as_plane_point(p) for p in raw]
    pool: dict[tuple[float, float], deque[int]] = {}
    for i, p in enumerate(pts):
        if p.im > 0:
            pool.setdefault((p.re, p.im), deque()).append(i)
    absorbed: dict[int, int] = {}  # kept positive index -> dropped negative index
    dropped: set[int] = set()
    for i, p in enumerate(pts):
        if p.im < 0:
            partners = pool.get((p.re, -p.im))
            if partners:
                j = partners.popleft()
                absorbed[j] = i
                dropped.add(i)
    keep = [i for i in range(len(pts)) if i not in dropped]
    points = tuple(pts[i] for i in keep)
    return Spectrum(
        points=points,
        origin_index=tuple(keep),
        conjugate_of=tuple(absorbed.get(i) for i in keep),
        multiplicity_group=_group_ids(points),
        raw_size=len(pts),
        represents=tuple((i,) if i not in absorbed else (i, absorbed[i]) for i in keep),
    )


def deduplicate(s: Spectrum) -> Spectrum:
    """Collapse bitwise-equal points onto one representative each.

    Grouping is by lexicographic sort of the coordinates; the representative
    of each group is its first point in spectrum order, and the raw positions
    carried by collapsed points transfer to the representative.
    """
    n = len(s.points)
    order = sorted(range(n), key=lambda i: (s.points[i].re, s.points[i].im))
    rep_of = [0] * n
    run_start = 0
    for t in range(1, n + 1):
        if t == n or (s.points[order[t]].re, s.points[order[t]].im) != (
            s.points[order[run_start]].re,
            s.points[order[run_start]].im,
        ):
            members = order[run_start:t]
            rep = min(members)
            for m in members:
                rep_of[m] = rep
            run_start = t
    keep = sorted(set(rep_of))
    pos = {rep: idx for idx, rep in enumerate(keep)}
    represents: list[list[int]] = [[] for _ in keep]
    for i in range(n):
        represents[pos[rep_of[i]]].extend(s.represents[i])
    points = tuple(s.points[i] for i in keep)
    return Spectrum(
        points=points,
        origin_index=tuple(s.origin_index[i] for i in keep),
        conjugate_of=tuple(s.conjugate_of[i] for i in keep),
        multiplicity_group=tuple(range(len(keep))),
        raw_size=s.raw_size,
        represents=tuple(tuple(r) for r in represents),
    )


def perturb(s: Spectrum, magnitude: float, seed: int) -> Spectrum:
    """Displace each coordinate by an independent uniform draw from [-magnitude, magnitude].

    Draws come from a PCG64 generator seeded with ``seed``, so the output is
    bitwise reproducible.  Magnitude 0 returns an identical spectrum.
    """
    if not (magnitude >= 0 and math.isfinite(magnitude)):
        raise ValueError(f"magnitude must be finite and >= 0, got {magnitude!r}")
    rng = np.random.Generator(np.random.PCG64(seed))
    offsets = rng.uniform(-magnitude, magnitude, size=(len(s.points), 2))
    points = tuple(
        PlanePoint(p.re + float(dx), p.im + float(dy))
        for p, (dx, dy) in zip(s.points, offsets)
    )
    return Spectrum(
        points=points,
        origin_index=s.origin_index,
        conjugate_of=s.conjugate_of,
        multiplicity_group=_group_ids(points),
        raw_size=s.raw_size,
        represents=s.represents,
    )


def broadcast_labels(c: Clustering, s: Spectrum) -> Clustering:
    """Push labels on the representatives of ``s`` back to its raw positions.

    Output labels are renumbered contiguous 1..k by first appearance in raw
    input order.
    """
    if len(c.labels) != len(s.points):
        raise LabelDomainError(
            f"clustering covers {len(c.labels)} points but spectrum has {len(s.points)} representatives"
        )
    raw = [0] * s.raw_size
    for p_idx, raw_positions in enumerate(s.represents):
        lab = c.labels[p_idx]
        for r in raw_positions:
            raw[r] = lab
    return Clustering.from_raw_labels(raw)
