"""Sort-and-split clustering for spectra on the real axis.

Sort the values, flag a gap wherever two adjacent values are more than delta
apart, and prefix-sum the flags into cluster labels.  The gap test is the
same squared-distance comparison the pairwise algorithm uses, so the two
agree bit for bit on real inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Sequence, Union

from .errors import EmptySpectrumError, NonRealSpectrumError
from .spectrum import Clustering, Spectrum


@dataclass(frozen=True)
class GapVector:
    """0/1 gap flags over sorted positions; the first flag is always 1."""

    flags: tuple[int, ...]

    def __post_init__(self):
        if not self.flags:
            raise ValueError("gap vector must be nonempty")
        if self.flags[0] != 1:
            raise ValueError("first gap flag must be 1")
        if any(f not in (0, 1) for f in self.flags):
            raise ValueError("gap flags must be 0 or 1")

    def __len__(self) -> int:
        return len(self.flags)


def gap_vector(sorted_values: Sequence[float], delta: float) -> GapVector:
    """Gap flags for ascending values: 1 where the step up exceeds delta."""
    delta_sq = delta * delta
    flags = [1]
    for prev, cur in zip(sorted_values, sorted_values[1:]):
        dx = cur - prev
        flags.append(0 if dx * dx <= delta_sq else 1)
    return GapVector(tuple(flags))


def prefix_sum(g: Union[GapVector, Sequence[int]]) -> list[int]:
    """Cumulative sums of the gap flags; entry i is the label of sorted position i."""
    flags = g.flags if isinstance(g, GapVector) else tuple(g)
    return list(accumulate(flags))


def cluster_real(s: Spectrum, delta: float) -> Clustering:
    """Connected components of the delta-closeness graph for real spectra."""
    if len(s.points) == 0:
        raise EmptySpectrumError("cannot cluster an empty spectrum")
    if not delta > 0:
        raise ValueError(f"delta must be > 0, got {delta!r}")
    for i, p in enumerate(s.points):
        if p.im != 0.0:
            raise NonRealSpectrumError(
                f"point {i} has imaginary part {p.im!r}; cluster_real requires im == 0"
            )
    n = len(s.points)
    order = sorted(range(n), key=lambda i: s.points[i].re)
    sorted_vals = [s.points[i].re for i in order]
    sorted_labels = prefix_sum(gap_vector(sorted_vals, delta))
    labels = [0] * n
    for pos, idx in enumerate(order):
        labels[idx] = sorted_labels[pos]
    return Clustering.from_raw_labels(labels)
