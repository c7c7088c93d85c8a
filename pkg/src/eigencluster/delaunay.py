"""Randomized-incremental Delaunay triangulation with an infinite vertex.

Points are inserted in a seeded random permutation.  Point location jumps to
the nearest of a small reservoir of sample vertices (plus the last inserted
vertex) and then walks; insertion carves the Bowyer-Watson conflict region
and stars the new vertex to its boundary.

Conventions:

* Vertex ids are spectrum point indices; ``-1`` is the symbolic infinite
  vertex.  Every hull edge borders exactly one face containing ``-1``.
* Each face stores its vertices so that the directed edge
  ``(v[k+1], v[k+2])`` has the face on its left; finite faces are therefore
  counterclockwise.  For an infinite face this orients its finite (hull) edge
  with the unbounded region on the left.
* A point is in conflict with a finite face when it lies strictly inside the
  circumcircle, and with an infinite face when it lies strictly on the
  unbounded side of its hull edge.  Cocircular ties are not conflicts, so
  existing triangles are kept and any cocircular completion produced is a
  valid Delaunay triangulation.

Degenerate inputs: a single point yields dimension 0; mutually collinear
points yield dimension 1 (the sorted path, whose edges join sort-adjacent
points); anything else is dimension 2.
"""

from __future__ import annotations

import bisect
import random
from dataclasses import dataclass

import numpy as np

from .errors import DuplicatePointError, EmptySpectrumError
from .predicates import ArithmeticMode, GeometryKernel
from .spectrum import Spectrum

INFINITE_VERTEX = -1

_INSIDE = 0
_ON_EDGE = 1
_ON_VERTEX = 2
_OUTSIDE = 3

DUPLICATE_POLICIES = ("raise", "merge")


@dataclass(frozen=True)
class DelaunayEdge:
    """Undirected finite edge between two point indices (u < v)."""

    u: int
    v: int
    squared_length: float


class _Face:
    __slots__ = ("id", "v", "n", "alive", "has_inf")

    def __init__(self, fid: int, verts: list[int]):
        self.id = fid
        self.v = verts
        self.n = [None, None, None]
        self.alive = True
        self.has_inf = verts[0] < 0 or verts[1] < 0 or verts[2] < 0

    def __repr__(self):  # debugging aid only
        return f"_Face({self.id}, v={self.v}, alive={self.alive})"


class Triangulation:
    """Incremental 2-D Delaunay triangulation over a spectrum's points."""

    def __init__(self, s: Spectrum, kernel: GeometryKernel, seed: int,
                 on_duplicate: str = "raise"):
        if on_duplicate not in DUPLICATE_POLICIES:
            raise ValueError(f"on_duplicate must be one of {DUPLICATE_POLICIES}")
        self.kernel = kernel
        self.on_duplicate = on_duplicate
        self._xs, self._ys = s.coordinate_arrays()
        self.n_points = len(self._xs)
        self._dim = -1
        self._chain: list[int] = []          # dim <= 1: vertex ids sorted by (x, y)
        self._chain_keys: list[tuple[float, float]] = []
        self.faces: list[_Face] = []
        self.n_alive_faces = 0
        self.aliases: dict[int, int] = {}    # merged duplicate point -> representative
        self._incident: dict[int, _Face] = {}
        self._walk_rng = random.Random(seed ^ 0x5DE1A094)
        # jump-and-walk: keep ~n^(1/3) candidate start vertices so the jump
        # scan and the expected walk length stay balanced
        self._sample_cap = max(16, 2 * round(self.n_points ** (1.0 / 3.0)))
        self._sample: list[int] = []
        self._inserted = 0
        self._last_vertex = -1

    # -- public surface ----------------------------------------------------

    @property
    def dimension(self) -> int:
        return max(self._dim, 0)

    def vertex_ids(self) -> list[int]:
        return [i for i in range(self.n_points) if i not in self.aliases]

    def finite_edges(self) -> list[DelaunayEdge]:
        """Each undirected finite edge exactly once, with its squared length."""
        out = []
        xs = self._xs
        ys = self._ys

        def emit(a: int, b: int):
            if a > b:
                a, b = b, a
            dx = xs[b] - xs[a]
            dy = ys[b] - ys[a]
            out.append(DelaunayEdge(a, b, dx * dx + dy * dy))

        if self._dim <= 0:
            return out
        if self._dim == 1:
            for a, b in zip(self._chain, self._chain[1:]):
                emit(a, b)
            return out
        for f in self.faces:
            if not f.alive or f.has_inf:
                continue
            for k in range(3):
                g = f.n[k]
                if g.has_inf or g.id < f.id:
                    a = f.v[k - 2]
                    b = f.v[k - 1]
                    emit(a, b)
        return out

    def vertex_degree(self, v: int) -> int:
        """Number of finite edges at v (aliases resolve to their representative)."""
        v = self.aliases.get(v, v)
        return sum(1 for e in self.finite_edges() if e.u == v or e.v == v)

    def dump_edges(self) -> str:
        """Edge list as text, one ``i j`` pair per line."""
        pairs = sorted((e.u, e.v) for e in self.finite_edges())
        return "".join(f"{u} {v}\n" for u, v in pairs)

    def alive_faces(self):
        return [f for f in self.faces if f.alive]

    # -- insertion ----------------------------------------------------------

    def insert(self, pid: int):
        if self._dim == -1:
            self._dim = 0
            self._chain = [pid]
            self._chain_keys = [(self._xs[pid], self._ys[pid])]
        elif self._dim in (0, 1):
            self._insert_low_dim(pid)
        else:
            self._insert_dim2(pid)
        self._inserted += 1

    def _duplicate(self, pid: int, existing: int):
        if self.on_duplicate == "raise":
            raise DuplicatePointError(
                f"point {pid} coincides with point {existing}; deduplicate or perturb first",
                index=pid,
                existing=existing,
            )
        self.aliases[pid] = existing

    def _insert_low_dim(self, pid: int):
        x = self._xs[pid]
        y = self._ys[pid]
        first = self._chain[0]
        last = self._chain[-1]
        if self._dim == 1:
            side = self.kernel.orient2d_coords(
                self._xs[first], self._ys[first],
                self._xs[last], self._ys[last], x, y,
            )
            if side != 0:
                self._bootstrap_dim2(pid, side)
                return
        key = (x, y)
        pos = bisect.bisect_left(self._chain_keys, key)
        if pos < len(self._chain_keys) and self._chain_keys[pos] == key:
            self._duplicate(pid, self._chain[pos])
            return
        self._chain.insert(pos, pid)
        self._chain_keys.insert(pos, key)
        self._dim = max(self._dim, 1)

    def _new_face(self, verts: list[int]) -> _Face:
        f = _Face(len(self.faces), verts)
        self.faces.append(f)
        self.n_alive_faces += 1
        return f

    def _bootstrap_dim2(self, pid: int, side: int):
        # Collinear chain plus one off-line point: a fan of triangles, closed
        # by one infinite face per hull edge.
        chain = self._chain
        k = len(chain)
        if side > 0:
            finite = [[chain[i], chain[i + 1], pid] for i in range(k - 1)]
            hull = [(chain[i], chain[i + 1]) for i in range(k - 1)]
            hull += [(chain[-1], pid), (pid, chain[0])]
        else:
            finite = [[chain[i + 1], chain[i], pid] for i in range(k - 1)]
            hull = [(chain[i + 1], chain[i]) for i in range(k - 1)]
            hull.reverse()
            hull = [(chain[0], pid), (pid, chain[-1])] + hull
        faces = [self._new_face(v) for v in finite]
        faces += [self._new_face([INFINITE_VERTEX, v, u]) for u, v in hull]
        half_edges: dict[tuple[int, int], tuple[_Face, int]] = {}
        for f in faces:
            for e in range(3):
                half_edges[(f.v[e - 2], f.v[e - 1])] = (f, e)
        for f in faces:
            for e in range(3):
                f.n[e] = half_edges[(f.v[e - 1], f.v[e - 2])][0]
            for vid in f.v:
                if vid >= 0:
                    self._incident[vid] = f
        self._dim = 2
        self._chain = []
        self._chain_keys = []
        self._last_vertex = pid
        for vid in chain:
            self._reservoir_add(vid)
        self._reservoir_add(pid)

    def _reservoir_add(self, vid: int):
        sample = self._sample
        cap = self._sample_cap
        if len(sample) < cap:
            sample.append(vid)
            return
        t = self._inserted + 1
        if self._walk_rng.random() < cap / t:
            sample[self._walk_rng.randrange(cap)] = vid

    def _start_face(self, x: float, y: float) -> _Face:
        xs = self._xs
        ys = self._ys
        best = self._last_vertex
        dx = xs[best] - x
        dy = ys[best] - y
        best_d = dx * dx + dy * dy
        for vid in self._sample:
            dx = xs[vid] - x
            dy = ys[vid] - y
            d = dx * dx + dy * dy
            if d < best_d:
                best = vid
                best_d = d
        f = self._incident[best]
        if f.has_inf:
            f = f.n[f.v.index(INFINITE_VERTEX)]
        return f

    def _locate(self, x: float, y: float):
        f = self._start_face(x, y)
        orient = self.kernel.orient2d_coords
        xs = self._xs
        ys = self._ys
        randrange = self._walk_rng.randrange
        cap = 64 + 8 * self.n_alive_faces
        for _ in range(cap):
            if f.has_inf:
                return f, _OUTSIDE, -1
            v = f.v
            off = randrange(3)
            zero1 = -1
            zero2 = -1
            moved = False
            for t in range(3):
                k = off + t
                if k >= 3:
                    k -= 3
                a = v[k - 2]
                b = v[k - 1]
                s = orient(xs[a], ys[a], xs[b], ys[b], x, y)
                if s < 0:
                    f = f.n[k]
                    moved = True
                    break
                if s == 0:
                    zero2 = zero1
                    zero1 = k
            if moved:
                continue
            if zero1 < 0:
                return f, _INSIDE, -1
            if zero2 < 0:
                return f, _ON_EDGE, zero1
            return f, _ON_VERTEX, v[3 - zero1 - zero2]
        raise RuntimeError(
            f"point location did not terminate ({self.kernel.mode.value} arithmetic)"
        )

    def _conflict(self, f: _Face, x: float, y: float) -> bool:
        xs = self._xs
        ys = self._ys
        v = f.v
        if not f.has_inf:
            return self.kernel._incircle_unchecked_coords(
                xs[v[0]], ys[v[0]], xs[v[1]], ys[v[1]], xs[v[2]], ys[v[2]], x, y
            ) > 0
        k = v.index(INFINITE_VERTEX)
        u = v[k - 2]
        w = v[k - 1]
        return self.kernel.orient2d_coords(xs[u], ys[u], xs[w], ys[w], x, y) > 0

    def _insert_dim2(self, pid: int):
        x = self._xs[pid]
        y = self._ys[pid]
        face, loc, detail = self._locate(x, y)
        if loc == _ON_VERTEX:
            self._duplicate(pid, detail)
            return
        seeds = [face]
        if loc == _ON_EDGE:
            seeds.append(face.n[detail])

        # Bowyer-Watson cavity: strict conflicts grown from the forced seeds.
        cavity = {f.id for f in seeds}
        stack = list(seeds)
        verdict: dict[int, bool] = {}
        boundary: list[tuple[int, int, _Face, int]] = []
        while stack:
            f = stack.pop()
            for k in range(3):
                g = f.n[k]
                if g.id in cavity:
                    continue
                hit = verdict.get(g.id)
                if hit is None:
                    hit = self._conflict(g, x, y)
                    verdict[g.id] = hit
                if hit:
                    cavity.add(g.id)
                    stack.append(g)
                else:
                    boundary.append((f.v[k - 2], f.v[k - 1], g, g.n.index(f)))
        if not boundary:
            raise RuntimeError(
                f"empty cavity boundary ({self.kernel.mode.value} arithmetic)"
            )

        by_start: dict[int, _Face] = {}
        for a, b, g, g_idx in boundary:
            nf = self._new_face([pid, a, b])
            nf.n[0] = g
            g.n[g_idx] = nf
            if a in by_start:
                raise RuntimeError(
                    f"pinched cavity boundary ({self.kernel.mode.value} arithmetic)"
                )
            by_start[a] = nf
        for nf in by_start.values():
            nxt = by_start[nf.v[2]]
            nf.n[1] = nxt
            nxt.n[2] = nf
            if nf.v[1] >= 0:
                self._incident[nf.v[1]] = nf
        self._incident[pid] = next(iter(by_start.values()))
        for fid in cavity:
            f = self.faces[fid]
            f.alive = False
        self.n_alive_faces -= len(cavity)
        self._last_vertex = pid
        self._reservoir_add(pid)

    # -- structural checks (tests and debug builds) -------------------------

    def validate(self):
        """Check structural and Delaunay invariants; O(n * faces), test use only."""
        xs = self._xs
        ys = self._ys
        exact = GeometryKernel(ArithmeticMode.EXACT)
        if self._dim < 2:
            return
        alive = self.alive_faces()
        for f in alive:
            assert len(set(f.v)) == 3, f"degenerate face {f}"
            for k in range(3):
                g = f.n[k]
                assert g is not None and g.alive, f"dead neighbor at {f}"
                a, b = f.v[k - 2], f.v[k - 1]
                assert (b, a) in {(g.v[e - 2], g.v[e - 1]) for e in range(3)}, \
                    f"asymmetric adjacency {f} / {g}"
            if not f.has_inf:
                s = exact.orient2d_coords(
                    xs[f.v[0]], ys[f.v[0]], xs[f.v[1]], ys[f.v[1]],
                    xs[f.v[2]], ys[f.v[2]],
                )
                assert s > 0, f"finite face not counterclockwise: {f}"
        vids = [i for i in self.vertex_ids() if i < len(xs)]
        present = {v for f in alive for v in f.v if v >= 0}
        assert present == set(vids), "face vertices disagree with inserted points"
        for f in alive:
            if f.has_inf:
                k = f.v.index(INFINITE_VERTEX)
                u, w = f.v[k - 2], f.v[k - 1]
                for q in vids:
                    if q in (u, w):
                        continue
                    s = exact.orient2d_coords(xs[u], ys[u], xs[w], ys[w], xs[q], ys[q])
                    assert s <= 0, f"vertex {q} outside hull edge ({u},{w})"
            else:
                v0, v1, v2 = f.v
                for q in vids:
                    if q in f.v:
                        continue
                    s = exact._incircle_unchecked_coords(
                        xs[v0], ys[v0], xs[v1], ys[v1], xs[v2], ys[v2],
                        xs[q], ys[q],
                    )
                    assert s <= 0, f"vertex {q} strictly inside circumcircle of {f}"
        n = len(vids)
        e_fin = len(self.finite_edges())
        f_fin = sum(1 for f in alive if not f.has_inf)
        if n >= 3:
            assert e_fin <= 3 * n - 6, f"planarity bound violated: {e_fin} > {3 * n - 6}"
        assert n + 1 - e_fin + f_fin == 2, \
            f"Euler relation violated: V={n} E={e_fin} F_fin={f_fin}"


def build(s: Spectrum, seed: int = 0,
          mode: ArithmeticMode | str = ArithmeticMode.FILTERED, *,
          on_duplicate: str = "raise",
          validate_each_insert: bool = False) -> Triangulation:
    """Triangulate the spectrum's points in a seeded random insertion order.

    Points must be pairwise distinct; a coincident pair raises
    :class:`DuplicatePointError` unless ``on_duplicate="merge"``, which maps
    the newcomer onto the existing vertex (the triangulation is unchanged, as
    when inserting a duplicate into an incremental triangulation library) and
    records it in ``aliases``.
    """
    if len(s.points) == 0:
        raise EmptySpectrumError("cannot triangulate an empty spectrum")
    kernel = GeometryKernel(mode)
    tri = Triangulation(s, kernel, seed, on_duplicate=on_duplicate)
    order = np.random.Generator(np.random.PCG64(seed)).permutation(len(s.points))
    for pid in order:
        tri.insert(int(pid))
        if validate_each_insert:
            tri.validate()
    return tri
