"""Embedded planar multigraphs stored as a rotation system of darts.

Each edge ``e`` owns the two darts ``2*e`` and ``2*e + 1``; ``twin(d)`` is
``d ^ 1``.  Around every vertex the outgoing darts form one cyclic list,
linked through ``next_cw`` / ``prev_cw``.  Faces are read off with the rule
``succ(d) = next_cw(twin(d))``: arriving at a vertex along ``d`` we leave along
the dart that follows the reverse of ``d`` in clockwise order.

Deleted edges are tombstoned; :meth:`EmbeddedMultigraph.compact` rebuilds the
arrays when a dense numbering is wanted.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

__all__ = [
    "EmbeddingError",
    "NotApplicableError",
    "EmbeddedMultigraph",
    "Face",
    "CutComponents",
    "CuttingPair",
    "trace_faces",
    "is_multi_triangulated",
    "cut_vertices",
    "cutting_pairs",
    "pair_record",
    "face_of",
    "cut_components",
    "reverse_component",
    "swap_components",
    "arrange_components",
    "replace_multiedge_copy",
    "contract_edge",
]


class EmbeddingError(RuntimeError):
    """Raised on a violated structural invariant of an embedding."""


class NotApplicableError(ValueError):
    """Raised when a triangulation predicate is asked about fewer than 3 vertices."""


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


class EmbeddedMultigraph:
    """Loopless multigraph with a fixed combinatorial embedding."""

    def __init__(self) -> None:
        self._origin: list[int] = []
        self._next: list[int] = []
        self._prev: list[int] = []
        self._alive: list[bool] = []  # per edge
        self._first: dict[int, int] = {}  # vertex -> some outgoing dart, -1 if isolated

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_rotation(cls, rotation: dict[int, Sequence[int]]) -> "EmbeddedMultigraph":
        """Build from clockwise neighbour lists.

        Multi-edges are listed with repetition.  For a pair with multiplicity
        ``m`` the ``k``-th copy at the smaller endpoint is matched with a copy
        at the larger endpoint in reversed cyclic order; all ``m`` cyclic
        offsets are tried and the first planar matching is kept.
        """
        counts: Counter = Counter()
        for v, nbrs in rotation.items():
            for w in nbrs:
                if w == v:
                    raise ValueError(f"loop at vertex {v}")
                if w not in rotation:
                    raise ValueError(f"neighbour {w} of {v} has no rotation entry")
                counts[(v, w)] += 1
        for (v, w), c in counts.items():
            if counts[(w, v)] != c:
                raise ValueError(f"asymmetric rotation between {v} and {w}")

        multi = sorted(p for p, c in counts.items() if p[0] < p[1] and c > 1)
        offsets = {p: 0 for p in multi}

        def build() -> "EmbeddedMultigraph":
            return cls._build(rotation, offsets)

        g = build()
        if g.is_planar_embedding() or not multi:
            return g
        # greedy per pair, then exhaustive as a fallback for small instances
        for p in multi:
            for off in range(counts[p]):
                offsets[p] = off
                g = build()
                if g.is_planar_embedding():
                    return g
            offsets[p] = 0
        total = 1
        for p in multi:
            total *= counts[p]
        if total <= 4096:
            import itertools

            for combo in itertools.product(*(range(counts[p]) for p in multi)):
                offsets.update(zip(multi, combo))
                g = build()
                if g.is_planar_embedding():
                    return g
        return g

    @classmethod
    def _build(cls, rotation, offsets) -> "EmbeddedMultigraph":
        g = cls()
        slots: dict[tuple[int, int], list[int]] = {}
        for v in sorted(rotation):
            g._first[v] = -1
            for idx, w in enumerate(rotation[v]):
                slots.setdefault((v, w), []).append(idx)
        dart_at: dict[tuple[int, int], int] = {}
        for (v, w), idx_v in sorted(slots.items()):
            if v > w:
                continue
            idx_w = slots[(w, v)]
            m = len(idx_v)
            off = offsets.get((v, w), 0)
            for k in range(m):
                e = len(g._alive)
                g._alive.append(True)
                g._origin.extend([v, w])
                g._next.extend([-1, -1])
                g._prev.extend([-1, -1])
                dart_at[(v, idx_v[k])] = 2 * e
                dart_at[(w, idx_w[(off - k) % m])] = 2 * e + 1
        for v in sorted(rotation):
            ds = [dart_at[(v, i)] for i in range(len(rotation[v]))]
            g._link_cycle(v, ds)
        return g

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> "EmbeddedMultigraph":
        """Simple graph with an arbitrary planar embedding (networkx LR planarity)."""
        h = nx.Graph()
        h.add_nodes_from(vertices)
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            h.add_edge(a, b)
        ok, emb = nx.check_planarity(h)
        if not ok:
            raise ValueError("graph is not planar")
        return cls.from_rotation({v: list(emb.neighbors_cw_order(v)) for v in h.nodes})

    @classmethod
    def from_outerplanar_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> "EmbeddedMultigraph":
        """Simple graph embedded with every vertex on one face.

        Embeds the graph plus an apex joined to all vertices, then drops the
        apex; the face it sat in touches every vertex.
        """
        h = nx.Graph()
        h.add_nodes_from(vertices)
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            h.add_edge(a, b)
        apex = ("apex",)
        h2 = h.copy()
        h2.add_edges_from((apex, v) for v in h.nodes)
        ok, emb = nx.check_planarity(h2)
        if not ok:
            raise NotApplicableError("graph is not outer-planar")
        return cls.from_rotation({v: [w for w in emb.neighbors_cw_order(v) if w != apex] for v in h.nodes})

    def copy(self) -> "EmbeddedMultigraph":
        g = EmbeddedMultigraph()
        g._origin = list(self._origin)
        g._next = list(self._next)
        g._prev = list(self._prev)
        g._alive = list(self._alive)
        g._first = dict(self._first)
        return g

    def compact(self) -> "EmbeddedMultigraph":
        """Return an equivalent embedding without tombstones."""
        return EmbeddedMultigraph._from_dart_rotation(self, {v: self.darts_at(v) for v in self.vertices})

    @classmethod
    def _from_dart_rotation(cls, src: "EmbeddedMultigraph", rot: dict[int, list[int]]) -> "EmbeddedMultigraph":
        g = cls()
        remap: dict[int, int] = {}
        for e in src.edge_ids():
            ne = len(g._alive)
            g._alive.append(True)
            g._origin.extend([src._origin[2 * e], src._origin[2 * e + 1]])
            g._next.extend([-1, -1])
            g._prev.extend([-1, -1])
            remap[2 * e] = 2 * ne
            remap[2 * e + 1] = 2 * ne + 1
        for v in sorted(rot):
            g._first[v] = -1
            g._link_cycle(v, [remap[d] for d in rot[v]])
        return g

    # -- low level ------------------------------------------------------------

    def _link_cycle(self, v: int, ds: list[int]) -> None:
        if not ds:
            self._first[v] = -1
            return
        k = len(ds)
        for i, d in enumerate(ds):
            self._origin[d] = v
            self._next[d] = ds[(i + 1) % k]
            self._prev[d] = ds[(i - 1) % k]
        self._first[v] = ds[0]

    def _new_edge(self, u: int, v: int) -> int:
        if u == v:
            raise EmbeddingError(f"refusing to add loop at {u}")
        e = len(self._alive)
        self._alive.append(True)
        self._origin.extend([u, v])
        self._next.extend([-1, -1])
        self._prev.extend([-1, -1])
        return e

    def _splice_after(self, d: int, after: int | None) -> None:
        """Put dart ``d`` clockwise right after ``after`` (or alone if None)."""
        v = self._origin[d]
        if after is None or after < 0:
            if self._first[v] != -1:
                after = self._prev[self._first[v]]
            else:
                self._next[d] = self._prev[d] = d
                self._first[v] = d
                return
        if self._origin[after] != v:
            raise EmbeddingError("splice position is at a different vertex")
        nxt = self._next[after]
        self._next[after] = d
        self._prev[d] = after
        self._next[d] = nxt
        self._prev[nxt] = d

    def _unlink(self, d: int) -> None:
        v = self._origin[d]
        if self._next[d] == d:
            self._first[v] = -1
        else:
            p, n = self._prev[d], self._next[d]
            self._next[p] = n
            self._prev[n] = p
            if self._first[v] == d:
                self._first[v] = n
        self._next[d] = self._prev[d] = -1

    # -- queries --------------------------------------------------------------

    @staticmethod
    def twin(d: int) -> int:
        return d ^ 1

    def origin(self, d: int) -> int:
        return self._origin[d]

    def head(self, d: int) -> int:
        return self._origin[d ^ 1]

    def next_cw(self, d: int) -> int:
        return self._next[d]

    def prev_cw(self, d: int) -> int:
        return self._prev[d]

    def face_succ(self, d: int) -> int:
        return self._next[d ^ 1]

    def dart_alive(self, d: int) -> bool:
        return self._alive[d >> 1]

    @property
    def vertices(self) -> list[int]:
        return sorted(self._first)

    def has_vertex(self, v: int) -> bool:
        return v in self._first

    def num_vertices(self) -> int:
        return len(self._first)

    def num_edges(self) -> int:
        return sum(self._alive)

    def edge_ids(self) -> list[int]:
        return [e for e, a in enumerate(self._alive) if a]

    def endpoints(self, e: int) -> tuple[int, int]:
        return self._origin[2 * e], self._origin[2 * e + 1]

    def darts(self) -> list[int]:
        return [d for e in self.edge_ids() for d in (2 * e, 2 * e + 1)]

    def darts_at(self, v: int, start: int | None = None) -> list[int]:
        """Outgoing darts of ``v`` in clockwise order, beginning at ``start``."""
        d0 = self._first[v] if start is None else start
        if d0 == -1:
            return []
        out = [d0]
        d = self._next[d0]
        while d != d0:
            out.append(d)
            d = self._next[d]
        return out

    def rotation(self, v: int) -> list[int]:
        return [self.head(d) for d in self.darts_at(v)]

    def rotation_system(self) -> dict[int, list[int]]:
        return {v: self.rotation(v) for v in self.vertices}

    def degree(self, v: int) -> int:
        return len(self.darts_at(v))

    def neighbors(self, v: int) -> set[int]:
        return {self.head(d) for d in self.darts_at(v)}

    def edge_multiset(self) -> Counter:
        return Counter(_pair(*self.endpoints(e)) for e in self.edge_ids())

    def multiplicity(self, u: int, v: int) -> int:
        return sum(1 for d in self.darts_at(u) if self.head(d) == v)

    def darts_between(self, u: int, v: int) -> list[int]:
        return [d for d in self.darts_at(u) if self.head(d) == v]

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._first and any(self.head(d) == v for d in self.darts_at(u))

    def simple_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edge_multiset())

    def is_simple(self) -> bool:
        return all(c == 1 for c in self.edge_multiset().values())

    def multi_edges(self) -> list[tuple[int, int]]:
        return sorted(p for p, c in self.edge_multiset().items() if c > 1)

    def to_networkx(self) -> nx.Graph:
        """Underlying simple graph."""
        h = nx.Graph()
        h.add_nodes_from(self.vertices)
        h.add_edges_from(self.edge_multiset())
        return h

    def components(self, removed: Iterable[int] = ()) -> list[frozenset[int]]:
        gone = set(removed)
        seen: set[int] = set(gone)
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for d in self.darts_at(x):
                    y = self.head(d)
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_planar_embedding(self) -> bool:
        """Euler's relation on every connected component."""
        faces = trace_faces(self)
        comp_of = {}
        comps = self.components()
        for i, c in enumerate(comps):
            for v in c:
                comp_of[v] = i
        nv = Counter(comp_of[v] for v in self.vertices)
        ne = Counter(comp_of[self._origin[2 * e]] for e in self.edge_ids())
        nf = Counter(comp_of[self._origin[f.darts[0]]] for f in faces)
        for i in range(len(comps)):
            if ne[i] == 0:
                continue
            if nv[i] - ne[i] + nf[i] != 2:
                return False
        return True

    def validate(self) -> None:
        """Check dart invariants and planarity; raise EmbeddingError otherwise."""
        seen: set[int] = set()
        for v, d0 in self._first.items():
            if d0 == -1:
                continue
            for d in self.darts_at(v):
                if not self.dart_alive(d):
                    raise EmbeddingError(f"dead dart {d} in rotation of {v}")
                if self._origin[d] != v:
                    raise EmbeddingError(f"dart {d} listed at {v} but originates at {self._origin[d]}")
                if self._prev[self._next[d]] != d:
                    raise EmbeddingError(f"broken rotation links at dart {d}")
                if d in seen:
                    raise EmbeddingError(f"dart {d} appears twice")
                seen.add(d)
        for e in self.edge_ids():
            a, b = self.endpoints(e)
            if a == b:
                raise EmbeddingError(f"loop edge {e}")
            if 2 * e not in seen or 2 * e + 1 not in seen:
                raise EmbeddingError(f"edge {e} has a dart outside every rotation")
        if len(seen) != 2 * self.num_edges():
            raise EmbeddingError("dart count differs from twice the edge count")
        if not self.is_planar_embedding():
            raise EmbeddingError("rotation system is not a planar embedding")

    # -- mutation -------------------------------------------------------------

    def add_vertex(self, v: int | None = None) -> int:
        if v is None:
            v = max(self._first, default=0) + 1
        if v in self._first:
            raise ValueError(f"vertex {v} already present")
        self._first[v] = -1
        return v

    def add_edge(self, u: int, v: int, after_u: int | None = None, after_v: int | None = None) -> int:
        """Add edge (u, v); its darts go clockwise right after the given darts."""
        e = self._new_edge(u, v)
        self._splice_after(2 * e, after_u)
        self._splice_after(2 * e + 1, after_v)
        return e

    def delete_edge(self, e: int) -> None:
        if not self._alive[e]:
            raise EmbeddingError(f"edge {e} already deleted")
        self._unlink(2 * e)
        self._unlink(2 * e + 1)
        self._alive[e] = False

    def remove_vertex(self, v: int) -> None:
        for d in self.darts_at(v):
            self.delete_edge(d >> 1)
        del self._first[v]

    def reverse_rotation(self, v: int) -> None:
        ds = self.darts_at(v)
        self._link_cycle(v, ds[::-1])

    def set_rotation(self, v: int, ds: list[int]) -> None:
        if sorted(ds) != sorted(self.darts_at(v)):
            raise EmbeddingError(f"new rotation at {v} is not a permutation of its darts")
        self._link_cycle(v, ds)

    def insert_chord(self, face: "Face", x: int, y: int) -> int:
        """Route a new edge (x, y) inside ``face``, splitting it in two."""
        ds = face.darts
        k = len(ds)
        pos_x = [t for t in range(k) if self._origin[ds[t]] == x]
        pos_y = [t for t in range(k) if self._origin[ds[t]] == y]
        if len(pos_x) != 1 or len(pos_y) != 1:
            raise EmbeddingError(f"chord ends {x},{y} must each occur once on the face")
        tx, ty = pos_x[0], pos_y[0]
        if (tx - ty) % k in (1, k - 1):
            raise EmbeddingError(f"({x},{y}) are consecutive on the face")
        ax = ds[(tx - 1) % k] ^ 1
        ay = ds[(ty - 1) % k] ^ 1
        return self.add_edge(x, y, ax, ay)

    def insert_vertex_in_face(self, face: "Face", positions: Sequence[int], v: int | None = None) -> int:
        """Add a vertex inside ``face`` joined to the corners at ``positions``.

        ``positions`` index into ``face.darts``; the corner at position ``t``
        sits at the origin of ``face.darts[t]``.  The chosen corners must
        belong to pairwise distinct vertices.
        """
        ds = face.darts
        k = len(ds)
        pos = sorted(set(positions))
        targets = [self._origin[ds[t]] for t in pos]
        if len(set(targets)) != len(targets):
            raise EmbeddingError("corners of one vertex chosen twice")
        z = self.add_vertex(v)
        z_darts = []
        for t in pos:
            x = self._origin[ds[t]]
            if k == 0:
                after = None
            else:
                after = ds[(t - 1) % k] ^ 1
            e = self._new_edge(x, z)
            self._splice_after(2 * e, after)
            z_darts.append(2 * e + 1)
        self._link_cycle(z, z_darts[::-1])
        return z


@dataclass(frozen=True)
class Face:
    """Facial circuit given as the cyclic dart sequence of its boundary walk."""

    darts: tuple[int, ...]
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.darts)


def trace_faces(g: EmbeddedMultigraph) -> list[Face]:
    """All facial circuits; faces are listed by their least dart id."""
    seen: set[int] = set()
    faces = []
    for d0 in sorted(g.darts()):
        if d0 in seen:
            continue
        ds = []
        d = d0
        while d not in seen:
            seen.add(d)
            ds.append(d)
            d = g.face_succ(d)
        if d != d0:
            raise EmbeddingError("face walk did not close")
        faces.append(Face(tuple(ds), tuple(g.origin(x) for x in ds)))
    return faces


def face_of(g: EmbeddedMultigraph, dart: int) -> Face:
    ds = [dart]
    d = g.face_succ(dart)
    while d != dart:
        ds.append(d)
        d = g.face_succ(d)
    return Face(tuple(ds), tuple(g.origin(x) for x in ds))


def is_multi_triangulated(g: EmbeddedMultigraph) -> bool:
    if g.num_vertices() < 3:
        raise NotApplicableError("triangulation predicates need at least 3 vertices")
    if not g.is_connected():
        return False
    for f in trace_faces(g):
        if len(f) != 3:
            return False
    return g.is_planar_embedding()


def cut_vertices(g: EmbeddedMultigraph) -> list[int]:
    if not g.is_connected():
        raise ValueError("cut_vertices needs a connected graph")
    return sorted(nx.articulation_points(g.to_networkx()))


@dataclass
class CutComponents:
    """Connected pieces of ``g - separator`` and their dart blocks.

    ``blocks[i][s]`` lists the darts from separator vertex ``s`` into
    ``components[i]`` in clockwise order.  For a cutting pair the blocks are
    read starting right after a copy of the separator edge, so the first and
    last entries are the ends of the block.
    """

    separator: tuple[int, ...]
    components: list[frozenset[int]]
    blocks: list[dict[int, list[int]]]
    parent_index: int | None = None

    def index_of(self, w: int) -> int:
        for i, c in enumerate(self.components):
            if w in c:
                return i
        raise KeyError(w)


@dataclass
class CuttingPair:
    """A multi-edge (u, v) of a multi-triangulated graph with its cut-components.

    ``copies`` lists the darts v->u in clockwise order around ``v``; the block
    of component ``order[k]`` sits right after ``copies[k]``.
    """

    u: int
    v: int
    multiplicity: int
    cut: CutComponents
    copies: list[int] = field(default_factory=list)
    order: list[int] = field(default_factory=list)


def cut_components(g: EmbeddedMultigraph, separator: Iterable[int]) -> CutComponents:
    sep = tuple(sorted(set(separator)))
    if not 1 <= len(sep) <= 2:
        raise ValueError("separator must have one or two vertices")
    comps = sorted(g.components(removed=sep), key=min)
    where = {}
    for i, c in enumerate(comps):
        for w in c:
            where[w] = i
    blocks: list[dict[int, list[int]]] = [{s: [] for s in sep} for _ in comps]
    for s in sep:
        ds = g.darts_at(s)
        if len(sep) == 2:
            other = sep[0] if s == sep[1] else sep[1]
            for i, d in enumerate(ds):
                if g.head(d) == other:
                    ds = ds[i + 1:] + ds[: i + 1]
                    break
        for d in ds:
            w = g.head(d)
            if w in where:
                blocks[where[w]][s].append(d)
    return CutComponents(sep, comps, blocks)


def _pair_record(g: EmbeddedMultigraph, u: int, v: int, check: bool = True) -> CuttingPair:
    u, v = _pair(u, v)
    cc = cut_components(g, (u, v))
    ds = g.darts_at(v)
    copies: list[int] = []
    order: list[int] = []
    starts = [k for k, d in enumerate(ds) if g.head(d) == u]
    if starts:
        ds = ds[starts[0]:] + ds[: starts[0]]
        current = None
        for d in ds:
            w = g.head(d)
            if w == u:
                copies.append(d)
                current = None
                continue
            i = cc.index_of(w)
            if current is None:
                order.append(i)
                current = i
            elif current != i:
                raise EmbeddingError(f"component blocks interleave at {v} for pair ({u},{v})")
    rec = CuttingPair(u, v, len(copies), cc, copies, order)
    if check and rec.multiplicity >= 2:
        if len(cc.components) != rec.multiplicity or sorted(order) != list(range(len(cc.components))):
            raise EmbeddingError(
                f"pair ({u},{v}): multiplicity {rec.multiplicity} but {len(cc.components)} components"
            )
    return rec


def cutting_pairs(g: EmbeddedMultigraph, check: bool = True) -> list[CuttingPair]:
    """Cutting pairs of a multi-triangulated graph, read off its multi-edges."""
    if not is_multi_triangulated(g):
        raise ValueError("cutting_pairs needs a multi-triangulated graph")
    return [_pair_record(g, u, v, check) for u, v in g.multi_edges()]


def pair_record(g: EmbeddedMultigraph, u: int, v: int) -> CuttingPair:
    return _pair_record(g, u, v)


def arrange_components(g: EmbeddedMultigraph, pair: CuttingPair, order: Sequence[int], flips: Iterable[int] = ()) -> CuttingPair:
    """Re-embed the cut-components of ``pair`` in a new cyclic order.

    ``order`` is the clockwise order of the component blocks around ``v``;
    components listed in ``flips`` are mirrored.  Returns the refreshed record.
    """
    u, v = pair.u, pair.v
    cc = pair.cut
    L = len(cc.components)
    if sorted(order) != list(range(L)):
        raise ValueError("order must be a permutation of the component indices")
    flips = set(flips)
    bv = {i: list(cc.blocks[i][v]) for i in range(L)}
    bu = {i: list(cc.blocks[i][u]) for i in range(L)}
    for i in flips:
        bv[i].reverse()
        bu[i].reverse()
        for w in cc.components[i]:
            g.reverse_rotation(w)
    cv = list(pair.copies)
    cu = [d ^ 1 for d in cv]
    seq_v: list[int] = []
    for k, i in enumerate(order):
        seq_v.append(cv[k])
        seq_v.extend(bv[i])
    seq_u: list[int] = [cu[0]]
    for k in range(L - 1, 0, -1):
        seq_u.extend(bu[order[k]])
        seq_u.append(cu[k])
    seq_u.extend(bu[order[0]])
    g.set_rotation(v, seq_v)
    g.set_rotation(u, seq_u)
    return _pair_record(g, u, v)


def reverse_component(g: EmbeddedMultigraph, pair: CuttingPair, i: int) -> CuttingPair:
    return arrange_components(g, pair, pair.order, flips=[i])


def swap_components(g: EmbeddedMultigraph, pair: CuttingPair, i: int, j: int) -> CuttingPair:
    order = list(pair.order)
    a, b = order.index(i), order.index(j)
    order[a], order[b] = order[b], order[a]
    return arrange_components(g, pair, order)


def _block_ends(g: EmbeddedMultigraph, pair: CuttingPair, i: int) -> tuple[int, int]:
    blk = pair.cut.blocks[i][pair.v]
    return g.head(blk[0]), g.head(blk[-1])


def replace_multiedge_copy(g: EmbeddedMultigraph, pair: CuttingPair, i: int, bi: int, j: int, bj: int) -> int:
    """Delete one copy of (u, v) and add (bi, bj) between components i and j.

    ``bi`` must be an end of component ``i``'s block around ``v`` and ``bj``
    an end of component ``j``'s block.  Components are reordered and mirrored
    so that both face a common copy of (u, v); that copy is deleted and the
    new edge is routed through the resulting quadrilateral.  Returns the new
    edge id.
    """
    if i == j:
        raise ValueError("components must differ")
    if pair.multiplicity < 2:
        raise ValueError(f"({pair.u},{pair.v}) is not a multi-edge")
    if g.has_edge(bi, bj):
        raise EmbeddingError(f"edge ({bi},{bj}) already present; records are corrupt")
    fi, li = _block_ends(g, pair, i)
    fj, lj = _block_ends(g, pair, j)
    if bi not in (fi, li) or bj not in (fj, lj):
        raise ValueError("replacement ends must be peripheral vertices of their components")
    flips = []
    if li != bi:
        flips.append(i)
    if fj != bj:
        flips.append(j)
    rest = [k for k in pair.order if k not in (i, j)]
    rec = arrange_components(g, pair, [i, j] + rest, flips)
    copy = rec.copies[1]
    anchor = rec.cut.blocks[i][rec.v][-1] ^ 1  # bi -> v
    g.delete_edge(copy >> 1)
    quad = face_of(g, anchor)
    if len(quad) != 4:
        raise EmbeddingError(f"expected a quadrilateral after deleting a copy, got length {len(quad)}")
    return g.insert_chord(quad, bi, bj)


def contract_edge(g: EmbeddedMultigraph, z: int, y: int) -> None:
    """Contract (z, y) into y; loops are dropped and parallel edges merged."""
    zy = g.darts_between(z, y)
    if not zy:
        raise ValueError(f"({z},{y}) is not an edge")
    for d in zy[1:]:
        g.delete_edge(d >> 1)
    d0 = zy[0]
    seq = g.darts_at(z, start=d0)[1:]
    yz = d0 ^ 1
    g._unlink(d0)
    after = g.prev_cw(yz) if g.next_cw(yz) != yz else None
    g._unlink(yz)
    g._alive[d0 >> 1] = False
    for d in seq:
        g._next[d] = g._prev[d] = -1
        g._origin[d] = y
    if after is None:
        g._link_cycle(y, seq)
    else:
        for d in seq:
            g._splice_after(d, after)
            after = d
    del g._first[z]
    # collapse digons first so that triangulations stay triangulated
    changed = True
    while changed:
        changed = False
        for f in trace_faces(g):
            if len(f) == 2:
                a, b = f.darts
                if (a >> 1) != (b >> 1):
                    g.delete_edge(b >> 1)
                    changed = True
                    break
    for w in sorted(g.neighbors(y)):
        extra = g.darts_between(y, w)[1:]
        for d in extra:
            g.delete_edge(d >> 1)
