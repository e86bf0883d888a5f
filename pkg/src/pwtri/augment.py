"""Connectivity augmentation around the core triangulation step.

Three layers wrap ``multi_triangulate`` and ``simplify``:

* ``connect`` joins components by single edges and chains their
  decompositions through one two-vertex bag per link.
* ``biconnect`` kills every cut-vertex by a helper vertex placed in a face
  that touches all of its cut-components; ``remove_helpers`` contracts the
  helpers away once the graph is triangulated.
* ``outerplanar_maximalize`` triangulates around a universal vertex and
  deletes it again, leaving a maximal outer-planar graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .multitri import multi_triangulate
from .pathdecomp import PathDecomposition, concatenate
from .planar import (
    EmbeddedMultigraph,
    EmbeddingError,
    Face,
    NotApplicableError,
    contract_edge,
    cut_components,
    cut_vertices,
    face_of,
    is_multi_triangulated,
    trace_faces,
)
from .simplify import SimplifyResult, simplify

__all__ = [
    "HelperVertexRecord",
    "AugmentResult",
    "restrict",
    "connect",
    "biconnect",
    "remove_helpers",
    "triangulate_2conn",
    "triangulate_3conn",
    "triangulate_connected",
    "outerplanar_face",
    "outerplanar_maximalize",
]


@dataclass
class HelperVertexRecord:
    z: int
    at_cut_vertex: int
    face_used: Face


@dataclass
class AugmentResult:
    """What a triangulation run did; ``g`` and ``p`` are mutated in place."""

    g: EmbeddedMultigraph
    p: PathDecomposition
    width_in: int
    chords: list[tuple[int, int]]
    simplify: SimplifyResult | None = None
    helpers: list[HelperVertexRecord] | None = None
    stages: list[tuple[str, int, int, int]] = field(default_factory=list)

    def mark(self, name: str) -> None:
        """Record (stage, vertices, edges, width) after a stage."""
        self.stages.append((name, self.g.num_vertices(), self.g.num_edges(), self.p.width))


def _fresh_id(g: EmbeddedMultigraph) -> int:
    return max(g.vertices, default=0) + 1


def restrict(p: PathDecomposition, vertices) -> PathDecomposition:
    """Bags intersected with ``vertices``; empty bags are dropped."""
    keep = set(vertices)
    return PathDecomposition([b & keep for b in p.bags if b & keep])


def connect(g: EmbeddedMultigraph, ps: list[PathDecomposition] | None = None, p: PathDecomposition | None = None) -> PathDecomposition:
    """Join the components of ``g`` into one by link edges.

    Components are taken in order of their least vertex.  Either pass one
    decomposition per component in that order (``ps``) or a decomposition of
    the whole graph (``p``), which is then restricted to each component.
    Component ``i`` is linked to ``i+1`` by an edge from the least vertex of
    its last bag to the least vertex of the first bag of the next one; the
    link gets its own bag between the two decompositions.
    """
    comps = sorted(g.components(), key=min)
    if ps is None:
        if p is None:
            raise ValueError("need a decomposition")
        ps = [restrict(p, c) for c in comps]
    if len(ps) != len(comps):
        raise ValueError(f"{len(comps)} components but {len(ps)} decompositions")
    ps = [PathDecomposition([b for b in q.bags if b]) for q in ps]
    links = []
    for a, b in zip(ps, ps[1:]):
        x, y = min(a.bags[-1]), min(b.bags[0])
        # the two ends lie in different components, so any corners will do
        g.add_edge(x, y)
        links.append((x, y))
    return concatenate(ps, links)


def _regroup(g: EmbeddedMultigraph, v1: int) -> list[list[int]]:
    """Make the darts at ``v1`` into each cut-component consecutive.

    Groups are ordered by least component vertex; inside a group the darts
    keep their cyclic order, read from the least dart id.
    """
    cc = cut_components(g, [v1])
    groups = []
    for block in cc.blocks:
        ds = block[v1]
        k = ds.index(min(ds))
        groups.append(ds[k:] + ds[:k])
    g.set_rotation(v1, [d for grp in groups for d in grp])
    return groups


def biconnect(g: EmbeddedMultigraph, p: PathDecomposition) -> list[HelperVertexRecord]:
    """Insert one helper vertex per cut-vertex until none is left."""
    if g.num_vertices() < 3:
        raise ValueError("biconnect needs at least 3 vertices")
    if not g.is_connected():
        raise ValueError("biconnect needs a connected graph")
    records = []
    while True:
        cvs = cut_vertices(g)
        if not cvs:
            break
        v1 = cvs[0]
        groups = _regroup(g, v1)
        f1 = face_of(g, groups[0][-1] ^ 1)
        for grp in groups:
            if grp[-1] ^ 1 not in f1.darts:
                raise EmbeddingError(f"regrouping at {v1} did not produce one common face")
        nbrs = g.neighbors(v1)
        positions, seen = [], set()
        for t, d in enumerate(f1.darts):
            x = g.origin(d)
            if x in seen or (x != v1 and x not in nbrs):
                continue
            seen.add(x)
            positions.append(t)
        z = g.insert_vertex_in_face(f1, positions, _fresh_id(g))
        p.add_alongside(z, v1)
        records.append(HelperVertexRecord(z, v1, f1))
        after = set(cut_vertices(g))
        if z in after or not after < set(cvs):
            raise EmbeddingError(f"helper {z} at {v1} created a cut-vertex")
    return records


def remove_helpers(g: EmbeddedMultigraph, p: PathDecomposition, records: list[HelperVertexRecord]) -> None:
    """Contract each helper into its least neighbour sharing exactly two neighbours with it."""
    for rec in records:
        z = rec.z
        nz = g.neighbors(z)
        y = next((y for y in sorted(nz) if len(nz & g.neighbors(y)) == 2), None)
        if y is None:
            raise EmbeddingError(f"helper {z} has no neighbour with exactly two common neighbours")
        contract_edge(g, z, y)
        p.rename(z, y)


def triangulate_3conn(g: EmbeddedMultigraph, p: PathDecomposition) -> AugmentResult:
    """Chords alone; a 3-connected graph never receives a parallel edge."""
    res = AugmentResult(g, p, p.width, [])
    res.chords = multi_triangulate(g, p)
    res.mark("multi_triangulate")
    if not g.is_simple():
        raise NotApplicableError("input is not 3-connected: multi-triangulation produced a multi-edge")
    return res


def triangulate_2conn(g: EmbeddedMultigraph, p: PathDecomposition, debug_tokens: bool = False) -> AugmentResult:
    res = AugmentResult(g, p, p.width, [])
    res.chords = multi_triangulate(g, p)
    res.mark("multi_triangulate")
    res.simplify = simplify(g, p, debug_tokens=debug_tokens)
    res.mark("simplify")
    return res


def triangulate_connected(g: EmbeddedMultigraph, p: PathDecomposition, debug_tokens: bool = False) -> AugmentResult:
    """Helpers at cut-vertices, triangulate, contract the helpers again."""
    if not g.is_simple():
        raise ValueError("input must be simple")
    res = AugmentResult(g, p, p.width, [])
    res.helpers = biconnect(g, p)
    res.mark("biconnect")
    res.chords = multi_triangulate(g, p)
    res.mark("multi_triangulate")
    res.simplify = simplify(g, p, debug_tokens=debug_tokens)
    res.mark("simplify")
    remove_helpers(g, p, res.helpers)
    res.mark("remove_helpers")
    return res


def outerplanar_face(g: EmbeddedMultigraph) -> Face | None:
    """First face (in trace order) whose boundary visits every vertex."""
    everyone = set(g.vertices)
    for f in trace_faces(g):
        if set(f.vertices) == everyone:
            return f
    return None


def outerplanar_maximalize(g: EmbeddedMultigraph, p: PathDecomposition, debug_tokens: bool = False) -> AugmentResult:
    """Maximal outer-planar supergraph via a temporary universal vertex."""
    w = p.width
    n = g.num_vertices()
    if not g.is_connected():
        raise ValueError("outerplanar_maximalize needs a connected graph")
    if n <= 2:
        return AugmentResult(g, p, w, [])
    f = outerplanar_face(g)
    if f is None:
        raise NotApplicableError("embedding has no face through all vertices")
    seen, positions = set(), []
    for t, d in enumerate(f.darts):
        x = g.origin(d)
        if x not in seen:
            seen.add(x)
            positions.append(t)
    z = g.insert_vertex_in_face(f, positions, _fresh_id(g))
    p.add_everywhere(z)
    res = AugmentResult(g, p, w, [])
    res.mark("universal_vertex")
    res.chords = multi_triangulate(g, p)
    res.mark("multi_triangulate")
    res.simplify = simplify(g, p, debug_tokens=debug_tokens)
    res.mark("simplify")
    if not is_multi_triangulated(g) or g.degree(z) != n:
        raise EmbeddingError("universal vertex lost a neighbour")
    g.remove_vertex(z)
    p.remove_vertex(z)
    res.mark("delete_universal")
    return res
