"""Multi-triangulation by chords read off a path decomposition.

Every chord added here joins two vertices that already share a bag, so the
decomposition stays valid untouched.  The interval graph induced by the bags
is chordal, which guarantees a chord for every facial cycle of length >= 4.
"""

from __future__ import annotations

import networkx as nx

from .pathdecomp import PathDecomposition, find_chord_in_face
from .planar import EmbeddedMultigraph, EmbeddingError, trace_faces

__all__ = ["multi_triangulate", "face_potential"]


def face_potential(g: EmbeddedMultigraph) -> int:
    return sum(max(0, len(f) - 3) for f in trace_faces(g))


def multi_triangulate(g: EmbeddedMultigraph, p: PathDecomposition, check: bool = True) -> list[tuple[int, int]]:
    """Add chords until every face is a triangle; returns the chords in order."""
    if g.num_vertices() < 3:
        raise ValueError("need at least 3 vertices")
    if not nx.is_biconnected(g.to_networkx()):
        raise ValueError("multi_triangulate needs a 2-connected graph")
    faces = trace_faces(g)
    if any(len(f) < 3 for f in faces):
        raise ValueError("a face is bounded by two copies of one edge")
    if check and not p.validate(g):
        raise ValueError("decomposition is not valid for the graph")
    added = []
    potential = face_potential(g)
    while True:
        # trace_faces lists faces by least dart id, so the first big one wins
        big = next((f for f in faces if len(f) >= 4), None)
        if big is None:
            break
        x, y = find_chord_in_face(p, big.vertices)
        g.insert_chord(big, x, y)
        added.append((x, y))
        faces = trace_faces(g)
        if check:
            new_potential = face_potential(g)
            if new_potential >= potential:
                raise EmbeddingError("face-length potential did not drop")
            potential = new_potential
    if check:
        g.validate()
    return added
