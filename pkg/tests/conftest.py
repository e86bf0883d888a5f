import networkx as nx
import pytest

from pwtri.generators import named
from pwtri.multitri import multi_triangulate
from pwtri.oracle import exact_pathwidth
from pwtri.pathdecomp import PathDecomposition
from pwtri.planar import EmbeddedMultigraph


def nx_face_count(g: EmbeddedMultigraph) -> int:
    """Faces of a simple embedded graph counted by networkx's own face walk."""
    emb = nx.PlanarEmbedding()
    for v in g.vertices:
        emb.add_node(v)
        prev = None
        for d in g.darts_at(v):
            w = g.head(d)
            emb.add_half_edge(v, w, cw=prev) if prev is not None else emb.add_half_edge(v, w)
            prev = w
    seen = set()
    faces = 0
    for a, b in emb.edges():
        if (a, b) in seen:
            continue
        emb.traverse_face(a, b, mark_half_edges=seen)
        faces += 1
    return faces


def figure_one_graph():
    """Cutting pair (1, 2) with four components, each a path x-y joined to both ends."""
    edges = [(1, 2)]
    for i in range(1, 5):
        x, y = 2 * i + 1, 2 * i + 2
        edges += [(1, x), (1, y), (2, x), (2, y), (x, y)]
    g = EmbeddedMultigraph.from_edges(edges)
    p = PathDecomposition([{1, 2, 2 * i + 1, 2 * i + 2} for i in range(1, 5)])
    multi_triangulate(g, p)
    return g, p


def multi_tri(name_or_graph):
    g = named(name_or_graph) if isinstance(name_or_graph, str) else name_or_graph
    p = exact_pathwidth(g).witness
    multi_triangulate(g, p)
    return g, p


@pytest.fixture
def c4_decomp():
    return PathDecomposition([{1, 2, 4}, {2, 3, 4}])
