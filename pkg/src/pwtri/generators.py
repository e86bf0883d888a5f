"""Instance generators: named small graphs and seeded random planar families.

All random families start from a random triangulation (repeated insertion of
a vertex into a random face, followed by random edge flips) and then delete
random edges while keeping the connectivity the family asks for.  Vertices
are numbered ``1..n``.
"""

from __future__ import annotations

import random

import networkx as nx

from .planar import EmbeddedMultigraph, face_of, trace_faces

__all__ = [
    "FAMILIES",
    "named",
    "cycle",
    "path",
    "grid",
    "fan",
    "random_triangulation",
    "random_planar",
    "random_planar_2conn",
    "random_planar_3conn",
    "random_outerplanar",
    "random_block_tree",
    "generate",
]


def _from_edges(edges, n_vertices=None, start=1):
    verts = range(start, start + n_vertices) if n_vertices is not None else ()
    return EmbeddedMultigraph.from_edges(edges, verts)


def cycle(n: int) -> EmbeddedMultigraph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return _from_edges([(i, i % n + 1) for i in range(1, n + 1)], n)


def path(n: int) -> EmbeddedMultigraph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return _from_edges([(i, i + 1) for i in range(1, n)], n)


def grid(k: int) -> EmbeddedMultigraph:
    if k < 1:
        raise ValueError("grid needs k >= 1")
    h = nx.convert_node_labels_to_integers(nx.grid_2d_graph(k, k), first_label=1, ordering="sorted")
    return _from_edges(h.edges(), k * k)


def fan(n: int) -> EmbeddedMultigraph:
    """Path ``1..n-1`` plus apex ``n`` joined to every path vertex."""
    if n < 3:
        raise ValueError("fan needs n >= 3")
    edges = [(i, i + 1) for i in range(1, n - 1)] + [(i, n) for i in range(1, n)]
    return _from_edges(edges, n)


def named(name: str) -> EmbeddedMultigraph:
    """The shared small fixtures (K3, C4, K4, P4, OCT, ICO, FAN5, STAR5, TWO_TRI, DBL_SQ)."""
    name = name.upper()
    if name == "K3":
        return cycle(3)
    if name == "C4":
        return cycle(4)
    if name == "K4":
        return _from_edges([(a, b) for a in range(1, 5) for b in range(a + 1, 5)], 4)
    if name == "P4":
        return path(4)
    if name == "OCT":
        h = nx.convert_node_labels_to_integers(nx.octahedral_graph(), first_label=1)
        return _from_edges(h.edges(), 6)
    if name == "ICO":
        h = nx.convert_node_labels_to_integers(nx.icosahedral_graph(), first_label=1)
        return _from_edges(h.edges(), 12)
    if name == "FAN5":
        # apex 1, path 2-3-4-5-6
        return _from_edges([(2, 3), (3, 4), (4, 5), (5, 6)] + [(1, i) for i in range(2, 7)], 6)
    if name == "STAR5":
        return _from_edges([(1, i) for i in range(2, 6)], 5)
    if name == "TWO_TRI":
        # shared vertex 3
        return _from_edges([(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)], 5)
    if name == "DBL_SQ":
        # squares 1-2-3-4 and 1-2-5-6 sharing edge (1, 2)
        return _from_edges([(1, 2), (2, 3), (3, 4), (4, 1), (2, 5), (5, 6), (6, 1)], 6)
    raise KeyError(name)


def _flip(g: EmbeddedMultigraph, e: int) -> bool:
    """Flip edge ``e`` of a simple triangulation if the result stays simple."""
    a, b = g.endpoints(e)
    f1 = face_of(g, 2 * e)
    f2 = face_of(g, 2 * e + 1)
    if len(f1) != 3 or len(f2) != 3:
        return False
    c = next(x for x in f1.vertices if x not in (a, b))
    d = next(x for x in f2.vertices if x not in (a, b))
    if c == d or g.has_edge(c, d):
        return False
    if g.degree(a) <= 3 or g.degree(b) <= 3:
        return False
    g.delete_edge(e)
    quad = face_of(g, f1.darts[1])
    g.insert_chord(quad, c, d)
    return True


def random_triangulation(n: int, rng: random.Random, flips: int | None = None) -> EmbeddedMultigraph:
    if n < 3:
        raise ValueError("triangulation needs n >= 3")
    g = cycle(3)
    for v in range(4, n + 1):
        faces = trace_faces(g)
        f = faces[rng.randrange(len(faces))]
        g.insert_vertex_in_face(f, range(len(f)), v)
    if n >= 5:
        for _ in range(flips if flips is not None else 3 * n):
            es = g.edge_ids()
            _flip(g, es[rng.randrange(len(es))])
    return g.compact()


def _thin(g: EmbeddedMultigraph, rng: random.Random, keep, target_edges: int) -> EmbeddedMultigraph:
    es = g.edge_ids()
    rng.shuffle(es)
    for e in es:
        if g.num_edges() <= target_edges:
            break
        a, b = g.endpoints(e)
        h = g.to_networkx()
        h.remove_edge(a, b)
        if keep(h):
            g.delete_edge(e)
    return g.compact()


def random_planar(n: int, rng: random.Random) -> EmbeddedMultigraph:
    """Connected planar graph with a random edge count between n-1 and 3n-6."""
    if n < 3:
        return path(n)
    g = random_triangulation(n, rng)
    target = rng.randint(n - 1, 3 * n - 6)
    return _thin(g, rng, nx.is_connected, target)


def random_planar_2conn(n: int, rng: random.Random) -> EmbeddedMultigraph:
    if n < 3:
        raise ValueError("2-connected family needs n >= 3")
    g = random_triangulation(n, rng)
    target = rng.randint(n, 3 * n - 6) if n > 3 else 3
    return _thin(g, rng, nx.is_biconnected, target)


def random_planar_3conn(n: int, rng: random.Random) -> EmbeddedMultigraph:
    if n < 4:
        raise ValueError("3-connected family needs n >= 4")
    g = random_triangulation(n, rng)
    target = rng.randint((3 * n + 1) // 2, 3 * n - 6)
    return _thin(g, rng, lambda h: nx.node_connectivity(h) >= 3, target)


def _polygon_triangulation(n: int, rng: random.Random) -> list[tuple[int, int]]:
    edges = [(i, i % n + 1) for i in range(1, n + 1)]
    stack = [list(range(1, n + 1))]
    while stack:
        poly = stack.pop()
        if len(poly) <= 3:
            continue
        i = rng.randrange(len(poly))
        j = (i + rng.randrange(2, len(poly) - 1)) % len(poly)
        i, j = min(i, j), max(i, j)
        edges.append((poly[i], poly[j]))
        stack.append(poly[i:j + 1])
        stack.append(poly[j:] + poly[: i + 1])
    return edges


def _convex_embedding(n: int, edges) -> EmbeddedMultigraph:
    """Vertices on a convex polygon in order 1..n; every vertex sits on the outer face."""
    nbrs: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    rot = {v: sorted(ws, key=lambda w: (w - v) % n) for v, ws in nbrs.items()}
    return EmbeddedMultigraph.from_rotation(rot)


def random_outerplanar(n: int, rng: random.Random) -> EmbeddedMultigraph:
    """Connected outer-planar graph with an outer-planar embedding."""
    if n < 3:
        return path(n)
    edges = _polygon_triangulation(n, rng)
    target = rng.randint(n - 1, 2 * n - 3)
    g = _convex_embedding(n, edges)
    return _thin(g, rng, nx.is_connected, target)


def random_block_tree(n: int, rng: random.Random) -> EmbeddedMultigraph:
    """Tree of small blocks glued at cut-vertices (edges, triangles, cycles, K4s)."""
    if n < 3:
        return path(n)
    edges: list[tuple[int, int]] = []
    nxt = 2
    while nxt <= n:
        at = rng.randint(1, nxt - 1)
        size = min(rng.choice([1, 1, 2, 2, 3, 3]), n - nxt + 1)
        new = list(range(nxt, nxt + size))
        nxt += size
        ring = [at] + new
        if len(ring) == 2:
            edges.append((at, new[0]))
        else:
            edges.extend(zip(ring, ring[1:] + ring[:1]))
            if len(ring) == 4 and rng.random() < 0.5:
                edges.extend([(ring[0], ring[2]), (ring[1], ring[3])])
    return _from_edges(edges, n)


FAMILIES = {
    "cycle": lambda n, rng: cycle(n),
    "path": lambda n, rng: path(n),
    "grid": lambda n, rng: grid(n),
    "fan": lambda n, rng: fan(n),
    "random-outerplanar": random_outerplanar,
    "random-planar-2conn": random_planar_2conn,
    "random-planar-3conn": random_planar_3conn,
    "random-planar": random_planar,
    "random-block-tree": random_block_tree,
}


def generate(family: str, n: int, seed: int = 0) -> EmbeddedMultigraph:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    if n < 1:
        raise ValueError("n must be positive")
    return FAMILIES[family](n, random.Random(seed))
