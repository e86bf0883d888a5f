"""Brute-force ground truth for small graphs.

Nothing here looks at an embedding: every function works on the underlying
simple graph, so results stay independent of the code paths they check.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .pathdecomp import PathDecomposition

__all__ = [
    "OracleSizeError",
    "ExactWidthResult",
    "node_cap",
    "exact_pathwidth",
    "vertex_separation_bags",
    "structural_cut_pairs",
    "is_maximal_outerplanar",
    "is_outerplanar",
]

DEFAULT_NODE_CAP = 22


class OracleSizeError(ValueError):
    pass


def node_cap() -> int:
    return int(os.environ.get("PWTRI_NODE_CAP", DEFAULT_NODE_CAP))


def _as_nx(g) -> nx.Graph:
    if isinstance(g, nx.Graph):
        h = nx.Graph()
        h.add_nodes_from(g.nodes)
        h.add_edges_from((a, b) for a, b in g.edges() if a != b)
        return h
    return g.to_networkx()


@dataclass
class ExactWidthResult:
    width: int
    witness: PathDecomposition
    order: list[int]


def vertex_separation_bags(h: nx.Graph, order: list[int]) -> PathDecomposition:
    """Bags ``{v_i} + boundary(v_1..v_{i-1})`` for a linear vertex order."""
    pos = {v: i for i, v in enumerate(order)}
    last = {v: max([pos[v]] + [pos[w] for w in h[v]]) for v in order}
    bags = []
    for i, v in enumerate(order):
        bag = {w for w in order[:i] if last[w] >= i}
        bag.add(v)
        bags.append(bag)
    return PathDecomposition(bags)


def exact_pathwidth(g, cap: int | None = None) -> ExactWidthResult:
    """Minimum vertex separation number by DP over vertex subsets."""
    h = _as_nx(g)
    verts = sorted(h.nodes)
    n = len(verts)
    cap = node_cap() if cap is None else cap
    if n > cap:
        raise OracleSizeError(f"{n} vertices exceed the oracle cap of {cap}")
    if n == 0:
        return ExactWidthResult(-1, PathDecomposition([]), [])
    idx = {v: i for i, v in enumerate(verts)}
    nbr = np.zeros(n, dtype=np.int64)
    for a, b in h.edges():
        nbr[idx[a]] |= 1 << idx[b]
        nbr[idx[b]] |= 1 << idx[a]

    full = (1 << n) - 1
    sets = np.arange(1 << n, dtype=np.int64)
    boundary = np.zeros(1 << n, dtype=np.int8)
    for i in range(n):
        inside = (sets >> i) & 1
        leaks = (nbr[i] & ~sets) != 0
        boundary += (inside.astype(bool) & leaks).astype(np.int8)

    popcount = np.zeros(1 << n, dtype=np.int8)
    for i in range(n):
        popcount += ((sets >> i) & 1).astype(np.int8)

    big = np.int8(127)
    best = np.full(1 << n, big, dtype=np.int8)
    best[0] = 0
    for k in range(1, n + 1):
        layer = sets[popcount == k]
        cand = np.full(layer.shape, big, dtype=np.int8)
        for i in range(n):
            has = ((layer >> i) & 1).astype(bool)
            prev = best[layer[has] ^ (1 << i)]
            cand[has] = np.minimum(cand[has], prev)
        best[layer] = np.maximum(cand, boundary[layer])

    # walk back from the full set to recover an optimal order
    order_rev = []
    s = full
    while s:
        target = best[s]
        for i in range(n):
            if (s >> i) & 1 and max(best[s ^ (1 << i)], boundary[s]) == target:
                order_rev.append(verts[i])
                s ^= 1 << i
                break
        else:  # pragma: no cover - DP table is self-consistent
            raise RuntimeError("failed to reconstruct an optimal order")
    order = order_rev[::-1]
    witness = vertex_separation_bags(h, order)
    width = int(best[full])
    assert witness.width == width
    return ExactWidthResult(width, witness, order)


def structural_cut_pairs(g) -> list[tuple[int, int]]:
    """Pairs whose deletion disconnects the graph, neither member a cut-vertex alone."""
    h = _as_nx(g)
    if h.number_of_nodes() > 2000:
        raise OracleSizeError("structural_cut_pairs is meant for small graphs")
    singles = set()
    for v in h.nodes:
        rest = h.subgraph(set(h.nodes) - {v})
        if rest.number_of_nodes() and not nx.is_connected(rest):
            singles.add(v)
    out = []
    for a, b in itertools.combinations(sorted(h.nodes), 2):
        if a in singles or b in singles:
            continue
        rest = h.subgraph(set(h.nodes) - {a, b})
        if rest.number_of_nodes() and not nx.is_connected(rest):
            out.append((a, b))
    return out


def is_outerplanar(g) -> bool:
    h = _as_nx(g)
    star = h.copy()
    z = ("apex",)
    star.add_node(z)
    star.add_edges_from((z, v) for v in h.nodes)
    return nx.check_planarity(star)[0]


def is_maximal_outerplanar(g) -> bool:
    """2-connected outer-planar simple graph with exactly 2n - 3 edges."""
    h = _as_nx(g)
    n = h.number_of_nodes()
    if n < 3:
        return n == 2 and h.number_of_edges() == 1 or n == 1
    if h.number_of_edges() != 2 * n - 3:
        return False
    if not nx.is_biconnected(h):
        return False
    return is_outerplanar(h)
