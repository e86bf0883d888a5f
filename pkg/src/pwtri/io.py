"""Text formats for graphs and path decompositions.

Graphs use the PACE ``.gr`` layout with an optional rotation block::

    c comment
    p tw <n> <m>
    <u> <v>            (m lines, vertices 1..n)
    r <v> <w1> ... <wk>  (optional, clockwise neighbours of v)

Decompositions use the PACE ``.td`` layout restricted to paths::

    s td <N> <width+1> <n>
    b <i> <v1> ... <vk>  (i = 1..N in order)
    <i> <i+1>            (optional path edges)
"""

from __future__ import annotations

from collections import Counter

from .pathdecomp import DecompositionError, PathDecomposition
from .planar import EmbeddedMultigraph, NotApplicableError

__all__ = [
    "FormatError",
    "parse_graph",
    "emit_graph",
    "parse_decomposition",
    "emit_decomposition",
    "canonical_rotation",
]


class FormatError(ValueError):
    pass


def _lines(text: str):
    for k, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield k, line.split()


def _ints(k: int, toks: list[str]) -> list[int]:
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise FormatError(f"line {k}: expected integers, got {' '.join(toks)!r}") from None


def parse_graph(text: str) -> EmbeddedMultigraph:
    """Read a graph; without a rotation block an embedding is computed.

    Outer-planar graphs get an embedding with all vertices on one face,
    other planar graphs an arbitrary planar one.
    """
    n = m = None
    edges: list[tuple[int, int]] = []
    rotation: dict[int, list[int]] = {}
    for k, toks in _lines(text):
        if toks[0] == "p":
            if n is not None:
                raise FormatError(f"line {k}: second header")
            if len(toks) != 4 or toks[1] != "tw":
                raise FormatError(f"line {k}: header must read 'p tw n m'")
            n, m = _ints(k, toks[2:])
            continue
        if n is None:
            raise FormatError(f"line {k}: data before the 'p tw' header")
        if toks[0] == "r":
            vals = _ints(k, toks[1:])
            if not vals:
                raise FormatError(f"line {k}: rotation line without a vertex")
            v, ws = vals[0], vals[1:]
            if v in rotation:
                raise FormatError(f"line {k}: second rotation line for vertex {v}")
            rotation[v] = ws
            continue
        if rotation:
            raise FormatError(f"line {k}: edge line after the rotation block")
        vals = _ints(k, toks)
        if len(vals) != 2:
            raise FormatError(f"line {k}: edge line needs two vertices")
        a, b = vals
        if a == b:
            raise FormatError(f"line {k}: loop at vertex {a}")
        for x in (a, b):
            if not 1 <= x <= n:
                raise FormatError(f"line {k}: vertex {x} outside 1..{n}")
        edges.append((a, b))
    if n is None:
        raise FormatError("missing 'p tw n m' header")
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    verts = range(1, n + 1)
    if rotation:
        return _from_rotation_block(n, edges, rotation)
    counts = Counter((min(a, b), max(a, b)) for a, b in edges)
    if any(c > 1 for c in counts.values()):
        raise FormatError("parallel edges need a rotation block")
    try:
        return EmbeddedMultigraph.from_outerplanar_edges(edges, verts)
    except NotApplicableError:
        pass
    try:
        return EmbeddedMultigraph.from_edges(edges, verts)
    except ValueError as exc:
        raise FormatError(f"no planar embedding: {exc}") from None


def _from_rotation_block(n: int, edges, rotation: dict[int, list[int]]) -> EmbeddedMultigraph:
    want = Counter()
    for a, b in edges:
        want[(a, b)] += 1
        want[(b, a)] += 1
    have = Counter()
    for v, ws in rotation.items():
        if not 1 <= v <= n:
            raise FormatError(f"rotation for vertex {v} outside 1..{n}")
        for w in ws:
            have[(v, w)] += 1
    if have != want:
        raise FormatError("rotation block does not match the edge list")
    full = {v: rotation.get(v, []) for v in range(1, n + 1)}
    try:
        g = EmbeddedMultigraph.from_rotation(full)
    except Exception as exc:
        raise FormatError(f"rotation block is not a planar embedding: {exc}") from None
    return g


def canonical_rotation(ws: list[int]) -> list[int]:
    """Lexicographically least cyclic shift of a neighbour sequence."""
    if not ws:
        return []
    return min(ws[i:] + ws[:i] for i in range(len(ws)))


def emit_graph(g: EmbeddedMultigraph, rotation: bool = True, comment: str | None = None) -> str:
    verts = sorted(g.vertices)
    n = len(verts)
    if verts != list(range(1, n + 1)):
        raise FormatError("vertices must be numbered 1..n to be written")
    edges = sorted(g.endpoints(e) if g.endpoints(e)[0] < g.endpoints(e)[1] else g.endpoints(e)[::-1] for e in g.edge_ids())
    out = []
    if comment:
        out.extend(f"c {line}" for line in comment.splitlines())
    out.append(f"p tw {n} {len(edges)}")
    out.extend(f"{a} {b}" for a, b in edges)
    if rotation:
        for v in verts:
            ws = canonical_rotation([g.head(d) for d in g.darts_at(v)])
            out.append(" ".join(["r", str(v)] + [str(w) for w in ws]))
    return "\n".join(out) + "\n"


def parse_decomposition(text: str) -> PathDecomposition:
    header = None
    bags: list[set[int]] = []
    links: list[tuple[int, int]] = []
    for k, toks in _lines(text):
        if toks[0] == "s":
            if header is not None:
                raise FormatError(f"line {k}: second header")
            if len(toks) != 5 or toks[1] != "td":
                raise FormatError(f"line {k}: header must read 's td N w n'")
            header = _ints(k, toks[2:])
            continue
        if header is None:
            raise FormatError(f"line {k}: data before the 's td' header")
        if toks[0] == "b":
            vals = _ints(k, toks[1:])
            if not vals:
                raise FormatError(f"line {k}: bag line without an index")
            if vals[0] != len(bags) + 1:
                raise FormatError(f"line {k}: bag {vals[0]} out of sequence (expected {len(bags) + 1})")
            if links:
                raise FormatError(f"line {k}: bag after the edge list")
            bags.append(set(vals[1:]))
            continue
        vals = _ints(k, toks)
        if len(vals) != 2:
            raise FormatError(f"line {k}: edge line needs two bag indices")
        links.append((min(vals), max(vals)))
    if header is None:
        raise FormatError("missing 's td N w n' header")
    nb, size, n = header
    if nb != len(bags):
        raise FormatError(f"header announces {nb} bags, found {len(bags)}")
    if links and sorted(links) != [(i, i + 1) for i in range(1, nb)]:
        raise FormatError("edges must form the path 1-2-...-N")
    if max((len(b) for b in bags), default=0) != size:
        raise FormatError(f"header announces largest bag {size}, found {max((len(b) for b in bags), default=0)}")
    for b in bags:
        for v in b:
            if not 1 <= v <= n:
                raise FormatError(f"vertex {v} outside 1..{n}")
    p = PathDecomposition(bags)
    if not p.is_contiguous():
        raise DecompositionError("some vertex occurs in non-consecutive bags")
    return p


def emit_decomposition(p: PathDecomposition, n: int | None = None, edges: bool = True) -> str:
    if n is None:
        n = max(p.vertices(), default=0)
    size = max((len(b) for b in p.bags), default=0)
    out = [f"s td {len(p)} {size} {n}"]
    for i, b in enumerate(p.bags, 1):
        out.append(" ".join(["b", str(i)] + [str(v) for v in sorted(b)]))
    if edges:
        out.extend(f"{i} {i + 1}" for i in range(1, len(p)))
    return "\n".join(out) + "\n"
