"""Path decompositions with per-vertex bag intervals."""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "DecompositionError",
    "BagInterval",
    "PathDecomposition",
    "find_chord_in_face",
    "concatenate",
]


class DecompositionError(ValueError):
    pass


class BagInterval(NamedTuple):
    """Left-open range of bag indices ``(lo, hi]``; empty when ``lo >= hi``."""

    lo: int
    hi: int

    def indices(self) -> range:
        return range(self.lo + 1, self.hi + 1)

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and self.lo < i <= self.hi


class PathDecomposition:
    """Ordered bags ``X_0 .. X_{N-1}`` (0-based)."""

    def __init__(self, bags: Iterable[Iterable[int]]):
        self.bags: list[set[int]] = [set(b) for b in bags]

    def __len__(self) -> int:
        return len(self.bags)

    def __repr__(self) -> str:
        inner = ", ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.bags)
        return f"PathDecomposition([{inner}])"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PathDecomposition) and self.bags == other.bags

    def copy(self) -> "PathDecomposition":
        return PathDecomposition(self.bags)

    def snapshot(self) -> list[frozenset[int]]:
        return [frozenset(b) for b in self.bags]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def vertices(self) -> set[int]:
        out: set[int] = set()
        for b in self.bags:
            out |= b
        return out

    def intervals(self) -> dict[int, tuple[int, int]]:
        """First and last bag index of every vertex (no contiguity check)."""
        iv: dict[int, tuple[int, int]] = {}
        for i, b in enumerate(self.bags):
            for v in b:
                lo, _ = iv.get(v, (i, i))
                iv[v] = (lo, i)
        return iv

    def interval(self, v: int) -> tuple[int, int]:
        idx = [i for i, b in enumerate(self.bags) if v in b]
        if not idx:
            raise KeyError(v)
        return idx[0], idx[-1]

    def is_contiguous(self) -> bool:
        for v, (lo, hi) in self.intervals().items():
            if any(v not in self.bags[i] for i in range(lo, hi + 1)):
                return False
        return True

    def bags_containing(self, *vs: int) -> list[int]:
        return [i for i, b in enumerate(self.bags) if all(v in b for v in vs)]

    def first_bag_containing(self, *vs: int) -> int | None:
        for i, b in enumerate(self.bags):
            if all(v in b for v in vs):
                return i
        return None

    def validate(self, g) -> bool:
        """True iff this is a path decomposition of the underlying simple graph of ``g``.

        ``g`` may be an :class:`~pwtri.planar.EmbeddedMultigraph` or any
        networkx graph.
        """
        if hasattr(g, "simple_edges"):
            verts, edges = set(g.vertices), g.simple_edges()
        else:
            verts, edges = set(g.nodes), list(g.edges())
        present = self.vertices()
        if not verts <= present or not present <= verts:
            return False
        if not self.is_contiguous():
            return False
        iv = self.intervals()
        for a, b in edges:
            lo = max(iv[a][0], iv[b][0])
            hi = min(iv[a][1], iv[b][1])
            if lo > hi:
                return False
        return True

    # -- edits ----------------------------------------------------------------

    def widen(self, v: int, rng: BagInterval | Sequence[int]) -> list[int]:
        """Add ``v`` to every bag of ``rng``; return the bag indices that changed."""
        idx = rng.indices() if isinstance(rng, BagInterval) else list(rng)
        idx = [i for i in idx]
        if not idx:
            return []
        if min(idx) < 0 or max(idx) >= len(self.bags):
            raise DecompositionError("bag index out of range")
        try:
            lo, hi = self.interval(v)
        except KeyError:
            lo = hi = None
        new_lo = min(idx) if lo is None else min(lo, min(idx))
        new_hi = max(idx) if hi is None else max(hi, max(idx))
        covered = set(idx) | (set(range(lo, hi + 1)) if lo is not None else set())
        if covered != set(range(new_lo, new_hi + 1)):
            raise DecompositionError(f"widening {v} would make its bag interval non-contiguous")
        changed = []
        for i in sorted(set(idx)):
            if v not in self.bags[i]:
                self.bags[i].add(v)
                changed.append(i)
        return changed

    def add_alongside(self, z: int, v: int) -> None:
        """Put ``z`` into every bag that contains ``v``."""
        for b in self.bags:
            if v in b:
                b.add(z)

    def add_everywhere(self, z: int) -> None:
        for b in self.bags:
            b.add(z)

    def remove_vertex(self, z: int) -> None:
        for b in self.bags:
            b.discard(z)

    def rename(self, z: int, y: int) -> None:
        """Replace ``z`` by ``y`` (edge contraction); the union must stay contiguous."""
        for b in self.bags:
            if z in b:
                b.discard(z)
                b.add(y)
        lo, hi = self.interval(y)
        if any(y not in self.bags[i] for i in range(lo, hi + 1)):
            raise DecompositionError(f"renaming {z} to {y} broke contiguity")


def find_chord_in_face(p: PathDecomposition, face_vertices: Sequence[int]) -> tuple[int, int]:
    """Least pair of non-consecutive face vertices that share a bag."""
    cyc = list(face_vertices)
    k = len(cyc)
    if k < 4 or len(set(cyc)) != k:
        raise DecompositionError("face must be a simple cycle with at least 4 vertices")
    pos = {v: i for i, v in enumerate(cyc)}
    iv = p.intervals()
    best = None
    for a in cyc:
        for b in cyc:
            if a >= b:
                continue
            if (pos[a] - pos[b]) % k in (1, k - 1):
                continue
            if a not in iv or b not in iv:
                continue
            if max(iv[a][0], iv[b][0]) <= min(iv[a][1], iv[b][1]):
                if best is None or (a, b) < best:
                    best = (a, b)
    if best is None:
        raise DecompositionError("no chord shares a bag; decomposition invalid or face not simple")
    return best


def concatenate(ps: Sequence[PathDecomposition], links: Sequence[tuple[int, int]]) -> PathDecomposition:
    """Chain decompositions; link ``(v_i, u_{i+1})`` gets its own bag between them."""
    if len(links) != max(len(ps) - 1, 0):
        raise DecompositionError("need one link per consecutive pair of decompositions")
    bags: list[set[int]] = []
    for i, p in enumerate(ps):
        if i > 0:
            a, b = links[i - 1]
            if a not in ps[i - 1].bags[-1]:
                raise DecompositionError(f"{a} is not in the last bag of decomposition {i - 1}")
            if b not in p.bags[0]:
                raise DecompositionError(f"{b} is not in the first bag of decomposition {i}")
            bags.append({a, b})
        bags.extend(set(x) for x in p.bags)
    return PathDecomposition(bags)
