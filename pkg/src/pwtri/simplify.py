"""Turn a multi-triangulation into a simple triangulation.

Copies of multi-edges are traded one at a time for edges between peripheral
vertices of two cut-components of the same cutting pair.  The decomposition
is repaired by widening a single vertex per added edge; which vertex and over
which bags is fixed by comparing the bag-intervals of child components.

The :class:`TokenLedger` is an audit trail only.  It charges every bag
addition to a token and checks the two-part token invariant after every step.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .pathdecomp import BagInterval, PathDecomposition
from .planar import (
    CuttingPair,
    EmbeddedMultigraph,
    EmbeddingError,
    is_multi_triangulated,
    pair_record,
    replace_multiedge_copy,
)

__all__ = [
    "PeripheralPair",
    "CuttingPairRecord",
    "SimplifyBudget",
    "TokenLedger",
    "SimplifyResult",
    "BagChooser",
    "pick_anchor_edge",
    "count_pairs_per_bag",
    "compute_record",
    "compute_peripheral_pairs",
    "classify_case",
    "resolve_case1",
    "resolve_case2",
    "resolve_case3",
    "redistribute_tokens",
    "verify_invariant1",
    "simplify",
]

log = logging.getLogger(__name__)

Pair = tuple[int, int]


@dataclass
class PeripheralPair:
    component_index: int
    b_left: int
    b_right: int
    bag_left: int
    bag_right: int
    is_child: bool
    interior: frozenset[int]

    @property
    def bag_interval(self) -> BagInterval:
        return BagInterval(self.bag_left, self.bag_right)


@dataclass
class CuttingPairRecord:
    u: int
    v: int
    multiplicity: int
    pair: CuttingPair
    peripheral: list[PeripheralPair] = field(default_factory=list)
    parent_index: int | None = None

    @property
    def key(self) -> Pair:
        return (self.u, self.v)

    def children(self) -> list[PeripheralPair]:
        return [pp for pp in self.peripheral if pp.is_child]

    def component_with(self, w: int) -> int:
        return self.pair.cut.index_of(w)


@dataclass
class SimplifyBudget:
    width_in: int
    c: int

    @property
    def target_width(self) -> int:
        return 2 * self.width_in + 1 + 2 * self.c


class BagChooser:
    """Fixes X(b) for each (cutting pair, peripheral vertex) the first time it is asked.

    The leftmost bag holding ``{u, v, b}`` is taken.  Bags only grow, so a
    remembered choice stays valid.
    """

    def __init__(self) -> None:
        self._cache: dict[tuple[int, int, int], int] = {}

    def bag(self, p: PathDecomposition, u: int, v: int, b: int) -> int:
        key = (u, v, b)
        i = self._cache.get(key)
        if i is not None and {u, v, b} <= p.bags[i]:
            return i
        i = p.first_bag_containing(u, v, b)
        if i is None:
            raise EmbeddingError(f"no bag holds the triangle {{{u},{v},{b}}}")
        self._cache[key] = i
        return i


def pick_anchor_edge(g: EmbeddedMultigraph) -> Pair:
    """Least edge of multiplicity one."""
    for e, c in sorted(g.edge_multiset().items()):
        if c == 1:
            return e
    raise EmbeddingError("every edge is a multi-edge; a multi-triangulation always has a simple edge")


def count_pairs_per_bag(g: EmbeddedMultigraph, p: PathDecomposition) -> list[int]:
    pairs = g.multi_edges()
    return [sum(1 for a, b in pairs if a in bag and b in bag) for bag in p.bags]


def compute_peripheral_pairs(
    g: EmbeddedMultigraph,
    rec: CuttingPairRecord,
    p: PathDecomposition,
    anchor: Pair,
    chooser: BagChooser,
) -> None:
    u, v = rec.u, rec.v
    rec.peripheral = []
    rec.parent_index = None
    cut = rec.pair.cut
    for i, comp in enumerate(cut.components):
        blk = cut.blocks[i][v]
        first, last = g.head(blk[0]), g.head(blk[-1])
        x_first = chooser.bag(p, u, v, first)
        x_last = chooser.bag(p, u, v, last)
        if x_first <= x_last:
            left, right, bl, br = first, last, x_first, x_last
        else:
            left, right, bl, br = last, first, x_last, x_first
        is_child = not (anchor[0] in comp or anchor[1] in comp)
        if not is_child:
            rec.parent_index = i
        rec.peripheral.append(PeripheralPair(i, left, right, bl, br, is_child, comp))
    if rec.parent_index is None:
        raise EmbeddingError(f"anchor edge {anchor} lies in no cut-component of {rec.key}")


def compute_record(g, p, u, v, anchor, chooser) -> CuttingPairRecord:
    pr = pair_record(g, u, v)
    rec = CuttingPairRecord(pr.u, pr.v, pr.multiplicity, pr)
    compute_peripheral_pairs(g, rec, p, anchor, chooser)
    return rec


def classify_case(rec: CuttingPairRecord) -> tuple:
    """``("case2", i, j)``, ``("case1", i, j)`` or ``("case3",)``; nesting is tested first."""
    kids = rec.children()
    for a in kids:
        for b in kids:
            if a is b:
                continue
            if a.bag_left <= b.bag_left <= b.bag_right <= a.bag_right:
                return ("case2", a.component_index, b.component_index)
    for a in kids:
        for b in kids:
            if a is b:
                continue
            if a.bag_left < b.bag_left < a.bag_right < b.bag_right:
                return ("case1", a.component_index, b.component_index)
    return ("case3",)


# -- token ledger ----------------------------------------------------------------

CppKey = tuple[Pair, frozenset]
Token = tuple[int, int]  # (bag index, vertex) of a vertex-token


class TokenLedger:
    """Per-bag token accounting against the decomposition handed to ``simplify``.

    Vertex-tokens keep their identity ``(bag, vertex)`` so that tokens of a
    dissolved child-peripheral-pair can be handed to another one later.
    Cutting-pair tokens are plain counts, two per bag holding the pair.
    """

    def __init__(self, p: PathDecomposition, pairs: list[Pair], anchor: Pair, chooser: BagChooser):
        self.initial = p.snapshot()
        self.anchor = anchor
        self.chooser = chooser
        n = len(self.initial)
        self.owner: dict[Token, CppKey | None] = {(i, w): None for i, b in enumerate(self.initial) for w in b}
        self.spent: set[Token] = set()
        self.pair_tokens: list[dict[Pair, int]] = [
            {pr: 2 for pr in pairs if pr[0] in b and pr[1] in b} for b in self.initial
        ]
        self.budget = [len(self.initial[i]) + 2 * len(self.pair_tokens[i]) for i in range(n)]
        self.claimed_ends: dict[CppKey, tuple[int, int]] = {}
        self.used = [0] * n
        self.deficits: list[str] = []
        self.warnings: list[str] = []
        self.audits: list[tuple[str, bool, str]] = []

    def tokens_of(self, key: CppKey, bag: int) -> list[Token]:
        return [t for t in self._bag_tokens(bag) if self.owner[t] == key and t not in self.spent]

    def _bag_tokens(self, bag: int) -> list[Token]:
        return [(bag, w) for w in sorted(self.initial[bag])]

    def claim(self, key: CppKey, path: list[int]) -> None:
        for w in path:
            for i, bag in enumerate(self.initial):
                if w not in bag or (i, w) in self.spent:
                    continue
                cur = self.owner[(i, w)]
                if cur is None:
                    self.owner[(i, w)] = key
                elif cur != key:
                    self.warnings.append(f"vertex-token {(i, w)} wanted by {key[0]} but held by {cur[0]}")

    def charge_cpp(self, keys: list[CppKey], bags: list[int]) -> None:
        for i in bags:
            self.used[i] += 1
            for key in keys:
                toks = self.tokens_of(key, i)
                if toks:
                    self.spent.add(toks[0])
                    break
            else:
                self.deficits.append(f"bag {i}: no peripheral-pair token among {[k[0] for k in keys]}")

    def charge_pair(self, pr: Pair, bags: list[int]) -> None:
        for i in bags:
            self.used[i] += 1
            have = self.pair_tokens[i].get(pr, 0)
            if have > 0:
                self.pair_tokens[i][pr] = have - 1
            else:
                self.deficits.append(f"bag {i}: no token of cutting pair {pr} left")

    def merge(self, a: CppKey, b: CppKey, new: CppKey) -> None:
        for t, k in self.owner.items():
            if k == a or k == b:
                self.owner[t] = new
        self.claimed_ends.pop(a, None)
        self.claimed_ends.pop(b, None)

    def release(self, keep: set[CppKey]) -> None:
        """Free the unspent tokens of every child-peripheral-pair not in ``keep``."""
        for t, k in self.owner.items():
            if k is not None and k not in keep:
                self.owner[t] = None
        for k in [k for k in self.claimed_ends if k not in keep]:
            del self.claimed_ends[k]

    def growth_ok(self, p: PathDecomposition) -> bool:
        return all(len(p.bags[i]) - len(self.initial[i]) <= self.budget[i] for i in range(len(self.initial)))


def _link_path(g: EmbeddedMultigraph, rec: CuttingPairRecord, i: int) -> list[int]:
    """Walk the neighbours of v inside component i, erasing loops."""
    heads = [g.head(d) for d in rec.pair.cut.blocks[i][rec.v]]
    path: list[int] = []
    where: dict[int, int] = {}
    for w in heads:
        if w in where:
            cut_at = where[w]
            for x in path[cut_at + 1:]:
                del where[x]
            del path[cut_at + 1:]
        else:
            where[w] = len(path)
            path.append(w)
    pp = rec.peripheral[i]
    if {path[0], path[-1]} != {pp.b_left, pp.b_right}:
        raise EmbeddingError("link path does not join the peripheral pair")
    return path


def _live_records(ledger: TokenLedger, g: EmbeddedMultigraph, p: PathDecomposition) -> list[CuttingPairRecord]:
    return [compute_record(g, p, u, v, ledger.anchor, ledger.chooser) for u, v in g.multi_edges()]


def redistribute_tokens(ledger: TokenLedger, g: EmbeddedMultigraph, p: PathDecomposition) -> dict[CppKey, list[int]]:
    """Hand vertex-tokens along one path per child-peripheral-pair to that pair.

    The path is the loop-erased walk through the neighbours of ``v`` inside
    the component, which avoids ``u`` and ``v``.  Only pairs that are new or
    whose ends moved since the last call claim tokens; tokens of pairs that no
    longer exist are released first.  Tokens already held by another live pair
    are left alone and reported in ``ledger.warnings``.  A bag of a pair's
    bag-interval that is still empty-handed afterwards takes a free token of
    some interior vertex of the component, if one exists.
    """
    records = _live_records(ledger, g, p)
    live = {(rec.key, pp.interior): (rec, pp) for rec in records for pp in rec.children()}
    ledger.release(set(live))
    paths: dict[CppKey, list[int]] = {}
    for key, (rec, pp) in live.items():
        ends = (pp.b_left, pp.b_right)
        if ledger.claimed_ends.get(key) == ends:
            continue
        path = _link_path(g, rec, pp.component_index)
        ledger.claim(key, path)
        ledger.claimed_ends[key] = ends
        paths[key] = path
    # widened vertices carry no tokens, so a path may leave holes; fill them
    # from free tokens of interior vertices of the same component
    for key, (rec, pp) in live.items():
        for i in pp.bag_interval.indices():
            if ledger.tokens_of(key, i):
                continue
            for t in ledger._bag_tokens(i):
                if t[1] in pp.interior and ledger.owner[t] is None and t not in ledger.spent:
                    ledger.owner[t] = key
                    break
    return paths


def verify_invariant1(ledger: TokenLedger, g: EmbeddedMultigraph, p: PathDecomposition) -> tuple[bool, str]:
    """Check both clauses of the token invariant on the current graph and bags."""
    for rec in _live_records(ledger, g, p):
        u, v = rec.key
        for i in p.bags_containing(u, v):
            if ledger.pair_tokens[i].get((u, v), 0) < 2:
                return False, f"bag {i} holds fewer than two tokens of cutting pair {(u, v)}"
        for pp in rec.children():
            key = (rec.key, pp.interior)
            for i in pp.bag_interval.indices():
                if not ledger.tokens_of(key, i):
                    return False, (
                        f"bag {i} in the bag-interval of ({pp.b_left},{pp.b_right}) "
                        f"at cutting pair {rec.key} holds no token of that pair"
                    )
    return True, ""


# -- the three cases ---------------------------------------------------------------


@dataclass
class _State:
    g: EmbeddedMultigraph
    p: PathDecomposition
    anchor: Pair
    chooser: BagChooser
    ledger: TokenLedger | None = None
    steps: list[tuple] = field(default_factory=list)

    def record(self, u: int, v: int) -> CuttingPairRecord:
        return compute_record(self.g, self.p, u, v, self.anchor, self.chooser)


def _replace(st: _State, rec: CuttingPairRecord, bi: int, bj: int) -> None:
    i, j = rec.component_with(bi), rec.component_with(bj)
    replace_multiedge_copy(st.g, rec.pair, i, bi, j, bj)


def _span(a: int, b: int) -> list[int]:
    """Bags strictly after ``a`` up to ``b``, or from ``b`` up to strictly before ``a``."""
    if b >= a:
        return list(range(a + 1, b + 1))
    return list(range(b, a))


def resolve_case1(st: _State, rec: CuttingPairRecord, i: int, j: int) -> None:
    pi, pj = rec.peripheral[i], rec.peripheral[j]
    _replace(st, rec, pi.b_right, pj.b_left)
    changed = st.p.widen(pj.b_left, _span(pj.bag_left, pi.bag_right))
    if st.ledger is not None:
        ki, kj = (rec.key, pi.interior), (rec.key, pj.interior)
        st.ledger.charge_cpp([ki, kj], changed)
        st.ledger.merge(ki, kj, (rec.key, pi.interior | pj.interior))
    st.steps.append(("case1", rec.key, (pj.b_left, pi.b_right)))


def resolve_case2(st: _State, rec: CuttingPairRecord, i: int, j: int) -> None:
    pi, pj = rec.peripheral[i], rec.peripheral[j]
    _replace(st, rec, pi.b_left, pj.b_left)
    changed = st.p.widen(pi.b_left, _span(pi.bag_left, pj.bag_left))
    if st.ledger is not None:
        ki, kj = (rec.key, pi.interior), (rec.key, pj.interior)
        st.ledger.charge_cpp([ki], changed)
        st.ledger.merge(ki, kj, (rec.key, pi.interior | pj.interior))
    st.steps.append(("case2", rec.key, (pi.b_left, pj.b_left)))


def resolve_case3(st: _State, rec: CuttingPairRecord) -> None:
    kids = sorted(rec.children(), key=lambda pp: (pp.bag_left, pp.bag_right, pp.component_index))
    parent = rec.peripheral[rec.parent_index]
    u, v = rec.key
    for a, b in zip(kids, kids[1:]):
        cur = st.record(u, v)
        _replace(st, cur, a.b_right, b.b_left)
        changed = st.p.widen(a.b_right, _span(a.bag_right, b.bag_left))
        if st.ledger is not None:
            st.ledger.charge_pair(rec.key, changed)
        st.steps.append(("case3-chain", rec.key, (a.b_right, b.b_left)))
    first = kids[0]
    b0, x0 = parent.b_right, parent.bag_right
    cur = st.record(u, v)
    _replace(st, cur, b0, first.b_left)
    changed = st.p.widen(first.b_left, _span(first.bag_left, x0))
    if st.ledger is not None:
        st.ledger.charge_pair(rec.key, changed)
    st.steps.append(("case3-close", rec.key, (first.b_left, b0)))
    if st.g.multiplicity(u, v) != 1:
        raise EmbeddingError(f"({u},{v}) still has multiplicity {st.g.multiplicity(u, v)} after case 3")


# -- driver ------------------------------------------------------------------------


@dataclass
class SimplifyResult:
    budget: SimplifyBudget
    width_out: int
    steps: list[tuple]
    ledger: TokenLedger | None = None
    invariant_ok: bool = True
    growth_ok: bool = True
    diagnostics: list[str] = field(default_factory=list)

    @property
    def within_budget(self) -> bool:
        return self.width_out <= self.budget.target_width


def simplify(
    g: EmbeddedMultigraph,
    p: PathDecomposition,
    debug_tokens: bool = False,
    check: bool = True,
    order: str = "innermost",
) -> SimplifyResult:
    """Replace multi-edge copies until ``g`` is simple; widen ``p`` as needed."""
    if not is_multi_triangulated(g):
        raise ValueError("simplify needs a multi-triangulated graph")
    if check and not p.validate(g):
        raise ValueError("decomposition is not valid for the graph")
    counts = count_pairs_per_bag(g, p)
    budget = SimplifyBudget(p.width, max(counts, default=0))
    anchor = pick_anchor_edge(g)
    chooser = BagChooser()
    st = _State(g, p, anchor, chooser)
    result = SimplifyResult(budget, p.width, st.steps)

    if debug_tokens:
        st.ledger = TokenLedger(p, g.multi_edges(), anchor, chooser)
        redistribute_tokens(st.ledger, g, p)
        ok, why = verify_invariant1(st.ledger, g, p)
        st.ledger.audits.append(("init", ok, why))
        result.ledger = st.ledger

    guard = sum(c - 1 for c in g.edge_multiset().values())
    while True:
        multi = g.multi_edges()
        if not multi:
            break
        if order == "innermost":
            recs = [st.record(a, b) for a, b in multi]
            rec = min(recs, key=lambda r: (sum(len(pp.interior) for pp in r.children()), r.key))
            u, v = rec.key
        else:
            u, v = multi[0]
            rec = st.record(u, v)
        case = classify_case(rec)
        if case[0] == "case1":
            resolve_case1(st, rec, case[1], case[2])
        elif case[0] == "case2":
            resolve_case2(st, rec, case[1], case[2])
        else:
            resolve_case3(st, rec)
        excess = sum(c - 1 for c in g.edge_multiset().values())
        if excess >= guard:
            raise EmbeddingError("total multiplicity did not drop")
        guard = excess
        if check:
            if not is_multi_triangulated(g):
                raise EmbeddingError(f"{case[0]} at {(u, v)} broke the multi-triangulation")
            if not p.validate(g):
                raise EmbeddingError(f"{case[0]} at {(u, v)} left an invalid decomposition")
        if st.ledger is not None:
            redistribute_tokens(st.ledger, g, p)
            ok, why = verify_invariant1(st.ledger, g, p)
            st.ledger.audits.append((case[0], ok, why))

    if check:
        g.validate()
    result.width_out = p.width
    if st.ledger is not None:
        result.invariant_ok = all(ok for _, ok, _ in st.ledger.audits) and not st.ledger.deficits
        result.growth_ok = st.ledger.growth_ok(p)
        result.diagnostics = [why for _, ok, why in st.ledger.audits if not ok] + st.ledger.deficits
        for w in st.ledger.warnings:
            log.warning("token path overlap: %s", w)
    return result
