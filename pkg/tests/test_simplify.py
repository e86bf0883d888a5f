import pytest

from conftest import figure_one_graph, multi_tri
from pwtri.generators import generate, named
from pwtri.multitri import multi_triangulate
from pwtri.oracle import exact_pathwidth, structural_cut_pairs
from pwtri.pathdecomp import PathDecomposition
from pwtri.planar import EmbeddedMultigraph, is_multi_triangulated, pair_record
from pwtri.simplify import (
    BagChooser,
    TokenLedger,
    _State,
    classify_case,
    compute_record,
    count_pairs_per_bag,
    pick_anchor_edge,
    redistribute_tokens,
    resolve_case1,
    resolve_case2,
    resolve_case3,
    simplify,
    verify_invariant1,
)

# Figure-one graph: pair (1,2), components {3,4} (parent, holds anchor (1,3)),
# {5,6}, {7,8}, {9,10}.  These decompositions arrange the child bag-intervals.
INTERLEAVED = [{1, 2, 3, 4}, {1, 2, 5}, {1, 2, 5, 7}, {1, 2, 5, 6, 7}, {1, 2, 7, 8}, {1, 2, 9, 10}]
NESTED = [{1, 2, 3, 4}, {1, 2, 5}, {1, 2, 5, 7, 8}, {1, 2, 5, 6}, {1, 2, 9, 10}]


def _setup(bags):
    g, _ = figure_one_graph()
    p = PathDecomposition(bags)
    assert p.validate(g)
    anchor = pick_anchor_edge(g)
    st = _State(g, p, anchor, BagChooser())
    return st, st.record(1, 2)


def test_anchor_edge():
    assert pick_anchor_edge(named("OCT")) == min(named("OCT").simple_edges())
    g, _ = multi_tri("DBL_SQ")
    a = pick_anchor_edge(g)
    assert g.multiplicity(*a) == 1 and a == (1, 4)
    g, _ = figure_one_graph()
    assert pick_anchor_edge(g) == (1, 3)


def test_peripheral_pairs_double_square():
    g, p = multi_tri("DBL_SQ")
    rec = compute_record(g, p, 1, 2, pick_anchor_edge(g), BagChooser())
    assert rec.multiplicity == 2 == len(rec.peripheral)
    for pp in rec.peripheral:
        assert pp.bag_left <= pp.bag_right
        for b, x in ((pp.b_left, pp.bag_left), (pp.b_right, pp.bag_right)):
            assert g.has_edge(1, b) and g.has_edge(2, b)
            assert {1, 2, b} <= p.bags[x]
    assert sum(1 for pp in rec.peripheral if not pp.is_child) == 1


def test_single_vertex_component_has_degenerate_pair():
    g, p = multi_tri("DBL_SQ")
    rec = compute_record(g, p, 2, 4, pick_anchor_edge(g), BagChooser())
    single = [pp for pp in rec.peripheral if len(pp.interior) == 1]
    assert single and all(pp.b_left == pp.b_right for pp in single)


def test_classify_nested_first():
    _, rec = _setup(NESTED)
    assert classify_case(rec) == ("case2", 1, 2)


def test_classify_interleaved():
    _, rec = _setup(INTERLEAVED)
    assert classify_case(rec) == ("case1", 1, 2)


def test_classify_disjoint():
    g, p = figure_one_graph()
    rec = compute_record(g, p, 1, 2, pick_anchor_edge(g), BagChooser())
    assert classify_case(rec) == ("case3",)


def test_classify_identical_intervals_is_case2():
    st, rec = _setup(INTERLEAVED)
    a, b = rec.peripheral[1], rec.peripheral[2]
    b.bag_left, b.bag_right = a.bag_left, a.bag_right
    assert classify_case(rec)[0] == "case2"


@pytest.mark.parametrize("bags,resolver", [(INTERLEAVED, resolve_case1), (NESTED, resolve_case2)])
def test_resolve_case1_and_case2(bags, resolver):
    st, rec = _setup(bags)
    before = st.p.snapshot()
    _, i, j = classify_case(rec)
    resolver(st, rec, i, j)
    assert st.g.multiplicity(1, 2) == 3
    assert len(pair_record(st.g, 1, 2).cut.components) == 3
    assert is_multi_triangulated(st.g)
    assert st.p.validate(st.g)
    for old, new in zip(before, st.p.bags):
        assert old <= new and len(new - old) <= 1


def test_resolve_case3_single_child():
    g, p = multi_tri("DBL_SQ")
    st = _State(g, p, pick_anchor_edge(g), BagChooser())
    rec = st.record(1, 2)
    assert len(rec.children()) == 1 and classify_case(rec) == ("case3",)
    resolve_case3(st, rec)
    assert g.multiplicity(1, 2) == 1
    assert [s[0] for s in st.steps] == ["case3-close"]


def test_resolve_case3_chain():
    g, p = figure_one_graph()
    st = _State(g, p, pick_anchor_edge(g), BagChooser())
    before = p.snapshot()
    resolve_case3(st, st.record(1, 2))
    assert g.multiplicity(1, 2) == 1
    assert [s[0] for s in st.steps] == ["case3-chain", "case3-chain", "case3-close"]
    assert p.validate(g)
    for old, new in zip(before, p.bags):
        assert len(new - old) <= 2


def test_simplify_noop_on_simple():
    g = named("OCT")
    p = exact_pathwidth(g).witness
    snap = p.snapshot()
    res = simplify(g, p)
    assert res.steps == [] and p.snapshot() == snap


def test_simplify_square_gives_k4(c4_decomp):
    g = named("C4")
    multi_triangulate(g, c4_decomp)
    res = simplify(g, c4_decomp, debug_tokens=True)
    assert sorted(g.simple_edges()) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert g.is_simple()
    assert res.budget.target_width == 7
    assert c4_decomp.width <= 7
    assert exact_pathwidth(g).width == 3
    assert res.invariant_ok and res.growth_ok


def test_simplify_double_square():
    g, p = multi_tri("DBL_SQ")
    res = simplify(g, p)
    assert g.is_simple() and is_multi_triangulated(g)
    assert p.width <= 2 * 2 + 1 + 2 * res.budget.c
    assert exact_pathwidth(g).width == 3


def test_simplify_rejects_bad_input():
    with pytest.raises(ValueError):
        simplify(named("C4"), PathDecomposition([{1, 2, 4}, {2, 3, 4}]))
    g, p = multi_tri("DBL_SQ")
    with pytest.raises(ValueError):
        simplify(g, PathDecomposition([{1, 2}]))


@pytest.mark.parametrize("seed", range(25))
def test_simplify_properties(seed):
    g = generate("random-planar-2conn", 5 + seed % 9, seed)
    p = exact_pathwidth(g).witness
    multi_triangulate(g, p)
    before = p.snapshot()
    edges = g.edge_multiset()
    res = simplify(g, p, debug_tokens=True)
    assert g.is_simple() and is_multi_triangulated(g)
    assert p.validate(g)
    assert p.width <= res.budget.target_width
    assert all(a <= b for a, b in zip(before, p.bags))
    assert all(g.has_edge(*e) for e in edges)
    assert res.invariant_ok, res.diagnostics
    assert res.growth_ok
    if g.num_vertices() <= 10:
        assert structural_cut_pairs(g) == []


@pytest.mark.parametrize("seed", range(15))
def test_universal_vertex_instances_have_small_c(seed):
    g = generate("random-outerplanar", 4 + seed % 8, seed)
    n = g.num_vertices()
    z = n + 1
    h = EmbeddedMultigraph.from_edges(g.simple_edges() + [(z, v) for v in g.vertices])
    p = exact_pathwidth(g).witness
    p.add_everywhere(z)
    w0 = p.width
    multi_triangulate(h, p)
    c = max(count_pairs_per_bag(h, p))
    assert c <= w0
    res = simplify(h, p)
    assert p.width <= 2 * w0 + 1 + 2 * c
    assert res.budget.c == c


@pytest.mark.parametrize("order", ["ascending", "innermost"])
def test_both_orders_meet_the_width_bound(order):
    for seed in range(15):
        g = generate("random-planar-2conn", 10, seed)
        p = exact_pathwidth(g).witness
        multi_triangulate(g, p)
        res = simplify(g, p, order=order)
        assert res.within_budget and g.is_simple()


def test_fresh_ledger_passes_and_corruption_is_caught():
    g, p = figure_one_graph()
    anchor = pick_anchor_edge(g)
    ledger = TokenLedger(p, g.multi_edges(), anchor, BagChooser())
    redistribute_tokens(ledger, g, p)
    assert verify_invariant1(ledger, g, p) == (True, "")
    ledger.pair_tokens[0][(1, 2)] = 1
    ok, why = verify_invariant1(ledger, g, p)
    assert not ok and "cutting pair" in why


def test_starved_child_pair_is_reported():
    st, _ = _setup(INTERLEAVED)
    g, p = st.g, st.p
    ledger = TokenLedger(p, g.multi_edges(), pick_anchor_edge(g), BagChooser())
    redistribute_tokens(ledger, g, p)
    for t in ledger.owner:
        ledger.owner[t] = None
    ok, why = verify_invariant1(ledger, g, p)
    assert not ok and "bag-interval" in why


def test_token_paths_double_square():
    g, p = multi_tri("DBL_SQ")
    ledger = TokenLedger(p, g.multi_edges(), pick_anchor_edge(g), BagChooser())
    paths = redistribute_tokens(ledger, g, p)
    for (pair, interior), path in paths.items():
        assert set(path) <= interior
        assert not set(path) & set(pair)
    assert ledger.warnings == []


def test_case1_ledger_stays_valid():
    st, rec = _setup(INTERLEAVED)
    st.ledger = TokenLedger(st.p, st.g.multi_edges(), st.anchor, st.chooser)
    redistribute_tokens(st.ledger, st.g, st.p)
    assert verify_invariant1(st.ledger, st.g, st.p)[0]
    _, i, j = classify_case(rec)
    resolve_case1(st, rec, i, j)
    redistribute_tokens(st.ledger, st.g, st.p)
    assert verify_invariant1(st.ledger, st.g, st.p)[0]
    assert not st.ledger.deficits
