import itertools

import networkx as nx
import pytest

from conftest import figure_one_graph, multi_tri, nx_face_count
from pwtri.generators import generate, named
from pwtri.oracle import structural_cut_pairs
from pwtri.planar import (
    EmbeddedMultigraph,
    EmbeddingError,
    NotApplicableError,
    contract_edge,
    cut_components,
    cut_vertices,
    cutting_pairs,
    face_of,
    is_multi_triangulated,
    pair_record,
    replace_multiedge_copy,
    reverse_component,
    swap_components,
    trace_faces,
)


def test_trace_faces_triangle():
    faces = trace_faces(named("K3"))
    assert sorted(len(f) for f in faces) == [3, 3]


def test_trace_faces_square():
    assert sorted(len(f) for f in trace_faces(named("C4"))) == [4, 4]


def test_trace_faces_octahedron_matches_networkx():
    g = named("OCT")
    faces = trace_faces(g)
    assert len(faces) == nx_face_count(g) == 8
    assert all(len(f) == 3 for f in faces)


def test_every_dart_on_exactly_one_face():
    g = generate("random-planar", 12, 7)
    darts = [d for f in trace_faces(g) for d in f.darts]
    assert sorted(darts) == sorted(g.darts())


@pytest.mark.parametrize("seed", range(10))
def test_face_count_matches_networkx(seed):
    g = generate("random-planar-2conn", 10, seed)
    assert len(trace_faces(g)) == nx_face_count(g)
    assert g.num_vertices() - g.num_edges() + len(trace_faces(g)) == 2


def test_is_multi_triangulated_basic():
    assert is_multi_triangulated(named("OCT"))
    assert not is_multi_triangulated(named("C4"))


def test_square_with_doubled_diagonal_is_multi_triangulated():
    # diagonal (1,3) once inside the square and once outside
    rot = {1: [2, 3, 4, 3], 2: [1, 3], 3: [2, 1, 4, 1], 4: [3, 1]}
    g = EmbeddedMultigraph.from_rotation(rot)
    assert g.is_planar_embedding()
    assert g.multiplicity(1, 3) == 2
    assert sorted(len(f) for f in trace_faces(g)) == [3, 3, 3, 3]
    assert is_multi_triangulated(g)


def test_triangulation_predicate_needs_three_vertices():
    with pytest.raises(NotApplicableError):
        is_multi_triangulated(named("P4").__class__.from_edges([(1, 2)]))


def test_cut_vertices():
    assert cut_vertices(named("TWO_TRI")) == [3]
    assert cut_vertices(named("OCT")) == []
    assert cut_vertices(named("P4")) == [2, 3]
    with pytest.raises(ValueError):
        cut_vertices(EmbeddedMultigraph.from_edges([(1, 2), (3, 4)]))


def test_cutting_pairs_simple_triangulations():
    assert cutting_pairs(named("OCT")) == []
    assert cutting_pairs(named("K4")) == []


def test_cutting_pairs_of_double_square():
    g, _ = multi_tri("DBL_SQ")
    pairs = cutting_pairs(g)
    assert {(c.u, c.v) for c in pairs} == set(g.multi_edges())
    assert (1, 2) in g.multi_edges()
    for c in pairs:
        assert len(c.cut.components) == c.multiplicity == g.multiplicity(c.u, c.v)
    # the structural definition sees the same pairs
    assert set(structural_cut_pairs(g)) == set(g.multi_edges())


def test_cut_components_counts():
    assert len(cut_components(named("TWO_TRI"), [3]).components) == 2
    oct_ = named("OCT")
    for a, b in oct_.simple_edges():
        assert len(cut_components(oct_, [a, b]).components) == 1


def test_cut_component_blocks_flanked_by_copies():
    g, _ = multi_tri("DBL_SQ")
    rec = pair_record(g, 1, 2)
    assert rec.multiplicity == 2
    ring = g.darts_at(2)
    for i in range(2):
        blk = rec.cut.blocks[i][2]
        k0 = ring.index(blk[0])
        k1 = ring.index(blk[-1])
        assert g.head(ring[(k0 - 1) % len(ring)]) == 1
        assert g.head(ring[(k1 + 1) % len(ring)]) == 1


def _abstract(g):
    return sorted(g.vertices), g.edge_multiset()


def test_reverse_twice_is_identity():
    g, _ = figure_one_graph()
    before = g.rotation_system()
    rec = pair_record(g, 1, 2)
    rec = reverse_component(g, rec, 1)
    assert g.rotation_system() != before
    reverse_component(g, rec, 1)
    assert g.rotation_system() == before


def test_swap_with_itself_is_identity():
    g, _ = figure_one_graph()
    before = g.rotation_system()
    swap_components(g, pair_record(g, 1, 2), 2, 2)
    assert g.rotation_system() == before


def test_swap_and_reverse_preserve_abstract_graph():
    g, _ = figure_one_graph()
    ab = _abstract(g)
    rec = pair_record(g, 1, 2)
    for i, j in itertools.combinations(range(4), 2):
        rec = swap_components(g, rec, i, j)
        rec = reverse_component(g, rec, j)
        assert _abstract(g) == ab
        assert is_multi_triangulated(g)
        g.validate()


def test_figure_one_swap_then_reverse():
    g, _ = figure_one_graph()
    rec = pair_record(g, 1, 2)
    assert rec.multiplicity == 4 and len(rec.cut.components) == 4
    # every component sits in triangles with both ends of the pair
    for comp in rec.cut.components:
        for w in comp:
            assert g.has_edge(1, w) and g.has_edge(2, w)
    b1_right = g.head(rec.cut.blocks[0][2][-1])
    b3_right = g.head(rec.cut.blocks[2][2][-1])
    rec = swap_components(g, rec, 1, 2)
    rec = reverse_component(g, rec, 2)
    assert rec.order[:2] == [0, 2]
    # one copy of (1,2) now separates a face through b1^r from a face through b3^r
    found = False
    for d in g.darts_between(2, 1):
        thirds = {next(x for x in face_of(g, dd).vertices if x not in (1, 2)) for dd in (d, d ^ 1)}
        if thirds == {b1_right, b3_right}:
            found = True
    assert found


def test_replace_copy_on_double_square():
    g, _ = multi_tri("DBL_SQ")
    rec = pair_record(g, 1, 2)
    ends = [(g.head(b[2][0]), g.head(b[2][-1])) for b in rec.cut.blocks]
    faces_before = len(trace_faces(g))
    total = sum(g.edge_multiset().values())
    m = g.multiplicity(1, 2)
    replace_multiedge_copy(g, rec, 0, ends[0][1], 1, ends[1][0])
    assert g.multiplicity(1, 2) == m - 1
    assert g.has_edge(ends[0][1], ends[1][0])
    assert is_multi_triangulated(g)
    assert len(trace_faces(g)) == faces_before
    assert sum(g.edge_multiset().values()) == total


def test_replace_copy_rejects_existing_edge():
    g, _ = figure_one_graph()
    rec = pair_record(g, 1, 2)
    with pytest.raises(ValueError):
        replace_multiedge_copy(g, rec, 0, 3, 0, 4)
    g.add_edge(4, 5)
    with pytest.raises(EmbeddingError):
        replace_multiedge_copy(g, rec, 0, 4, 1, 5)


def test_contract_k4_gives_triangle():
    g = named("K4")
    contract_edge(g, 4, 1)
    assert sorted(g.vertices) == [1, 2, 3]
    assert g.is_simple() and g.num_edges() == 3
    assert is_multi_triangulated(g)


def test_contract_in_fan_triangulation():
    from pwtri.augment import triangulate_2conn
    from pwtri.oracle import exact_pathwidth

    g = named("FAN5")
    triangulate_2conn(g, exact_pathwidth(g).witness)
    assert g.is_simple() and is_multi_triangulated(g)
    z = 1  # the apex
    y = next(y for y in sorted(g.neighbors(z)) if len(g.neighbors(z) & g.neighbors(y)) == 2)
    contract_edge(g, z, y)
    assert z not in g.vertices and g.num_vertices() == 5
    assert g.is_simple() and is_multi_triangulated(g)


def test_contract_triangle_gives_edge():
    g = named("K3")
    contract_edge(g, 3, 1)
    assert sorted(g.vertices) == [1, 2]
    assert g.num_edges() == 1


def test_contract_requires_edge():
    with pytest.raises(ValueError):
        contract_edge(named("C4"), 1, 3)


@pytest.mark.parametrize("seed", range(8))
def test_multi_triangulated_graphs_are_2connected_and_keep_a_simple_edge(seed):
    g, _ = multi_tri(generate("random-planar-2conn", 9, seed))
    assert nx.is_biconnected(g.to_networkx())
    assert any(c == 1 for c in g.edge_multiset().values())


def test_outerplanar_embedding_puts_everyone_on_one_face():
    g = EmbeddedMultigraph.from_outerplanar_edges([(1, 2), (2, 3), (3, 1), (3, 4)])
    assert any(set(f.vertices) == {1, 2, 3, 4} for f in trace_faces(g))
    with pytest.raises(NotApplicableError):
        EmbeddedMultigraph.from_outerplanar_edges(named("K4").simple_edges())


def test_from_edges_rejects_k5():
    with pytest.raises(ValueError):
        EmbeddedMultigraph.from_edges(itertools.combinations(range(1, 6), 2))
