import pytest

from pwtri.generators import generate, named
from pwtri.oracle import exact_pathwidth
from pwtri.pathdecomp import BagInterval, DecompositionError, PathDecomposition, concatenate, find_chord_in_face
from pwtri.planar import trace_faces


def test_validate_path():
    p = PathDecomposition([{1, 2}, {2, 3}, {3, 4}])
    assert p.validate(named("P4"))
    assert p.width == 1


def test_validate_square(c4_decomp):
    assert c4_decomp.validate(named("C4"))
    assert c4_decomp.width == 2


def test_validate_rejects_uncovered_edge():
    assert not PathDecomposition([{1, 2}, {3, 4}]).validate(named("C4"))


def test_validate_rejects_gaps_and_missing_vertices():
    assert not PathDecomposition([{1, 2}, {2, 3}, {1, 3, 4}]).validate(named("C4"))
    assert not PathDecomposition([{1, 2, 3}]).validate(named("C4"))


def test_bag_interval_is_left_open():
    iv = BagInterval(2, 5)
    assert list(iv.indices()) == [3, 4, 5]
    assert 2 not in iv and 5 in iv
    assert list(BagInterval(3, 3).indices()) == []


def test_chord_in_square(c4_decomp):
    assert find_chord_in_face(c4_decomp, (1, 2, 3, 4)) == (2, 4)


def test_chord_in_pentagon_tie_break():
    p = PathDecomposition([{1, 2, 5}, {2, 3, 5}, {3, 4, 5}])
    # shared-bag non-consecutive pairs are (2,5) and (3,5); least wins
    assert find_chord_in_face(p, (1, 2, 3, 4, 5)) == (2, 5)


def test_chord_all_in_one_bag():
    p = PathDecomposition([{1, 2, 3, 4}])
    assert find_chord_in_face(p, (3, 1, 4, 2)) == (1, 2)


def test_chord_errors():
    with pytest.raises(DecompositionError):
        find_chord_in_face(PathDecomposition([{1, 2}, {3, 4}]), (1, 2, 3, 4))
    with pytest.raises(DecompositionError):
        find_chord_in_face(PathDecomposition([{1, 2, 3}]), (1, 2, 3))


@pytest.mark.parametrize("seed", range(15))
def test_chord_always_found_on_big_faces(seed):
    g = generate("random-planar-2conn", 9, seed)
    p = exact_pathwidth(g).witness
    for f in trace_faces(g):
        if len(f) >= 4:
            a, b = find_chord_in_face(p, f.vertices)
            assert p.bags_containing(a, b)


def test_widen_into_covered_range_is_noop():
    p = PathDecomposition([{1, 2}, {2, 3}, {3, 4}])
    assert p.widen(2, [0, 1]) == []
    assert p.bags == [{1, 2}, {2, 3}, {3, 4}]


def test_widen_path():
    p = PathDecomposition([{1, 2}, {2, 3}, {3, 4}])
    assert p.widen(2, BagInterval(1, 2)) == [2]
    assert p.bags == [{1, 2}, {2, 3}, {2, 3, 4}]


def test_widen_rejects_gap():
    p = PathDecomposition([{1, 2}, {2, 3}, {3, 4}, {4}])
    with pytest.raises(DecompositionError):
        p.widen(1, [3])


def test_widen_is_monotone():
    p = PathDecomposition([{1, 2}, {2, 3}, {3, 4}, {4, 5}])
    before = p.snapshot()
    p.widen(3, [3])
    assert all(a <= b for a, b in zip(before, p.bags))


def test_concatenate_two_singletons():
    q = concatenate([PathDecomposition([{1}]), PathDecomposition([{2}])], [(1, 2)])
    assert q.bags == [{1}, {1, 2}, {2}]
    assert q.width == 1


def test_concatenate_one_is_identity():
    p = PathDecomposition([{1, 2}, {2, 3}])
    assert concatenate([p], []) == p


def test_concatenate_checks_links():
    with pytest.raises(DecompositionError):
        concatenate([PathDecomposition([{1}, {2}]), PathDecomposition([{3}])], [(1, 3)])
    with pytest.raises(DecompositionError):
        concatenate([PathDecomposition([{1}]), PathDecomposition([{3}])], [])


def test_rename_keeps_contiguity():
    p = PathDecomposition([{1, 9}, {1, 2, 9}, {2, 3}])
    p.rename(9, 2)
    assert p.bags == [{1, 2}, {1, 2}, {2, 3}]
    q = PathDecomposition([{9}, {1}, {2}])
    with pytest.raises(DecompositionError):
        q.rename(9, 2)
