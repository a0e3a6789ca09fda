import itertools

import pytest

from conftest import canonical_types
from flagadd import (
    SimpleType,
    build_root_system,
    degree,
    dual_system,
    flag_dimension,
    grading,
    is_commutative_nilradical,
    is_minuscule,
    is_root,
    nilradical,
)


def all_markings(rank):
    idx = range(1, rank + 1)
    for k in range(rank + 1):
        yield from (frozenset(m) for m in itertools.combinations(idx, k))


def test_degree_examples():
    g2 = build_root_system(SimpleType("G", 2))
    assert degree(g2.highest_root, frozenset({1})) == 3
    c3 = build_root_system(SimpleType("C", 3))
    assert degree(c3.highest_root, frozenset({3})) == 1
    a3 = build_root_system(SimpleType("A", 3))
    assert degree((0, 1, 0), frozenset({2})) == 1
    assert degree((0, -1, 0), frozenset({2})) == -1


def test_grading_empty_marking_is_one_layer():
    rs = build_root_system(SimpleType("B", 2))
    layers = grading(rs, ())
    assert set(layers) == {0}
    assert layers[0] == rs.positive_roots


def test_grading_a2():
    rs = build_root_system(SimpleType("A", 2))
    layers = grading(rs, {1})
    assert layers == {0: ((0, 1),), 1: ((1, 0), (1, 1))}


def test_grading_full_marking_is_height():
    rs = build_root_system(SimpleType("C", 3))
    layers = grading(rs, {1, 2, 3})
    for k, roots in layers.items():
        assert all(sum(b) == k for b in roots)
    assert layers[0] == ()


def test_grading_g2_layer_sizes():
    rs = build_root_system(SimpleType("G", 2))
    layers = grading(rs, {1})
    assert {k: len(v) for k, v in layers.items()} == {0: 1, 1: 2, 2: 1, 3: 2}


@pytest.mark.parametrize("stype", canonical_types(5), ids=str)
def test_grading_partitions_without_gaps(stype):
    rs = build_root_system(stype)
    for m in all_markings(rs.rank):
        layers = grading(rs, m)
        top = degree(rs.highest_root, m)
        assert sorted(layers) == list(range(top + 1))
        assert sum(len(v) for v in layers.values()) == len(rs.positive_roots)
        for k in range(1, top + 1):
            assert layers[k]


def test_nilradical_examples():
    b2 = build_root_system(SimpleType("B", 2))
    assert nilradical(b2, {2}) == ((0, 1), (1, 1), (1, 2))
    assert nilradical(b2, ()) == ()
    assert nilradical(b2, {1, 2}) == b2.positive_roots


def test_commutativity_examples():
    assert is_commutative_nilradical(build_root_system(SimpleType("A", 3)), {2})
    assert not is_commutative_nilradical(build_root_system(SimpleType("C", 3)), {1})
    assert not is_commutative_nilradical(build_root_system(SimpleType("A", 3)), {1, 2})
    assert is_commutative_nilradical(build_root_system(SimpleType("E", 7)), ())


@pytest.mark.parametrize("stype", canonical_types(6), ids=str)
def test_multi_index_markings_never_commutative(stype):
    rs = build_root_system(stype)
    for m in all_markings(rs.rank):
        if len(m) >= 2:
            assert not is_commutative_nilradical(rs, m)


def test_flag_dimension_examples():
    assert flag_dimension(build_root_system(SimpleType("D", 4)), ()) == 0
    assert flag_dimension(build_root_system(SimpleType("B", 2)), {2}) == 3
    for r in range(1, 9):
        rs = build_root_system(SimpleType("A", r))
        for i in range(1, r + 1):
            assert flag_dimension(rs, {i}) == i * (r + 1 - i)


@pytest.mark.parametrize("stype", canonical_types(4), ids=str)
def test_flag_dimension_monotone_in_marking(stype):
    rs = build_root_system(stype)
    dims = {m: flag_dimension(rs, m) for m in all_markings(rs.rank)}
    assert dims[frozenset()] == 0
    assert dims[frozenset(range(1, rs.rank + 1))] == len(rs.positive_roots)
    for m, dm in dims.items():
        for m2, dm2 in dims.items():
            if m <= m2:
                assert dm <= dm2


@pytest.mark.parametrize("stype", canonical_types(4), ids=str)
def test_degree_is_additive_on_root_sums(stype):
    rs = build_root_system(stype)
    for m in all_markings(rs.rank):
        for beta in rs.positive_roots:
            for gamma in rs.positive_roots:
                total = tuple(a + b for a, b in zip(beta, gamma))
                if is_root(rs, total):
                    assert degree(total, m) == degree(beta, m) + degree(gamma, m)


def test_marking_validation():
    rs = build_root_system(SimpleType("A", 2))
    with pytest.raises(ValueError):
        nilradical(rs, {0})
    with pytest.raises(ValueError):
        nilradical(rs, {3})


@pytest.mark.parametrize("stype", canonical_types(8), ids=str)
def test_singleton_criteria_agree_three_ways(stype):
    rs = build_root_system(stype)
    dual = dual_system(rs)
    for i in range(1, rs.rank + 1):
        commutative = is_commutative_nilradical(rs, {i})
        assert commutative == (rs.highest_root[i - 1] == 1)
        assert commutative == is_minuscule(dual, i)
