# -*- coding: utf-8 -*-
import pytest

from rzk_index.enumeration import (
    all_complexes,
    iter_complexes,
    iter_instances,
    nontrivial_subtori,
)
from rzk_index.exceptions import EnumerationLimit, ResourceCapError
from rzk_index.vertex_set import VertexSet


@pytest.mark.parametrize("m,count", [(1, 1), (2, 2), (3, 9), (4, 114)])
def test_complex_counts(m, count):
    complexes = list(iter_complexes(m))
    assert len(complexes) == count
    assert len(set(complexes)) == count
    assert all(c.vertices == VertexSet.full(m) for c in complexes)


@pytest.mark.slow
def test_complex_count_on_five_vertices():
    assert sum(1 for _ in iter_complexes(5)) == 6894


def test_complexes_on_three_vertices():
    facets = sorted(
        tuple(str(f) for f in c.sorted_facets()) for c in iter_complexes(3)
    )
    assert ("{1,2,3}",) in facets
    assert ("{1}", "{2}", "{3}") in facets
    assert ("{1,2}", "{1,3}", "{2,3}") in facets
    assert ("{3}", "{1,2}") in facets


@pytest.mark.parametrize("m", [0, 6])
def test_limits(m):
    with pytest.raises(EnumerationLimit):
        list(iter_complexes(m))
    with pytest.raises(ResourceCapError):
        all_complexes(m)


def test_all_complexes():
    assert len(all_complexes(3)) == 1 + 2 + 9


def test_instances():
    instances = list(iter_instances(2))
    # one complex with one group, then two complexes with four groups each
    assert len(instances) == 1 + 2 * 4
    assert all(complex_.m == group.m for complex_, group in instances)
    assert all(group.rank > 0 for _, group in instances)


def test_nontrivial_subtori():
    assert len(nontrivial_subtori(3)) == 15
