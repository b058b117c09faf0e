import pytest
from hypothesis import given, settings, strategies as st

from sumchoice import (
    CapacityError, canonical_form, canonical_form_and_permutation, empty_graph,
    enumerate_connected_graphs, generate, parse_graph6,
)
from sumchoice.families import Cycle, Path

from conftest import graph_from_mask, perm_orbit_min, vertex_pairs


def test_isomorphic_labelings_share_keys():
    c5 = generate(Cycle(5))
    assert canonical_form(c5) == canonical_form(c5.relabel([2, 4, 1, 3, 0]))


def test_different_graphs_differ():
    assert canonical_form(generate(Cycle(5))) != canonical_form(generate(Path(5)))


def test_key_is_valid_graph6_of_a_relabeling():
    g = generate(Cycle(6)).add_edge(0, 3)
    key, perm = canonical_form_and_permutation(g)
    assert parse_graph6(key).adj == g.relabel(perm).adj


def test_capacity_limit():
    with pytest.raises(CapacityError):
        canonical_form(empty_graph(11))


def test_empty_graph_key():
    assert canonical_form(empty_graph(0)) == "?"


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_invariance_under_permutation(data):
    n = data.draw(st.integers(min_value=1, max_value=6))
    pairs = vertex_pairs(n)
    mask = data.draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    g = graph_from_mask(n, mask, pairs)
    perm = data.draw(st.permutations(range(n)))
    assert canonical_form(g) == canonical_form(g.relabel(perm))


def test_five_vertex_graphs_have_34_classes():
    # oracle: orbit minima under all 120 relabelings, no canonical code involved
    pairs = vertex_pairs(5)
    orbit_reps = set()
    keys = set()
    for mask in range(1 << len(pairs)):
        orbit_reps.add(perm_orbit_min(5, mask, pairs))
        keys.add(canonical_form(graph_from_mask(5, mask, pairs)))
    assert len(orbit_reps) == 34
    assert len(keys) == 34


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21)])
def test_connected_class_counts(n, count):
    reps = list(enumerate_connected_graphs(n))
    assert len(reps) == count
    assert len({canonical_form(g) for g in reps}) == count
    assert all(g.is_connected() for g in reps)
    # oracle: orbit dedup over connected labeled graphs
    pairs = vertex_pairs(n)
    orbit_reps = set()
    for mask in range(1 << len(pairs)):
        g = graph_from_mask(n, mask, pairs)
        if g.is_connected():
            orbit_reps.add(perm_orbit_min(n, mask, pairs))
    assert len(orbit_reps) == count


def test_enumeration_matches_known_six_vertex_count():
    assert len(list(enumerate_connected_graphs(6))) == 112


def test_enumeration_capacity():
    with pytest.raises(CapacityError):
        list(enumerate_connected_graphs(8))
