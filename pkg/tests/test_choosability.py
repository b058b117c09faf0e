import itertools
import random

from hypothesis import given, settings, strategies as st

from sumchoice import (
    Budget, Choosable, NotChoosable, UnknownVerdict, canonical_assignments,
    empty_graph, find_forcing_assignment, generate, graph_from_edges,
    is_choosable, is_list_colorable, reduce_size_function,
)
from sumchoice.choosability import all_proper_colorings
from sumchoice.families import Complete, CompleteBipartite, Cycle, Path, Wheel

from conftest import graph_from_mask, vertex_pairs


def k(n):
    return generate(Complete(n))


class TestListColorable:
    def test_triangle_two_colors(self):
        assert is_list_colorable(k(3), [(1, 2)] * 3) is None

    def test_p2_forced(self):
        assert is_list_colorable(generate(Path(2)), [(1,), (1, 2)]) == (1, 2)

    def test_even_cycle_two_colors(self):
        c4 = generate(Cycle(4))
        got = is_list_colorable(c4, [(1, 2)] * 4)
        assert got == (1, 2, 1, 2)

    def test_empty_list_blocks(self):
        assert is_list_colorable(generate(Path(2)), [(), (1,)]) is None

    def test_deterministic(self):
        g = generate(Wheel(4))
        lists = [(3, 7, 9, 11, 2), (1, 2), (2, 3), (1, 3), (5, 2)]
        assert is_list_colorable(g, lists) == is_list_colorable(g, lists)

    @settings(max_examples=50, deadline=None)
    @given(st.data())
    def test_agrees_with_brute_force(self, data):
        n = data.draw(st.integers(min_value=1, max_value=5))
        pairs = vertex_pairs(n)
        mask = data.draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
        g = graph_from_mask(n, mask, pairs)
        lists = [tuple(sorted(data.draw(st.sets(
            st.integers(min_value=0, max_value=5), min_size=0, max_size=3))))
            for _ in range(n)]
        got = is_list_colorable(g, lists)
        brute = next(all_proper_colorings(g, lists), None)
        assert (got is None) == (brute is None)
        if got is not None:
            assert all(got[v] in lists[v] for v in range(n))
            assert all(got[u] != got[v] for u, v in g.edges())


class TestReduce:
    def test_p2_unit_chain(self):
        red = reduce_size_function(generate(Path(2)), (1, 2))
        assert red.graph.n == 0 and not red.dead
        assert [s.kind for s in red.steps] == ["unit", "unit"]

    def test_p2_dies(self):
        red = reduce_size_function(generate(Path(2)), (1, 1))
        assert red.dead

    def test_pendant_then_surplus(self):
        # triangle with size 3 everywhere plus a size-2 pendant vertex
        g = graph_from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
        red = reduce_size_function(g, (3, 3, 3, 2))
        assert red.graph.n == 0 and not red.dead
        kinds = [s.kind for s in red.steps]
        assert "surplus" in kinds
        verdict = is_choosable(g, (3, 3, 3, 2))
        assert isinstance(verdict, Choosable)

    def test_irreducible_fixed_point(self):
        red = reduce_size_function(generate(Cycle(4)), (2, 2, 2, 2))
        assert red.graph.n == 4 and red.sizes == (2, 2, 2, 2)


class TestIsChoosable:
    def test_triangle_pairs_not_choosable(self):
        verdict = is_choosable(k(3), (2, 2, 2))
        assert isinstance(verdict, NotChoosable)
        assert len(set(verdict.witness)) == 1  # identical lists suffice

    def test_c4_pairs_choosable(self):
        verdict = is_choosable(generate(Cycle(4)), (2, 2, 2, 2))
        assert isinstance(verdict, Choosable)
        assert verdict.assignments_examined > 0

    def test_c4_pairs_naive_crosscheck(self):
        g = generate(Cycle(4))
        total = 4 * 2
        for lists in itertools.product(
                *[itertools.combinations(range(total), 2)] * 4):
            assert next(all_proper_colorings(g, lists), None) is not None

    def test_k23_has_size_ten_choice_function(self):
        g = generate(CompleteBipartite(2, 3))
        assert isinstance(is_choosable(g, (2, 2, 2, 2, 2)), Choosable)
        assert isinstance(is_choosable(g, (2, 2, 2, 2, 1)), NotChoosable)

    def test_zero_size_immediate(self):
        verdict = is_choosable(generate(Path(2)), (0, 3))
        assert isinstance(verdict, NotChoosable)
        assert verdict.witness[0] == ()

    def test_witnesses_are_sound(self):
        rng = random.Random(99)
        found = 0
        while found < 30:
            n = rng.randint(2, 5)
            pairs = vertex_pairs(n)
            g = graph_from_mask(n, rng.getrandbits(len(pairs)), pairs)
            f = tuple(rng.randint(1, max(1, g.degree(v))) for v in range(n))
            verdict = is_choosable(g, f)
            if not isinstance(verdict, NotChoosable):
                continue
            w = verdict.witness
            assert tuple(len(row) for row in w) == f
            assert is_list_colorable(g, w) is None
            # injective recoloring keeps the witness uncolorable
            renamed = [tuple(sorted(3 * c + 1 for c in row)) for row in w]
            assert is_list_colorable(g, renamed) is None
            found += 1

    def test_reduction_equivalence_seeded(self):
        rng = random.Random(4242)
        for _ in range(60):
            n = rng.randint(2, 5)
            pairs = vertex_pairs(n)
            g = graph_from_mask(n, rng.getrandbits(len(pairs)), pairs)
            f = tuple(rng.randint(1, min(g.degree(v) + 2, 4)) for v in range(n))
            plain = is_choosable(g, f)
            raw = is_choosable(g, f, reduce_first=False, heuristic=False)
            assert isinstance(plain, Choosable) == isinstance(raw, Choosable)

    def test_isomorphism_invariance(self):
        rng = random.Random(7)
        for _ in range(25):
            n = rng.randint(2, 5)
            pairs = vertex_pairs(n)
            g = graph_from_mask(n, rng.getrandbits(len(pairs)), pairs)
            f = tuple(rng.randint(1, 3) for _ in range(n))
            perm = list(range(n))
            rng.shuffle(perm)
            h = g.relabel(perm)
            fh = [0] * n
            for v in range(n):
                fh[perm[v]] = f[v]
            a = is_choosable(g, f)
            b = is_choosable(h, tuple(fh))
            assert isinstance(a, Choosable) == isinstance(b, Choosable)

    def test_monotone_in_f(self):
        rng = random.Random(11)
        for _ in range(40):
            n = rng.randint(2, 5)
            pairs = vertex_pairs(n)
            g = graph_from_mask(n, rng.getrandbits(len(pairs)), pairs)
            f = tuple(rng.randint(1, 3) for _ in range(n))
            bigger = tuple(x + rng.randint(0, 1) for x in f)
            if isinstance(is_choosable(g, f), Choosable):
                assert isinstance(is_choosable(g, bigger), Choosable)

    def test_budget_returns_unknown(self):
        g = generate(CompleteBipartite(3, 3))
        verdict = is_choosable(g, (3, 3, 3, 3, 3, 3),
                               Budget(node_limit=200))
        assert isinstance(verdict, UnknownVerdict)
        assert verdict.progress

    def test_empty_graph(self):
        assert isinstance(is_choosable(empty_graph(0), ()), Choosable)


class TestCanonicalAssignments:
    def test_single_vertex(self):
        assert list(canonical_assignments(empty_graph(1), (1,))) == [((0,),)]

    def test_p2_unit_pair(self):
        got = list(canonical_assignments(generate(Path(2)), (1, 1)))
        assert got == [((0,), (0,)), ((0,), (1,))]

    def test_p2_pairs_count_matches_naive_classes(self):
        g = generate(Path(2))
        stream = list(canonical_assignments(g, (2, 2)))
        # oracle: canonicalize every assignment over four colors by renaming
        reps = set()
        for a in itertools.combinations(range(4), 2):
            for b in itertools.combinations(range(4), 2):
                ranks = {}
                for c in a + b:
                    ranks.setdefault(c, len(ranks))
                reps.add((tuple(sorted(ranks[c] for c in a)),
                          tuple(sorted(ranks[c] for c in b))))
        assert len(stream) == len(reps)
        assert set(stream) == reps

    def test_every_assignment_reachable_by_recoloring(self):
        g = k(3)
        f = (1, 2, 1)
        stream = set(canonical_assignments(g, f))
        for lists in itertools.product(
                itertools.combinations(range(4), 1),
                itertools.combinations(range(4), 2),
                itertools.combinations(range(4), 1)):
            ranks = {}
            for row in lists:
                for c in sorted(row):
                    ranks.setdefault(c, len(ranks))
            rep = tuple(tuple(sorted(ranks[c] for c in row)) for row in lists)
            assert rep in stream

    def test_any_order_still_covers_every_class(self):
        g = generate(Path(2))
        default = list(canonical_assignments(g, (1, 2)))
        flipped = list(canonical_assignments(g, (1, 2), order=(1, 0)))
        assert default != flipped
        # both streams cover every renaming class of ({a}, {b, c}) assignments
        for stream in (default, flipped):
            shapes = {(len(set(a) & set(b))) for (a, b) in stream}
            assert shapes == {0, 1}


class TestForcing:
    def test_p2_pins_second_vertex(self):
        got = find_forcing_assignment(generate(Path(2)), (1, 2), 1, [9])
        assert got is not None
        a = got[0][0]
        assert got == ((a,), tuple(sorted((a, 9))))

    def test_k1_singleton(self):
        assert find_forcing_assignment(empty_graph(1), (1,), 0, [5]) == ((5,),)

    def test_k1_pair_cannot_force(self):
        assert find_forcing_assignment(empty_graph(1), (2,), 0, [5]) is None

    def test_c4_greedy_function_forces_everywhere(self):
        g = generate(Cycle(4))
        f = (1, 2, 2, 3)
        for v in range(4):
            got = find_forcing_assignment(g, f, v, [6])
            assert got is not None
            colorings = list(all_proper_colorings(g, got))
            assert colorings
            assert all(c[v] == 6 for c in colorings)
