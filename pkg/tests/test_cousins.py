"""Cousin-set classification, enumeration, and swap involutions."""

import itertools
import random

import pytest

from cospec import (
    FLAG_NAMES,
    Graph,
    PreconditionError,
    canonical_swap_order,
    classify_pair,
    enumerate_cousin_pairs,
    find_involution,
    involution_from_pairs,
    is_connected,
)

from conftest import load_corpus, load_plan


def random_graph(rng, n, p=0.5):
    return Graph(
        n,
        frozenset(
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ),
    )


class TestClassifyFixtures:
    def test_twin_triples(self):
        plan = load_plan("codegree_twin_triples")
        c = classify_pair(plan.base, plan.v1, plan.v2)
        assert (c.relaxed, c.cousins, c.co_degree, c.co_transmission) == (
            True,
            True,
            True,
            False,
        )
        assert c.m == 3
        assert any(n.startswith("twin sets") for n in c.notes)

    def test_m2_pair(self):
        plan = load_plan("cotransmission_m2")
        c = classify_pair(plan.base, plan.v1, plan.v2)
        assert (c.relaxed, c.cousins, c.co_degree, c.co_transmission) == (
            True,
            True,
            False,
            True,
        )
        # cross edges exist, so no twin annotation
        assert not c.notes

    def test_m4_paw_base(self):
        plan = load_plan("cotransmission_m4_paw")
        c = classify_pair(plan.base, plan.v1, plan.v2)
        assert c.cousins is True
        assert c.co_transmission is True
        assert c.co_degree is False

    def test_m6_join_base(self):
        plan = load_plan("codegree_m6_join")
        c = classify_pair(plan.base, plan.v1, plan.v2)
        assert c.co_degree is True
        assert c.co_transmission is False

    def test_m5_base(self):
        plan = load_plan("relaxed_m5_double_matching")
        c = classify_pair(plan.base, plan.v1, plan.v2)
        assert c.relaxed is True
        assert c.co_transmission is True
        assert c.co_degree is False


class TestSetValidation:
    G = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])

    def test_out_of_range(self):
        with pytest.raises(ValueError, match="outside"):
            classify_pair(self.G, (0, 4), (1, 2))

    def test_repeat(self):
        with pytest.raises(ValueError, match="repeat"):
            classify_pair(self.G, (0, 0), (1, 2))

    def test_overlap(self):
        with pytest.raises(ValueError, match="overlap"):
            classify_pair(self.G, (0, 1), (1, 2))

    def test_size_mismatch(self):
        with pytest.raises(ValueError, match="differ in size"):
            classify_pair(self.G, (0,), (1, 2))

    def test_empty(self):
        with pytest.raises(ValueError, match="empty"):
            classify_pair(self.G, (), ())


class TestFlagStructure:
    def test_nesting_and_witnesses_random(self):
        rng = random.Random(5)
        for _ in range(300):
            n = rng.randint(2, 8)
            g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
            m = rng.choice([1, 2])
            if n < 2 * m:
                continue
            picks = rng.sample(range(n), 2 * m)
            c = classify_pair(g, picks[:m], picks[m:])
            if c.co_transmission:
                assert c.cousins
            if c.cousins:
                assert c.relaxed
            if c.co_degree:
                assert c.relaxed
            connected = is_connected(g)
            assert (c.cousins is None) == (not connected)
            assert (c.co_transmission is None) == (not connected)
            for flag in FLAG_NAMES:
                has_witness = any(
                    w.startswith(f"{flag}:") for w in c.witnesses
                )
                assert has_witness == (getattr(c, flag) is not True)

    def test_disconnected_distance_flags(self):
        g = Graph.from_edges(5, [(0, 1), (2, 3)])
        c = classify_pair(g, (0,), (1,))
        assert c.cousins is None
        assert c.co_transmission is None
        assert any("not evaluable" in w for w in c.witnesses)

    def test_single_vertex_sets_trivially_relaxed(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        c = classify_pair(g, (0,), (2,))
        assert c.relaxed is True
        assert c.cousins is True


class TestEnumerate:
    def test_finds_planted_pair(self):
        plan = load_plan("codegree_twin_triples")
        found = enumerate_cousin_pairs(plan.base, 3, require="co_degree")
        assert (tuple(sorted(plan.v1)), tuple(sorted(plan.v2))) in [
            (v1, v2) for v1, v2, _ in found
        ]

    def test_lexicographic_and_unordered(self):
        g = Graph(4, frozenset())
        found = enumerate_cousin_pairs(g, 1)
        pairs = [(v1, v2) for v1, v2, _ in found]
        assert pairs == sorted(pairs)
        for v1, v2 in pairs:
            assert v1 < v2

    def test_deterministic(self, all_graphs_by_n):
        g = all_graphs_by_n[6][37]
        a = enumerate_cousin_pairs(g, 2)
        b = enumerate_cousin_pairs(g, 2)
        assert a == b

    def test_unknown_require(self):
        with pytest.raises(ValueError, match="unknown requirement"):
            enumerate_cousin_pairs(Graph(4, frozenset()), 1, require="twin")

    def test_m_guard(self):
        with pytest.raises(PreconditionError):
            enumerate_cousin_pairs(Graph(12, frozenset()), 6)

    def test_size_guard(self):
        with pytest.raises(PreconditionError):
            enumerate_cousin_pairs(Graph(17, frozenset()), 2)


class TestFindInvolution:
    def test_m2_fixture_needs_crossing_pairing(self):
        plan = load_plan("cotransmission_m2")
        pi = find_involution(plan.base, (2, 3), (4, 5))
        assert pi is not None
        assert pi.images == (5, 4)

    def test_no_involution(self):
        g = Graph.from_edges(4, [(0, 2), (0, 3)])
        assert find_involution(g, (0, 1), (2, 3)) is None

    def test_complete_cross_takes_first_permutation(self):
        g = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
        pi = find_involution(g, (0, 1), (2, 3))
        assert pi.images == (2, 3)

    def test_independence_guard(self):
        g = Graph.from_edges(4, [(0, 1)])
        with pytest.raises(PreconditionError, match="V1 is not independent"):
            find_involution(g, (0, 1), (2, 3))
        g2 = Graph.from_edges(4, [(2, 3)])
        with pytest.raises(PreconditionError, match="V2 is not independent"):
            find_involution(g2, (0, 1), (2, 3))

    def test_preserves_cross_edges(self):
        rng = random.Random(9)
        hits = 0
        for _ in range(120):
            m = rng.choice([2, 3])
            cross = frozenset(
                (u, w)
                for u in range(m)
                for w in range(m, 2 * m)
                if rng.random() < 0.5
            )
            g = Graph(2 * m, cross)
            pi = find_involution(g, range(m), range(m, 2 * m))
            if pi is None:
                continue
            hits += 1
            mapping = {}
            for i, u in enumerate(range(m)):
                mapping[u] = pi.images[i]
                mapping[pi.images[i]] = u
            for x, y in cross:
                a, b = mapping[x], mapping[y]
                assert ((a, b) if a < b else (b, a)) in cross
        assert hits > 20


class TestInvolutionHelpers:
    def test_from_pairs(self):
        pi = involution_from_pairs([(0, 3), (1, 2)])
        assert pi == {0: 3, 3: 0, 1: 2, 2: 1}

    def test_from_pairs_repeat(self):
        with pytest.raises(ValueError, match="repeated"):
            involution_from_pairs([(0, 1), (1, 2)])

    def test_canonical_swap_order(self):
        pi = involution_from_pairs([(4, 7), (5, 8), (6, 9)])
        assert canonical_swap_order((4, 5, 6), (7, 8, 9), pi) == (4, 5, 6, 9, 8, 7)

    def test_order_errors(self):
        pi = involution_from_pairs([(0, 2)])
        with pytest.raises(ValueError, match="does not cover"):
            canonical_swap_order((0, 1), (2, 3), pi)
        bad = {0: 2, 2: 1, 1: 0}
        with pytest.raises(ValueError, match="not an involution"):
            canonical_swap_order((0,), (2,), bad)
        skew = involution_from_pairs([(0, 1), (2, 3)])
        with pytest.raises(ValueError, match="does not swap"):
            canonical_swap_order((0, 1), (2, 3), skew)
