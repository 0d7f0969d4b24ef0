"""Graph container, codecs, traversal, and isomorphism tests."""

import pytest
from hypothesis import given, settings, strategies as st

from cospec import (
    Graph,
    PreconditionError,
    UNREACHABLE,
    all_pairs_distances,
    degrees,
    diameter,
    glue,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    is_regular,
    is_transmission_regular,
    parse_edge_list,
    parse_graph6,
    to_graph6,
    transmissions,
    VertexMap,
)

from conftest import load_corpus


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        edges = draw(st.frozensets(st.sampled_from(pairs)))
    else:
        edges = frozenset()
    return Graph(n, edges)


def path_graph(n):
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n):
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)) | {(0, n - 1)})


class TestGraph:
    def test_edges_normalized(self):
        g = Graph.from_edges(3, [(2, 0), (1, 2)])
        assert g.edges == frozenset({(0, 2), (1, 2)})
        assert g.edge_count == 2
        assert g.has_edge(0, 2) and g.has_edge(2, 0)
        assert not g.has_edge(0, 1)

    def test_degree(self):
        g = path_graph(4)
        assert [g.degree(v) for v in range(4)] == [1, 2, 2, 1]
        assert degrees(g) == (1, 2, 2, 1)

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError, match="self-loop at vertex 1"):
            Graph.from_edges(3, [(1, 1)])

    def test_endpoint_out_of_range(self):
        with pytest.raises(ValueError, match="outside"):
            Graph.from_edges(3, [(0, 3)])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(ValueError, match="duplicate edge"):
            Graph.from_edges(3, [(0, 1), (1, 0)])

    def test_negative_vertex_count_rejected(self):
        with pytest.raises(ValueError):
            Graph(-1, frozenset())


class TestGraph6:
    def test_known_encodings(self):
        assert parse_graph6("A_") == Graph.from_edges(2, [(0, 1)])
        assert parse_graph6("D??") == Graph(5, frozenset())
        # 4-cycle with an isolated vertex
        g = parse_graph6("DFw")
        assert g.n == 5

    def test_roundtrip_corpus(self):
        for line in (load_corpus("all_n5") + load_corpus("all_n6"))[:120]:
            assert parse_graph6(to_graph6(line)) == line

    @given(graphs(max_n=12))
    def test_roundtrip_random(self, g):
        assert parse_graph6(to_graph6(g)) == g

    def test_empty_input(self):
        with pytest.raises(ValueError):
            parse_graph6("")

    def test_large_header_rejected(self):
        with pytest.raises(ValueError, match="62"):
            parse_graph6("~??" + "?" * 100)

    def test_invalid_character(self):
        with pytest.raises(ValueError, match="invalid"):
            parse_graph6("B!")

    def test_wrong_body_length(self):
        with pytest.raises(ValueError):
            parse_graph6("C")
        with pytest.raises(ValueError):
            parse_graph6("A__")

    def test_nonzero_padding(self):
        # n = 2 needs one bit; the low five bits must stay clear
        with pytest.raises(ValueError, match="padding"):
            parse_graph6("A" + chr(63 + 63))

    def test_encode_limit(self):
        with pytest.raises(ValueError, match="62"):
            to_graph6(Graph(63, frozenset()))


class TestEdgeList:
    def test_count_only(self):
        assert parse_edge_list("4\n") == Graph(4, frozenset())

    def test_comments_and_blanks(self):
        text = "# triangle\n3\n\n0 1\n1 2  # closing\n0 2\n"
        assert parse_edge_list(text) == cycle_graph(3)

    def test_missing_count(self):
        with pytest.raises(ValueError, match="no vertex-count line"):
            parse_edge_list("# nothing\n")

    def test_bad_token_reports_line(self):
        with pytest.raises(ValueError, match="line 3"):
            parse_edge_list("3\n0 1\n0 x\n")

    def test_wrong_arity_reports_line(self):
        with pytest.raises(ValueError, match="line 2"):
            parse_edge_list("3\n0 1 2\n")


class TestDistances:
    def test_path(self):
        t = all_pairs_distances(path_graph(4))
        assert t.dist(0, 3) == 3
        assert t.dist(3, 0) == 3
        assert t.connected

    def test_disconnected_marker(self):
        t = all_pairs_distances(Graph(3, frozenset({(0, 1)})))
        assert t.dist(0, 2) == UNREACHABLE
        assert not t.connected

    @given(graphs(max_n=10))
    @settings(max_examples=60)
    def test_matches_floyd_warshall(self, g):
        # independent cubic oracle
        big = g.n * g.n + 1
        d = [[0 if i == j else big for j in range(g.n)] for i in range(g.n)]
        for u, v in g.edges:
            d[u][v] = d[v][u] = 1
        for k in range(g.n):
            for i in range(g.n):
                for j in range(g.n):
                    if d[i][k] + d[k][j] < d[i][j]:
                        d[i][j] = d[i][k] + d[k][j]
        t = all_pairs_distances(g)
        for i in range(g.n):
            for j in range(g.n):
                expect = UNREACHABLE if d[i][j] >= big else d[i][j]
                assert t.dist(i, j) == expect

    def test_transmissions(self):
        assert transmissions(path_graph(4)) == (6, 4, 4, 6)

    def test_transmissions_need_connected(self):
        with pytest.raises(PreconditionError):
            transmissions(Graph(2, frozenset()))

    def test_transmission_regular(self):
        assert is_transmission_regular(cycle_graph(5))
        assert not is_transmission_regular(path_graph(4))
        assert not is_transmission_regular(Graph(2, frozenset()))

    def test_diameter(self):
        assert diameter(path_graph(4)) == 3
        assert diameter(Graph(1, frozenset())) == 0
        with pytest.raises(PreconditionError):
            diameter(Graph(2, frozenset()))
        with pytest.raises(PreconditionError):
            diameter(Graph(0, frozenset()))


class TestConnectivityRegularity:
    def test_is_connected(self):
        assert is_connected(Graph(0, frozenset()))
        assert is_connected(Graph(1, frozenset()))
        assert not is_connected(Graph(2, frozenset()))
        assert is_connected(cycle_graph(4))

    def test_is_regular(self):
        assert is_regular(cycle_graph(5))
        assert is_regular(Graph(3, frozenset()))
        assert not is_regular(path_graph(3))


class TestInducedSubgraph:
    def test_full_is_identity(self):
        g = cycle_graph(5)
        assert induced_subgraph(g, range(5)) == g

    def test_relabels_by_position(self):
        g = path_graph(4)
        sub = induced_subgraph(g, [3, 2])
        assert sub == Graph.from_edges(2, [(0, 1)])

    def test_duplicate_vertex(self):
        with pytest.raises(ValueError):
            induced_subgraph(path_graph(3), [0, 0])

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced_subgraph(path_graph(3), [0, 3])


class TestGlue:
    def test_attaches_edges(self):
        base = Graph(4, frozenset())
        patch = path_graph(3)
        glued = glue(base, patch, VertexMap((3, 1, 0)))
        assert glued == Graph.from_edges(4, [(1, 3), (0, 1)])

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            glue(Graph(4, frozenset()), path_graph(3), VertexMap((0, 1)))

    def test_image_out_of_range(self):
        with pytest.raises(ValueError):
            glue(Graph(2, frozenset()), path_graph(3), VertexMap((0, 1, 2)))

    def test_duplicate_edge(self):
        base = Graph.from_edges(3, [(0, 1)])
        with pytest.raises(ValueError, match="duplicate"):
            glue(base, Graph.from_edges(2, [(0, 1)]), VertexMap((0, 1)))

    @given(graphs(min_n=1, max_n=7), st.randoms(use_true_random=False))
    @settings(max_examples=40)
    def test_glue_then_strip_restores_base(self, patch, rng):
        n = patch.n + 2
        spots = list(range(n))
        rng.shuffle(spots)
        images = tuple(spots[: patch.n])
        base = Graph(n, frozenset({(n - 2, n - 1)}))
        mapped = set()
        for u, v in patch.edges:
            a, b = images[u], images[v]
            mapped.add((a, b) if a < b else (b, a))
        if mapped & base.edges:
            return
        glued = glue(base, patch, VertexMap(images))
        assert glued.edges - mapped == base.edges


class TestIsomorphism:
    def test_cospectral_mates_not_isomorphic(self):
        star = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
        cycle_plus = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert not is_isomorphic(star, cycle_plus)

    def test_different_sizes(self):
        assert not is_isomorphic(Graph(2, frozenset()), Graph(3, frozenset()))

    @given(graphs(max_n=8), st.randoms(use_true_random=False))
    @settings(max_examples=60)
    def test_relabeling_is_isomorphic(self, g, rng):
        perm = list(range(g.n))
        rng.shuffle(perm)
        relabeled = Graph(
            g.n,
            frozenset(
                (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
                for u, v in g.edges
            ),
        )
        assert is_isomorphic(g, relabeled)

    def test_degree_sequence_reject(self):
        assert not is_isomorphic(path_graph(3), cycle_graph(3))

    def test_size_guard(self):
        big = Graph(13, frozenset())
        with pytest.raises(PreconditionError):
            is_isomorphic(big, big)

    def test_corpus_pairwise_distinct(self):
        pool = load_corpus("all_n5")
        for i, a in enumerate(pool):
            for b in pool[i + 1 :]:
                assert not is_isomorphic(a, b)
