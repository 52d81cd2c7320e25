import itertools

import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_orientations, directed_c4_quadruples, has_rainbow_c4, rainbow_c4_quadruples
from rainbowc4 import (
    ColoredBipartiteGraph,
    DirectedC4Certificate,
    OrientedBipartiteGraph,
    RainbowC4Certificate,
    find_directed_c4,
    find_rainbow_c4_exhaustive,
    gen_dstar,
    gen_proper_coloring_complete,
    verify_directed_c4,
    verify_rainbow_c4,
)
from test_graphs import colored_graphs, oriented_graphs

ONE_C4 = OrientedBipartiteGraph(2, 2, ((0, 0, "AtoB"), (1, 0, "BtoA"), (1, 1, "AtoB"), (0, 1, "BtoA")))
RAINBOW_K22 = ColoredBipartiteGraph(2, 2, ((0, 0, 1), (1, 0, 2), (1, 1, 3), (0, 1, 4)))


class TestFindDirected:
    def test_single_cycle(self):
        assert find_directed_c4(ONE_C4) == DirectedC4Certificate(a1=0, a2=1, b1=0, b2=1)

    def test_dstar_6_6_has_none(self):
        assert find_directed_c4(gen_dstar(6, 6)) is None

    def test_hexagon_has_none(self):
        assert find_directed_c4(gen_dstar(3, 3)) is None

    def test_least_witness(self):
        # cycles on {a1, a2} = {0, 2} and {1, 2}; the (0, 2, ...) one must win, with least b's
        arcs = [(0, 3, "AtoB"), (2, 3, "BtoA"), (2, 1, "AtoB"), (0, 1, "BtoA"),
                (0, 2, "AtoB"), (2, 2, "BtoA"), (1, 0, "AtoB"), (2, 0, "BtoA"), (1, 4, "BtoA"), (2, 4, "AtoB")]
        D = OrientedBipartiteGraph(3, 5, tuple(arcs))
        expected = min((a1, a2, b1, b2) for a1, b1, a2, b2 in directed_c4_quadruples(D) if a1 < a2)
        assert expected == (0, 2, 2, 1)
        assert find_directed_c4(D) == DirectedC4Certificate(*expected)

    @pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (3, 2)])
    def test_agrees_with_oracle_exhaustively(self, m, n):
        for D in all_orientations(m, n):
            cert = find_directed_c4(D)
            quads = directed_c4_quadruples(D)
            assert (cert is not None) == bool(quads)
            if cert:
                assert verify_directed_c4(D, cert)
                assert (cert.a1, cert.a2, cert.b1, cert.b2) == min(
                    (a1, a2, b1, b2) for a1, b1, a2, b2 in quads if a1 < a2
                )


class TestFindRainbow:
    def test_rainbow_k22(self):
        cert = find_rainbow_c4_exhaustive(RAINBOW_K22)
        assert cert == RainbowC4Certificate(0, 1, 0, 1, (1, 2, 3, 4))

    def test_proper_k33_has_none(self):
        assert find_rainbow_c4_exhaustive(gen_proper_coloring_complete(3)) is None

    def test_all_distinct_k44(self):
        G = ColoredBipartiteGraph(4, 4, tuple((a, b, 4 * a + b + 1) for a in range(4) for b in range(4)))
        cert = find_rainbow_c4_exhaustive(G)
        assert cert is not None and verify_rainbow_c4(G, cert)

    @settings(max_examples=300, deadline=None)
    @given(colored_graphs(max_side=5, max_color=5))
    def test_agrees_with_oracle(self, G):
        cert = find_rainbow_c4_exhaustive(G)
        quads = rainbow_c4_quadruples(G)
        assert (cert is not None) == bool(quads)
        if cert:
            assert verify_rainbow_c4(G, cert)
            assert (cert.a1, cert.a2, cert.b1, cert.b2) == min(
                (a1, a2, b1, b2) for a1, b1, a2, b2 in quads if a1 < a2 and b1 < b2
            )


class TestVerifyDirected:
    def test_accept(self):
        assert verify_directed_c4(ONE_C4, find_directed_c4(ONE_C4)).accepted

    def test_reversed_arc(self):
        D = OrientedBipartiteGraph(2, 2, ((0, 0, "BtoA"), (1, 0, "BtoA"), (1, 1, "AtoB"), (0, 1, "BtoA")))
        verdict = verify_directed_c4(D, DirectedC4Certificate(0, 1, 0, 1))
        assert verdict == (False, "missing-arc")

    def test_degenerate(self):
        assert verify_directed_c4(ONE_C4, DirectedC4Certificate(0, 0, 0, 1)).reason == "degenerate"

    def test_out_of_range(self):
        assert verify_directed_c4(ONE_C4, DirectedC4Certificate(0, 5, 0, 1)).reason == "out-of-range"


class TestVerifyRainbow:
    def test_accept(self):
        assert verify_rainbow_c4(RAINBOW_K22, RainbowC4Certificate(0, 1, 0, 1, (1, 2, 3, 4)))

    def test_color_mismatch(self):
        verdict = verify_rainbow_c4(RAINBOW_K22, RainbowC4Certificate(0, 1, 0, 1, (1, 2, 3, 5)))
        assert verdict.reason == "color-mismatch"

    def test_not_rainbow(self):
        G = ColoredBipartiteGraph(2, 2, ((0, 0, 1), (1, 0, 2), (1, 1, 1), (0, 1, 4)))
        verdict = verify_rainbow_c4(G, RainbowC4Certificate(0, 1, 0, 1, (1, 2, 1, 4)))
        assert verdict.reason == "not-rainbow"

    def test_missing_edge(self):
        G = ColoredBipartiteGraph(2, 2, ((0, 0, 1), (1, 0, 2), (1, 1, 3)))
        assert verify_rainbow_c4(G, RainbowC4Certificate(0, 1, 0, 1, (1, 2, 3, 4))).reason == "missing-edge"


@settings(max_examples=200, deadline=None)
@given(oriented_graphs(max_side=5), st.data())
def test_adding_an_arc_keeps_a_directed_c4(D, data):
    cert = find_directed_c4(D)
    used = {(a, b) for a, b, _ in D.arcs}
    free = [(a, b) for a, b in itertools.product(range(D.m), range(D.n)) if (a, b) not in used]
    if cert is None or not free:
        return
    a, b = data.draw(st.sampled_from(free))
    d = data.draw(st.sampled_from(["AtoB", "BtoA"]))
    bigger = OrientedBipartiteGraph(D.m, D.n, D.arcs + ((a, b, d),))
    assert verify_directed_c4(bigger, cert)
    assert find_directed_c4(bigger) is not None


@settings(max_examples=200, deadline=None)
@given(colored_graphs(max_side=5), st.data())
def test_adding_an_edge_keeps_a_rainbow_c4(G, data):
    cert = find_rainbow_c4_exhaustive(G)
    free = [(a, b) for a, b in itertools.product(range(G.m), range(G.n)) if not G.has_edge(a, b)]
    if cert is None or not free:
        return
    a, b = data.draw(st.sampled_from(free))
    c = data.draw(st.integers(1, 8))
    bigger = ColoredBipartiteGraph(G.m, G.n, G.edges + ((a, b, c),))
    assert verify_rainbow_c4(bigger, cert)
    assert has_rainbow_c4(bigger)


@given(oriented_graphs(max_side=5))
def test_finder_is_deterministic(D):
    again = OrientedBipartiteGraph(D.m, D.n, tuple(reversed(D.arcs)))
    assert find_directed_c4(D) == find_directed_c4(again)
