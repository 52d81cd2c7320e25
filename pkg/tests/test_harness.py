import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import has_directed_c4, isomorphic_to_dstar
from rainbowc4 import (
    SIDE_A,
    ColoredBipartiteGraph,
    OrientedBipartiteGraph,
    check_thm9_hypothesis,
    check_thm10_hypothesis,
    gen_dstar,
    gen_proper_coloring_complete,
    is_dstar,
    verify_thm9_exhaustive,
    verify_thm9_random,
    verify_thm10_random,
)
from rainbowc4.harness import BudgetExceededError
from test_graphs import oriented_graphs


def relabel(D, pa, pb):
    return OrientedBipartiteGraph(D.m, D.n, tuple((pa[a], pb[b], d) for a, b, d in D.arcs))


def complete_distinct(m, n):
    return ColoredBipartiteGraph(m, n, tuple((a, b, a * n + b + 1) for a in range(m) for b in range(n)))


class TestThm9Hypothesis:
    def test_dstar_meets_it_with_equality(self):
        assert check_thm9_hypothesis(gen_dstar(3, 3)) is None

    def test_empty(self):
        v = check_thm9_hypothesis(OrientedBipartiteGraph(3, 3))
        assert v.vertex == (SIDE_A, 0) and (v.have, v.need) == (0, 3)

    def test_removed_arc_blames_its_tail(self):
        D = gen_dstar(6, 6)
        for arc in (D.arcs[0], D.arcs[-1]):
            smaller = OrientedBipartiteGraph(6, 6, tuple(x for x in D.arcs if x != arc))
            tail = (0, arc.a) if arc.direction.value == "AtoB" else (1, arc.b)
            assert check_thm9_hypothesis(smaller).vertex == tail

    @pytest.mark.parametrize("m, n", list(itertools.product([3, 6, 9, 12], repeat=2)))
    def test_dstar_sharpness(self, m, n):
        D = gen_dstar(m, n)
        assert check_thm9_hypothesis(D) is None
        assert is_dstar(D) is not None
        assert not has_directed_c4(D)


class TestThm10Hypothesis:
    def test_proper_k33_fails(self):
        v = check_thm10_hypothesis(gen_proper_coloring_complete(3))
        assert v is not None and (v.have, v.need) == (15, 17)

    def test_k14_passes(self):
        assert check_thm10_hypothesis(complete_distinct(14, 14)) is None

    def test_k44_boundary(self):
        G = complete_distinct(4, 4)
        assert check_thm10_hypothesis(G) is None
        v = check_thm10_hypothesis(G, strict=True)
        assert (v.have, v.need, v.strict) == (20, 20, True)

    def test_unbalanced_sides_use_opposite_size(self):
        # A vertices need 5 d >= 3*5 + 8 = 23, B vertices need 5 d >= 3*4 + 8 = 20
        G = complete_distinct(4, 5)
        assert check_thm10_hypothesis(G) is None
        G = ColoredBipartiteGraph(4, 5, tuple((a, b, c) for a, b, c in G.edges if b != 4))
        assert check_thm10_hypothesis(G).vertex == (SIDE_A, 0)


class TestIsDstar:
    def test_canonical(self):
        blocks = is_dstar(gen_dstar(6, 6))
        assert blocks.a_blocks == (frozenset({0, 1}), frozenset({2, 3}), frozenset({4, 5}))
        assert blocks.b_blocks == (frozenset({0, 1}), frozenset({2, 3}), frozenset({4, 5}))

    def test_minus_one_arc(self):
        D = gen_dstar(6, 6)
        assert is_dstar(OrientedBipartiteGraph(6, 6, D.arcs[1:])) is None

    def test_every_directed_hexagon_on_3_3(self):
        # hexagons A0 - B_{p0} - A_{q1} - B_{p1} - A_{q2} - B_{p2} - A0, both orientations
        count = 0
        for q in itertools.permutations([1, 2]):
            for p in itertools.permutations(range(3)):
                cyc = [(0, "A"), (p[0], "B"), (q[0], "A"), (p[1], "B"), (q[1], "A"), (p[2], "B")]
                for rev in (False, True):
                    seq = cyc[::-1] if rev else cyc
                    arcs = []
                    for (u, su), (v, sv) in zip(seq, seq[1:] + seq[:1]):
                        arcs.append((u, v, "AtoB") if su == "A" else (v, u, "BtoA"))
                    D = OrientedBipartiteGraph(3, 3, tuple(arcs))
                    assert is_dstar(D) is not None
                    assert isomorphic_to_dstar(D)
                    count += 1
        assert count == 24  # each of the 12 directed hexagons is listed twice (two starting B's)

    @pytest.mark.parametrize("m, n", [(3, 3), (3, 6), (6, 3), (6, 6)])
    def test_relabeled_copies(self, m, n):
        rng = random.Random(m * 10 + n)
        for _ in range(20):
            pa, pb = rng.sample(range(m), m), rng.sample(range(n), n)
            blocks = is_dstar(relabel(gen_dstar(m, n), pa, pb))
            assert blocks is not None
            assert blocks.matches(relabel(gen_dstar(m, n), pa, pb))

    @settings(max_examples=300, deadline=None)
    @given(oriented_graphs(max_side=3))
    def test_agrees_with_permutation_search(self, D):
        assert (is_dstar(D) is not None) == isomorphic_to_dstar(D)

    def test_perturbed_6_6(self):
        D = gen_dstar(6, 6)
        flipped = list(D.arcs)
        a, b, d = flipped[0]
        flipped[0] = (a, b, "BtoA" if d.value == "AtoB" else "AtoB")
        E = OrientedBipartiteGraph(6, 6, tuple(flipped))
        assert is_dstar(E) is None and not isomorphic_to_dstar(E)


class TestExhaustive:
    # expected counts were produced by tests/oracles.py (naive enumeration + permutation search)
    @pytest.mark.parametrize(
        "m, n, satisfied, extremal",
        [(2, 2, 2, 0), (2, 3, 24, 0), (3, 2, 24, 0), (3, 3, 1284, 12), (3, 4, 1464, 0)],
    )
    def test_counts(self, m, n, satisfied, extremal):
        r = verify_thm9_exhaustive(m, n)
        assert r.instances_examined == 3 ** (m * n)
        assert (r.hypothesis_satisfied, r.extremal, r.counterexamples) == (satisfied, extremal, [])
        assert r.hypothesis_satisfied == r.with_cycle + r.extremal + len(r.counterexamples)

    def test_parallel_matches_serial(self):
        a = verify_thm9_exhaustive(3, 3, jobs=1).to_dict(include_elapsed=False)
        b = verify_thm9_exhaustive(3, 3, jobs=3).to_dict(include_elapsed=False)
        assert a == b

    def test_budget(self):
        with pytest.raises(BudgetExceededError, match="3\\*\\*20"):
            verify_thm9_exhaustive(4, 5)

    def test_degenerate_sizes_skipped(self):
        r = verify_thm9_exhaustive(1, 3)
        assert r.instances_examined == 0 and r.notes


class TestRandom:
    def test_thm9_9_9(self):
        r = verify_thm9_random(9, 9, 200, seed=0)
        assert r.counterexamples == []
        assert r.hypothesis_satisfied == r.with_cycle + r.extremal
        assert r.instances_examined + r.generation_failures == 200

    def test_thm9_3_3_hits_extremal(self):
        r = verify_thm9_random(3, 3, 300, seed=1, profile=(1 / 3, 1 / 3, 1 / 3))
        assert r.extremal > 0 and r.counterexamples == []

    def test_thm9_reproducible(self):
        a = verify_thm9_random(6, 7, 50, seed=5).to_dict(include_elapsed=False)
        b = verify_thm9_random(6, 7, 50, seed=5, jobs=2).to_dict(include_elapsed=False)
        assert a == b

    def test_thm10_4_4(self):
        r = verify_thm10_random(4, 4, 100, 16, 1, seed=0)
        assert r.hypothesis_satisfied == 100 and r.counterexamples == []

    def test_thm10_palette_3_never_meets_hypothesis(self):
        r = verify_thm10_random(5, 5, 3, 3, 1, seed=0)
        assert r.hypothesis_satisfied == 0 and r.generation_failures == 3
