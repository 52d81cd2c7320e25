"""Exact degree-hypothesis checks and recognition of the extremal graph D*(m, n)."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    SIDE_A,
    SIDE_B,
    ColoredBipartiteGraph,
    OrientedBipartiteGraph,
    Vertex,
    color_degree,
    out_degree,
)


@dataclass(frozen=True)
class HypothesisViolation:
    """First vertex failing a degree hypothesis.

    ``have`` is the vertex's degree (out-degree or color degree) scaled by the
    threshold denominator, ``need`` the bound it had to reach.
    """

    vertex: Vertex
    have: int
    need: int
    strict: bool = False

    def to_dict(self) -> dict:
        return {"vertex": list(self.vertex), "have": self.have, "need": self.need, "strict": self.strict}

    def __str__(self) -> str:
        side = "A" if self.vertex[0] == SIDE_A else "B"
        op = ">" if self.strict else ">="
        return f"vertex {side}{self.vertex[1]} fails {self.have} {op} {self.need}"


def check_thm9_hypothesis(D: OrientedBipartiteGraph) -> HypothesisViolation | None:
    """None if 3*d+(u) >= n on side A and 3*d+(v) >= m on side B, else the first violator."""
    for v in D.vertices():
        need = D.n if v[0] == SIDE_A else D.m
        have = 3 * out_degree(D, v)
        if have < need:
            return HypothesisViolation(v, have, need)
    return None


def check_thm10_hypothesis(G: ColoredBipartiteGraph, strict: bool = False) -> HypothesisViolation | None:
    """None if 5*d^c(u) >= 3n + 8 on side A and 5*d^c(v) >= 3m + 8 on side B.

    ``strict`` replaces >= by >, the form of the corrected balanced-case bound.
    """
    for v in G.vertices():
        need = 3 * (G.n if v[0] == SIDE_A else G.m) + 8
        have = 5 * color_degree(G, v)
        if have < need or (strict and have == need):
            return HypothesisViolation(v, have, need, strict)
    return None


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (M0, M1, M2) and (N0, N1, N2) witnessing a copy of D*(m, n)."""

    a_blocks: tuple[frozenset[int], frozenset[int], frozenset[int]]
    b_blocks: tuple[frozenset[int], frozenset[int], frozenset[int]]

    def to_dict(self) -> dict:
        return {
            "a_blocks": [sorted(s) for s in self.a_blocks],
            "b_blocks": [sorted(s) for s in self.b_blocks],
        }

    def expected_arcs(self) -> set[tuple[int, int, str]]:
        arcs = set()
        for i in range(3):
            for b in self.b_blocks[i]:
                arcs.update((a, b, "AtoB") for a in self.a_blocks[i])
                arcs.update((a, b, "BtoA") for a in self.a_blocks[(i + 1) % 3])
        return arcs

    def matches(self, D: OrientedBipartiteGraph) -> bool:
        """Check the partition sizes and that D's arc set is exactly the block pattern."""
        if D.m % 3 or D.n % 3:
            return False
        if sorted(len(s) for s in self.a_blocks) != [D.m // 3] * 3:
            return False
        if sorted(len(s) for s in self.b_blocks) != [D.n // 3] * 3:
            return False
        if set().union(*self.a_blocks) != set(range(D.m)) or set().union(*self.b_blocks) != set(range(D.n)):
            return False
        return {(a, b, d.value) for a, b, d in D.arcs} == self.expected_arcs()


def _union_out(D: OrientedBipartiteGraph, side: int, block: set[int]) -> set[int]:
    out: set[int] = set()
    for v in block:
        out.update(D.out_neighbors((side, v)))
    return out


def is_dstar(D: OrientedBipartiteGraph) -> BlockDecomposition | None:
    """Recognize D*(m, n) up to a side-preserving relabeling.

    The blocks are recovered by walking out-neighbourhoods from vertex A0:
    N0 = N+(A0), M1 = N+(N0), N1 = N+(M1), M2 = N+(N1), N2 = N+(M2),
    M0 = N+(N2). The result is only returned once the arc set has been
    checked against the full pattern, so it is a verifiable witness.
    """
    m, n = D.m, D.n
    if m < 3 or n < 3 or m % 3 or n % 3 or len(D.arcs) != 2 * m * n // 3:
        return None
    n0 = set(D.out_neighbors((SIDE_A, 0)))
    m1 = _union_out(D, SIDE_B, n0)
    n1 = _union_out(D, SIDE_A, m1)
    m2 = _union_out(D, SIDE_B, n1)
    n2 = _union_out(D, SIDE_A, m2)
    m0 = _union_out(D, SIDE_B, n2)
    blocks = BlockDecomposition(
        (frozenset(m0), frozenset(m1), frozenset(m2)),
        (frozenset(n0), frozenset(n1), frozenset(n2)),
    )
    return blocks if blocks.matches(D) else None
