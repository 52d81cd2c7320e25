"""Deterministic constructions and seeded random instance generators.

All randomness comes from one of two streams, each seeded only by the
``seed`` argument:

* oriented instances use :class:`random.Random` (Mersenne Twister);
* colored instances use :func:`numpy.random.default_rng` (PCG64), drawn in
  fixed batches of :data:`COLORED_BATCH` candidate graphs.

Both are stable across platforms, so a seed reported by a failing harness run
reproduces the instance anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import (
    SIDE_A,
    SIDE_B,
    Arc,
    ColoredBipartiteGraph,
    Direction,
    OrientedBipartiteGraph,
)

ORIENTED_ATTEMPTS = 100
COLORED_ATTEMPTS = 20_000
COLORED_BATCH = 256


class DivisibilityError(ValueError):
    pass


class GenerationError(RuntimeError):
    def __init__(self, message: str, seed: int, vertex=None):
        self.seed = seed
        self.vertex = vertex
        super().__init__(f"{message} (seed={seed}" + (f", last failing vertex={vertex})" if vertex else ")"))


@dataclass(frozen=True)
class PaddingResult:
    padded: OrientedBipartiteGraph
    added_a: int
    added_b: int


def dstar_blocks(m: int, n: int) -> tuple[tuple[range, ...], tuple[range, ...]]:
    """Contiguous block layout ``(M0, M1, M2), (N0, N1, N2)`` of D*(m, n)."""
    if m < 3 or n < 3 or m % 3 or n % 3:
        raise DivisibilityError(f"D*(m, n) needs positive multiples of 3, got ({m}, {n})")
    p, q = m // 3, n // 3
    return (
        tuple(range(i * p, (i + 1) * p) for i in range(3)),
        tuple(range(i * q, (i + 1) * q) for i in range(3)),
    )


def gen_dstar(m: int, n: int) -> OrientedBipartiteGraph:
    """The extremal graph: all arcs M_i -> N_i and N_i -> M_{i+1 mod 3}."""
    a_blocks, b_blocks = dstar_blocks(m, n)
    arcs = []
    for i in range(3):
        for b in b_blocks[i]:
            arcs.extend(Arc(a, b, Direction.A_TO_B) for a in a_blocks[i])
            arcs.extend(Arc(a, b, Direction.B_TO_A) for a in a_blocks[(i + 1) % 3])
    return OrientedBipartiteGraph(m, n, tuple(arcs))


def pad_to_multiple_of_three(D: OrientedBipartiteGraph) -> PaddingResult:
    """Round both sides up to multiples of 3 with source-only vertices.

    Each new A vertex gets an arc to every original B vertex, and each new B
    vertex an arc to every original A vertex. New vertices receive no arcs,
    so no directed cycle can pass through them.
    """
    m, n = D.m, D.n
    s1 = -m % 3
    s2 = -n % 3
    arcs = list(D.arcs)
    arcs.extend(Arc(a, b, Direction.A_TO_B) for a in range(m, m + s1) for b in range(n))
    arcs.extend(Arc(a, b, Direction.B_TO_A) for b in range(n, n + s2) for a in range(m))
    return PaddingResult(OrientedBipartiteGraph(m + s1, n + s2, tuple(arcs)), s1, s2)


def gen_proper_coloring_complete(n: int) -> ColoredBipartiteGraph:
    """K_{n,n} colored by the cyclic Latin square C(a_i, b_j) = (i + j) mod n + 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return ColoredBipartiteGraph(
        n, n, tuple((i, j, (i + j) % n + 1) for i in range(n) for j in range(n))
    )


def _thm9_deficient(m: int, n: int, out_a: list[int], out_b: list[int]):
    for a in range(m):
        if 3 * out_a[a].bit_count() < n:
            return (SIDE_A, a)
    for b in range(n):
        if 3 * out_b[b].bit_count() < m:
            return (SIDE_B, b)
    return None


def gen_random_oriented(
    m: int,
    n: int,
    profile: tuple[float, float, float],
    seed: int,
    enforce_thm9: bool = False,
    max_attempts: int = ORIENTED_ATTEMPTS,
) -> OrientedBipartiteGraph:
    """Random orientation of a subgraph of K_{m,n}.

    Each pair independently gets no arc, an A->B arc or a B->A arc with the
    probabilities in ``profile``. With ``enforce_thm9`` every vertex is then
    topped up to out-degree at least a third of the opposite side by adding
    arcs towards uniformly chosen non-adjacent vertices; existing arcs are
    never flipped. A sample that cannot be repaired is discarded and a fresh
    one drawn, up to ``max_attempts`` samples.
    """
    p_none, p_ab, p_ba = (float(Fraction(p)) for p in profile)
    if min(p_none, p_ab, p_ba) < 0 or abs(p_none + p_ab + p_ba - 1) > 1e-9:
        raise ValueError(f"profile must be nonnegative and sum to 1, got {profile}")
    rng = random.Random(seed)
    cut = p_none + p_ab
    last = None
    for _ in range(max_attempts if enforce_thm9 else 1):
        # out_a[a]: B-bits of arcs a->b; out_b[b]: A-bits of arcs b->a
        out_a = [0] * m
        out_b = [0] * n
        for a in range(m):
            for b in range(n):
                u = rng.random()
                if u < p_none:
                    continue
                if u < cut:
                    out_a[a] |= 1 << b
                else:
                    out_b[b] |= 1 << a
        if enforce_thm9:
            _repair_thm9(m, n, out_a, out_b, rng)
            last = _thm9_deficient(m, n, out_a, out_b)
            if last is not None:
                continue
        in_a = [sum(1 << b for b in range(n) if out_b[b] >> a & 1) for a in range(m)]
        return OrientedBipartiteGraph.from_masks(m, n, out_a, in_a)
    raise GenerationError(
        f"could not satisfy the out-degree hypothesis in {max_attempts} attempts", seed, last
    )


def _repair_thm9(m: int, n: int, out_a: list[int], out_b: list[int], rng: random.Random) -> None:
    for a in range(m):
        need = -(-n // 3) - out_a[a].bit_count()
        if need > 0:
            free = [b for b in range(n) if not (out_a[a] >> b & 1 or out_b[b] >> a & 1)]
            for b in rng.sample(free, min(need, len(free))):
                out_a[a] |= 1 << b
    for b in range(n):
        need = -(-m // 3) - out_b[b].bit_count()
        if need > 0:
            free = [a for a in range(m) if not (out_b[b] >> a & 1 or out_a[a] >> b & 1)]
            for a in rng.sample(free, min(need, len(free))):
                out_b[b] |= 1 << a


def _color_degrees(present: np.ndarray, colors: np.ndarray, axis: int) -> np.ndarray:
    """Distinct colors per vertex for a batch of (batch, m, n) colorings; 0 marks no edge."""
    c = np.where(present, colors, 0)
    c = np.sort(c, axis=axis)
    first = np.take(c, [0], axis=axis)
    changes = np.diff(c, axis=axis) != 0
    return changes.sum(axis=axis) + (first != 0).squeeze(axis)


def gen_random_colored(
    m: int,
    n: int,
    edge_prob,
    palette: int,
    seed: int,
    enforce_thm10: bool = False,
    max_attempts: int = COLORED_ATTEMPTS,
    strict: bool = False,
) -> ColoredBipartiteGraph:
    """Random edge-colored subgraph of K_{m,n}.

    Each pair is an edge with probability ``edge_prob`` and its color is
    uniform on ``1..palette``. With ``enforce_thm10`` candidate graphs are
    drawn until one meets the color-degree hypothesis at every vertex (a
    pure rejection sampler, so accepted graphs are distributed as the raw
    sample conditioned on the hypothesis).
    """
    p = float(Fraction(edge_prob))
    if enforce_thm10 and (m < 1 or n < 1):
        raise ValueError("hypothesis enforcement needs both sides nonempty")
    if not 0 <= p <= 1:
        raise ValueError(f"edge_prob must lie in [0, 1], got {edge_prob}")
    if palette < 1:
        raise ValueError("palette must be at least 1")
    rng = np.random.default_rng(seed)
    batch = COLORED_BATCH if enforce_thm10 else 1
    drawn = 0
    last = None
    while drawn < max_attempts or not enforce_thm10:
        present = rng.random((batch, m, n)) < p
        colors = rng.integers(1, palette + 1, size=(batch, m, n))
        k = 0
        if enforce_thm10:
            deg_a = _color_degrees(present, colors, axis=2)  # (batch, m)
            deg_b = _color_degrees(present, colors, axis=1)  # (batch, n)
            lhs_a, lhs_b = 5 * deg_a, 5 * deg_b
            need_a, need_b = 3 * n + 8, 3 * m + 8
            if strict:
                ok_a, ok_b = lhs_a > need_a, lhs_b > need_b
            else:
                ok_a, ok_b = lhs_a >= need_a, lhs_b >= need_b
            good = ok_a.all(axis=1) & ok_b.all(axis=1)
            limit = min(batch, max_attempts - drawn)
            hits = np.flatnonzero(good[:limit])
            if hits.size == 0:
                drawn += limit
                i = limit - 1
                bad_a = np.flatnonzero(~ok_a[i])
                last = (SIDE_A, int(bad_a[0])) if bad_a.size else (SIDE_B, int(np.flatnonzero(~ok_b[i])[0]))
                if drawn >= max_attempts:
                    break
                continue
            k = int(hits[0])
        edges = tuple(
            (a, b, int(colors[k, a, b])) for a in range(m) for b in range(n) if present[k, a, b]
        )
        return ColoredBipartiteGraph(m, n, edges)
    raise GenerationError(
        f"could not satisfy the color-degree hypothesis in {max_attempts} attempts", seed, last
    )
