"""Oriented and edge-colored bipartite graphs.

Vertices are addressed as ``(side, index)`` pairs: side ``0`` is the A side
(``m`` vertices) and side ``1`` is the B side (``n`` vertices). Both graph
types are frozen value objects; neither constructor enforces the structural
invariants, so that :func:`validate` can report everything that is wrong
with a hand-written input. Algorithms assume a graph that validates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import NamedTuple, Union

SIDE_A = 0
SIDE_B = 1

Vertex = tuple[int, int]


class InvalidVertexError(ValueError):
    pass


class GraphValidationError(ValueError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


class Direction(str, Enum):
    A_TO_B = "AtoB"
    B_TO_A = "BtoA"

    def __str__(self) -> str:
        return self.value


class Arc(NamedTuple):
    a: int
    b: int
    direction: Direction


class Edge(NamedTuple):
    a: int
    b: int
    color: int


class Violation(NamedTuple):
    kind: str  # "out-of-range" | "digon" | "duplicate-arc" | "duplicate-edge" | "bad-color" | "bad-direction"
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


def _check_vertex(v: Vertex, m: int, n: int) -> tuple[int, int]:
    try:
        side, idx = v
    except (TypeError, ValueError):
        raise InvalidVertexError(f"not a (side, index) pair: {v!r}") from None
    if side not in (SIDE_A, SIDE_B):
        raise InvalidVertexError(f"side must be 0 or 1, got {side!r}")
    size = m if side == SIDE_A else n
    if not 0 <= idx < size:
        raise InvalidVertexError(f"index {idx} out of range for side {side} of size {size}")
    return side, idx


@dataclass(frozen=True)
class OrientedBipartiteGraph:
    m: int
    n: int
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self):
        arcs = tuple(sorted(Arc(a, b, Direction(d)) for a, b, d in self.arcs))
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_masks(cls, m: int, n: int, out_a, in_a) -> OrientedBipartiteGraph:
        """Build from per-A-vertex bitmasks of out- and in-neighbours in B."""
        arcs = []
        for a in range(m):
            for b in range(n):
                if out_a[a] >> b & 1:
                    arcs.append(Arc(a, b, Direction.A_TO_B))
                elif in_a[a] >> b & 1:
                    arcs.append(Arc(a, b, Direction.B_TO_A))
        return cls(m, n, tuple(arcs))

    def validated(self) -> OrientedBipartiteGraph:
        problems = validate(self)
        if problems:
            raise GraphValidationError(problems)
        return self

    @cached_property
    def masks(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """``(out_a, in_a)``: bit b of ``out_a[a]`` is set iff a->b, of ``in_a[a]`` iff b->a."""
        out_a = [0] * self.m
        in_a = [0] * self.m
        for a, b, d in self.arcs:
            if d is Direction.A_TO_B:
                out_a[a] |= 1 << b
            else:
                in_a[a] |= 1 << b
        return tuple(out_a), tuple(in_a)

    @cached_property
    def _b_masks(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        out_b = [0] * self.n
        in_b = [0] * self.n
        for a, b, d in self.arcs:
            if d is Direction.B_TO_A:
                out_b[b] |= 1 << a
            else:
                in_b[b] |= 1 << a
        return tuple(out_b), tuple(in_b)

    def out_neighbors(self, v: Vertex) -> list[int]:
        side, idx = _check_vertex(v, self.m, self.n)
        mask = self.masks[0][idx] if side == SIDE_A else self._b_masks[0][idx]
        return _bits(mask)

    def in_neighbors(self, v: Vertex) -> list[int]:
        side, idx = _check_vertex(v, self.m, self.n)
        mask = self.masks[1][idx] if side == SIDE_A else self._b_masks[1][idx]
        return _bits(mask)

    def has_arc(self, tail: Vertex, head: Vertex) -> bool:
        ts, ti = _check_vertex(tail, self.m, self.n)
        hs, hi = _check_vertex(head, self.m, self.n)
        if ts == hs:
            return False
        if ts == SIDE_A:
            return bool(self.masks[0][ti] >> hi & 1)
        return bool(self.masks[1][hi] >> ti & 1)

    def vertices(self):
        yield from ((SIDE_A, a) for a in range(self.m))
        yield from ((SIDE_B, b) for b in range(self.n))


@dataclass(frozen=True)
class ColoredBipartiteGraph:
    m: int
    n: int
    edges: tuple[Edge, ...] = ()
    _colors: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        edges = tuple(sorted(Edge(*e) for e in self.edges))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_colors", {(a, b): c for a, b, c in edges})

    def validated(self) -> ColoredBipartiteGraph:
        problems = validate(self)
        if problems:
            raise GraphValidationError(problems)
        return self

    def color(self, a: int, b: int) -> int | None:
        """Color of edge ``a``-``b`` (A index, B index), or None if absent."""
        return self._colors.get((a, b))

    def has_edge(self, a: int, b: int) -> bool:
        return (a, b) in self._colors

    @cached_property
    def _incident(self) -> tuple[tuple[list, ...], tuple[list, ...]]:
        # per vertex: [(neighbour index, color)] in increasing neighbour order
        inc_a = tuple([] for _ in range(self.m))
        inc_b = tuple([] for _ in range(self.n))
        for a, b, c in self.edges:
            inc_a[a].append((b, c))
            inc_b[b].append((a, c))
        for lst in inc_b:
            lst.sort()
        return inc_a, inc_b

    def incident(self, v: Vertex) -> list[tuple[int, int]]:
        side, idx = _check_vertex(v, self.m, self.n)
        return list(self._incident[side][idx])

    def degree(self, v: Vertex) -> int:
        side, idx = _check_vertex(v, self.m, self.n)
        return len(self._incident[side][idx])

    def vertices(self):
        yield from ((SIDE_A, a) for a in range(self.m))
        yield from ((SIDE_B, b) for b in range(self.n))


AnyGraph = Union[OrientedBipartiteGraph, ColoredBipartiteGraph]


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def out_degree(D: OrientedBipartiteGraph, v: Vertex) -> int:
    side, idx = _check_vertex(v, D.m, D.n)
    mask = D.masks[0][idx] if side == SIDE_A else D._b_masks[0][idx]
    return mask.bit_count()


def in_degree(D: OrientedBipartiteGraph, v: Vertex) -> int:
    side, idx = _check_vertex(v, D.m, D.n)
    mask = D.masks[1][idx] if side == SIDE_A else D._b_masks[1][idx]
    return mask.bit_count()


def color_degree(G: ColoredBipartiteGraph, v: Vertex) -> int:
    return len({c for _, c in G.incident(v)})


def color_neighborhood(
    G: ColoredBipartiteGraph, v: Vertex, must_include: Vertex | None = None
) -> list[Vertex]:
    """A maximal set of neighbours of ``v`` joined to it by pairwise distinct colors.

    Neighbours are scanned in increasing index order and the first one seen
    for each color is kept. ``must_include`` (a neighbour of ``v``) is placed
    first so that its color class is represented by it.
    """
    side, _ = _check_vertex(v, G.m, G.n)
    other = 1 - side
    incident = G.incident(v)
    chosen: list[Vertex] = []
    seen: set[int] = set()
    if must_include is not None:
        ms, mi = _check_vertex(must_include, G.m, G.n)
        color = dict(incident).get(mi) if ms == other else None
        if color is None:
            raise InvalidVertexError(f"{must_include} is not adjacent to {v}")
        chosen.append((other, mi))
        seen.add(color)
    for u, c in incident:
        if c not in seen:
            seen.add(c)
            chosen.append((other, u))
    return chosen


def validate(graph: AnyGraph) -> list[Violation]:
    """Return every invariant violation found; an empty list means the graph is valid."""
    problems: list[Violation] = []
    m, n = graph.m, graph.n
    if not (isinstance(m, int) and isinstance(n, int)) or m < 0 or n < 0:
        return [Violation("out-of-range", f"side sizes must be non-negative integers, got ({m}, {n})")]
    seen: dict[tuple[int, int], object] = {}
    if isinstance(graph, OrientedBipartiteGraph):
        for a, b, d in graph.arcs:
            if not (0 <= a < m and 0 <= b < n):
                problems.append(Violation("out-of-range", f"arc ({a}, {b}) outside sides ({m}, {n})"))
                continue
            if (a, b) in seen:
                kind = "duplicate-arc" if seen[a, b] == d else "digon"
                problems.append(Violation(kind, f"pair ({a}, {b}) carries more than one arc"))
            seen[a, b] = d
    else:
        for a, b, c in graph.edges:
            if not (0 <= a < m and 0 <= b < n):
                problems.append(Violation("out-of-range", f"edge ({a}, {b}) outside sides ({m}, {n})"))
                continue
            if isinstance(c, bool) or not isinstance(c, int) or c < 1:
                problems.append(Violation("bad-color", f"edge ({a}, {b}) has color {c!r}"))
            if (a, b) in seen:
                problems.append(Violation("duplicate-edge", f"pair ({a}, {b}) appears more than once"))
            seen[a, b] = c
    return problems
