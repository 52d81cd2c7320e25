"""Certificate-producing search for directed and rainbow 4-cycles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .graphs import SIDE_A, SIDE_B, ColoredBipartiteGraph, OrientedBipartiteGraph


@dataclass(frozen=True)
class DirectedC4Certificate:
    """The directed cycle a1 -> b1 -> a2 -> b2 -> a1."""

    a1: int
    a2: int
    b1: int
    b2: int

    def to_dict(self) -> dict:
        return {"a1": self.a1, "b1": self.b1, "a2": self.a2, "b2": self.b2}


@dataclass(frozen=True)
class RainbowC4Certificate:
    """The 4-cycle a1 - b1 - a2 - b2 - a1 with its colors listed in that order."""

    a1: int
    a2: int
    b1: int
    b2: int
    colors: tuple[int, int, int, int]

    def to_dict(self) -> dict:
        return {"a1": self.a1, "b1": self.b1, "a2": self.a2, "b2": self.b2, "colors": list(self.colors)}


class Verdict(NamedTuple):
    accepted: bool
    reason: str | None = None  # first failed check when rejected

    def __bool__(self) -> bool:
        return self.accepted


ACCEPT = Verdict(True)


def _low_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def find_c4_in_masks(out_a: Sequence[int], in_a: Sequence[int]) -> tuple[int, int, int, int] | None:
    """Least ``(a1, a2, b1, b2)`` with a1 < a2 closing a directed 4-cycle.

    ``out_a[a]`` / ``in_a[a]`` are bitmasks over B of the out- and
    in-neighbours of ``a``. A cycle through a1 and a2 exists iff
    N+(a1) & N-(a2) and N+(a2) & N-(a1) are both nonempty, and the least
    witness takes the lowest bit of each.
    """
    m = len(out_a)
    for a1 in range(m - 1):
        o1, i1 = out_a[a1], in_a[a1]
        if not o1 or not i1:
            continue
        for a2 in range(a1 + 1, m):
            s1 = o1 & in_a[a2]
            if s1:
                s2 = out_a[a2] & i1
                if s2:
                    return a1, a2, _low_bit(s1), _low_bit(s2)
    return None


def find_directed_c4(D: OrientedBipartiteGraph) -> DirectedC4Certificate | None:
    found = find_c4_in_masks(*D.masks)
    return DirectedC4Certificate(*found) if found else None


def find_rainbow_c4_exhaustive(G: ColoredBipartiteGraph) -> RainbowC4Certificate | None:
    """Least rainbow 4-cycle by ``(a1, a2, b1, b2)`` with a1 < a2 and b1 < b2."""
    rows = [dict(G.incident((SIDE_A, a))) for a in range(G.m)]
    for a1 in range(G.m - 1):
        r1 = rows[a1]
        for a2 in range(a1 + 1, G.m):
            r2 = rows[a2]
            # common neighbours whose two edges already differ in color
            common = [(b, r1[b], r2[b]) for b in r1 if b in r2 and r1[b] != r2[b]]
            for i, (b1, c11, c21) in enumerate(common):
                for b2, c12, c22 in common[i + 1:]:
                    if c12 != c11 and c12 != c21 and c22 != c11 and c22 != c21:
                        return RainbowC4Certificate(a1, a2, b1, b2, (c11, c21, c22, c12))
    return None


def verify_directed_c4(D: OrientedBipartiteGraph, cert: DirectedC4Certificate) -> Verdict:
    a1, a2, b1, b2 = cert.a1, cert.a2, cert.b1, cert.b2
    if not (0 <= a1 < D.m and 0 <= a2 < D.m and 0 <= b1 < D.n and 0 <= b2 < D.n):
        return Verdict(False, "out-of-range")
    if a1 == a2 or b1 == b2:
        return Verdict(False, "degenerate")
    steps = [
        ((SIDE_A, a1), (SIDE_B, b1)),
        ((SIDE_B, b1), (SIDE_A, a2)),
        ((SIDE_A, a2), (SIDE_B, b2)),
        ((SIDE_B, b2), (SIDE_A, a1)),
    ]
    for tail, head in steps:
        if not D.has_arc(tail, head):
            return Verdict(False, "missing-arc")
    return ACCEPT


def verify_rainbow_c4(G: ColoredBipartiteGraph, cert: RainbowC4Certificate) -> Verdict:
    a1, a2, b1, b2 = cert.a1, cert.a2, cert.b1, cert.b2
    if not (0 <= a1 < G.m and 0 <= a2 < G.m and 0 <= b1 < G.n and 0 <= b2 < G.n):
        return Verdict(False, "out-of-range")
    if a1 == a2 or b1 == b2:
        return Verdict(False, "degenerate")
    if len(cert.colors) != 4:
        return Verdict(False, "color-mismatch")
    actual = (G.color(a1, b1), G.color(a2, b1), G.color(a2, b2), G.color(a1, b2))
    if None in actual:
        return Verdict(False, "missing-edge")
    if tuple(cert.colors) != actual:
        return Verdict(False, "color-mismatch")
    if len(set(actual)) != 4:
        return Verdict(False, "not-rainbow")
    return ACCEPT
