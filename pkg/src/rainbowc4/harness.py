"""Exhaustive and randomized verification runs with counterexample reporting.

Every run produces a :class:`VerificationReport`. Work is split into
independent chunks whose partial counts are summed in chunk order, so the
report does not depend on ``jobs``.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .constructions import GenerationError, gen_random_colored, gen_random_oriented
from .cycles import find_c4_in_masks, find_directed_c4, find_rainbow_c4_exhaustive, verify_rainbow_c4
from .graphs import OrientedBipartiteGraph
from .recognize import check_thm9_hypothesis, check_thm10_hypothesis, is_dstar
from .reduction import Branch, GuidedResult, find_rainbow_c4_guided
from .serialize import graph_to_dict

EXHAUSTIVE_BUDGET = 16  # max m*n, i.e. 3**16 labeled orientations
DEFAULT_PROFILE = (0.2, 0.4, 0.4)


class BudgetExceededError(ValueError):
    pass


@dataclass
class VerificationReport:
    parameters: dict
    instances_examined: int = 0
    hypothesis_satisfied: int = 0
    with_cycle: int = 0
    extremal: int = 0
    counterexamples: list = field(default_factory=list)
    generation_failures: int = 0
    branches: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def diagnostic_rate(self) -> float:
        hits = self.branches.get(Branch.FALLBACK.value, 0)
        return hits / self.hypothesis_satisfied if self.hypothesis_satisfied else 0.0

    def merge(self, part: VerificationReport) -> None:
        self.instances_examined += part.instances_examined
        self.hypothesis_satisfied += part.hypothesis_satisfied
        self.with_cycle += part.with_cycle
        self.extremal += part.extremal
        self.counterexamples.extend(part.counterexamples)
        self.generation_failures += part.generation_failures
        for k, v in part.branches.items():
            self.branches[k] = self.branches.get(k, 0) + v
        self.notes.extend(part.notes)

    def to_dict(self, include_elapsed: bool = True) -> dict:
        d = {
            "parameters": self.parameters,
            "instances_examined": self.instances_examined,
            "hypothesis_satisfied": self.hypothesis_satisfied,
            "with_cycle": self.with_cycle,
            "extremal": self.extremal,
            "counterexamples": self.counterexamples,
            "generation_failures": self.generation_failures,
            "branches": dict(sorted(self.branches.items())),
            "diagnostic_rate": self.diagnostic_rate,
            "notes": self.notes,
        }
        if include_elapsed:
            d["elapsed"] = round(self.elapsed, 6)
        return d


def _run_chunks(worker, tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks))


def _rows(n: int) -> list[tuple[int, int]]:
    """All 3**n assignments of one A-row, as (out_mask, in_mask), in base-3 order.

    Digit b (most significant first) is 0 for no arc, 1 for a->b, 2 for b->a.
    """
    rows = []
    for digits in itertools.product(range(3), repeat=n):
        out = sum(1 << b for b, d in enumerate(digits) if d == 1)
        inn = sum(1 << b for b, d in enumerate(digits) if d == 2)
        rows.append((out, inn))
    return rows


def _thm9_subtree(task: tuple[int, int, int]) -> VerificationReport:
    """All labeled orientations whose first A-row is row number ``first``."""
    m, n, first = task
    rows = _rows(n)
    part = VerificationReport({})
    need_a, need_b = n, m
    subtree = [3 ** (n * (m - k - 1)) for k in range(m)]  # size below a row placed at depth k
    alive = [r for r in rows if 3 * r[0].bit_count() >= need_a]
    out_a: list[int] = [0] * m
    in_a: list[int] = [0] * m
    b_out = [0] * n  # arcs b->a placed so far

    def leaf() -> None:
        part.hypothesis_satisfied += 1
        if find_c4_in_masks(out_a, in_a) is not None:
            part.with_cycle += 1
            return
        graph = OrientedBipartiteGraph.from_masks(m, n, out_a, in_a)
        if is_dstar(graph) is not None:
            part.extremal += 1
        else:
            part.counterexamples.append(graph_to_dict(graph))

    def place(k: int, row: tuple[int, int]) -> None:
        out_a[k], in_a[k] = row
        for b in range(n):
            if row[1] >> b & 1:
                b_out[b] += 1
        remaining = m - k - 1
        if any(3 * (b_out[b] + remaining) < need_b for b in range(n)):
            part.instances_examined += subtree[k]
        elif remaining == 0:
            part.instances_examined += 1
            leaf()
        else:
            part.instances_examined += subtree[k + 1] * (len(rows) - len(alive))
            for nxt in alive:
                place(k + 1, nxt)
        for b in range(n):
            if row[1] >> b & 1:
                b_out[b] -= 1

    row = rows[first]
    if 3 * row[0].bit_count() < need_a:
        part.instances_examined += subtree[0]
    else:
        place(0, row)
    return part


def verify_thm9_exhaustive(m: int, n: int, jobs: int = 1) -> VerificationReport:
    """Check every labeled orientation of subgraphs of K_{m,n} against the out-degree theorem.

    Assignments are enumerated row by row; a partial assignment is pruned as
    soon as some vertex can no longer reach out-degree a third of the
    opposite side, and the pruned subtree still counts towards
    ``instances_examined`` (which always ends at 3**(m*n)).
    """
    if m * n > EXHAUSTIVE_BUDGET:
        raise BudgetExceededError(
            f"{m}x{n} needs 3**{m * n} = {3 ** (m * n):,} instances; budget is 3**{EXHAUSTIVE_BUDGET}"
        )
    start = time.perf_counter()
    report = VerificationReport({"m": m, "n": n, "mode": "exhaustive", "seed": None, "trials": None})
    if m < 2 or n < 2:
        report.notes.append("sizes below 2 are outside the theorem; skipped")
        return report
    for part in _run_chunks(_thm9_subtree, [(m, n, i) for i in range(3**n)], jobs):
        report.merge(part)
    assert report.instances_examined == 3 ** (m * n)
    report.elapsed = time.perf_counter() - start
    return report


def _trial_seeds(seed: int, trials: int) -> list[int]:
    master = random.Random(seed)
    return [master.getrandbits(63) for _ in range(trials)]


def _split(items: list, jobs: int) -> list[list]:
    size = max(1, -(-len(items) // max(1, jobs)))
    return [items[i : i + size] for i in range(0, len(items), size)]


def _thm9_trials(task) -> VerificationReport:
    m, n, profile, seeds = task
    part = VerificationReport({})
    for s in seeds:
        try:
            D = gen_random_oriented(m, n, profile, s, enforce_thm9=True)
        except GenerationError:
            part.generation_failures += 1
            continue
        part.instances_examined += 1
        if check_thm9_hypothesis(D) is not None:
            continue
        part.hypothesis_satisfied += 1
        if find_directed_c4(D) is not None:
            part.with_cycle += 1
        elif is_dstar(D) is not None:
            part.extremal += 1
        else:
            part.counterexamples.append(graph_to_dict(D))
    return part


def verify_thm9_random(
    m: int, n: int, trials: int, seed: int = 0, jobs: int = 1, profile=DEFAULT_PROFILE
) -> VerificationReport:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    start = time.perf_counter()
    report = VerificationReport(
        {"m": m, "n": n, "mode": "random", "seed": seed, "trials": trials, "profile": list(profile)}
    )
    if m < 2 or n < 2:
        report.notes.append("sizes below 2 are outside the theorem; skipped")
        return report
    tasks = [(m, n, tuple(profile), chunk) for chunk in _split(_trial_seeds(seed, trials), jobs)]
    for part in _run_chunks(_thm9_trials, tasks, jobs):
        report.merge(part)
    report.elapsed = time.perf_counter() - start
    return report


def _thm10_trials(task) -> VerificationReport:
    m, n, palette, edge_prob, seeds = task
    part = VerificationReport({})
    for s in seeds:
        try:
            G = gen_random_colored(m, n, edge_prob, palette, s, enforce_thm10=True)
        except GenerationError:
            part.generation_failures += 1
            continue
        part.instances_examined += 1
        if check_thm10_hypothesis(G) is not None:
            continue
        part.hypothesis_satisfied += 1
        result = find_rainbow_c4_guided(G)
        assert isinstance(result, GuidedResult)
        part.branches[result.branch.value] = part.branches.get(result.branch.value, 0) + 1
        if result.branch is Branch.EXTREMAL_ESCAPE:
            part.extremal += 1
        if result.diagnostic:
            part.notes.append(f"seed {s}: {result.diagnostic}")
        ok = result.certificate is not None and bool(verify_rainbow_c4(G, result.certificate))
        ok = ok and find_rainbow_c4_exhaustive(G) is not None
        if ok:
            part.with_cycle += 1
        else:
            part.counterexamples.append(graph_to_dict(G))
    return part


def verify_thm10_random(
    m: int, n: int, trials: int, palette: int, edge_prob, seed: int = 0, jobs: int = 1
) -> VerificationReport:
    """Run the guided rainbow finder on hypothesis-enforced random colorings.

    Each certificate is re-checked against the graph and the exhaustive
    finder must agree that a rainbow C4 exists; any disagreement is recorded
    as a counterexample.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    start = time.perf_counter()
    report = VerificationReport(
        {
            "m": m,
            "n": n,
            "mode": "random",
            "seed": seed,
            "trials": trials,
            "palette": palette,
            "edge_prob": str(edge_prob),
        }
    )
    tasks = [(m, n, palette, edge_prob, chunk) for chunk in _split(_trial_seeds(seed, trials), jobs)]
    for part in _run_chunks(_thm10_trials, tasks, jobs):
        report.merge(part)
    report.elapsed = time.perf_counter() - start
    return report
