"""Exact small Ramsey values for double stars by pruned exhaustive search.

The search assigns edges of ``K_n`` in lexicographic order, red before
blue, with edge ``(0, 1)`` fixed red (colour-swap symmetry).  A branch is
cut as soon as the colour just used contains ``S(m1, m2)``: colour graphs
only grow along a branch, so a copy can never disappear again.

The tree is cut at a fixed prefix depth.  Surviving prefixes are
independent tasks; results are merged in prefix order, so answers,
witnesses and node counts do not depend on the worker count.
"""

from __future__ import annotations

import enum
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .bounds import best_upper, r_b
from .colouring import Colouring2, bits
from .constructions import canonical_colouring
from .doublestar import DoubleStarSpec, _feasible, feasible_pairs, find_monochromatic

DEFAULT_PREFIX_DEPTH = 12


class Status(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass
class SearchStats:
    nodes: int = 0
    prunes: int = 0
    seconds: float = 0.0

    def add(self, other: SearchStats) -> None:
        self.nodes += other.nodes
        self.prunes += other.prunes
        self.seconds += other.seconds


@dataclass
class Decision:
    """Answer to "is there a good colouring of K_n?"."""

    n: int
    status: Status
    witness: Optional[Colouring2] = None
    stats: SearchStats = field(default_factory=SearchStats)


class _BudgetExceeded(Exception):
    pass


def _edge_list(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _copy_through(adj: list[int], i: int, j: int, m1: int, m2: int) -> bool:
    """Whether some centre pair touching ``i`` or ``j`` carries a copy."""
    need = m1 + m2 + 2
    for a in (i, j):
        na = adj[a]
        da = na.bit_count()
        if da <= m2:
            continue
        for b in bits(na):
            nb = adj[b]
            db = nb.bit_count()
            if db <= m2:
                continue
            if (da > m1 or db > m1) and (na | nb).bit_count() >= need:
                return True
    return False


class _Builder:
    """Mutable partial colouring with undo, private to one DFS."""

    def __init__(self, n: int, spec: DoubleStarSpec, limit: Optional[int]):
        self.n = n
        self.m1, self.m2 = spec.m1, spec.m2
        self.edges = _edge_list(n)
        self.adj = ([0] * n, [0] * n)  # red, blue
        self.limit = limit
        self.nodes = 0
        self.prunes = 0

    def push(self, k: int, colour: int) -> bool:
        """Assign edge ``k``; returns False (and undoes) if it makes a copy."""
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise _BudgetExceeded
        i, j = self.edges[k]
        adj = self.adj[colour]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
        if _copy_through(adj, i, j, self.m1, self.m2):
            self.pop(k, colour)
            self.prunes += 1
            return False
        return True

    def pop(self, k: int, colour: int) -> None:
        i, j = self.edges[k]
        adj = self.adj[colour]
        adj[i] &= ~(1 << j)
        adj[j] &= ~(1 << i)

    def choices(self, k: int) -> tuple[int, ...]:
        return (0,) if k == 0 else (0, 1)

    def dfs(self, k: int) -> bool:
        if k == len(self.edges):
            return True
        for colour in self.choices(k):
            if self.push(k, colour):
                if self.dfs(k + 1):
                    return True
                self.pop(k, colour)
        return False

    def prefixes(self, k: int, depth: int, path: list[int], out: list[tuple[int, ...]]) -> None:
        if k == depth:
            out.append(tuple(path))
            return
        for colour in self.choices(k):
            if self.push(k, colour):
                path.append(colour)
                self.prefixes(k + 1, depth, path, out)
                path.pop()
                self.pop(k, colour)


def _run_prefix(args) -> tuple[Status, Optional[tuple[int, ...]], int, int]:
    n, m1, m2, prefix, limit = args
    b = _Builder(n, DoubleStarSpec(m1, m2), limit)
    for k, colour in enumerate(prefix):
        i, j = b.edges[k]
        b.adj[colour][i] |= 1 << j
        b.adj[colour][j] |= 1 << i
    try:
        found = b.dfs(len(prefix))
    except _BudgetExceeded:
        return Status.UNKNOWN, None, b.nodes, b.prunes
    if found:
        return Status.YES, tuple(b.adj[0]), b.nodes, b.prunes
    return Status.NO, None, b.nodes, b.prunes


def exists_good_colouring(
    n: int,
    spec: DoubleStarSpec,
    budget: Optional[int] = None,
    threads: int = 1,
    prefix_depth: int = DEFAULT_PREFIX_DEPTH,
) -> Decision:
    """Decide whether ``K_n`` has a 2-colouring without monochromatic ``S(m1, m2)``.

    ``budget`` caps the number of edge assignments tried; exceeding it
    yields ``Status.UNKNOWN``.  A ``YES`` witness is the first good
    colouring in DFS order regardless of ``threads``.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    t0 = time.perf_counter()
    stats = SearchStats()
    if spec.order > n:
        # nothing fits; every colouring is good
        witness = Colouring2.monochromatic(n)
        stats.seconds = time.perf_counter() - t0
        return Decision(n, Status.YES, witness, stats)

    root = _Builder(n, spec, budget)
    depth = min(prefix_depth, len(root.edges))
    prefixes: list[tuple[int, ...]] = []
    try:
        root.prefixes(0, depth, [], prefixes)
    except _BudgetExceeded:
        stats.nodes, stats.prunes = root.nodes, root.prunes
        stats.seconds = time.perf_counter() - t0
        return Decision(n, Status.UNKNOWN, None, stats)
    stats.nodes, stats.prunes = root.nodes, root.prunes

    tasks = [(n, spec.m1, spec.m2, p, budget) for p in prefixes]
    status, witness = Status.NO, None

    def merge(results) -> tuple[Status, Optional[Colouring2]]:
        for st, rows, nodes, prunes in results:
            stats.nodes += nodes
            stats.prunes += prunes
            if st is Status.UNKNOWN or (budget is not None and stats.nodes > budget):
                return Status.UNKNOWN, None
            if st is Status.YES:
                return Status.YES, Colouring2(n, rows)
        return Status.NO, None

    if threads <= 1 or len(tasks) < 2:
        status, witness = merge(map(_run_prefix, tasks))
    else:
        pool = ProcessPoolExecutor(max_workers=threads)
        try:
            chunk = max(1, len(tasks) // (threads * 16))
            status, witness = merge(pool.map(_run_prefix, tasks, chunksize=chunk))
        finally:
            pool.shutdown(wait=True, cancel_futures=True)
    stats.seconds = time.perf_counter() - t0
    return Decision(n, status, witness, stats)


@dataclass
class SearchOutcome:
    spec: DoubleStarSpec
    ramsey_value: Optional[int] = None
    exhausted_at: Optional[int] = None
    witnesses: dict[int, Colouring2] = field(default_factory=dict)
    decisions: list[Decision] = field(default_factory=list)
    stats: SearchStats = field(default_factory=SearchStats)

    def report(self) -> str:
        s = self.spec
        lines = [f"exact search for {s}"]
        for n in sorted(self.witnesses):
            src = "canonical" if not any(d.n == n for d in self.decisions) else "search"
            lines.append(f"  n={n}: good colouring found ({src})")
        for d in self.decisions:
            if d.status is not Status.YES:
                lines.append(
                    f"  n={d.n}: {d.status.value} "
                    f"(nodes={d.stats.nodes} prunes={d.stats.prunes})"
                )
        lines.append(f"  total nodes={self.stats.nodes} prunes={self.stats.prunes}")
        if self.ramsey_value is not None:
            lines.append(f"R(S({s.m1},{s.m2})) = {self.ramsey_value}")
        else:
            low = max(self.witnesses) + 1 if self.witnesses else r_b(s)
            lines.append(f"R(S({s.m1},{s.m2})) >= {low} (undecided)")
        return "\n".join(lines) + "\n"

    def record(self) -> str:
        s = self.spec
        value = "-" if self.ramsey_value is None else self.ramsey_value
        exhausted = "-" if self.exhausted_at is None else self.exhausted_at
        largest = max(self.witnesses) if self.witnesses else "-"
        return (
            f"m1={s.m1} m2={s.m2} ramsey_value={value} exhausted_at={exhausted} "
            f"largest_witness_n={largest} nodes={self.stats.nodes} prunes={self.stats.prunes}"
        )


def ramsey_exact(
    spec: DoubleStarSpec,
    max_n: Optional[int] = None,
    budget: Optional[int] = None,
    threads: int = 1,
    prefix_depth: int = DEFAULT_PREFIX_DEPTH,
) -> SearchOutcome:
    """Pin down ``R(S(m1, m2))`` by searching upward from ``r_b - 1``.

    ``r_b - 1`` is covered by the canonical colouring without search.
    ``max_n`` defaults to the best known upper bound, where the answer
    must be negative.  ``budget`` applies to each ``n`` separately.
    """
    out = SearchOutcome(spec)
    start = r_b(spec) - 1
    canonical = canonical_colouring(spec)
    if find_monochromatic(canonical, spec) is not None:
        raise AssertionError(f"canonical colouring for {spec} contains a copy")
    out.witnesses[start] = canonical
    if max_n is None:
        max_n = best_upper(spec)[0]
    for n in range(start + 1, max_n + 1):
        d = exists_good_colouring(n, spec, budget=budget, threads=threads, prefix_depth=prefix_depth)
        out.decisions.append(d)
        out.stats.add(d.stats)
        if d.status is Status.YES:
            out.witnesses[n] = d.witness
        elif d.status is Status.NO:
            out.ramsey_value = out.exhausted_at = n
            break
        else:
            break
    return out


# --- randomized lower-bound witnesses --------------------------------------


def _local_objective(red: list[int], blue: list[int], i: int, j: int, m1: int, m2: int) -> int:
    # feasible (colour, ordered pair) entries with a centre in {i, j}
    total = 0
    for adj in (red, blue):
        for a in (i, j):
            for b in bits(adj[a]):
                if a == j and b == i:
                    continue
                total += _feasible(adj, a, b, m1, m2) + _feasible(adj, b, a, m1, m2)
    return total


def _flip(red: list[int], blue: list[int], i: int, j: int) -> None:
    red[i] ^= 1 << j
    red[j] ^= 1 << i
    blue[i] ^= 1 << j
    blue[j] ^= 1 << i


def random_witness_search(
    n: int, spec: DoubleStarSpec, seed: int = 0, iterations: int = 10_000
) -> Optional[Colouring2]:
    """Steepest-descent search for a good colouring of ``K_n``.

    The objective counts feasible monochromatic centre pairs.  Each
    iteration flips the edge with the largest decrease (lowest edge index
    on ties); without a strict decrease the search restarts from a fresh
    random colouring.  Deterministic for fixed ``seed`` and ``iterations``.
    """
    m1, m2 = spec.m1, spec.m2
    rng = random.Random(seed)
    edges = _edge_list(n)
    full = (1 << n) - 1

    def fresh() -> tuple[list[int], list[int]]:
        red = [0] * n
        for i, j in edges:
            if rng.getrandbits(1):
                red[i] |= 1 << j
                red[j] |= 1 << i
        blue = [full ^ r ^ (1 << v) for v, r in enumerate(red)]
        return red, blue

    red, blue = fresh()
    objective = feasible_pairs(Colouring2(n, tuple(red)), spec)
    for _ in range(iterations):
        if objective == 0:
            break
        best_delta, best_k = 0, -1
        for k, (i, j) in enumerate(edges):
            before = _local_objective(red, blue, i, j, m1, m2)
            _flip(red, blue, i, j)
            delta = _local_objective(red, blue, i, j, m1, m2) - before
            _flip(red, blue, i, j)
            if delta < best_delta:
                best_delta, best_k = delta, k
        if best_k < 0:
            red, blue = fresh()
            objective = feasible_pairs(Colouring2(n, tuple(red)), spec)
            continue
        i, j = edges[best_k]
        _flip(red, blue, i, j)
        objective += best_delta
    if objective != 0:
        return None
    result = Colouring2(n, tuple(red))
    if find_monochromatic(result, spec) is not None:
        raise AssertionError("local search objective out of sync with the verifier")
    return result
