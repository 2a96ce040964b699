"""Decides 2-colorability of a uniform hypergraph.

Two engines sit behind :func:`decide`:

- an exhaustive bitmask scan for small vertex counts (vertex 0's color is
  fixed, halving the space by complement symmetry; chunks are vectorized
  with numpy);
- a backtracking search for larger instances, branching on vertices in
  descending-degree order with not-all-equal unit propagation (an edge whose
  other n-1 vertices are monochromatic forces its last vertex).

Both engines are deterministic; Unknown encodes an exhausted node or time
budget.  :func:`export_nae_cnf` emits the standard two-clauses-per-edge
DIMACS encoding so external tools can certify instances the plain engines
cannot.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .hypergraph import BLUE, RED, Coloring, Hypergraph, has_monochromatic_edge

_CHUNK = 1 << 20


class VerdictKind(enum.Enum):
    COLORABLE = "Colorable"
    NON_COLORABLE = "NonColorable"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SolveStats:
    nodes: int
    elapsed: float
    engine: str


@dataclass(frozen=True)
class ColorabilityVerdict:
    kind: VerdictKind
    witness: Coloring | None
    stats: SolveStats


@dataclass(frozen=True)
class SolveBudget:
    max_nodes: int = 50_000_000
    max_seconds: float = 120.0
    exhaustive_vertex_cap: int = 24

    def __post_init__(self) -> None:
        if self.max_nodes < 1 or self.max_seconds <= 0 or self.exhaustive_vertex_cap < 1:
            raise ValueError("budget fields must be positive")


def verify_witness(h: Hypergraph, coloring: Sequence[int]) -> bool:
    """True iff ``coloring`` is a proper 2-coloring; independent of the engines."""
    return has_monochromatic_edge(h, coloring) is None


def decide(h: Hypergraph, budget: SolveBudget | None = None) -> ColorabilityVerdict:
    """Classify ``h`` as Colorable (with witness), NonColorable, or Unknown."""
    budget = budget or SolveBudget()
    # the exhaustive masks live in uint64, so its cap tops out at 63 vertices
    if h.num_vertices <= min(budget.exhaustive_vertex_cap, 63):
        return _decide_exhaustive(h, budget)
    return _decide_backtracking(h, budget)


def _edge_masks(h: Hypergraph) -> list[int]:
    return [sum(1 << v for v in e) for e in h.edges]


def _coloring_from_mask(mask: int, num_vertices: int) -> Coloring:
    return tuple((mask >> i) & 1 for i in range(num_vertices))


def _decide_exhaustive(h: Hypergraph, budget: SolveBudget) -> ColorabilityVerdict:
    start_time = time.monotonic()
    masks = [np.uint64(m) for m in _edge_masks(h)]
    total = 1 << max(h.num_vertices - 1, 0)
    nodes = 0
    pos = 0
    while pos < total:
        if nodes >= budget.max_nodes or time.monotonic() - start_time > budget.max_seconds:
            return ColorabilityVerdict(
                VerdictKind.UNKNOWN, None,
                SolveStats(nodes, time.monotonic() - start_time, "exhaustive"),
            )
        stop = min(pos + _CHUNK, total, pos + (budget.max_nodes - nodes))
        arr = np.arange(pos, stop, dtype=np.uint64) << np.uint64(1)
        bad = np.zeros(arr.shape, dtype=bool)
        for m in masks:
            masked = arr & m
            bad |= (masked == 0) | (masked == m)
        nodes += stop - pos
        if not bad.all():
            mask = int(arr[int(np.argmin(bad))])
            witness = _coloring_from_mask(mask, h.num_vertices)
            return ColorabilityVerdict(
                VerdictKind.COLORABLE, witness,
                SolveStats(nodes, time.monotonic() - start_time, "exhaustive"),
            )
        pos = stop
    return ColorabilityVerdict(
        VerdictKind.NON_COLORABLE, None,
        SolveStats(nodes, time.monotonic() - start_time, "exhaustive"),
    )


def _decide_backtracking(h: Hypergraph, budget: SolveBudget) -> ColorabilityVerdict:
    start_time = time.monotonic()
    n = h.uniformity
    nv = h.num_vertices
    edges = h.edges
    edges_of: list[list[int]] = [[] for _ in range(nv)]
    for idx, e in enumerate(edges):
        for v in e:
            edges_of[v].append(idx)
    # fail-first: branch on high-degree vertices first, ties by index
    order = sorted(range(nv), key=lambda v: (-len(edges_of[v]), v))

    color = [-1] * nv
    count = [[0, 0] for _ in edges]  # assigned reds/blues per edge
    unassigned = [n] * len(edges)
    trail: list[int] = []
    # decision frames: (vertex, trail length before assignment, colors left to try)
    frames: list[tuple[int, int, list[int]]] = []
    nodes = 0

    def assign(v: int, c: int) -> bool:
        """Set color, run unit propagation; False on monochromatic conflict.

        Edge counters for the vertex being assigned are always updated in
        full so that undo_to can reverse them wholesale.
        """
        nonlocal nodes
        queue = [(v, c)]
        while queue:
            w, cw = queue.pop()
            if color[w] != -1:
                if color[w] != cw:
                    return False
                continue
            color[w] = cw
            trail.append(w)
            nodes += 1
            conflict = False
            for ei in edges_of[w]:
                cnt = count[ei]
                cnt[cw] += 1
                unassigned[ei] -= 1
                if cnt[cw] == n:
                    conflict = True
                elif not conflict and unassigned[ei] == 1 and cnt[cw] == n - 1:
                    last = next(u for u in edges[ei] if color[u] == -1)
                    queue.append((last, 1 - cw))
            if conflict:
                return False
        return True

    def undo_to(mark: int) -> None:
        while len(trail) > mark:
            w = trail.pop()
            cw = color[w]
            color[w] = -1
            for ei in edges_of[w]:
                count[ei][cw] -= 1
                unassigned[ei] += 1

    cursor = 0
    next_time_check = 4096
    while True:
        if nodes >= next_time_check:
            next_time_check = nodes + 4096
            if time.monotonic() - start_time > budget.max_seconds:
                return ColorabilityVerdict(
                    VerdictKind.UNKNOWN, None,
                    SolveStats(nodes, time.monotonic() - start_time, "backtracking"),
                )
        if nodes > budget.max_nodes:
            return ColorabilityVerdict(
                VerdictKind.UNKNOWN, None,
                SolveStats(nodes, time.monotonic() - start_time, "backtracking"),
            )
        while cursor < nv and color[order[cursor]] != -1:
            cursor += 1
        if cursor == nv:
            witness = tuple(color)
            return ColorabilityVerdict(
                VerdictKind.COLORABLE, witness,
                SolveStats(nodes, time.monotonic() - start_time, "backtracking"),
            )
        v = order[cursor]
        # complement symmetry: the very first decision tries RED only
        alternatives = [BLUE] if frames else []
        frames.append((v, len(trail), alternatives))
        ok = assign(v, RED)
        while not ok:
            # unwind to the deepest frame with an untried color
            while frames and not frames[-1][2]:
                _, mark, _ = frames.pop()
                undo_to(mark)
            if not frames:
                return ColorabilityVerdict(
                    VerdictKind.NON_COLORABLE, None,
                    SolveStats(nodes, time.monotonic() - start_time, "backtracking"),
                )
            v, mark, alternatives = frames[-1]
            undo_to(mark)
            c = alternatives.pop()
            ok = assign(v, c)
            cursor = 0
        cursor += 1


# ---------------------------------------------------------------------------
# DIMACS export: variable i+1 per vertex i, two clauses per edge
# ---------------------------------------------------------------------------


def export_nae_cnf(h: Hypergraph, comment: str | None = None) -> str:
    """CNF that is satisfiable iff ``h`` has a proper 2-coloring.

    Per edge, one all-positive and one all-negative clause: a satisfying
    assignment is exactly a coloring where no edge is monochromatic.
    """
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"c {part}")
    lines.append(f"p cnf {h.num_vertices} {2 * h.num_edges}")
    for e in h.edges:
        pos = " ".join(str(v + 1) for v in e)
        neg = " ".join(str(-(v + 1)) for v in e)
        lines.append(f"{pos} 0")
        lines.append(f"{neg} 0")
    return "\n".join(lines) + "\n"
