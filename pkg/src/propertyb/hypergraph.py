"""Immutable n-uniform hypergraph model, seed hypergraphs, and the .hg text format.

Conventions used by the whole package:

- vertices of one hypergraph are dense 0-based integers;
- an edge is a strictly increasing tuple of vertex ids, length == uniformity;
- the edge list is lexicographically sorted with set semantics (never a
  multi-set);
- a coloring is a sequence over {RED, BLUE}, one entry per vertex.

Hypergraphs are immutable after construction and safe to share between
concurrent readers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

RED = 0
BLUE = 1

Edge = tuple[int, ...]
Coloring = tuple[int, ...]


class HypergraphError(ValueError):
    """Invalid hypergraph data (arity, vertex range, duplicates...)."""


class HgFormatError(HypergraphError):
    """Malformed .hg file content."""


class Hypergraph:
    """An n-uniform hypergraph over vertices 0..num_vertices-1.

    Edges are stored canonically: each edge sorted ascending, the edge list
    sorted lexicographically, duplicates removed.  Isolated vertices are
    permitted (the declared vertex count is authoritative, not the covered
    set).
    """

    __slots__ = ("uniformity", "num_vertices", "edges")

    def __init__(self, uniformity: int, num_vertices: int, edges: Iterable[Sequence[int]]):
        if uniformity < 1:
            raise HypergraphError(f"uniformity must be positive, got {uniformity}")
        if num_vertices < 1:
            raise HypergraphError(f"vertex count must be positive, got {num_vertices}")
        seen: set[Edge] = set()
        for raw in edges:
            e = tuple(sorted(raw))
            if len(e) != uniformity:
                raise HypergraphError(
                    f"edge {tuple(raw)} has {len(tuple(raw))} vertices, expected {uniformity}"
                )
            if e[0] < 0 or e[-1] >= num_vertices:
                raise HypergraphError(f"edge {e} out of vertex range 0..{num_vertices - 1}")
            if any(e[i] == e[i + 1] for i in range(len(e) - 1)):
                raise HypergraphError(f"edge {tuple(raw)} repeats a vertex")
            seen.add(e)
        self.uniformity = uniformity
        self.num_vertices = num_vertices
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        """Per-vertex edge membership counts (index = vertex id)."""
        deg = [0] * self.num_vertices
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in non-increasing order."""
        return tuple(sorted(self.degrees(), reverse=True))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            self.uniformity == other.uniformity
            and self.num_vertices == other.num_vertices
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.uniformity, self.num_vertices, self.edges))

    def __repr__(self) -> str:
        return (
            f"Hypergraph(uniformity={self.uniformity}, "
            f"num_vertices={self.num_vertices}, num_edges={self.num_edges})"
        )


def seed(name: str) -> Hypergraph:
    """Return one of the three seed hypergraphs: k1, triangle, fano.

    - k1: one vertex, one 1-uniform edge (the smallest non-2-colorable graph);
    - triangle: K3, the 3-edge 2-uniform extremal example;
    - fano: the 7-point projective plane in its difference-set presentation
      {i, i+1 mod 7, i+3 mod 7}, the 7-edge 3-uniform extremal example.
    """
    if name == "k1":
        return Hypergraph(1, 1, [(0,)])
    if name == "triangle":
        return Hypergraph(2, 3, [(0, 1), (0, 2), (1, 2)])
    if name == "fano":
        return Hypergraph(3, 7, [tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))) for i in range(7)])
    raise HypergraphError(f"unknown seed {name!r} (expected k1, triangle or fano)")


def complete_hypergraph(v: int, n: int) -> Hypergraph:
    """All n-subsets of a v-element vertex set; C(v, n) edges."""
    if n < 1 or v < n:
        raise HypergraphError(f"need 1 <= n <= v, got n={n}, v={v}")
    return Hypergraph(n, v, itertools.combinations(range(v), n))


@dataclass(frozen=True)
class DisjointUnion:
    """Vertex-space concatenation of several hypergraphs.

    Part i's vertex j maps to offsets[i] + j.  Parts may have different
    uniformities; only the shared vertex numbering is provided here, the
    caller combines edges as its construction dictates.
    """

    num_vertices: int
    offsets: tuple[int, ...]
    parts: tuple[Hypergraph, ...]

    def part_edges(self, i: int) -> list[Edge]:
        """Edges of part i relabeled into the combined vertex space."""
        off = self.offsets[i]
        return [tuple(v + off for v in e) for e in self.parts[i].edges]


def disjoint_union(parts: Sequence[Hypergraph]) -> DisjointUnion:
    """Lay out ``parts`` on disjoint vertex blocks, in declaration order."""
    if not parts:
        raise HypergraphError("disjoint_union needs at least one part")
    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += p.num_vertices
    return DisjointUnion(total, tuple(offsets), tuple(parts))


def canonicalize(h: Hypergraph) -> Hypergraph:
    """Canonical form (sorted, deduplicated) of ``h``; idempotent.

    Hypergraph construction already canonicalizes, so this is the identity
    for any Hypergraph built through this module; it exists so raw edge data
    and round-tripped files have one normalization point.
    """
    return Hypergraph(h.uniformity, h.num_vertices, h.edges)


def has_monochromatic_edge(h: Hypergraph, coloring: Sequence[int]) -> Edge | None:
    """First edge (in canonical order) whose vertices all share one color.

    Returns None iff ``coloring`` is a proper 2-coloring of ``h``.
    """
    if len(coloring) != h.num_vertices:
        raise HypergraphError(
            f"coloring has {len(coloring)} entries, hypergraph has {h.num_vertices} vertices"
        )
    for e in h.edges:
        first = coloring[e[0]]
        if all(coloring[v] == first for v in e[1:]):
            return e
    return None


def relabel(h: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Apply a vertex permutation (perm[old] = new) to ``h``."""
    if sorted(perm) != list(range(h.num_vertices)):
        raise HypergraphError("perm must be a permutation of the vertex ids")
    return Hypergraph(h.uniformity, h.num_vertices, ([perm[v] for v in e] for e in h.edges))


def drop_edge(h: Hypergraph, edge: Sequence[int]) -> Hypergraph:
    """``h`` minus one edge (used for minimality checks)."""
    target = tuple(sorted(edge))
    if target not in set(h.edges):
        raise HypergraphError(f"edge {target} not present")
    return Hypergraph(h.uniformity, h.num_vertices, (e for e in h.edges if e != target))


# ---------------------------------------------------------------------------
# .hg text format
#
#   line 1:  hg <uniformity> <num_vertices> <num_edges>
#   then one edge per line: ascending 0-based vertex ids, space separated,
#   edges in lexicographic order.  Lines starting with '#' are comments.
# ---------------------------------------------------------------------------


def format_hg(h: Hypergraph, comment: str | None = None) -> str:
    """Serialize ``h`` in the .hg text format (byte-identical across runs)."""
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    lines.append(f"hg {h.uniformity} {h.num_vertices} {h.num_edges}")
    for e in h.edges:
        lines.append(" ".join(str(v) for v in e))
    return "\n".join(lines) + "\n"


def write_hg(h: Hypergraph, path: str, comment: str | None = None) -> None:
    with open(path, "w", encoding="ascii") as f:
        f.write(format_hg(h, comment))


def parse_hg(text: str) -> Hypergraph:
    """Parse .hg text, rejecting any deviation from the canonical format."""
    lines = [(i + 1, ln) for i, ln in enumerate(text.splitlines()) if not ln.startswith("#")]
    if not lines:
        raise HgFormatError("missing header line")
    lineno, header = lines[0]
    fields = header.split()
    if len(fields) != 4 or fields[0] != "hg":
        raise HgFormatError(f"line {lineno}: bad header {header!r}")
    try:
        uniformity, num_vertices, num_edges = (int(x) for x in fields[1:])
    except ValueError as exc:
        raise HgFormatError(f"line {lineno}: non-integer header field") from exc
    if uniformity < 1 or num_vertices < 1 or num_edges < 0:
        raise HgFormatError(f"line {lineno}: header values out of range")
    body = lines[1:]
    if len(body) != num_edges:
        raise HgFormatError(f"header declares {num_edges} edges, found {len(body)} edge lines")
    edges: list[Edge] = []
    prev: Edge | None = None
    for lineno, ln in body:
        try:
            e = tuple(int(x) for x in ln.split())
        except ValueError as exc:
            raise HgFormatError(f"line {lineno}: non-integer vertex id") from exc
        if len(e) != uniformity:
            raise HgFormatError(f"line {lineno}: expected {uniformity} vertices, got {len(e)}")
        if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
            raise HgFormatError(f"line {lineno}: vertex ids not strictly increasing")
        if e[0] < 0 or e[-1] >= num_vertices:
            raise HgFormatError(f"line {lineno}: vertex id out of range 0..{num_vertices - 1}")
        if prev is not None and e <= prev:
            raise HgFormatError(f"line {lineno}: edges not in strictly increasing lexicographic order")
        prev = e
        edges.append(e)
    return Hypergraph(uniformity, num_vertices, edges)


def read_hg(path: str) -> Hypergraph:
    with open(path, "r", encoding="ascii") as f:
        return parse_hg(f.read())


def all_colorings(num_vertices: int) -> Iterator[Coloring]:
    """Every {RED, BLUE} assignment, ascending bitmask order (bit i = vertex i)."""
    for mask in range(1 << num_vertices):
        yield tuple((mask >> i) & 1 for i in range(num_vertices))


def binom(n: int, k: int) -> int:
    """C(n, k), defined as 0 outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)
