"""Deterministic generators that combine small non-2-colorable uniform
hypergraphs into larger ones.

Each construction is exposed two ways:

- ``<name>_stream(...)`` returns an :class:`EdgeStream` whose iterator yields
  canonical (sorted) edge tuples, suitable for count-only streaming;
- ``<name>(...)`` materializes a :class:`Hypergraph` and cross-checks the
  deduplicated edge count against the construction's closed form (exact for
  the product-style constructions, an upper bound for the block family).

Vertex layout is fixed per construction (component blocks in a documented
order, dense 0-based ids), so repeated runs produce byte-identical edge sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .hypergraph import Edge, Hypergraph, HypergraphError, binom, disjoint_union


class ConstructionError(HypergraphError):
    """Component arity mismatch or a failed generation-count identity."""


@dataclass
class EdgeStream:
    """Single-use edge generator plus the output shape.

    ``dedup_required`` is True for constructions that can emit the same edge
    twice (swap-ordering and truncation families); all others emit each edge
    exactly once, so streaming counts equal deduplicated counts.
    """

    uniformity: int
    num_vertices: int
    edges: Iterator[Edge]
    dedup_required: bool


def _materialize(stream: EdgeStream, exact: int | None = None, bound: int | None = None) -> Hypergraph:
    h = Hypergraph(stream.uniformity, stream.num_vertices, stream.edges)
    if exact is not None and h.num_edges != exact:
        raise ConstructionError(
            f"generated {h.num_edges} distinct edges, closed form says {exact}"
        )
    if bound is not None and h.num_edges > bound:
        raise ConstructionError(
            f"generated {h.num_edges} distinct edges, exceeding the bound {bound}"
        )
    return h


def _nae_signature_edges(indices: Sequence[int], a0: int, b0: int) -> Iterator[Edge]:
    """The not-all-equal signature family over paired blocks A, B.

    For the ascending index list ``indices`` (length m) this yields, with
    A_K = {a0+i : i in K} and B_K = {b0+i : i in K}:

    - A_K ∪ (B over indices∖K)   for odd |K|, 1 <= |K| <= floor(m/2),
    - (A over indices∖K) ∪ B_K   for even |K|, 2 <= |K| <= floor(m/2),
    - the all-A edge (the |K| = 0 case of the even branch).

    Yields 2^(m-1) edges for odd m and 2^(m-1) + C(m, m/2)/2 for even m, all
    distinct: the A-side determines K and the branch.
    """
    m = len(indices)
    idx = tuple(indices)
    for j in range(0, m // 2 + 1):
        for sub in itertools.combinations(idx, j):
            if j % 2 == 1:
                chosen = set(sub)
                yield tuple(a0 + i for i in sub) + tuple(b0 + i for i in idx if i not in chosen)
            else:
                chosen = set(sub)
                yield tuple(a0 + i for i in idx if i not in chosen) + tuple(b0 + i for i in sub)


def nae_signature_count(m: int) -> int:
    """Closed-form size of the signature family over m index pairs."""
    total = 2 ** (m - 1)
    if m % 2 == 0:
        total += binom(m, m // 2) // 2
    return total


# ---------------------------------------------------------------------------
# Product construction (vertex substitution)
# ---------------------------------------------------------------------------


def abbott_moser_stream(outer: Hypergraph, inner: Hypergraph) -> EdgeStream:
    """Replace each vertex of ``outer`` with a disjoint copy of ``inner``.

    Layout: copy v of ``inner`` occupies block v (offset v * |V_inner|).
    Every edge {v_1 < ... < v_a} of ``outer`` contributes all unions of one
    inner edge per copy v_i, giving exactly |E_outer| * |E_inner|^a edges of
    arity a*b.
    """
    a = outer.uniformity
    b = inner.uniformity
    nv = outer.num_vertices * inner.num_vertices
    copy_edges = [
        [tuple(x + v * inner.num_vertices for x in e) for e in inner.edges]
        for v in range(outer.num_vertices)
    ]

    def gen() -> Iterator[Edge]:
        for outer_edge in outer.edges:
            pools = [copy_edges[v] for v in outer_edge]
            for combo in itertools.product(*pools):
                yield tuple(itertools.chain.from_iterable(combo))

    return EdgeStream(a * b, nv, gen(), dedup_required=False)


def abbott_moser_count(outer_edges: int, inner_edges: int, outer_uniformity: int) -> int:
    return outer_edges * inner_edges**outer_uniformity


def abbott_moser(outer: Hypergraph, inner: Hypergraph) -> Hypergraph:
    s = abbott_moser_stream(outer, inner)
    return _materialize(s, exact=abbott_moser_count(outer.num_edges, inner.num_edges, outer.uniformity))


# ---------------------------------------------------------------------------
# Core-plus-two-blocks wrap (odd/even variants share one generator)
# ---------------------------------------------------------------------------


def abbott_hanson_toft_stream(core: Hypergraph) -> EdgeStream:
    """Wrap an (n-2)-uniform core with vertex blocks A, B of size n each.

    Layout: core | A | B.  Edges: every core edge joined with each matched
    pair {a_j, b_j}, plus the signature family over A/B.
    """
    n = core.uniformity + 2
    cv = core.num_vertices
    a0, b0 = cv, cv + n

    def gen() -> Iterator[Edge]:
        for e in core.edges:
            for j in range(n):
                yield e + (a0 + j, b0 + j)
        yield from _nae_signature_edges(range(n), a0, b0)

    return EdgeStream(n, cv + 2 * n, gen(), dedup_required=False)


def abbott_hanson_toft_count(n: int, core_edges: int) -> int:
    return n * core_edges + nae_signature_count(n)


def abbott_hanson_toft(core: Hypergraph) -> Hypergraph:
    s = abbott_hanson_toft_stream(core)
    return _materialize(s, exact=abbott_hanson_toft_count(s.uniformity, core.num_edges))


# ---------------------------------------------------------------------------
# 8-uniform hybrid of two 3-uniform components and one 5-uniform component
# ---------------------------------------------------------------------------


def mathews_first_stream(h1: Hypergraph, h2: Hypergraph, h3: Hypergraph) -> EdgeStream:
    """8-uniform construction over A, B (8 vertices each) and three components.

    ``h1`` and ``h2`` are two copies of a 3-uniform non-2-colorable hypergraph
    and ``h3`` is 5-uniform.  Layout: A | B | V1 | V2 | V3.  Edge families:

    (i)/(ii) one h1 (resp. h2) edge joined with one h3 edge;
    (iii)-(v) the signature family over A/B;
    (vi)     {a_i, b_i} joined with one h1 edge and one h2 edge.
    """
    if h1.uniformity != 3 or h2.uniformity != 3:
        raise ConstructionError("first two components must be 3-uniform")
    if h3.uniformity != 5:
        raise ConstructionError("third component must be 5-uniform")
    n = 8
    o1 = 2 * n
    o2 = o1 + h1.num_vertices
    o3 = o2 + h2.num_vertices
    nv = o3 + h3.num_vertices
    e1 = [tuple(v + o1 for v in e) for e in h1.edges]
    e2 = [tuple(v + o2 for v in e) for e in h2.edges]
    e3 = [tuple(v + o3 for v in e) for e in h3.edges]

    def gen() -> Iterator[Edge]:
        for x in e1:
            for y in e3:
                yield x + y
        for x in e2:
            for y in e3:
                yield x + y
        yield from _nae_signature_edges(range(n), 0, n)
        for i in range(n):
            pair = (i, n + i)
            for x in e1:
                for y in e2:
                    yield pair + x + y

    return EdgeStream(n, nv, gen(), dedup_required=False)


def mathews_first_count(c1: int, c2: int, c3: int) -> int:
    return c1 * c3 + c2 * c3 + nae_signature_count(8) + 8 * c1 * c2


def mathews_first(h1: Hypergraph, h2: Hypergraph, h3: Hypergraph) -> Hypergraph:
    s = mathews_first_stream(h1, h2, h3)
    return _materialize(s, exact=mathews_first_count(h1.num_edges, h2.num_edges, h3.num_edges))


# ---------------------------------------------------------------------------
# Swap-ordering refinement of the core-plus-two-blocks wrap
# ---------------------------------------------------------------------------


def mathews_second_stream(core: Hypergraph) -> EdgeStream:
    """Core wrap where the B block is read through n swap orderings.

    Ordering p swaps positions 1 and p of B (an index permutation, not a
    vertex copy).  Layout: core | A | B.  Families:

    (i)   core edge + pair {a_j, b_j} for j = 2..n only;
    (ii)  A_K ∪ (B^p minus positions K) for odd |K| <= floor(n/2), each p;
    (iii) (A minus K) ∪ B^p_K for even 2 <= |K| <= floor(n/2), each p;
    (iv)  the edge A.

    Families (ii)/(iii) repeat edges across p; the deduplicated total is
    (n+1)*2^(n-2) + (n-1)*m_c for odd n.
    """
    n = core.uniformity + 2
    cv = core.num_vertices
    a0, b0 = cv, cv + n

    def gen() -> Iterator[Edge]:
        for e in core.edges:
            for j in range(1, n):
                yield e + (a0 + j, b0 + j)
        yield tuple(a0 + i for i in range(n))
        for p in range(n):
            order = list(range(n))
            order[0], order[p] = order[p], order[0]
            for j in range(1, n // 2 + 1):
                for sub in itertools.combinations(range(n), j):
                    chosen = set(sub)
                    if j % 2 == 1:
                        b_part = sorted(b0 + order[i] for i in range(n) if i not in chosen)
                        yield tuple(a0 + i for i in sub) + tuple(b_part)
                    else:
                        b_part = sorted(b0 + order[i] for i in sub)
                        yield tuple(a0 + i for i in range(n) if i not in chosen) + tuple(b_part)

    return EdgeStream(n, cv + 2 * n, gen(), dedup_required=True)


def mathews_second_count(n: int, core_edges: int) -> int:
    total = (n + 1) * 2 ** (n - 2) + (n - 1) * core_edges
    if n % 2 == 0:
        total += binom(n, n // 2) // 2 + (n - 1) * binom(n - 2, (n - 2) // 2)
    return total


def mathews_second(core: Hypergraph) -> Hypergraph:
    s = mathews_second_stream(core)
    return _materialize(s, exact=mathews_second_count(s.uniformity, core.num_edges))


# ---------------------------------------------------------------------------
# Core wrap with a second pair of blocks A', B'
# ---------------------------------------------------------------------------


def mathews_third_stream(core: Hypergraph) -> EdgeStream:
    """Core wrap over four blocks: A, B of size n and A', B' of size n-2.

    Layout: core | A | B | A' | B'.  Families:

    (i)        core edge + pair {a'_j, b'_j};
    (ii)-(iv)  signature family over A/B (includes the edge A);
    (v)-(vii)  signature family over A'/B' joined with each pair {a_i, b_i}
               (the all-A' case gives family (v)).
    """
    n = core.uniformity + 2
    cv = core.num_vertices
    a0, b0 = cv, cv + n
    ap0, bp0 = cv + 2 * n, cv + 3 * n - 2

    def gen() -> Iterator[Edge]:
        for e in core.edges:
            for j in range(n - 2):
                yield e + (ap0 + j, bp0 + j)
        yield from _nae_signature_edges(range(n), a0, b0)
        primed = list(_nae_signature_edges(range(n - 2), ap0, bp0))
        for i in range(n):
            pair = (a0 + i, b0 + i)
            for sig in primed:
                yield pair + sig

    return EdgeStream(n, cv + 4 * n - 4, gen(), dedup_required=False)


def mathews_third_count(n: int, core_edges: int) -> int:
    return (n - 2) * core_edges + nae_signature_count(n) + n * nae_signature_count(n - 2)


def mathews_third(core: Hypergraph) -> Hypergraph:
    s = mathews_third_stream(core)
    return _materialize(s, exact=mathews_third_count(s.uniformity, core.num_edges))


# ---------------------------------------------------------------------------
# Generalized core wrap: blocks of size n+k-1, k matched pairs per core edge
# ---------------------------------------------------------------------------


def generalized_aht_stream(core: Hypergraph, k: int) -> EdgeStream:
    """Wrap an (n-2k)-uniform core with blocks A, B of size n+k-1.

    Layout: core | A | B.  Families, with I ranging over index subsets of
    {0..n+k-2}:

    (i)   core edge + A_I + B_I for each |I| = k;
    (ii)/(iii) for each |I| = k-1, the signature family over the remaining n
          index pairs (the empty-K even case contributes A minus A_I).

    Every edge determines its (I, K) pair, so the families are disjoint and
    the total is C(n+k-1, k)*m_c + C(n+k-1, k-1)*s(n) with s(n) the signature
    count.  k = 1 degenerates to the plain core wrap.
    """
    if k < 1:
        raise ConstructionError(f"k must be >= 1, got {k}")
    n = core.uniformity + 2 * k
    nk1 = n + k - 1
    cv = core.num_vertices
    a0, b0 = cv, cv + nk1

    def gen() -> Iterator[Edge]:
        for sel in itertools.combinations(range(nk1), k):
            tail = tuple(a0 + i for i in sel) + tuple(b0 + i for i in sel)
            for e in core.edges:
                yield e + tail
        for sel in itertools.combinations(range(nk1), k - 1):
            chosen = set(sel)
            rest = [i for i in range(nk1) if i not in chosen]
            yield from _nae_signature_edges(rest, a0, b0)

    return EdgeStream(n, cv + 2 * nk1, gen(), dedup_required=False)


def generalized_aht_count(n: int, k: int, core_edges: int) -> int:
    return binom(n + k - 1, k) * core_edges + binom(n + k - 1, k - 1) * nae_signature_count(n)


def generalized_aht(core: Hypergraph, k: int) -> Hypergraph:
    s = generalized_aht_stream(core, k)
    return _materialize(s, exact=generalized_aht_count(s.uniformity, k, core.num_edges))


def gaht_k_heuristic(n: int) -> int:
    """Near-optimal k for the generalized wrap: round(0.238*n), clamped to n > 2k."""
    if n < 5:
        raise ConstructionError(f"heuristic defined for n >= 5, got {n}")
    k = max(1, int(Fraction(238, 1000) * n + Fraction(1, 2)))
    while 2 * k >= n:
        k -= 1
    return k


# ---------------------------------------------------------------------------
# Multi-core construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MultiCoreParams:
    """Derived shape of a multi-core instance: w = n//k copies of the
    k-uniform component, and when x = n mod k > 0, y = k//x copies of the
    x-uniform component with z = k mod x.  y and z are None when x = 0."""

    n: int
    k: int
    w: int
    x: int
    y: int | None
    z: int | None

    @classmethod
    def compute(cls, n: int, k: int) -> "MultiCoreParams":
        if not 0 < k < n:
            raise ConstructionError(f"need 0 < k < n, got k={k}, n={n}")
        w, x = divmod(n, k)
        if x > 0:
            y, z = divmod(k, x)
        else:
            y, z = None, None
        return cls(n, k, w, x, y, z)


def multi_core_stream(core: Hypergraph, hk: Hypergraph, hx: Hypergraph | None, k: int) -> EdgeStream:
    """Combine an (n-k)-uniform core with w copies of a k-uniform component
    and, when x = n mod k > 0, y copies of an x-uniform component plus a free
    vertex block A of size x+z-1.

    Layout: core | A | V_1..V_w | V'_1..V'_y.  The edge families depend on
    (x, z); see :func:`multi_core_count` for the per-case totals.
    """
    n = core.uniformity + k
    p = MultiCoreParams.compute(n, k)
    if hk.uniformity != k:
        raise ConstructionError(f"k-component must be {k}-uniform, got {hk.uniformity}")
    if p.x > 0:
        if hx is None:
            raise ConstructionError(f"x = {p.x} > 0 requires an x-uniform component")
        if hx.uniformity != p.x:
            raise ConstructionError(f"x-component must be {p.x}-uniform, got {hx.uniformity}")
    elif hx is not None:
        raise ConstructionError("x = 0 admits no x-uniform component")

    a_size = p.x + p.z - 1 if p.x > 0 else 0
    a0 = core.num_vertices
    hk0 = a0 + a_size
    hk_blocks = [
        [tuple(v + hk0 + i * hk.num_vertices for v in e) for e in hk.edges] for i in range(p.w)
    ]
    hx0 = hk0 + p.w * hk.num_vertices
    hx_blocks = (
        [
            [tuple(v + hx0 + i * hx.num_vertices for v in e) for e in hx.edges]
            for i in range(p.y)
        ]
        if p.x > 0
        else []
    )
    nv = hx0 + (p.y * hx.num_vertices if p.x > 0 else 0)
    a_ids = tuple(range(a0, a0 + a_size))

    def full_products(blocks: list[list[Edge]]) -> list[Edge]:
        return [tuple(itertools.chain.from_iterable(c)) for c in itertools.product(*blocks)]

    def gen() -> Iterator[Edge]:
        # (i) core edge + one edge of one k-uniform copy, in every case
        for block in hk_blocks:
            for e in core.edges:
                for f in block:
                    yield e + f
        if p.x == 0:
            # full unions across the w copies stand alone
            for f in full_products(hk_blocks):
                yield f
            return
        big = full_products(hk_blocks)  # arity w*k = n - x
        # (ii) one x-component edge + one full union
        for block in hx_blocks:
            for e in block:
                for f in big:
                    yield f + e
        small = full_products(hx_blocks)  # arity y*x = k - z
        if p.z > 0:
            # (iii) core edge + full x-side union + z vertices of A
            for s in itertools.combinations(a_ids, p.z):
                for e in core.edges:
                    for f in small:
                        yield e + s + f
            # (iv) full union + x vertices of A
            for s in itertools.combinations(a_ids, p.x):
                for f in big:
                    yield s + f
        else:
            # (iii) core edge + full x-side union
            for e in core.edges:
                for f in small:
                    yield e + f

    return EdgeStream(n, nv, gen(), dedup_required=False)


def multi_core_count(n: int, k: int, core_edges: int, hk_edges: int, hx_edges: int | None) -> int:
    p = MultiCoreParams.compute(n, k)
    total = p.w * core_edges * hk_edges
    if p.x == 0:
        return total + hk_edges**p.w
    assert hx_edges is not None
    total += p.y * hx_edges * hk_edges**p.w
    if p.z > 0:
        total += binom(p.x + p.z - 1, p.z) * core_edges * hx_edges**p.y
        total += binom(p.x + p.z - 1, p.x) * hk_edges**p.w
    else:
        total += core_edges * hx_edges**p.y
    return total


def multi_core(core: Hypergraph, hk: Hypergraph, hx: Hypergraph | None, k: int) -> Hypergraph:
    s = multi_core_stream(core, hk, hx, k)
    expected = multi_core_count(
        s.uniformity, k, core.num_edges, hk.num_edges, hx.num_edges if hx else None
    )
    return _materialize(s, exact=expected)


# ---------------------------------------------------------------------------
# Block construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockSpec:
    """An (n-2k)-uniform core plus t block pairs (H_i, H'_i), each pair two
    copies of a k_i-uniform non-2-colorable hypergraph with k_i >= k and
    sum(k_i) >= n, where k = (n - core uniformity) / 2."""

    core: Hypergraph
    blocks: tuple[Hypergraph, ...]
    n: int

    def __post_init__(self) -> None:
        spread = self.n - self.core.uniformity
        if spread <= 0 or spread % 2 != 0:
            raise ConstructionError(
                f"target uniformity {self.n} minus core uniformity must be a positive even number"
            )
        k = spread // 2
        if not self.blocks:
            raise ConstructionError("at least one block pair is required")
        for h in self.blocks:
            if h.uniformity < k:
                raise ConstructionError(
                    f"block uniformity {h.uniformity} below the minimum {k}"
                )
        if sum(h.uniformity for h in self.blocks) < self.n:
            raise ConstructionError("block uniformities must sum to at least the target")

    @property
    def k(self) -> int:
        return (self.n - self.core.uniformity) // 2


def block_stream(spec: BlockSpec) -> EdgeStream:
    """Layout: core | V_1..V_t | V'_1..V'_t.  Each raw edge has >= n vertices
    and is truncated to its n smallest ids; duplicates created by truncation
    are removed at materialization.

    Families (P over subsets of {1..t}):

    (i)   core edge + one H_j edge + one H'_j edge, per j;
    (ii)  odd |P| <= floor(t/2): a union over {H_i : i in P} + a union over
          {H'_i : i not in P};
    (iii) even 0 <= |P| <= floor(t/2): a union over {H_i : i not in P} + a
          union over {H'_i : i in P}.
    """
    n = spec.n
    t = len(spec.blocks)
    parts = disjoint_union((spec.core,) + spec.blocks + spec.blocks)
    core_edges = parts.part_edges(0)
    side_a = [parts.part_edges(1 + i) for i in range(t)]
    side_b = [parts.part_edges(1 + t + i) for i in range(t)]

    def union_products(sides: list[list[Edge]], chosen: Sequence[int]) -> list[Edge]:
        pools = [sides[i] for i in chosen]
        return [tuple(itertools.chain.from_iterable(c)) for c in itertools.product(*pools)]

    def gen() -> Iterator[Edge]:
        for j in range(t):
            for e in core_edges:
                for f in side_a[j]:
                    for g in side_b[j]:
                        yield (e + f + g)[:n]
        for size in range(0, t // 2 + 1):
            for subset in itertools.combinations(range(t), size):
                rest = tuple(i for i in range(t) if i not in subset)
                if size % 2 == 1:
                    left, right = subset, rest
                else:
                    left, right = rest, subset
                for f in union_products(side_a, left):
                    for g in union_products(side_b, right):
                        yield (f + g)[:n]

    return EdgeStream(n, parts.num_vertices, gen(), dedup_required=True)


def block_count_bound(core_edges: int, block_edge_counts: Sequence[int], t: int) -> int:
    prod = 1
    for c in block_edge_counts:
        prod *= c
    return core_edges * sum(c * c for c in block_edge_counts) + nae_signature_count(t) * prod


def block(spec: BlockSpec) -> Hypergraph:
    s = block_stream(spec)
    bound = block_count_bound(
        spec.core.num_edges, [h.num_edges for h in spec.blocks], len(spec.blocks)
    )
    return _materialize(s, bound=bound)


# ---------------------------------------------------------------------------
# Modified block construction (target uniformity 3k+1)
# ---------------------------------------------------------------------------


def _aht_local_families(core: Hypergraph) -> tuple[list[Edge], list[tuple[Edge, Edge]], Edge]:
    """Edges of the core wrap of ``core`` in local layout core | A | B,
    split by family: (pair edges tagged with their core edge, signature
    edges tagged with their reduction, the all-A edge)."""
    n = core.uniformity + 2
    cv = core.num_vertices
    a0, b0 = cv, cv + n
    strip = {a0 + n - 2, a0 + n - 1, b0 + n - 2, b0 + n - 1}
    pair_edges: list[Edge] = []
    reduced_pairs: list[tuple[Edge, Edge]] = []
    for e in core.edges:
        for j in range(n):
            pair_edges.append(e + (a0 + j, b0 + j))
    all_a = tuple(a0 + i for i in range(n))
    for edge in _nae_signature_edges(range(n), a0, b0):
        if edge == all_a:
            continue
        reduced = tuple(v for v in edge if v not in strip)
        reduced_pairs.append((edge, reduced))
    return pair_edges, reduced_pairs, all_a


def hprime_sets(h1c: Hypergraph, k: int) -> tuple[list[Edge], list[Edge]]:
    """Distinct (k-1)-vertex reductions of the wrap of ``h1c`` (local ids).

    Returns (full wrap edge list, sorted distinct reductions).  One matched
    pair is stripped from pair-family edges, the two highest-index A and B
    pairs from signature edges, and the two highest A vertices from the all-A
    edge; every reduction has exactly k-1 vertices.
    """
    if h1c.uniformity != k - 1:
        raise ConstructionError(
            f"wrap core must be {k - 1}-uniform, got {h1c.uniformity}"
        )
    pair_edges, reduced_pairs, all_a = _aht_local_families(h1c)
    full = pair_edges + [edge for edge, _ in reduced_pairs] + [all_a]
    distinct: set[Edge] = set(h1c.edges)
    for _, reduced in reduced_pairs:
        if len(reduced) != k - 1:
            raise ConstructionError("signature reduction did not drop exactly two vertices")
        distinct.add(reduced)
    distinct.add(all_a[: k - 1])
    return full, sorted(distinct)


def hprime_pattern_count(k: int) -> int:
    """Number of distinct signature reductions, by direct enumeration.

    Equals the count of subsets P of {1..k-1} realizable as the A-side of a
    reduced signature edge; at most 2^(k-1), with equality for every k the
    block presets use.
    """
    if k < 2:
        raise ConstructionError(f"k must be >= 2, got {k}")
    npos = k + 1
    patterns: set[frozenset[int]] = {frozenset(range(k - 1))}
    for j in range(1, npos // 2 + 1):
        for sub in itertools.combinations(range(npos), j):
            inner = frozenset(i for i in sub if i < k - 1)
            if j % 2 == 1:
                patterns.add(inner)
            elif j >= 2:
                patterns.add(frozenset(range(k - 1)) - inner)
    return len(patterns)


def modified_block_count(
    k: int, n_hprime: int, hc_edges: int, h1_edges: int, h1p_edges: int, hkk_edges: int
) -> int:
    mk2 = hkk_edges * hkk_edges
    return n_hprime * hc_edges * h1p_edges + 2 * mk2 * (hc_edges + h1_edges + h1p_edges)


def modified_block_stream(
    k: int, hc: Hypergraph, h1c: Hypergraph, h1p: Hypergraph, hkk: Hypergraph
) -> EdgeStream:
    """(3k+1)-uniform block construction with H_1 built as the wrap of h1c.

    Components: hc and h1p are (k+1)-uniform; h1c is (k-1)-uniform (H_1 is
    its wrap); hkk is k-uniform and is copied four times (H_2, H'_2, H_3,
    H'_3).  Layout: V_c | V_1 (wrap of h1c: core, A, B) | V'_1 | V_2 | V'_2 |
    V_3 | V'_3.

    The triple family core+H_1+H'_1 uses the (k-1)-vertex reductions of H_1
    edges (one reduction per distinct reduced set), bringing its size down to
    n_hprime * |E_c| * |E'_1|; all other families pair full edges across
    disjoint blocks.
    """
    if k < 2:
        raise ConstructionError(f"k must be >= 2, got {k}")
    n = 3 * k + 1
    for h, arity, label in ((hc, k + 1, "core"), (h1p, k + 1, "H'_1"), (hkk, k, "k-component")):
        if h.uniformity != arity:
            raise ConstructionError(f"{label} must be {arity}-uniform, got {h.uniformity}")
    h1_full_local, hprimes_local = hprime_sets(h1c, k)

    o_h1 = hc.num_vertices
    h1_size = h1c.num_vertices + 2 * (k + 1)
    o_1p = o_h1 + h1_size
    o_2 = o_1p + h1p.num_vertices
    o_2p = o_2 + hkk.num_vertices
    o_3 = o_2p + hkk.num_vertices
    o_3p = o_3 + hkk.num_vertices
    nv = o_3p + hkk.num_vertices

    e_c = list(hc.edges)
    e_1 = [tuple(v + o_h1 for v in e) for e in h1_full_local]
    hp = [tuple(v + o_h1 for v in e) for e in hprimes_local]
    e_1p = [tuple(v + o_1p for v in e) for e in h1p.edges]
    e_2 = [tuple(v + o_2 for v in e) for e in hkk.edges]
    e_2p = [tuple(v + o_2p for v in e) for e in hkk.edges]
    e_3 = [tuple(v + o_3 for v in e) for e in hkk.edges]
    e_3p = [tuple(v + o_3p for v in e) for e in hkk.edges]

    def gen() -> Iterator[Edge]:
        for h in hp:  # (a) reduced triples
            for e in e_c:
                for f in e_1p:
                    yield e + h + f
        for e in e_c:  # (b), (c)
            for f in e_2:
                for g in e_2p:
                    yield e + f + g
            for f in e_3:
                for g in e_3p:
                    yield e + f + g
        for e in e_1:  # (d)
            for f in e_2p:
                for g in e_3p:
                    yield e + f + g
        for f in e_1p:  # (e), (f)
            for e in e_2:
                for g in e_3p:
                    yield f + e + g
            for e in e_3:
                for g in e_2p:
                    yield f + g + e
        for e in e_1:  # (g)
            for f in e_2:
                for g in e_3:
                    yield e + f + g

    return EdgeStream(n, nv, gen(), dedup_required=False)


def modified_block(
    k: int, hc: Hypergraph, h1c: Hypergraph, h1p: Hypergraph, hkk: Hypergraph
) -> Hypergraph:
    s = modified_block_stream(k, hc, h1c, h1p, hkk)
    full, hprimes = hprime_sets(h1c, k)
    expected = modified_block_count(
        k, len(hprimes), hc.num_edges, len(full), h1p.num_edges, hkk.num_edges
    )
    return _materialize(s, exact=expected)
