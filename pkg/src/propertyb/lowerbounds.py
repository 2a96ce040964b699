"""Lower-bound machinery for the minimum edge count of non-2-colorable
uniform hypergraphs, culminating in the m(5) >= 29 certificate.

Everything here is exact: integer ceilings for the covering bounds and
Fraction arithmetic for the recolor inequality, whose final comparison
against 1 is a rational comparison, never an epsilon test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .hypergraph import binom


class LowerBoundError(ValueError):
    """Parameter violation or an unbracketable scan."""


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class SchonheimParams:
    """Covering-design shape: l vertices, n-uniform edges, every t-subset
    covered at least lambda times."""

    l: int
    n: int
    t: int
    lam: int

    def __post_init__(self) -> None:
        if not (self.l >= self.n >= self.t >= 1) or self.lam < 1:
            raise LowerBoundError(f"need l >= n >= t >= 1 and lambda >= 1, got {self}")


def schonheim(l: int, n: int, t: int = 2, lam: int = 1) -> int:
    """Nested-ceiling covering bound, evaluated innermost-outward:

        ceil(l/n * ceil((l-1)/(n-1) * ... * ceil(lambda*(l-t+1)/(n-t+1))))
    """
    SchonheimParams(l, n, t, lam)
    value = _ceil_div(lam * (l - t + 1), n - t + 1)
    for i in range(t - 2, -1, -1):
        value = _ceil_div((l - i) * value, n - i)
    return value


def blocked_bound(v: int, n: int) -> int:
    """Edges needed so every balanced coloring of v vertices has a
    monochromatic n-edge.

    There are C(v, floor(v/2)) balanced colorings; an edge is monochromatic
    in C(v-n, floor(v/2)-n) of them as the minority color and
    C(v-n, ceil(v/2)-n) as the majority color, so at least

        ceil( C(v, floor(v/2)) / (C(v-n, floor(v/2)-n) + C(v-n, ceil(v/2)-n)) )

    edges are required (binomials vanish outside their range).
    """
    if v < n:
        raise LowerBoundError(f"need v >= n, got v={v}, n={n}")
    denom = binom(v - n, v // 2 - n) + binom(v - n, (v + 1) // 2 - n)
    if denom == 0:
        # v < 2n-1: no color class can reach n vertices, nothing blocks
        raise LowerBoundError(f"no balanced coloring of {v} vertices has a monochromatic {n}-edge")
    return _ceil_div(math.comb(v, v // 2), denom)


@dataclass(frozen=True)
class CertificateLine:
    section: str
    label: str
    value: str
    ok: bool


@dataclass
class Certificate:
    """Recomputable record of a lower-bound computation."""

    claim: str
    inputs: dict[str, str]
    lines: list[CertificateLine] = field(default_factory=list)
    bound: int = 0
    valid: bool = False

    def add(self, section: str, label: str, value: object, ok: bool = True) -> None:
        self.lines.append(CertificateLine(section, label, str(value), ok))

    def render_text(self) -> str:
        out = [self.claim]
        for key, val in self.inputs.items():
            out.append(f"  {key}: {val}")
        section = None
        for line in self.lines:
            if line.section != section:
                section = line.section
                out.append(f"[{section}]")
            mark = "ok" if line.ok else "FAIL"
            out.append(f"  {line.label} = {line.value}  [{mark}]")
        out.append(f"certificate {'valid' if self.valid else 'INVALID'}")
        out.append(self.claim)
        return "\n".join(out) + "\n"

    def render_tsv(self) -> str:
        rows = [f"{ln.section}\t{ln.label}\t{ln.value}\t{'ok' if ln.ok else 'fail'}\n" for ln in self.lines]
        rows.append(f"result\tbound\t{self.bound}\t{'ok' if self.valid else 'fail'}\n")
        return "".join(rows)


def goldberg_lower(n: int, x_max: int = 2000) -> Certificate:
    """Minimax lower bound min over x > 2n of max(f(x), g(x)) with f the
    balanced-coloring blocking bound and g the pair-covering bound.

    f is non-increasing and g non-decreasing on the scanned range, so the
    scan stops once g reaches the best max found so far.
    """
    if n < 4:
        raise LowerBoundError(f"defined for n >= 4, got {n}")
    if x_max <= 2 * n + 1:
        raise LowerBoundError(f"x_max must exceed 2n+1 = {2 * n + 1}")
    best = None
    best_x = None
    stopped = False
    for x in range(2 * n + 1, x_max + 1):
        fx = blocked_bound(x, n)
        gx = schonheim(x, n, 2, 1)
        current = max(fx, gx)
        if best is None or current < best:
            best, best_x = current, x
        if gx >= best:
            stopped = True
            break
    if not stopped:
        raise LowerBoundError(f"scan cap {x_max} too small to bracket the crossover")
    assert best is not None and best_x is not None
    cert = Certificate(
        claim=f"m({n}) >= {best}",
        inputs={"n": str(n), "scan": f"x = {2 * n + 1}..{x}"},
    )
    cert.add("minimax", "x_opt", best_x)
    cert.add("minimax", f"balanced-blocking f({best_x})", blocked_bound(best_x, n))
    cert.add("minimax", f"pair-covering g({best_x})", schonheim(best_x, n, 2, 1))
    cert.bound = best
    cert.valid = True
    return cert


def rs_integral(n: int, p: Fraction) -> Fraction:
    """Exact value of the integral of (1 - (x*p)^2)^(n-1) over x in [0, 1].

    The integrand is a polynomial, so expand binomially and integrate
    term by term: sum_j C(n-1, j) * (-p^2)^j / (2j + 1).
    """
    p = Fraction(p)
    if not 0 <= p <= 1 or n < 1:
        raise LowerBoundError(f"need n >= 1 and 0 <= p <= 1, got n={n}, p={p}")
    return sum(
        Fraction(math.comb(n - 1, j)) * (-(p * p)) ** j / (2 * j + 1) for j in range(n)
    )


@dataclass(frozen=True)
class RsParams:
    """Inputs to the recolor inequality: n-uniform, m edges, at most gamma
    edge pairs meeting in exactly one vertex, recolor probability p."""

    n: int
    m: int
    gamma: int
    p: Fraction

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 0 or self.gamma < 0 or not 0 <= self.p <= 1:
            raise LowerBoundError(f"invalid parameters {self}")


def rs_check(params: RsParams) -> tuple[Fraction, bool]:
    """Evaluate 2^(1-n) (1-p)^n m + 4 gamma 2^(1-2n) p I(n, p) exactly.

    A value strictly below 1 guarantees a proper 2-coloring exists for any
    n-uniform hypergraph with m edges and singleton-intersection pair count
    at most gamma.
    """
    n, m, gamma, p = params.n, params.m, params.gamma, Fraction(params.p)
    value = (
        Fraction(2) ** (1 - n) * (1 - p) ** n * m
        + 4 * gamma * Fraction(2) ** (1 - 2 * n) * p * rs_integral(n, p)
    )
    return value, value < 1


def pair_intersection_cap(degrees: Sequence[int]) -> int:
    """Upper bound on pairs of edges meeting in exactly one vertex:
    sum over vertices of C(degree, 2) - 1.

    The -1 per vertex relies on every vertex lying in some pair of vertices
    covered by at least two edges (those edge pairs share two vertices, so
    they never meet in exactly one).
    """
    if not degrees:
        raise LowerBoundError("empty degree sequence")
    if any(d < 1 for d in degrees):
        raise LowerBoundError("degrees must be >= 1")
    return sum(math.comb(d, 2) - 1 for d in degrees)


def admissible_degree_sequences(v: int, degree_sum: int, min_degree: int) -> list[tuple[int, ...]]:
    """All non-increasing degree sequences of length v with the given sum and
    minimum; empty when infeasible."""
    if v < 1:
        raise LowerBoundError(f"need v >= 1, got {v}")
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], remaining: int, positions: int, hi: int) -> None:
        if positions == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        lo = min_degree
        # remaining values all lie in [lo, min(hi, remaining - (positions-1)*lo)]
        for d in range(min(hi, remaining - (positions - 1) * lo), lo - 1, -1):
            prefix.append(d)
            extend(prefix, remaining - d, positions - 1, d)
            prefix.pop()

    if degree_sum >= v * min_degree:
        extend([], degree_sum, v, degree_sum)
    return out


def min_degree_for_pair_cover(v: int, n: int) -> int:
    """Minimum degree forced when every vertex pair is covered: a vertex has
    v-1 pairs through it and each incident edge covers n-1 of them."""
    return _ceil_div(v - 1, n - 1)


def m5_certificate(case5_cap: int = 500) -> Certificate:
    """Certificate that every 5-uniform hypergraph with at most 28 edges is
    properly 2-colorable, i.e. the minimum for non-2-colorability is 29.

    Case split on the vertex count v (uniformity 5, 28 edges):

    1. v <= 8: both classes of a balanced coloring stay below 5 vertices.
    2. v in {9, 10}: the extremal count at 2n-1 vertices is C(9,5) = 126 > 28.
    3. 11 <= v <= 22: blocking every balanced coloring needs >= 29 edges.
    4. v = 23: at most 27 edges leave an uncovered pair (covering bound 28),
       so assume 28 edges and all pairs covered; the degree analysis caps
       singleton-intersection pairs at 335 and the recolor inequality
       evaluates below 1.
    5. v >= 24: the pair-covering bound is >= 29 (checked up to ``case5_cap``
       and monotone non-decreasing in v), so some pair is uncovered and the
       instance contracts to v - 1 vertices.
    """
    cert = Certificate(
        claim="m(5) >= 29",
        inputs={"uniformity": "5", "edges": "<= 28"},
    )
    ok = True

    # Case 1: balanced colorings have color classes of size <= ceil(v/2) <= 4
    for v in range(5, 9):
        majority = (v + 1) // 2
        good = majority < 5
        ok &= good
        cert.add("case1 v=5..8", f"majority class at v={v}", majority, good)

    # Case 2: v in {9, 10}
    extremal = math.comb(9, 5)
    good = extremal > 28
    ok &= good
    cert.add("case2 v=9,10", "C(9,5)", extremal, good)

    # Case 3: v in 11..22
    worst = None
    for v in range(11, 23):
        fb = blocked_bound(v, 5)
        good = fb >= 29
        ok &= good
        cert.add("case3 v=11..22", f"blocked_bound({v}, 5)", fb, good)
        worst = fb if worst is None else min(worst, fb)
    cert.add("case3 v=11..22", "minimum over the range", worst, worst is not None and worst >= 29)

    # Case 4: v = 23
    cover23 = schonheim(23, 5, 2, 1)
    good = cover23 == 28
    ok &= good
    cert.add("case4 v=23", "pair-covering bound schonheim(23,5,2,1)", cover23, good)
    cert.add("case4 v=23", "<= 27 edges leave an uncovered pair", cover23 > 27, cover23 > 27)
    ok &= cover23 > 27

    mindeg = min_degree_for_pair_cover(23, 5)
    good = mindeg == 6
    ok &= good
    cert.add("case4 v=23", "minimum degree ceil(22/4)", mindeg, good)

    sequences = admissible_degree_sequences(23, 5 * 28, mindeg)
    expected = [(8,) + (6,) * 22, (7, 7) + (6,) * 21]
    good = sorted(sequences) == sorted(expected)
    ok &= good
    cert.add("case4 v=23", "degree sequences (23, sum 140, min 6)", sequences, good)

    caps = [pair_intersection_cap(s) for s in sequences]
    gamma = max(caps)
    good = sorted(caps, reverse=True) == [335, 334] and gamma == 335
    ok &= good
    cert.add("case4 v=23", "pair caps per sequence", caps, good)

    value, colorable = rs_check(RsParams(5, 28, gamma, Fraction(3, 10)))
    good = colorable and Fraction(99, 100) < value < 1
    ok &= good
    cert.add("case4 v=23", "recolor value (p=3/10, gamma=335)", f"{value} ~= {float(value):.6f}", good)

    # Case 5: v >= 24
    floor24 = schonheim(24, 5, 2, 1)
    good = floor24 == 29
    ok &= good
    cert.add("case5 v>=24", "schonheim(24,5,2,1)", floor24, good)
    scan_ok = all(schonheim(v, 5, 2, 1) >= 29 for v in range(24, case5_cap + 1))
    ok &= scan_ok
    cert.add(
        "case5 v>=24",
        f"schonheim(v,5,2,1) >= 29 for v = 24..{case5_cap}",
        scan_ok,
        scan_ok,
    )
    monotone = all(
        schonheim(v + 1, 5, 2, 1) >= schonheim(v, 5, 2, 1) for v in range(24, case5_cap + 1)
    )
    ok &= monotone
    cert.add("case5 v>=24", f"monotone non-decreasing up to {case5_cap + 1}", monotone, monotone)

    cert.bound = 29 if ok else 0
    cert.valid = ok
    return cert
