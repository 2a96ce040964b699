import itertools
import random

import pytest

from propertyb import (
    Hypergraph,
    HypergraphError,
    HgFormatError,
    canonicalize,
    complete_hypergraph,
    disjoint_union,
    drop_edge,
    format_hg,
    has_monochromatic_edge,
    parse_hg,
    relabel,
    seed,
)
from helpers import brute_force_colorable, random_hypergraph, random_permutation


def test_seed_k1():
    h = seed("k1")
    assert (h.uniformity, h.num_vertices, h.edges) == (1, 1, ((0,),))


def test_seed_triangle():
    h = seed("triangle")
    assert (h.uniformity, h.num_vertices) == (2, 3)
    assert h.edges == ((0, 1), (0, 2), (1, 2))


def test_seed_fano_structure():
    h = seed("fano")
    assert (h.uniformity, h.num_vertices, h.num_edges) == (3, 7, 7)
    # projective plane: any two lines meet in exactly one point
    for e1, e2 in itertools.combinations(h.edges, 2):
        assert len(set(e1) & set(e2)) == 1
    # every point on exactly three lines
    assert h.degrees() == [3] * 7


def test_seed_fano_not_two_colorable():
    assert brute_force_colorable(seed("fano")) is None


def test_seed_unknown_name():
    with pytest.raises(HypergraphError):
        seed("petersen")


def test_complete_triangle():
    assert complete_hypergraph(3, 2) == seed("triangle")


def test_complete_5_3():
    h = complete_hypergraph(5, 3)
    assert h.num_edges == 10
    assert brute_force_colorable(h) is None


def test_complete_6_3_not_colorable():
    # 20 edges; any 2-coloring of 6 vertices puts >= 3 vertices in one color
    # class and every 3-subset is an edge, so no proper coloring exists
    h = complete_hypergraph(6, 3)
    assert h.num_edges == 20
    assert brute_force_colorable(h) is None


def test_complete_6_4_colorable():
    # the balanced-split intuition does hold one uniformity up
    assert brute_force_colorable(complete_hypergraph(6, 4)) is not None


def test_complete_rejects_bad_arity():
    with pytest.raises(HypergraphError):
        complete_hypergraph(3, 4)


@pytest.mark.parametrize("n", [2, 3])
def test_complete_extremal_minimality(n):
    """C(2n-1, n) edges are necessary and sufficient at 2n-1 vertices."""
    h = complete_hypergraph(2 * n - 1, n)
    assert brute_force_colorable(h) is None
    for e in h.edges:
        assert brute_force_colorable(drop_edge(h, e)) is not None


def test_disjoint_union_offsets():
    f = seed("fano")
    du = disjoint_union([f, f])
    assert (du.num_vertices, du.offsets) == (14, (0, 7))
    assert du.part_edges(1)[0] == tuple(v + 7 for v in f.edges[0])

    du = disjoint_union([seed("triangle")])
    assert (du.num_vertices, du.offsets) == (3, (0,))
    assert du.part_edges(0) == list(seed("triangle").edges)

    du = disjoint_union([seed("k1"), seed("triangle"), seed("fano")])
    assert (du.num_vertices, du.offsets) == (11, (0, 1, 4))


def test_disjoint_union_empty():
    with pytest.raises(HypergraphError):
        disjoint_union([])


def test_canonicalize_dedups():
    h = Hypergraph(3, 3, [(2, 1, 0), (0, 1, 2)])
    assert h.edges == ((0, 1, 2),)
    assert canonicalize(h) == h


def test_canonicalize_idempotent_on_fano():
    f = seed("fano")
    assert canonicalize(f) == f
    assert canonicalize(canonicalize(f)) == canonicalize(f)


def test_canonicalize_idempotent_random():
    rng = random.Random(7)
    for _ in range(50):
        h = random_hypergraph(rng)
        assert canonicalize(h) == h
        assert canonicalize(canonicalize(h)) == canonicalize(h)


def test_hypergraph_rejects_bad_edges():
    with pytest.raises(HypergraphError):
        Hypergraph(2, 3, [(0, 1, 2)])  # wrong arity
    with pytest.raises(HypergraphError):
        Hypergraph(2, 3, [(0, 3)])  # out of range
    with pytest.raises(HypergraphError):
        Hypergraph(2, 3, [(1, 1)])  # repeated vertex
    with pytest.raises(HypergraphError):
        Hypergraph(0, 3, [])  # bad uniformity


def test_has_monochromatic_edge_triangle():
    t = seed("triangle")
    assert has_monochromatic_edge(t, (0, 0, 1)) == (0, 1)
    assert has_monochromatic_edge(t, (0, 1, 0)) == (0, 2)
    assert has_monochromatic_edge(t, (0, 1, 1)) == (1, 2)
    assert has_monochromatic_edge(t, (0, 1, 0)) is not None


def test_has_monochromatic_edge_all_red_fano():
    assert has_monochromatic_edge(seed("fano"), (0,) * 7) is not None


def test_has_monochromatic_edge_length_mismatch():
    with pytest.raises(HypergraphError):
        has_monochromatic_edge(seed("triangle"), (0, 1))


def test_has_monochromatic_edge_matches_definition():
    rng = random.Random(11)
    for _ in range(100):
        h = random_hypergraph(rng)
        coloring = tuple(rng.randint(0, 1) for _ in range(h.num_vertices))
        found = has_monochromatic_edge(h, coloring)
        mono = [e for e in h.edges if len({coloring[v] for v in e}) == 1]
        if mono:
            assert found == mono[0]  # deterministic: first in canonical order
        else:
            assert found is None


def test_relabel_preserves_shape():
    rng = random.Random(13)
    f = seed("fano")
    perm = random_permutation(rng, 7)
    g = relabel(f, perm)
    assert (g.uniformity, g.num_vertices, g.num_edges) == (3, 7, 7)
    assert sorted(g.degrees()) == sorted(f.degrees())


def test_drop_edge():
    f = seed("fano")
    g = drop_edge(f, (0, 1, 3))
    assert g.num_edges == 6
    with pytest.raises(HypergraphError):
        drop_edge(g, (0, 1, 3))


# --- .hg format ----------------------------------------------------------


def test_hg_round_trip():
    for h in (seed("fano"), seed("k1"), complete_hypergraph(6, 3)):
        text = format_hg(h)
        assert parse_hg(text) == h
        # writer output is a fixed point
        assert format_hg(parse_hg(text)) == text


def test_hg_format_exact_text():
    assert format_hg(seed("triangle")) == "hg 2 3 3\n0 1\n0 2\n1 2\n"


def test_hg_comments_allowed():
    text = "# a comment\nhg 1 1 1\n# mid comment\n0\n"
    assert parse_hg(text) == seed("k1")
    assert parse_hg(format_hg(seed("fano"), comment="made by tests")) == seed("fano")


@pytest.mark.parametrize(
    "text",
    [
        "",  # no header
        "hg 2 3\n",  # short header
        "hx 2 3 0\n",  # bad magic
        "hg 2 3 one\n",  # non-integer
        "hg 0 3 0\n",  # zero uniformity
        "hg 2 3 1\n",  # missing edge line
        "hg 2 3 1\n0 1\n1 2\n",  # extra edge line
        "hg 2 3 1\n0 1 2\n",  # wrong arity
        "hg 2 3 1\n1 0\n",  # unsorted vertices
        "hg 2 3 1\n1 1\n",  # repeated vertex
        "hg 2 3 1\n0 3\n",  # out of range
        "hg 2 3 2\n0 1\n0 1\n",  # duplicate edge
        "hg 2 3 2\n0 2\n0 1\n",  # edges out of lexicographic order
        "hg 2 3 1\n0 x\n",  # non-integer vertex
    ],
)
def test_hg_rejects_malformed(text):
    with pytest.raises(HgFormatError):
        parse_hg(text)


def test_hg_file_io(tmp_path):
    from propertyb import read_hg, write_hg

    path = tmp_path / "fano.hg"
    write_hg(seed("fano"), str(path), comment="seed")
    assert read_hg(str(path)) == seed("fano")
