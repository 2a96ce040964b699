import itertools
import random

import pytest

from propertyb import (
    BlockSpec,
    ConstructionError,
    MultiCoreParams,
    abbott_hanson_toft,
    abbott_moser,
    block,
    complete_hypergraph,
    gaht_k_heuristic,
    generalized_aht,
    has_monochromatic_edge,
    mathews_first,
    mathews_second,
    mathews_third,
    modified_block,
    multi_core,
    seed,
)
from propertyb.constructions import (
    block_count_bound,
    hprime_pattern_count,
    hprime_sets,
    nae_signature_count,
)

FANO = seed("fano")
TRIANGLE = seed("triangle")
K1 = seed("k1")


# --- product construction -------------------------------------------------


def test_abbott_moser_triangle_fano():
    h = abbott_moser(TRIANGLE, FANO)
    assert (h.uniformity, h.num_vertices, h.num_edges) == (6, 21, 147)


def test_abbott_moser_k1_collapses():
    assert abbott_moser(K1, FANO) == FANO


def test_abbott_moser_fano_fano():
    h = abbott_moser(FANO, FANO)
    assert (h.uniformity, h.num_vertices, h.num_edges) == (9, 49, 2401)


# --- core wrap --------------------------------------------------------------


def test_aht_triangle_is_23_edge_4_uniform():
    h = abbott_hanson_toft(TRIANGLE)
    assert (h.uniformity, h.num_vertices, h.num_edges) == (4, 11, 23)


def test_aht_fano():
    h = abbott_hanson_toft(FANO)
    assert (h.uniformity, h.num_vertices, h.num_edges) == (5, 17, 51)


def test_aht_of_aht_triangle():
    h = abbott_hanson_toft(abbott_hanson_toft(TRIANGLE))
    assert h.num_edges == 180


def test_signature_count_small():
    # m=4: K-subsets up to size 2 -> 1 + 4 + 6 = 11 = 2^3 + C(4,2)/2
    assert nae_signature_count(4) == 11
    assert nae_signature_count(5) == 16


# --- 8-uniform hybrid -------------------------------------------------------


def test_mathews_first_count():
    h = mathews_first(FANO, FANO, abbott_hanson_toft(FANO))
    assert (h.uniformity, h.num_edges) == (8, 1269)


def test_mathews_first_single_a_edge():
    h = mathews_first(FANO, FANO, abbott_hanson_toft(FANO))
    # exactly one edge inside the A block (the edge A itself)
    a_edges = [e for e in h.edges if all(v < 8 for v in e)]
    assert a_edges == [tuple(range(8))]


def test_mathews_first_pair_family_count():
    # one {a_i, b_i} pair + one edge from each 3-uniform component: 8 * 7 * 7
    h = mathews_first(FANO, FANO, abbott_hanson_toft(FANO))
    pair_edges = [
        e for e in h.edges if len([v for v in e if v < 16]) == 2 and any(v >= 16 for v in e)
    ]
    assert len(pair_edges) == 8 * 49


def test_mathews_first_rejects_bad_arity():
    with pytest.raises(ConstructionError):
        mathews_first(FANO, FANO, FANO)
    with pytest.raises(ConstructionError):
        mathews_first(TRIANGLE, FANO, abbott_hanson_toft(FANO))


# --- swap-ordering wrap ------------------------------------------------------


def test_mathews_second_fano():
    h = mathews_second(FANO)
    assert (h.uniformity, h.num_edges) == (5, 76)  # (5+1)*2^3 + 4*7


def test_mathews_second_core_family_count():
    # family (i) pairs each core edge with n-1 matched pairs: 10 * 4 = 40
    core = complete_hypergraph(5, 3)
    h = mathews_second(core)
    core_family = [e for e in h.edges if any(v < 5 for v in e)]
    assert len(core_family) == 40


def test_mathews_second_even_uniformity():
    # n = 4 with the triangle core; hand enumeration of the distinct edges:
    # 9 core-pair edges, the edge A, 10 odd-K signatures and 18 even-K
    # signatures across the four swap orderings = 38
    h = mathews_second(TRIANGLE)
    assert (h.uniformity, h.num_edges) == (4, 38)


# --- double-pair wrap --------------------------------------------------------


def test_mathews_third_fano():
    h = mathews_third(FANO)
    assert (h.uniformity, h.num_edges) == (5, 57)  # 9*2^2 + 3*7


def test_mathews_third_am_fano_fano():
    h = mathews_third(abbott_moser(FANO, FANO))
    assert (h.uniformity, h.num_edges) == (11, 25449)


def test_mathews_third_full_primed_family():
    # family (v): the whole A' block plus one matched pair, exactly n edges
    h = mathews_third(FANO)
    n, cv = 5, 7
    a_primed = set(range(cv + 2 * n, cv + 3 * n - 2))
    full_primed = [e for e in h.edges if a_primed <= set(e)]
    assert len(full_primed) == n


def test_mathews_third_even_uniformity():
    # n = 4, triangle core, hand enumeration: 6 + 1 + 4 + 6 + 4 + 8 = 29
    h = mathews_third(TRIANGLE)
    assert (h.uniformity, h.num_edges) == (4, 29)


# --- generalized wrap --------------------------------------------------------


def test_generalized_aht_k1_degenerates():
    assert generalized_aht(FANO, 1) == abbott_hanson_toft(FANO)
    assert generalized_aht(TRIANGLE, 1) == abbott_hanson_toft(TRIANGLE)


def test_generalized_aht_small_core():
    h = generalized_aht(K1, 2)
    assert (h.uniformity, h.num_edges) == (5, 111)  # C(6,2)*1 + C(6,1)*2^4


def test_generalized_aht_even_uniformity():
    # n = 6: C(7,2)*3 + C(7,1)*(2^5 + C(6,3)/2) = 63 + 294
    h = generalized_aht(TRIANGLE, 2)
    assert (h.uniformity, h.num_edges) == (6, 357)


def test_generalized_aht_rejects_bad_k():
    with pytest.raises(ConstructionError):
        generalized_aht(FANO, 0)


def test_gaht_k_heuristic():
    assert gaht_k_heuristic(13) == 3
    assert gaht_k_heuristic(100) == 24
    assert gaht_k_heuristic(5) == 1
    assert gaht_k_heuristic(7) == 2
    with pytest.raises(ConstructionError):
        gaht_k_heuristic(4)


# --- multi-core --------------------------------------------------------------


def test_multi_core_params():
    p = MultiCoreParams.compute(8, 5)
    assert (p.w, p.x, p.y, p.z) == (1, 3, 1, 2)
    p = MultiCoreParams.compute(13, 5)
    assert (p.w, p.x, p.y, p.z) == (2, 3, 1, 2)
    p = MultiCoreParams.compute(6, 3)
    assert (p.w, p.x, p.y, p.z) == (2, 0, None, None)
    with pytest.raises(ConstructionError):
        MultiCoreParams.compute(5, 5)


def test_multi_core_m8():
    h = multi_core(FANO, abbott_hanson_toft(FANO), FANO, 5)
    assert (h.uniformity, h.num_vertices, h.num_edges) == (8, 35, 1212)


def test_multi_core_case3():
    h = multi_core(FANO, FANO, None, 3)
    assert (h.uniformity, h.num_edges) == (6, 147)  # 2*7*7 + 7^2


def test_multi_core_case2():
    # n = 10, k = 4: w=2, x=2, y=2, z=0; count 2*147*23 + 2*3*23^2 + 147*3^2
    core = abbott_moser(TRIANGLE, FANO)
    hk = abbott_hanson_toft(TRIANGLE)
    h = multi_core(core, hk, TRIANGLE, 4)
    assert (h.uniformity, h.num_edges) == (10, 11259)
    # the A block has x+z-1 = 1 declared (isolated) vertex
    assert h.num_vertices == 21 + 1 + 2 * 11 + 2 * 3
    assert h.degrees().count(0) == 1


def test_multi_core_component_errors():
    with pytest.raises(ConstructionError):
        multi_core(FANO, abbott_hanson_toft(FANO), None, 5)  # missing x-component
    with pytest.raises(ConstructionError):
        multi_core(FANO, FANO, None, 5)  # hk arity wrong
    with pytest.raises(ConstructionError):
        multi_core(FANO, FANO, FANO, 3)  # x = 0 admits no hx


# --- block construction ------------------------------------------------------


def test_block_spec_validation():
    with pytest.raises(ConstructionError):
        BlockSpec(FANO, (TRIANGLE,), 7)  # block below minimum uniformity k=2
    with pytest.raises(ConstructionError):
        BlockSpec(TRIANGLE, (TRIANGLE, TRIANGLE), 6)  # uniformities sum below n
    with pytest.raises(ConstructionError):
        BlockSpec(FANO, (FANO,), 6)  # n - core uniformity odd


def test_block_no_truncation_equals_bound():
    # t = 3, all k_i = k = 2, n = 6: every raw edge has exactly n vertices
    spec = BlockSpec(TRIANGLE, (TRIANGLE, TRIANGLE, TRIANGLE), 6)
    h = block(spec)
    assert h.num_edges == block_count_bound(3, [3, 3, 3], 3) == 189
    assert h.num_vertices == 3 + 6 * 3


def test_block_unit_blocks_give_extremal_3_uniform():
    # k = 1, t = 3 single-vertex blocks: 3 + 4 = 7 edges, 3-uniform
    spec = BlockSpec(K1, (K1, K1, K1), 3)
    h = block(spec)
    assert (h.uniformity, h.num_edges) == (3, 7)
    from helpers import brute_force_colorable

    assert brute_force_colorable(h) is None


def test_block_degenerate_single_block():
    # t = 1: family (iii) with empty P contributes the block itself
    spec = BlockSpec(K1, (FANO,), 3)
    h = block(spec)
    block_edges = {tuple(v + 1 for v in e) for e in FANO.edges}
    assert block_edges <= set(h.edges)


def test_block_truncation_stays_within_bound():
    # t = 3, k = 4, n = 13: first block pair is 5-uniform so family (i)
    # truncates two vertices from each of its raw edges
    core = abbott_hanson_toft(FANO)
    b1 = abbott_hanson_toft(FANO)
    b2 = abbott_hanson_toft(TRIANGLE)
    spec = BlockSpec(core, (b1, b2, b2), 13)
    h = block(spec)
    bound = block_count_bound(51, [51, 23, 23], 3)
    assert bound == 51**3 + 6 * 23**2 * 51
    assert h.uniformity == 13
    assert h.num_edges <= bound


# --- modified block ----------------------------------------------------------


def test_hprime_sets_k4():
    full, hp = hprime_sets(FANO, 4)
    assert len(full) == 51
    assert len(hp) == 7 + 2**3  # core edges + all signature patterns
    assert all(len(e) == 3 for e in hp)


def test_hprime_pattern_count():
    assert hprime_pattern_count(4) == 8
    assert hprime_pattern_count(5) == 16


def test_hprime_patterns_match_generation():
    # generated signature reductions realize exactly the enumerated patterns
    _, hp = hprime_sets(FANO, 4)
    signature_sets = [e for e in hp if all(v >= 7 for v in e)]
    assert len(signature_sets) == hprime_pattern_count(4)


def test_modified_block_m13():
    h = modified_block(4, abbott_hanson_toft(FANO), FANO, abbott_hanson_toft(FANO), abbott_hanson_toft(TRIANGLE))
    assert (h.uniformity, h.num_vertices, h.num_edges) == (13, 95, 200889)


def test_modified_block_rejects_bad_arities():
    aht_f = abbott_hanson_toft(FANO)
    with pytest.raises(ConstructionError):
        modified_block(4, FANO, FANO, aht_f, abbott_hanson_toft(TRIANGLE))
    with pytest.raises(ConstructionError):
        modified_block(4, aht_f, TRIANGLE, aht_f, abbott_hanson_toft(TRIANGLE))
    with pytest.raises(ConstructionError):
        modified_block(1, aht_f, FANO, aht_f, abbott_hanson_toft(TRIANGLE))


# --- cross-cutting invariants ------------------------------------------------


def test_all_outputs_uniform_arity():
    outputs = [
        abbott_moser(TRIANGLE, FANO),
        abbott_hanson_toft(FANO),
        mathews_second(FANO),
        mathews_third(FANO),
        generalized_aht(TRIANGLE, 2),
        multi_core(FANO, FANO, None, 3),
    ]
    for h in outputs:
        assert all(len(e) == h.uniformity for e in h.edges)
        assert len(set(h.edges)) == h.num_edges


def test_random_colorings_always_monochromatic():
    # statistical smoke test of non-2-colorability on construction outputs
    rng = random.Random(23)
    outputs = [
        abbott_hanson_toft(TRIANGLE),
        abbott_hanson_toft(FANO),
        mathews_second(FANO),
        mathews_third(FANO),
        generalized_aht(K1, 2),
        multi_core(FANO, FANO, None, 3),
    ]
    for h in outputs:
        for _ in range(200):
            coloring = tuple(rng.randint(0, 1) for _ in range(h.num_vertices))
            assert has_monochromatic_edge(h, coloring) is not None
