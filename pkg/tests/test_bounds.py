import pytest

from propertyb import bounds as bd
from propertyb import recipes as rc

PAPER_VALUES = (
    1, 3, 7, 23, 51, 147, 421, 1212, 2401, 7803, 25449, 55223,
    200889, 528218, 857157, 3308499, 10375782,
)
LEGACY_VALUES = (
    1, 3, 7, 23, 51, 147, 421, 1269, 2401, 7803, 25449, 55223,
    297347, 531723, 857157, 4831083, 13201419,
)


def test_eval_examples():
    expr = bd.Sum((
        bd.Prod((bd.Binom(14, 2), bd.MRef(9))),
        bd.Prod((bd.Binom(14, 1), bd.Pow(bd.Lit(2), 12))),
    ))
    assert bd.eval_expr(expr, {9: 2401}) == 275835

    expr = bd.Prod((bd.MRef(2), bd.Pow(bd.MRef(3), 2)))
    assert bd.eval_expr(expr, {2: 3, 3: 7}) == 147

    assert bd.eval_expr(bd.Lit(1), {}) == 1


def test_eval_unresolved_reference():
    with pytest.raises(bd.BoundError):
        bd.eval_expr(bd.MRef(9), {})


def test_paper_table_values():
    table = bd.build_paper_table()
    assert table.values() == PAPER_VALUES
    assert all(isinstance(v, int) for v in table.values())


def test_legacy_table_values():
    table = bd.legacy_table()
    assert table.values() == LEGACY_VALUES
    assert table.value(13) == 297347
    assert table.value(8) == 1269
    assert table.value(4) == 23


def test_improved_rows_beat_legacy():
    paper, legacy = bd.build_paper_table(), bd.legacy_table()
    for n in (8, 13, 14, 16, 17):
        assert paper.value(n) < legacy.value(n)
    for n in set(range(1, 18)) - {8, 13, 14, 16, 17}:
        assert paper.value(n) == legacy.value(n)


def test_table_recipes_are_buildable_and_consistent():
    # every table row's recipe parses, has the row's uniformity, and its
    # closed-form count equals the row value (exactly for non-block rows)
    for table in (bd.build_paper_table(), bd.legacy_table()):
        for row in table.rows:
            recipe = rc.parse_recipe(row.recipe)
            assert rc.recipe_info(recipe).uniformity == row.n
            pred = bd.predicted_count(recipe)
            assert pred.value == row.value
            assert pred.exact


def test_table_rendering():
    table = bd.build_paper_table()
    text = table.render_text()
    assert text.splitlines()[0].split() == ["n", "bound", "recipe"]
    assert len(text.splitlines()) == 18
    tsv = table.render_tsv()
    rows = [line.split("\t") for line in tsv.splitlines()]
    assert [int(r[0]) for r in rows] == list(range(1, 18))
    assert [int(r[1]) for r in rows] == list(PAPER_VALUES)


def test_predicted_count_examples():
    assert bd.predicted_count(rc.parse_recipe("aht(fano)")).value == 51
    assert bd.predicted_count(rc.parse_recipe("gaht(am(fano, fano), 2)")).value == 275835
    pred = bd.predicted_count(rc.parse_recipe("preset(m13)"))
    assert (pred.value, pred.exact) == (200889, True)


def test_predicted_count_block_is_bound():
    recipe = rc.parse_recipe("block(aht(fano), [aht(fano), aht(triangle), aht(triangle)], 4)")
    pred = bd.predicted_count(recipe)
    assert pred.value == 51**3 + 6 * 23**2 * 51
    assert not pred.exact


def test_predicted_count_maht2_formula_consistency():
    # 13-uniform wrap of the 25449-edge 11-uniform pipeline: closed form only
    recipe = rc.parse_recipe("maht2(maht3(am(fano, fano)))")
    assert bd.predicted_count(recipe).value == 14 * 2**11 + 12 * 25449


def test_presets_match_table_rows():
    table = bd.build_paper_table()
    for name in rc.PRESETS:
        recipe = rc.parse_recipe(f"preset({name})")
        n = rc.recipe_info(recipe).uniformity
        assert n == int(name[1:])
        # predicted_count(table=...) raises on any preset/table disagreement
        pred = bd.predicted_count(recipe, table)
        assert pred.value == table.value(n)


def test_table_unknown_row():
    with pytest.raises(bd.BoundError):
        bd.build_paper_table().value(18)
