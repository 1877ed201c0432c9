import pytest

from autcone import census
from autcone.census import (
    IHSS_TABLE,
    bound_auto,
    bound_autocone,
    check_ihss_table,
    check_lemma_ihss,
    check_pmain_linear_sections,
    check_pmain_projection_cases,
    check_pmain_symplectic,
    ihss_model,
    ihss_row,
    main_theorem_table,
    prolong_equality_report,
    run_census,
    sympl_model,
    tri,
)


def test_bounds():
    assert bound_auto(5, 2) == 12
    assert bound_auto(3, 1) == 6
    assert bound_autocone(4, 1, 0) == 11
    assert bound_autocone(4, 1, 1) == 13
    # (n - r - 1)(n - r)/2 - (c - 1)(c + 4)/2 + (r + 1)(n + 1) at (6, 1, 0)
    assert bound_autocone(6, 1, 0) == 15 + 0 + 7 == 22


def test_cone_bound_reduces_to_plain_bound():
    for n in range(2, 25):
        for c in range(1, n):
            assert bound_autocone(n, c, -1) == bound_auto(n, c)


def test_bound_argument_ranges():
    with pytest.raises(ValueError):
        bound_auto(4, 0)
    with pytest.raises(ValueError):
        bound_autocone(4, 1, 4)


def test_table_rows_match_formulas():
    assert check_ihss_table()["violations"] == []
    assert ihss_row("I", 2, 3).dim_aut_S == 11
    assert ihss_row("II", 5).dim_aut_M == 45
    assert ihss_row("IV", 5).dim_aut_S == 10
    assert len(IHSS_TABLE) == 11


def test_lemma_pattern():
    rep = check_lemma_ihss()
    assert rep["violations"] == []
    assert rep["types"]["I"]["exceptions"] == [[2, 2], [2, 3]]
    assert rep["types"]["III"]["equalities"] == [3]
    assert rep["types"]["IV"]["always_exceeds"]
    assert rep["types"]["II"]["not_strictly_below"] == []


def test_projection_and_section_checks():
    assert check_pmain_projection_cases()["violations"] == []
    assert check_pmain_symplectic()["equalities"] == [[2, 1]]
    rows = {r["label"]: r for r in check_pmain_linear_sections()["rows"]}
    assert rows["Gr(2,5) cap H"]["total"] == 21 < rows["Gr(2,5) cap H"]["bound"]


def test_projection_threshold_for_symplectic_case():
    # at (k, m) = (3, 1) the bound l = 3(k + m) - 3 = 9 gives 36 > 21
    k, m = 3, 1
    lhs = k * k + m * m + k * m + k * (k + 1) // 2
    l = 3 * (k + m) - 3
    assert lhs == 19 and 3 * (k + m) ** 2 - 2 * k * m == 42 and l * (l - 1) // 2 == 36


def test_main_theorem_rows():
    table = main_theorem_table(
        {"quadric(5)": (5, 11, 5), "segre(2,3)": (6, 12, 6), "veronese(3,2)": (6, 9, 6), "sympl_vmrt(2,1)": (5, 7, 3)}
    )
    assert table["violations"] == []
    rows = {r["vmrt"]: (r["total"], r["relation"], r["bound"]) for r in table["rows"]}
    assert rows["segre(2,3)"] == (24, ">", 21)
    assert rows["veronese(3,2)"] == (21, "=", 21)
    assert rows["sympl_vmrt(2,1)"] == (15, "=", 15)


def test_main_theorem_requires_inputs():
    with pytest.raises(ValueError):
        main_theorem_table({"segre(2,3)": (6, 12, 6)})


def test_prolong_equality():
    rep = prolong_equality_report([ihss_model(ihss_row("I", 2, 3), 12, 6), sympl_model(2, 1, 7, 3)])
    assert rep["violations"] == []
    bad = prolong_equality_report([ihss_model(ihss_row("I", 2, 3), 12, 5)])
    assert bad["violations"]
    with pytest.raises(ValueError):
        prolong_equality_report([sympl_model(2, 1, None, 3)])


def test_run_census_clean():
    rep = run_census()
    assert rep["violations"] == 0
    assert set(rep["sections"]) == {"table", "lemma_ihss", "projection_cases", "symplectic", "linear_sections", "bounds"}
    assert tri(6) == 21


def test_fixture_values_consistent_with_formulas():
    fixtures = {f["quantity"]: f["value"] for f in census.REFERENCE_VALUES}
    assert fixtures["Gr(2,5) general hyperplane section (dim aut, dim aut^(1))"] == [16, 5]
    assert fixtures["Gr(2,5) codim-2 section (dim aut, dim aut^(1))"] == [9, 1]
