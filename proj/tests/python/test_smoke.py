"""Smoke tests for the python bindings."""

import pytest

import fermatpoints as fp


def test_field_basics():
    f = fp.build_field(3, 2)
    assert f.card == 9
    assert f.p == 3
    assert f.degree == 2
    assert f.modulus == [1, 0, 1]
    for a in range(1, 9):
        assert f.mul(a, f.inv(a)) == 1
        assert f.pow(a, 8) == 1
    assert f.add(1, 2) == 0
    assert f.coeffs(5) == [2, 1]
    assert f.from_coeffs([2, 1]) == 5


def test_build_is_reproducible():
    assert fp.build_field(2, 12).modulus == fp.build_field(2, 12).modulus


def test_count_formulas():
    assert fp.curve_count_formula(2, 2)["total"] == 5
    assert fp.curve_count_formula(3, 3)["total"] == 28
    assert fp.curve_count_formula(4, 3)["total"] == 81
    assert fp.curve_count_formula(101, 3)["total"] == 2040000
    assert fp.surface_count_formula(2)["total"] == 21
    assert fp.surface_count_formula(3)["total"] == 100
    assert fp.surface_count_formula(5) == {
        "total": 1112,
        "no-zero": 960,
        "one-zero": 128,
        "two-zero": 24,
    }


def test_enumeration_matches_brute():
    for q, ext in [(2, 1), (3, 2), (4, 3), (5, 2)]:
        par = fp.enumerate_curve(q, ext)
        bru = fp.enumerate_curve(q, ext, method="brute")
        assert [p["codes"] for p in par] == [p["codes"] for p in bru]
        assert len(par) == fp.curve_count_formula(q, ext)["total"]
    s_par = fp.enumerate_surface(3)
    s_bru = fp.enumerate_surface(3, method="brute")
    assert len(s_par) == 100
    assert [p["codes"] for p in s_par] == [p["codes"] for p in s_bru]


def test_provenance_and_coords_shape():
    pts = fp.enumerate_curve(2, 1)
    assert pts[0] == {"coords": [[0], [1], [1]], "codes": [0, 1, 1], "provenance": "L-case2"}


def test_tower_and_kernel():
    t = fp.build_tower(2, 3)
    assert t.q == 2 and t.ext == 3
    assert t.t_kernel() == [0, 2, 4, 6]
    assert t.t_map(0) == 0
    assert len(fp.build_tower(3, 3).t_kernel()) == 9
    assert fp.negation_set(3) == [3, 6]
    t9 = fp.build_tower(9, 3)
    assert t9.frobenius_q(t9.embed(2)) == t9.embed(2)


def test_power_tests():
    f = fp.build_field(2, 4)
    assert not f.is_nth_power(6, 3)
    assert f.is_nth_power(6, 5)
    assert f.is_nth_power(0, 3)
    assert f.cube_roots_of_unity() == [1, 6, 7]


def test_remark_and_gcd():
    r = fp.remark_counterexample()
    assert r["found"]
    assert r["triple"] == [1, 8, 9]
    assert r["product_order"] == 15
    assert fp.gcd_overlap(7) == 18
    assert fp.gcd_overlap(5) == 4
    assert fp.cube_survey_quartic(3)["found"] is False


def test_full_report_passes():
    rep = fp.full_report(5)
    assert len(rep) >= 12
    assert all(r["verdict"] == "pass" for r in rep)
    checks = {r["check"] for r in rep}
    assert "surface-oracle" in checks
    assert "remark-f16" in checks


def test_brute_representative_counts():
    assert fp.curve_brute_representatives(101, 3) == "1061521180903"
    assert fp.surface_brute_representatives(2) == "85"


def test_errors():
    f = fp.build_field(2, 3)
    with pytest.raises(ValueError):
        f.inv(0)
    with pytest.raises(ValueError):
        fp.build_field(4, 2)
    with pytest.raises(OverflowError):
        fp.build_field(2, 64)
    with pytest.raises(ValueError):
        fp.build_tower(6, 2)
