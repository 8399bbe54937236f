import json
from fractions import Fraction

import noklib


def frac(s):
    return Fraction(s)


def test_mu_slope_known_values():
    assert noklib.mu_slope("P2", 4) == "3/2"
    assert noklib.mu_slope("P1xP1", 6) == "3/2"
    assert noklib.mu_slope("H1", 9) == "5/3"
    assert noklib.mu_slope("H2", 9) == "16/11"


def test_facet_check_p1xp1_n17():
    v = noklib.facet_check("P1xP1", 17, ["8", "5", "40"])
    assert v["valid"] and v["tight"]
    assert frac(v["min_value"]) == 0


def test_body_volume_matches_area_formula():
    # volume of the r = 0 body equals area(P)^n / n!; P2 with d = 2 has area 2
    assert frac(noklib.body_volume(3, 0, "P2", ["2"])) == Fraction(2) ** 3 / 6


def test_body_json_roundtrip():
    body = json.loads(noklib.body_json(2, 1, "P2", ["2"], vertices=True))
    assert body["dim"] == 4
    assert body["rays"] == []
    assert all(len(v) == 4 for v in body["vertices"])


def test_c2_body_unbounded():
    body = json.loads(noklib.body_json(2, 1, vertices=True))
    assert body["rays"], "the C^2 body must be unbounded"


def test_gamma_membership_and_box():
    assert noklib.gamma_member([0, 1], [1, 0], 1)
    assert not noklib.gamma_member([0, 0], [0, 0], 1)
    box = noklib.gamma_enumerate_box(2, 1, 1, 1)
    assert ([0, 1], [1, 0]) in box
    assert box == sorted(box)


def test_minkowski_decompose_sums_back():
    a, b = [0, 2], [1, 0]
    parts = noklib.minkowski_decompose(a, b, 2)
    assert len(parts) == 2
    total_a = [sum(t) for t in zip(*(p for p, _ in parts))]
    total_b = [sum(t) for t in zip(*(q for _, q in parts))]
    assert (total_a, total_b) == (a, b)


def test_catalan_cells():
    assert [noklib.catalan_cells(n) for n in range(2, 6)] == [1, 2, 5, 14]


def test_dh_compare_shrinks():
    grid = [("1", "1"), ("2", "2")]
    devs = [frac(noklib.dh_compare(2, r, grid)["max_deviation"]) for r in (10, 40)]
    assert devs[1] < devs[0]
