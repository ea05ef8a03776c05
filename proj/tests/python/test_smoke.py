import json
import math

import pytest

import alcove


def test_counts_agree():
    for k in range(0, 9):
        assert alcove.count_dp("C", "diagonal", 2, 8, "2,1", "2,1", k) == alcove.count_exact(
            "C", "diagonal", 2, 8, "2,1", "2,1", k
        )
    assert alcove.count_exact("C", "diagonal", 2, 8, "2,1", "2,1", 10) == 3728


def test_free_total():
    assert alcove.count_dp("A", "standard", 2, 6, "2,1", k=1) == 2


def test_big_counts_are_python_ints():
    c = alcove.count_exact("A", "standard", 2, 8, "2,1", "2,1", 200)
    assert isinstance(c, int) and c > 2**64


def test_asymptotic():
    e = alcove.asymptotic("C", "standard", 2, 10, "3,1", "3,1", 40)
    assert e["growth_rate"] > 0 and e["value"] > 0
    assert e["case_label"]


def test_errors():
    with pytest.raises(NotImplementedError):
        alcove.count_exact("B", "positive", 2, 8, "2,1", "2,1", 2)
    with pytest.raises(ValueError):
        alcove.count_dp("A", "standard", 2, 6, "4,1", "2,1", 2)


def test_saddle():
    s = alcove.solve_saddle(5, [0])
    assert s["thetas"] == [0.0] and s["C"] == pytest.approx(2.0) and s["epsilon"] == [1]
    assert alcove.exact_coeff(4, [0, 2], 0, 6) == -20
    assert alcove.exact_coeff(3, [0], 2, 10).real == math.comb(10, 6)
    a = alcove.approx_coeff(5, [0, 1], 0, 400)
    assert abs(a / alcove.exact_coeff(5, [0, 1], 0, 400) - 1) < 0.1


def test_cli_round_trip():
    code, out, _ = alcove.run_cli(
        ["count", "--family", "C", "--steps", "diagonal", "--n", "2", "--m", "4",
         "--start", "2,1", "--end", "2,1", "--k-range", "0:4"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"]["all_ok"] is True
    assert [r["exact_count"] for r in doc["rows"]] == ["1", "0", "3", "0", "14"]


def test_identity_suite_small():
    recs = alcove.identity_suite(1)
    assert recs and all({"identity", "params", "match", "detail"} <= set(r) for r in recs)
