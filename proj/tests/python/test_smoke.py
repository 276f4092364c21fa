import os
from fractions import Fraction
from pathlib import Path

import pytest

import momhist

FIXTURES = Path(os.environ.get("MOMHIST_FIXTURES", Path(__file__).resolve().parents[2] / "fixtures"))


def load(name):
    return momhist.parse_dataset((FIXTURES / name).read_text())


def test_dataset_is_exact():
    d = momhist.Dataset(["0.1", Fraction(1, 5), 3])
    assert d.min == Fraction(1, 10)
    assert d.mean == Fraction(33, 10) / 3
    assert len(d) == 3
    assert momhist.Dataset([1, 2, 3]).is_symmetric


def test_catalog_of_small_dataset():
    cat = momhist.enumerate_level_sets(momhist.Dataset([1, 2, 5]), 4)
    assert len(cat) == 7
    red = next(ls for ls in cat.level_sets if ls.shape == (2, 1))
    assert set(red.vertices) == {(1, 2), (1, 4), (-3, 8), (-6, 8), (-1, 3)}
    assert (red.h_min, red.h_max) == (Fraction(2), Fraction(8))
    assert [ls.shape for ls in momhist.enumerate_level_sets(momhist.Dataset([1, 2, 5]), 4, exactly=True).level_sets] == [
        (1, 1, 0, 1),
        (2, 0, 0, 1),
    ]
    assert len(momhist.catalog_json(cat)["shapes"]) == 7


def test_data3_reports():
    d = load("data3.txt")
    cat = momhist.enumerate_level_sets(d, 6)
    assert len(cat) == 123
    cls = momhist.classify(d, cat)
    assert cls["S"] == 123
    row = next(s for s in cls["shapes"] if s["counts"] == [5, 3, 4])
    assert row["class"] == "joint"
    assert momhist.rank(d, cat)["max_likelihood"][0]["counts"] == [3, 0, 3, 1, 2, 3]
    mom = momhist.solve_mom(d, (5, 3, 4))
    assert mom["h"] == pytest.approx(2.0382, abs=1e-3)
    assert mom["jointly_consistent"]
    assert all(x["exact_match"] for x in momhist.dotplot(d, 2)["moments"])


def test_stability_and_audit():
    cat = momhist.enumerate_level_sets(momhist.Dataset([1, 2, 5]), 4)
    best = momhist.stability(cat)["most_stable"][0]
    assert (best["h_lo"]["exact"], best["h_hi"]["exact"]) == ("1/1", "4/3")
    d1 = load("ratios30.txt")
    assert momhist.bin_counts(d1, "0.96", "0.03", 6) == (2, 12, 9, 4, 2, 1)
    assert momhist.audit(d1, "0.9355", "0.0326", 7)["counts"] == [1, 5, 9, 12, 1, 2]


def test_reversals():
    d = load("symmetric20.txt")
    report = momhist.reversals(d, momhist.enumerate_level_sets(d, 6))
    assert report["exactly_symmetric"]
    assert report["full_coverage"]


def test_errors():
    with pytest.raises(momhist.ParseError):
        momhist.parse_dataset("")
    with pytest.raises(momhist.DegenerateDataError):
        momhist.enumerate_level_sets(momhist.Dataset([5, 5]), 3)
    with pytest.raises(momhist.InvalidGridError):
        momhist.bin_counts(momhist.Dataset([1, 2, 5]), 2, 1, 10)
    assert issubclass(momhist.ParseError, ValueError)
