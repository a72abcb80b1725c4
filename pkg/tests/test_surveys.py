import os

import pytest

from nilpair import surveys
from nilpair.diagrams import parse


def test_admissible_highest_weights():
    out = surveys.admissible_highest_weights(3, 6)
    assert (2, 1) in out and (3, 3) in out and (2, 2, 2) in out
    assert all(sum(lam) % 3 == 0 for lam in out)
    assert all(len(lam) <= 3 for lam in out)


def test_structure_checks_single():
    rep = surveys.structure_checks(parse("3,2"))
    assert rep["ok"]


def test_skew_checks_single():
    rep = surveys.skew_checks(parse("3,2/1"))
    assert rep["ok"]


def test_cohomology_checks_single():
    rep = surveys.cohomology_checks(parse("2,2,1"))
    assert rep["ok"]
    assert rep["slice_complement_choice_invariant"]


def test_multiplicity_single_case_alt_system_agrees():
    base = surveys.multiplicity_checks_for("2,1", (2, 1))
    alt = surveys.multiplicity_checks_for("2,1", (2, 1), alt=True)
    assert base["equal_at_dominant"] and alt["equal_at_dominant"]
    assert base["positive_system"] != alt["positive_system"]


def test_parabolic_checks_small_survey():
    from nilpair.pairs import build_pair, parabolic_checks
    from nilpair.diagrams import ShapeClass, enumerate_diagrams

    for n in range(2, 6):
        for d in enumerate_diagrams(n, ShapeClass.YOUNG):
            pair, h = build_pair(d)
            assert parabolic_checks(pair, h)["ok"], d


def test_run_config_env_cap(monkeypatch):
    monkeypatch.setenv(surveys.MAX_N_ENV, "3")
    cfg = surveys.RunConfig(max_boxes=4)
    with pytest.raises(surveys.ResourceLimit):
        cfg.check_bounds()
    cfg2 = surveys.RunConfig(max_boxes=3)
    cfg2.check_bounds()
