import json
import os
from pathlib import Path

import pytest

import gocha

PRESENTATIONS = Path(os.environ["GOCHA_FIXTURES"]) / "presentations"


def load(name):
    return (PRESENTATIONS / f"{name}.json").read_text()


def test_series_matches_fibonacci_bisection():
    report = json.loads(gocha.series(load("commutator_q17"), trunc=6))
    assert report["series"]["gocha"] == ["1", "3", "8", "21", "55", "144", "377"]


def test_ranks_agree():
    report = json.loads(gocha.ranks(load("two_relation_q5"), trunc=8, mode="fp"))
    assert report["all_agree"] is True


def test_spectrum_verdict():
    report = json.loads(gocha.spectrum(load("commutator_q17")))
    assert report["spectrum"]["verdict"] == "all-eigenspaces-infinite"


def test_oracle_negative_control():
    report = json.loads(gocha.oracle(load("negative_control"), max_degree=4))
    assert report["first_mismatch_degree"] == 2


def test_errors_carry_exit_codes():
    with pytest.raises(gocha.GochaError) as err:
        gocha.series("{not json")
    assert err.value.exit_code == 2
    with pytest.raises(gocha.GochaError):
        gocha.series(load("commutator_q17"), mode="qp")


def test_helpers():
    assert [gocha.mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    counts = gocha.lyndon_counts([1, 1], 2, 4)
    assert sum(v for (n, _), v in counts.items() if n == 4) == 3
    assert gocha.kronecker_split(1, 5) == "split"
    assert gocha.kronecker_split(1, 7) == "inert"
    assert gocha.kronecker_split(1, 2) == "ramified"


def test_fab():
    text = (PRESENTATIONS.parent / "arithmetic" / "gaussian_two_split.json").read_text()
    assert json.loads(gocha.fab(text))["paths_agree"] is True
