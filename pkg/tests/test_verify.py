import json

import pytest

from qqengine.verify import RUNNERS, SUITES, m1_counts, parallel_map, structural_checks


def test_every_suite_has_a_runner():
    assert set(SUITES) == set(RUNNERS)


@pytest.mark.parametrize("suite", SUITES)
def test_corrected_suites_pass_small(suite):
    kwargs = {"seeds": (3,)}
    if suite in ("thm-3-5",):
        kwargs.update(cap_a=2, max_size=2)
    if suite in ("thm-3-17", "pref-dir"):
        kwargs.update(cap_q=2, cap_a=2)
    report = RUNNERS[suite](**kwargs)
    assert report.passed, report.summary()
    assert report.checks > 0
    json.dumps(report.to_dict(), sort_keys=True)


@pytest.mark.parametrize(
    "suite,kwargs",
    [
        ("thm-3-5", {"cap_a": 2, "max_size": 1}),
        ("thm-3-17", {"cap_q": 2, "cap_a": 2}),
        ("prop-3-4", {}),
        ("lemma-3-10", {"max_size": 2, "max_nu": 2, "max_n": 2}),
        ("identity-3-16", {"max_size": 2}),
    ],
)
def test_printed_forms_fail_with_a_counterexample(suite, kwargs):
    report = RUNNERS[suite](seeds=(3,), variant="printed", **kwargs)
    assert not report.passed
    assert report.mismatch


def test_report_records_conventions():
    report = RUNNERS["calibration"](seeds=(5,))
    assert report.passed
    assert report.conventions["cell_index_base"] == 0
    assert report.conventions["taut_char_passing"] == ["0-based, row on q"]


def test_structural_checks():
    assert structural_checks(max_size=3, seeds=(3,)).passed
    assert m1_counts(2, 3) == [1, 2, 5, 10]
    assert m1_counts(1, 4) == [1, 1, 2, 3, 5]


def test_parallel_map_is_deterministic(monkeypatch):
    monkeypatch.setenv("QQ_ENGINE_THREADS", "4")
    assert parallel_map(lambda x: x * x, range(10)) == [x * x for x in range(10)]
    a = RUNNERS["identity-3-16"](max_size=3).to_dict()
    monkeypatch.setenv("QQ_ENGINE_THREADS", "1")
    assert RUNNERS["identity-3-16"](max_size=3).to_dict() == a
