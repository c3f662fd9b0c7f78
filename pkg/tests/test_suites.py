"""Verification suite Tests"""

import pytest

from qextremal.core import DomainError
from qextremal.suites import GROUPS, SUITES, Check, constructor_corpus, run_suites, suite_names


def test_suite_names():
    assert suite_names("trees") == ("trees",)
    assert suite_names("preliminaries") == ("closed-forms", "trees", "containment")
    assert suite_names("lemma2") == suite_names("preliminaries")
    assert set(suite_names("all")) == set(SUITES)
    assert set(GROUPS["all"]) == set(SUITES)

    with pytest.raises(DomainError):
        suite_names("nothing")


def test_check():
    check = Check("x", 1, "detail")

    assert check.passed is True
    assert check.as_dict() == {"name": "x", "passed": True, "detail": "detail"}


def test_corpus_names_unique():
    names = [name for name, _ in constructor_corpus()]
    assert len(names) == len(set(names))


@pytest.mark.parametrize("name", ["closed-forms", "trees", "eigen"])
def test_suite_passes(name, recorder):
    results = run_suites(name, workers=1, fire_event=recorder)

    assert [suite for suite, _ in results] == [name]
    suite, checks = results[0]
    assert checks
    assert [check.name for check in checks if not check.passed] == []
    assert recorder.names()[0] == "suite_started"
    assert recorder.names()[-1] == "suite_finished"
    assert recorder.count("check_failed") == 0


def test_containment_suite():
    (suite, checks), = run_suites("containment", workers=1)

    assert [check.name for check in checks if not check.passed] == []
    assert "bipartite host K_{3,6}" in [check.name for check in checks]
