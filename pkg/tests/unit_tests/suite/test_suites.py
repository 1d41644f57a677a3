import pytest

from ordwqo import Config
from ordwqo.suite import Suite

SMALL = Config(random_cases=100, seed=2024, rt2_sequences_per_space=5)


def _run(name, config=SMALL):
    report = Suite(name, config).run()
    assert report.cases > 0
    assert report.violations == []
    assert report.passed
    return report


def test_cnf_suite():
    _run("cnf")


def test_wop_suite():
    _run("wop")


def test_roundtrip_suite():
    _run("roundtrip")


def test_qo_suite():
    _run("qo")


def test_ramsey_suite():
    report = _run("ramsey")
    assert report.truncated


@pytest.mark.slow
def test_theta_suite():
    _run("theta")


@pytest.mark.slow
def test_trees_suite():
    _run("trees")
