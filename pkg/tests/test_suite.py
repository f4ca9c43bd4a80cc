"""Identity-suite runner: green on a sound engine, red on a corrupted one."""

from __future__ import annotations

from fractions import Fraction

import pytest

from unival import run_suite
from unival.algebra import UnitaryAlgebra, _BUILD_CACHE
from unival.cli import run
from unival.duality import kinematic_matrix, pairing_matrix
from unival.poly import GradedPoly


@pytest.fixture
def fresh_matrix_caches():
    pairing_matrix.cache_clear()
    kinematic_matrix.cache_clear()
    yield
    pairing_matrix.cache_clear()
    kinematic_matrix.cache_clear()


def test_suite_passes_at_small_bound():
    report = run_suite(3)
    assert report.ok
    assert report.failed_count == 0
    assert report.passed_count == len(report.entries) == 24
    names = [entry.name for entry in report.entries]
    assert len(set(names)) == len(names)
    assert all(entry.counterexample is None for entry in report.entries)


def test_suite_is_deterministic():
    first = run_suite(2)
    second = run_suite(2)
    assert first.to_json() == second.to_json()


def test_suite_rejects_bad_bound():
    with pytest.raises(ValueError):
        run_suite(0)


def test_suite_catches_corrupted_reduction_table(monkeypatch, fresh_matrix_caches, capsys):
    tampered = UnitaryAlgebra(2)
    tampered._reduction[(2, 0)] = GradedPoly({(0, 4): Fraction(1, 5)})  # truth: 1/6
    monkeypatch.setitem(_BUILD_CACHE, 2, tampered)
    report = run_suite(2)
    assert not report.ok
    failing = [entry for entry in report.entries if not entry.passed]
    assert failing
    assert all(entry.counterexample for entry in failing)
    assert any("n=2" in entry.counterexample for entry in failing)
    assert run(["check", "--n-max", "2"]) == 2
    assert "FAIL" in capsys.readouterr().out
