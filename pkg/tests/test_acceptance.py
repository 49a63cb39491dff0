"""Acceptance gate: one test per numbered criterion, exact comparisons only.

Criteria 1-11 share a single deterministic verification run; criterion 12
drives the command-line entry point itself, including the fault hook.
"""

import pytest

from conelines import cli
from conelines.verify import run_all


@pytest.fixture(scope="module")
def results():
    return run_all(seed=0)


def _criterion(results, number):
    family = [r for r in results if r.name.split(".")[0] == str(number)]
    assert family, f"criterion {number} produced no checks"
    failures = [r for r in family if not r.passed]
    detail = "\n".join(
        f"{r.name}: observed {r.observed}, expected {r.expected}" for r in failures
    )
    assert not failures, f"criterion {number} failed:\n{detail}"


def test_criterion_01_tritangent_census(results):
    _criterion(results, 1)


def test_criterion_02_mod2_strata(results):
    _criterion(results, 2)


def test_criterion_03_pair_census(results):
    _criterion(results, 3)


def test_criterion_04_code_census(results):
    _criterion(results, 4)


def test_criterion_05_translation_analysis(results):
    _criterion(results, 5)


def test_criterion_06_group_laws(results):
    _criterion(results, 6)


def test_criterion_07_homology_matrices(results):
    _criterion(results, 7)


def test_criterion_08_unipotent_action(results):
    _criterion(results, 8)


def test_criterion_09_realizability_sweeps(results):
    _criterion(results, 9)


def test_criterion_10_conic_pencil_count(results):
    _criterion(results, 10)


def test_criterion_11_line_class_counts(results):
    _criterion(results, 11)


def test_criterion_12_cli_self_check(tmp_path, capsys):
    assert cli.main(["verify", "--out", str(tmp_path / "clean.md")]) == 0
    assert cli.main(["verify", "--fault", "gram", "--out", str(tmp_path / "hurt.md")]) == 1
    capsys.readouterr()
    clean = (tmp_path / "clean.md").read_text(encoding="utf-8")
    hurt = (tmp_path / "hurt.md").read_text(encoding="utf-8")
    assert "FAIL" not in clean
    assert "| FAIL |" in hurt