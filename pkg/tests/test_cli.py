"""Command-line surface: outputs, determinism, exit codes, golden docs."""

import json
from pathlib import Path

import numpy as np
import pytest

from rspaces.cli import main

REPO = Path(__file__).resolve().parent.parent


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_expecting_usage_error(*argv):
    with pytest.raises(SystemExit) as info:
        main(list(argv))
    return info.value.code


# ---------------------------------------------------------------------------
# happy paths


def test_classify_plain(capsys):
    code, out, _ = run(capsys, "classify", "G", "2")
    assert code == 0
    assert "G2: 1 admissible sets (closed form agrees)" in out
    assert "{1,2}" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "B", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["admissible_sets"] == [[1], [1, 2], [1, 2, 3]]
    assert payload["closed_form_agrees"] is True


def test_classify_markdown_matches_docs(capsys):
    code, out, _ = run(capsys, "classify", "E", "6", "--format", "markdown")
    assert code == 0
    golden = (REPO / "docs" / "classification.md").read_text()
    assert out.strip() in golden


def test_check_not_admissible_with_witness(capsys):
    code, out, _ = run(capsys, "check", "BC", "3", "--set", "1,2,3")
    assert code == 0
    assert "NOT admissible" in out and "(2, 2, 2)" in out


def test_check_admissible_json(capsys):
    code, out, _ = run(capsys, "check", "B", "3", "--set", "1,2", "--format", "json")
    payload = json.loads(out)
    assert payload == {
        "admissible": True,
        "family": "B",
        "rank": 3,
        "set": [1, 2],
        "witness": None,
    }


def test_two_number(capsys):
    code, out, _ = run(capsys, "two-number", "A", "4", "--set", "2")
    assert code == 0 and "10" in out
    code, out, _ = run(capsys, "two-number", "A", "4", "--set", "2", "--format", "json")
    payload = json.loads(out)
    assert payload["two_number"] == 10
    assert payload["weyl_order"] == 120 and payload["stabilizer_order"] == 12


def test_orbit_json_deterministic(capsys):
    args = ("orbit", "C", "3", "--set", "3", "--enumerate", "--elements", "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    payload = json.loads(first)
    assert payload["size"] == 8 and payload["method"] == "both"
    assert len(payload["elements"]) == 8


def test_orbit_dump(tmp_path, capsys):
    dump = tmp_path / "orbit.bin"
    code, _, _ = run(capsys, "orbit", "A", "2", "--set", "1", "--dump", str(dump))
    assert code == 0
    data = np.frombuffer(dump.read_bytes(), dtype="<i2").reshape(-1, 2)
    assert [tuple(v) for v in data.tolist()] == [(-1, 1), (0, -1), (1, 0)]


def test_orbit_budget_exceeded_not_strict(capsys):
    code, out, err = run(capsys, "orbit", "E", "8", "--set", "1,2,3,4,5,6,7,8", "--enumerate")
    assert code == 0
    assert "order_formula" in out
    assert "exceeds enumeration budget" in err


def test_orbit_budget_exceeded_strict(capsys):
    code, _, _ = run(
        capsys, "orbit", "E", "8", "--set", "1,2,3,4,5,6,7,8", "--enumerate", "--strict"
    )
    assert code == 3


def test_subgroups_minimal(capsys):
    code, out, _ = run(capsys, "subgroups", "A", "4", "--set", "1,2,3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["exploratory"] is True
    assert {"basis": [[1, 3], [2]], "order": 4, "proper": True} in payload[
        "minimal_triple_subgroups"
    ]


def test_subgroups_gens_witness(capsys):
    code, out, _ = run(
        capsys, "subgroups", "A", "3", "--set", "1,3", "--gens", "1,3", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["is_triple"] is False
    assert payload["witness"] == [1, 1, 1]


def test_subgroups_preset(capsys):
    code, out, _ = run(
        capsys,
        "subgroups", "A", "5",
        "--preset", "a-r-flag-example",
        "--params", "1,3,5",
        "--format", "json",
    )
    payload = json.loads(out)
    assert payload["is_triple"] is True
    assert payload["subgroup_basis"] == [[1, 5], [3]]
    assert payload["subgroup_order"] == 4


# ---------------------------------------------------------------------------
# usage errors exit 2


@pytest.mark.parametrize(
    "argv",
    [
        ("classify", "H", "3"),
        ("classify", "B", "1"),
        ("check", "B", "3", "--set", ""),
        ("check", "B", "3", "--set", "0"),
        ("check", "B", "3", "--set", "4"),
        ("check", "B", "3", "--set", "x"),
        ("two-number", "B", "3", "--set", "2"),  # not admissible
        ("subgroups", "B", "3"),  # needs --set or --preset
        ("subgroups", "B", "3", "--preset", "a-r-flag-example", "--params", "1,2,3"),  # not A
        ("subgroups", "A", "5", "--preset", "nope", "--params", "1,2,3"),
        ("subgroups", "A", "5", "--preset", "a-r-flag-example", "--params", "1,2"),
        ("subgroups", "A", "5", "--gens", "1,2"),  # --gens without --set
    ],
)
def test_usage_errors(argv):
    assert run_expecting_usage_error(*argv) == 2


def test_orbit_budget_env_default(monkeypatch):
    from rspaces.cli import make_parser

    monkeypatch.setenv("RSPACES_ORBIT_BUDGET", "1234")
    args = make_parser().parse_args(["orbit", "A", "3", "--set", "1"])
    assert args.budget == 1234


def test_verify_all_exit_wiring(monkeypatch, capsys):
    import rspaces.cli as cli
    from rspaces.verify import CriterionResult

    ok = CriterionResult(1, "stub", True, "fine", 0.0)
    bad = CriterionResult(2, "stub", False, "broken", 0.0)
    monkeypatch.setattr(cli, "run_all", lambda: [ok])
    assert main(["verify-all"]) == 0
    monkeypatch.setattr(cli, "run_all", lambda: [ok, bad])
    assert main(["verify-all"]) == 1
    out = capsys.readouterr().out
    assert "FAIL criterion  2" in out


# ---------------------------------------------------------------------------
# golden docs stay in sync with the code


def test_docs_classification_up_to_date(tmp_path):
    from rspaces.cli import _write_fixtures

    _write_fixtures(tmp_path)
    fresh = (tmp_path / "classification.md").read_text()
    assert (REPO / "docs" / "classification.md").read_text() == fresh


def test_docs_root_fixtures_up_to_date(tmp_path):
    from rspaces.cli import _write_fixtures

    _write_fixtures(tmp_path)
    for path in sorted((tmp_path / "roots").glob("*.json")):
        golden = REPO / "docs" / "roots" / path.name
        assert golden.read_text() == path.read_text()
