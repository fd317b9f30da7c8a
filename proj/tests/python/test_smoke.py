"""Smoke tests for the Python module: the main operations are callable and
agree with the documented behavior on small inputs."""

import json
import os
import pathlib

import pytest

import mcdm

FIXTURES = pathlib.Path(os.environ.get("MCDM_FIXTURES_DIR",
                                       pathlib.Path(__file__).parents[2] /
                                       "fixtures"))


def small_situation():
    return {
        "problem": "ranking",
        "alternatives": ["a", "b", "c"],
        "criteria": [
            {"name": "value", "direction": "maximize",
             "data_type": "quantitative", "weight": 1.0},
            {"name": "cost", "direction": "minimize",
             "data_type": "quantitative", "weight": 1.0},
        ],
        "performance": [[2.0, 10.0], [4.0, 20.0], [6.0, 15.0]],
    }


def test_screen_and_typology():
    verdict = mcdm.screen_dm_point("tree", False, False)
    assert verdict["is_dm_point"] is True
    assert verdict["needs_criteria_definition"] is True

    typology = mcdm.classify_typology(1, 1)
    assert typology["mc_eligible"] is False
    assert mcdm.classify_typology(4, 1)["mc_eligible"] is True


def test_validation_normalizes_weights():
    validated = mcdm.validate_situation(small_situation())
    weights = [c["weight"] for c in validated["criteria"]]
    assert weights == pytest.approx([0.5, 0.5])

    with pytest.raises(mcdm.McdmError):
        bad = small_situation()
        bad["alternatives"] = ["only"]
        bad["performance"] = [[1.0, 2.0]]
        mcdm.validate_situation(bad)


def test_derive_and_match_tools_fixture():
    situation = json.loads((FIXTURES / "tools.json").read_text())
    usage = json.loads((FIXTURES / "tools_usage.json").read_text())
    requirements = mcdm.derive_requirements(situation, usage)
    assert requirements["problem"] == "choice"
    assert requirements["count_bucket"] == "medium"
    assert requirements["data_type_required"] == ["quantitative"]
    assert requirements["weighting_type"] == "simple"

    report = mcdm.match_methods(requirements)
    assert report["candidates"] == ["weighting"]
    assert report["matrix"]["skills"] == [0, 0, 0, 1]

    csv = mcdm.emit_matrix(report)
    assert csv.splitlines()[0] == "attribute,maut,ahp,outranking,weighting"
    assert csv.splitlines()[-1] == "candidate,0,0,0,1"


def test_weighted_selection_refines_risks():
    situation = json.loads((FIXTURES / "risks.json").read_text())
    requirements = mcdm.derive_requirements(situation)
    report = mcdm.select_by_weighting(requirements, {"tool": 1.0})
    assert report["candidates"] == ["maut", "outranking"]
    assert report["chosen"] == "outranking"


def test_saw_rank_scores():
    ranking = mcdm.saw_rank(small_situation())
    assert ranking["scores"] == pytest.approx([0.5, 0.25, 0.75])
    assert ranking["order"][0] == "c"


def test_ahp_priorities_and_consistency():
    matrix = [[1, 3, 5], [1 / 3, 1, 3], [1 / 5, 1 / 3, 1]]
    weights, lambda_max = mcdm.ahp_priorities(matrix)
    assert weights[0] == pytest.approx(0.636985571744757, abs=1e-12)
    assert lambda_max == pytest.approx(3.038511090558170, abs=1e-12)
    ci, cr = mcdm.ahp_consistency(matrix)
    assert cr < 0.1

    eigen, _ = mcdm.ahp_priorities(matrix, mode="eigenvector")
    assert eigen == pytest.approx(weights, abs=1e-3)


def test_promethee_flows_conserve():
    flows = mcdm.promethee_flows(small_situation())
    assert sum(flows["net"]) == pytest.approx(0.0, abs=1e-12)
    assert all(0.0 <= phi <= 1.0 for phi in flows["plus"])


def test_apply_method_choice():
    situation = small_situation()
    situation["problem"] = "choice"
    result = mcdm.apply_method(situation, "weighting")
    assert result["kind"] == "choice"
    assert result["choice"] == ["c"]

    verdict = mcdm.validate_result(result, situation)
    assert verdict["ok"] is True


def test_sorting_requires_outranking():
    situation = small_situation()
    situation["problem"] = "sorting"
    situation["sorting_categories"] = ["keep", "drop"]
    with pytest.raises(mcdm.McdmError):
        mcdm.apply_method(situation, "weighting")
    result = mcdm.apply_method(situation, "outranking",
                               {"sorting_thresholds": [0.0]})
    assert result["kind"] == "sorting"
    assert set(result["assignment"]) == {"a", "b", "c"}


def test_run_pipeline(tmp_path):
    report = mcdm.run(
        situation_path=str(FIXTURES / "use_cases.json"),
        usage_path=str(FIXTURES / "use_cases_usage.json"),
        flashbacks=[("extend", "fuzzy")],
        output_dir=str(tmp_path),
    )
    assert report["exit_code"] == 0
    assert report["selection"]["chosen"] == "fuzzy"
    assert len(report["iterations"]) == 2
    assert (tmp_path / "matrix.csv").exists()
    assert (tmp_path / "report.json").exists()


def test_fingerprint_is_canonical():
    a = {"problem": "choice",
         "data_type_required": ["qualitative", "quantitative"]}
    b = {"data_type_required": ["quantitative", "qualitative"],
         "problem": "choice"}
    assert mcdm.fingerprint(a) == mcdm.fingerprint(b)
