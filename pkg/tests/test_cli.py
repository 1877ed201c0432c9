import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from autcone.cli import main
from autcone.pipeline import VarietyDescriptor, build_model, compute, report_schema

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = {
    "compute_segre_2_3.json": ["compute", "segre", "2", "3", "--json"],
    "compute_quadric_5.json": ["compute", "quadric", "5", "--json"],
    "section_pluecker_2_5_codim2.json": ["section", "pluecker", "2", "5", "--seed", "7", "--codim", "2", "--json"],
    "project_segre_4_4_rank3.json": ["project", "segre", "4", "4", "--center", "rank3", "--json"],
    "census.json": ["census", "--json"],
}


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_output(capsys, name):
    code, out, _ = run(capsys, GOLDEN_CASES[name])
    assert code == 0
    assert out == (GOLDEN / name).read_text()


@pytest.mark.parametrize("name", [n for n in sorted(GOLDEN_CASES) if n != "census.json"])
def test_reports_match_schema(name):
    jsonschema.validate(json.loads((GOLDEN / name).read_text()), report_schema())


def test_reruns_are_byte_identical():
    cmd = [sys.executable, "-m", "autcone", "section", "segre", "2", "3", "--seed", "3", "--json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["dim_aut"] == 7


def test_text_output(capsys):
    code, out, _ = run(capsys, ["compute", "veronese", "3", "2"])
    assert code == 0
    lines = dict(line.split(None, 1) for line in out.splitlines())
    assert lines["dim_aut"] == "9"
    assert lines["dim_prolong_1"] == "6"
    assert lines["ideal_dims"] == "I_2=6"


def test_extra_degree_piece(capsys):
    code, out, _ = run(capsys, ["compute", "segre", "2", "3", "--degree", "3", "--json"])
    rep = json.loads(out)
    assert code == 0
    assert rep["ideal_dims"] == {"2": 3, "3": 56 - 4 * 10}
    assert rep["dim_aut"] == 12


def test_descriptor_flag(capsys):
    desc = '{"kind": "cone_over", "of": {"kind": "veronese", "params": [2, 2]}, "params": [2]}'
    code, out, _ = run(capsys, ["compute", "--descriptor", desc, "--json"])
    rep = json.loads(out)
    assert code == 0
    assert rep["dim_vertex"] == 2
    assert VarietyDescriptor.from_obj(rep["descriptor"]).to_obj() == rep["descriptor"]


def test_secant_projection_exits_one(capsys):
    code, out, err = run(capsys, ["project", "segre", "2", "2", "--center", "rank2", "--json"])
    assert code == 1
    assert json.loads(out)["anomalies"]
    assert "check failures" in err


def test_section_expectation_triggers_reseeding(capsys):
    code, out, _ = run(capsys, ["section", "segre", "2", "3", "--expect", "8,3", "--max-retries", "2", "--json"])
    rep = json.loads(out)
    assert code == 1
    assert [a["seed"] for a in rep["attempts"]] == [7, 8]
    assert not any(a["ok"] for a in rep["attempts"])


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "segre", "1", "3"],
        ["compute", "segre", "2"],
        ["compute", "nonsense", "2"],
        ["compute"],
        ["compute", "--descriptor", "{not json"],
        ["project", "segre", "2", "3"],
        ["section", "segre", "2", "3", "--expect", "1"],
        [],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, _, _ = run(capsys, argv)
    assert code == 2


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--bogus"])
    assert exc.value.code == 2


def test_fixtures_dump(capsys):
    code, out, _ = run(capsys, ["--fixtures"])
    assert code == 0
    quantities = [f["quantity"] for f in json.loads(out)]
    assert "Gr(2,5) general hyperplane section (dim aut, dim aut^(1))" in quantities


def test_census_text(capsys):
    code, out, _ = run(capsys, ["census", "--type", "I", "--max", "6"])
    assert code == 0
    lines = {line.split("  ")[0].strip(): line.split("  ", 1)[1].strip() for line in out.splitlines() if "  " in line}
    assert lines["type I exceptions"] == "[[2, 2], [2, 3]]"
    assert lines["total violations"] == "0"


def test_compute_report_without_parametrization_skips_tangency():
    rep = compute(build_model(VarietyDescriptor("quadric", (4,))))
    assert rep["checks"]["tangency_ok"] is None
    assert rep["dim_aut"] == 7
