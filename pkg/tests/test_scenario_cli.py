import json
from pathlib import Path

import pytest

from syslab import cli
from syslab.errors import ScenarioParseError
from syslab.runner import run_scenario, write_report
from syslab.scenario import load_scenario, parse_scenario_text

SCENARIOS = Path(__file__).parent.parent / "scenarios"


def _strip_timing(report):
    out = json.loads(json.dumps(report))
    for task in out["tasks"]:
        task.pop("wall_clock_s", None)
    return out


def test_parse_bundled_scenarios():
    for path in sorted(SCENARIOS.glob("*.scn")):
        scenario = load_scenario(path)
        assert scenario.tasks, path


def test_parse_rejects_unknown_kind():
    with pytest.raises(ScenarioParseError):
        parse_scenario_text("[task t]\nkind = explode\n")


def test_parse_rejects_dangling_reference():
    text = "[task t]\nkind = goodness-sweep\ncomplex = nowhere\n"
    with pytest.raises(ScenarioParseError):
        parse_scenario_text(text)


def test_parse_rejects_low_constants_without_flag():
    with pytest.raises(ScenarioParseError):
        parse_scenario_text("[constants]\nC = 10\n")
    scenario = parse_scenario_text("[constants]\nC = 10\nempirical = yes\n")
    assert scenario.constants.C == 10


def test_run_pipeline_scenario(tmp_path):
    scenario = load_scenario(SCENARIOS / "pipeline-42.scn")
    report, code = run_scenario(scenario, tmp_path)
    assert code == 0
    assert report["pass"]
    pipeline = report["tasks"][0]
    assert pipeline["outputs"]["thickness_profile"] == [0, 1, 1, 2, 1, 1, 0]
    assert pipeline["outputs"]["goodness"] == 1
    figure = report["tasks"][1]
    assert (tmp_path / figure["outputs"]["file"]).exists()


def test_reports_deterministic(tmp_path):
    scenario = load_scenario(SCENARIOS / "goodness.scn")
    r1, _ = run_scenario(scenario, tmp_path / "a")
    scenario2 = load_scenario(SCENARIOS / "goodness.scn")
    r2, _ = run_scenario(scenario2, tmp_path / "b")
    assert _strip_timing(r1) == _strip_timing(r2)


def test_assertions_carry_constants(tmp_path):
    scenario = load_scenario(SCENARIOS / "glide-minset.scn")
    report, code = run_scenario(scenario, tmp_path)
    assert code == 0
    task = report["tasks"][0]
    prox = next(a for a in task["assertions"] if a["name"] == "min-proximity")
    assert prox["constant"] == "9L+6"
    assert prox["bound"] == 24
    assert prox["measured"] <= 24


def test_cli_run_and_exit_codes(tmp_path, capsys):
    out = tmp_path / "r.json"
    code = cli.main(["run", str(SCENARIOS / "pipeline-42.scn"), "--out", str(out)])
    assert code == 0
    report = json.loads(out.read_text())
    assert report["schema"] == "report/1"

    assert cli.main(["run", str(tmp_path / "missing.scn")]) == 2

    bad = tmp_path / "bad.scn"
    bad.write_text("[task t]\nkind = explode\n")
    assert cli.main(["run", str(bad)]) == 2


def test_cli_constants_override_fails_goodness(tmp_path):
    out = tmp_path / "r.json"
    code = cli.main(["run", str(SCENARIOS / "goodness.scn"),
                     "--out", str(out), "--constants", "C=1"])
    assert code == 1
    report = json.loads(out.read_text())
    corner = next(a for t in report["tasks"] for a in t["assertions"]
                  if a["name"] == "corner-goodness")
    assert not corner["pass"]
    assert corner["witness"] is not None  # the violating pair


def test_cli_check(tmp_path):
    good = tmp_path / "tri.fc"
    good.write_text("flagcomplex v1\n0 1\n1 2\n2 0\n")
    assert cli.main(["check", str(good)]) == 0

    octa = tmp_path / "octa.fc"
    lines = ["flagcomplex v1"]
    opposite = {0: 1, 1: 0, 2: 3, 3: 2, 4: 5, 5: 4}
    for u in range(6):
        for v in range(u + 1, 6):
            if opposite[u] != v:
                lines.append(f"{u} {v}")
    octa.write_text("\n".join(lines) + "\n")
    assert cli.main(["check", str(octa)]) == 1

    assert cli.main(["check", str(tmp_path / "none.fc")]) == 2


def test_cli_render(tmp_path):
    code = cli.main(["render", str(SCENARIOS / "pipeline-42.scn"),
                     "--out", str(tmp_path)])
    assert code == 0
    assert (tmp_path / "pipeline-42.svg").exists()


def test_env_jobs(tmp_path, monkeypatch):
    monkeypatch.setenv("SYSLAB_JOBS", "2")
    out = tmp_path / "r.json"
    assert cli.main(["run", str(SCENARIOS / "tree-extend.scn"),
                     "--out", str(out)]) == 0


def test_corner_geodesics_are_geodesics():
    import random

    import oracles
    from syslab import eplane
    c = eplane.window((0, 0), 10)
    rng = random.Random(17)
    for _ in range(40):
        x = (rng.randint(-4, 4), rng.randint(-4, 4))
        y = (rng.randint(-4, 4), rng.randint(-4, 4))
        if x == y:
            continue
        g = eplane.corner_geodesic(x, y)
        assert g[0] == x and g[-1] == y
        assert len(g) - 1 == eplane.lattice_distance(x, y)
        assert oracles.is_geodesic(c, g)


def test_goodness_sweep_staircase_and_ambient_assertions(tmp_path):
    scenario = load_scenario(SCENARIOS / "goodness.scn")
    report, code = run_scenario(scenario, tmp_path)
    assert code == 0
    names = {a["name"]: a for t in report["tasks"] for a in t["assertions"]}
    assert names["staircase-goodness"]["constant"] == "4K/sqrt3+1"
    assert abs(names["staircase-goodness"]["bound"] - 2.1547005383792515) < 1e-12
    assert names["flat-ambient-goodness"]["constant"] == "C'+10"


def test_write_report_partial_on_failure(tmp_path):
    text = (SCENARIOS / "goodness.scn").read_text() + \
        "\n[task boom]\nkind = geodesic-pipeline\ncomplex = main\n" \
        "from = 0 0\nto = 16 16\n"
    scenario = parse_scenario_text(text, base_dir=SCENARIOS)
    report, code = run_scenario(scenario, tmp_path)
    assert code == 1
    assert report["tasks"][0]["pass"]            # earlier task still recorded
    assert report["tasks"][1]["error"] is not None
    write_report(report, tmp_path / "partial.json")
    assert (tmp_path / "partial.json").exists()
