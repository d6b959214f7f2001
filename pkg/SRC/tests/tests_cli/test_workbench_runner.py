import json
from pathlib import Path

import allure
import pytest

from SRC.cli.command_handler import EXIT_CHECK_FAILED, EXIT_ERROR, EXIT_OK
from Utilities.GenericUtils.config_utils import SettingsUtil, get_settings, set_settings
from Utilities.GenericUtils.file_op_utils import read_json, read_text
from workbench_runner import build_parser, main

SPECS = Path(__file__).parents[3] / "TestDataCommon" / "specs"


def spec_path(name: str) -> str:
    return str(SPECS / f"{name}.json")


@pytest.fixture(autouse=True)
def restore_settings():
    saved = get_settings()
    yield
    set_settings(saved)


def run_json(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


@allure.epic("Command Line")
@allure.feature("Group Commands")
class TestGroupCommands:

    def test_build(self, capsys):
        code, data = run_json(capsys, ["build", "--spec", spec_path("a4")])
        assert code == EXIT_OK
        assert (data["order"], data["degree"], data["derangements"]) == (12, 4, 3)
        assert data["transitive"] and not data["regular"]

    def test_build_from_generators(self, capsys):
        code, data = run_json(capsys, ["build", "--spec", spec_path("s3")])
        assert code == EXIT_OK
        assert (data["name"], data["order"]) == ("S3", 6)

    def test_density(self, capsys):
        code, data = run_json(capsys, ["density", "--spec", spec_path("a5_pairs")])
        assert code == EXIT_OK
        assert (data["alpha"], data["max_stabilizer_order"], data["rho"]) == (12, 6, "2")
        assert data["ekr"] is False
        assert data["strict_ekr"] is None

    def test_strict_ekr(self, capsys):
        code, data = run_json(capsys, ["ekr", "--spec", spec_path("a4"), "--strict"])
        assert code == EXIT_OK
        assert data["ekr"] is True
        assert data["strict_ekr"] is False
        assert ["()", "(1 3 2)", "(1 4 2)"] in data["witness_cycles"]

    def test_graph_dot(self, tmp_path):
        dot = tmp_path / "s3.dot"
        assert main(["graph", "--spec", spec_path("s3"), "--dot", str(dot)]) == EXIT_OK
        text = read_text(str(dot))
        assert text.startswith('graph "S3" {')
        assert text.count(" -- ") == 6
        complement_dot = tmp_path / "s3_complement.dot"
        assert main(["graph", "--spec", spec_path("s3"), "--dot", str(complement_dot), "--complement"]) == EXIT_OK
        assert read_text(str(complement_dot)).count(" -- ") == 9

    @pytest.mark.parametrize("spec", [spec_path("malformed"), spec_path("missing")])
    def test_bad_spec_exits_with_error(self, spec):
        assert main(["build", "--spec", spec]) == EXIT_ERROR

    def test_element_cap(self):
        assert main(["--element-cap", "10", "build", "--spec", spec_path("s3_wr_s2")]) == EXIT_ERROR


@allure.epic("Command Line")
@allure.feature("Verification")
@pytest.mark.regression
class TestVerifyCommand:

    def test_verify_writes_reports(self, tmp_path, capsys):
        report, csv = tmp_path / "report.json", tmp_path / "report.csv"
        code = main(["verify", "--suite", "wreath-formulas", "--report", str(report), "--csv", str(csv)])
        summary = json.loads(capsys.readouterr().out)
        assert code in (EXIT_OK, EXIT_CHECK_FAILED)
        assert code == EXIT_OK, summary
        document = read_json(str(report))
        assert document["summary"] == summary
        assert [check["check_id"] for check in document["checks"]] == ["wreath-formulas"]
        assert csv.exists()

    def test_unknown_check_exits_with_error(self, tmp_path):
        assert main(["verify", "--suite", "no-such-check", "--report", str(tmp_path / "r.json")]) == EXIT_ERROR

    def test_parser_defaults(self):
        args = build_parser().parse_args(["verify"])
        assert args.suite == "all"
        assert args.extended is None and args.threads is None


@allure.epic("Command Line")
@allure.feature("Settings")
class TestSettings:

    def test_yaml_and_environment_overrides(self, tmp_path, monkeypatch):
        config = tmp_path / "config.yaml"
        config.write_text("threads: 3\nlimits:\n  mis_cap: 99\nchecks:\n  extended: true\n", encoding="utf-8")
        monkeypatch.setenv("EKR_SEED", "5")
        settings = SettingsUtil(str(config)).get_settings()
        assert (settings.threads, settings.mis_cap, settings.extended, settings.seed) == (3, 99, True, 5)
        assert settings.vertex_cap == 5000

    def test_missing_config_uses_defaults(self, tmp_path):
        settings = SettingsUtil(str(tmp_path / "absent.yaml")).get_settings()
        assert settings.element_cap == 250000
