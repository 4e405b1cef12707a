import ast
import json

from pathlib import Path

import pytest

from loguru import logger

from typer.testing import CliRunner

from pydantic import ValidationError

from cli.__main__ import main
from cli.app import app
from cli.runner import round_floats, run, to_csv

from schema.run_schema import RunConfig

import services

from services.spectral_service import SpectralService



runner = CliRunner()

BOWTIE = '{"kind": "named", "name": "bowtie"}'
SQUARE = '{"kind": "polygon", "vertices": [[0, 0], [1, 0], [1, 1], [0, 1]], "convex": true}'


class TestCommands:

    def test_pzero(self):
        result = runner.invoke(app, ["pzero", "--n", "2"])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        assert document["n"] == 2
        assert document["p"] == pytest.approx(1.8411838, abs=1e-6)

    def test_mikhlin(self):
        result = runner.invoke(app, ["mikhlin", "--n", "3", "--R", "2"])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        assert document["value_sq"] == pytest.approx(8.38905, abs=1e-4)
        assert document["kind"] == "exact"

    def test_mikhlin_star(self):
        result = runner.invoke(app, ["mikhlin-star", "--n", "3", "--R", "2", "--m1", "1", "--m2", "1", "--m3", "0"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["value_sq"] == pytest.approx(30.5562, abs=1e-3)

    def test_qc_from_beta(self):
        result = runner.invoke(app, ["qc", "--beta", "0.5"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["K"] == pytest.approx(5.828427, abs=1e-6)

    def test_qc_from_jacobians(self, write_json):
        path = write_json("jacobians.json", "[[[1, 0], [1, 1]], [[1, 0], [-1, 1]], [[1, 0], [0, 1]]]")
        result = runner.invoke(app, ["qc", "--jacobians", path])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        assert document["K"] == pytest.approx(2.618034, abs=1e-6)
        assert len(document["pieces"]) == 3

    def test_mecb(self, write_json):
        result = runner.invoke(app, ["mecb", "--domain", write_json("bowtie.json", BOWTIE)])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        assert document["radius"] == pytest.approx(5 / 6, abs=1e-9)
        assert document["center"] == pytest.approx([0.0, 2 / 3], abs=1e-9)
        assert document["diameter"] == pytest.approx(1.5811388, abs=1e-7)

    def test_bound_csv(self, write_json):
        result = runner.invoke(app, ["bound", "--domain", write_json("bowtie.json", BOWTIE), "--csv"])
        assert result.exit_code == 0
        assert "formula" in result.output
        assert "corollary_a" in result.output

    def test_fem(self, write_json):
        result = runner.invoke(app, ["fem", "--domain", write_json("square.json", SQUARE), "--refine", "2"])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        assert document["dof_count"] == 41
        assert document["eigenvalues"][1] > 9.8696

    def test_fem_table(self, write_json):
        path = write_json("square.json", SQUARE)
        result = runner.invoke(app, ["fem", "--domain", path, "--refine", "2", "--table", "--output", "csv"])
        assert result.exit_code == 0
        lines = result.stdout.strip().splitlines()
        assert lines[0].startswith("level,")
        assert len(lines) == 4

    def test_verify(self, write_json):
        result = runner.invoke(app, ["verify", "--domain", write_json("square.json", SQUARE), "--refine", "2"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["satisfied"] is True

    def test_reproduce_prints_report(self):
        result = runner.invoke(app, ["reproduce", "pzero_table"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["example"] == "pzero_table"


class TestExitCodes:

    def test_domain_error(self):
        result = runner.invoke(app, ["mikhlin", "--n", "3", "--R", "0.5"])
        assert result.exit_code == 1

    def test_overflow_is_numerical(self):
        result = runner.invoke(app, ["mikhlin", "--n", "3", "--R", "800"])
        assert result.exit_code == 2

    def test_malformed_domain(self, write_json):
        result = runner.invoke(app, ["mecb", "--domain", write_json("broken.json", '{"kind": "polygon", ')])
        assert result.exit_code == 1

    def test_domain_file_not_utf8(self, tmp_path):
        path = tmp_path / "binary.json"
        path.write_bytes(b"\xff\xfe{")
        outcome = run(RunConfig(command="bound", domain_path=str(path)))
        assert outcome.exit_code == 1
        assert outcome.output == ""
        assert "ConfigurationError" in outcome.warnings[0]

    def test_jacobians_file_not_utf8(self, tmp_path):
        path = tmp_path / "jacobians.json"
        path.write_bytes(b"\xff\xfe[")
        result = runner.invoke(app, ["qc", "--jacobians", str(path)])
        assert result.exit_code == 1
        assert result.exception is None or isinstance(result.exception, SystemExit)

    def test_unexpected_failure_is_reported(self):
        class BrokenService(SpectralService):
            def p_zero(self, n):
                raise RuntimeError("ARPACK did not converge")

        outcome = run(RunConfig(command="pzero", n=3), service=BrokenService())
        assert outcome.exit_code == 2
        assert "RuntimeError" in outcome.warnings[0]

    def test_missing_file(self, tmp_path):
        result = runner.invoke(app, ["mecb", "--domain", str(tmp_path / "absent.json")])
        assert result.exit_code == 1

    def test_dimension_override_on_planar_polygon(self, write_json):
        result = runner.invoke(app, ["bound", "--domain", write_json("bowtie.json", BOWTIE), "--n", "4"])
        assert result.exit_code == 1

    def test_unknown_example(self):
        result = runner.invoke(app, ["reproduce", "moebius"])
        assert result.exit_code == 1
        assert "bowtie" in result.output

    def test_qc_needs_input(self):
        result = runner.invoke(app, ["qc"])
        assert result.exit_code == 1

    def test_non_star_shaped_anchor(self, write_json):
        path = write_json("square.json", '{"kind": "polygon", "vertices": [[0, 0], [1, 0], [1, 1], [0, 1]], '
                                         '"anchor": [2, 2]}')
        result = runner.invoke(app, ["fem", "--domain", path])
        assert result.exit_code == 1

    def test_main_usage_error(self):
        assert main(["pzero"]) == 1

    def test_main_success(self, capsys):
        assert main(["pzero", "--n", "3"]) == 0
        assert json.loads(capsys.readouterr().out)["p"] == pytest.approx(2.081, abs=1e-3)

    def test_main_numerical_failure(self):
        assert main(["mikhlin", "--n", "3", "--R", "800"]) == 2


class TestRunner:

    def test_reproduce_bowtie(self):
        outcome = run(RunConfig(command="reproduce", example="bowtie"))
        assert outcome.exit_code == 0
        document = json.loads(outcome.output)
        assert document["intermediates"]["K"] == pytest.approx(2.618034, abs=1e-6)
        assert document["intermediates"]["d"] == pytest.approx(1.5811388, abs=1e-7)
        assert document["intermediates"]["bound_symmetric"] == pytest.approx(0.4144, abs=1e-3)
        assert document["intermediates"]["bound_mecb"] == pytest.approx(0.3729, abs=1e-3)
        assert outcome.warnings

    def test_reproduce_tan_star_flags_discrepancy(self):
        outcome = run(RunConfig(command="reproduce", example="tan_star"))
        assert outcome.exit_code == 0
        document = json.loads(outcome.output)
        assert document["intermediates"]["bound"] == pytest.approx(0.0284, abs=5e-4)
        claims = {claim["name"]: claim for claim in document["claims"]}
        assert not claims["bound"]["match"]
        assert claims["d"]["match"]
        assert any(message.startswith("bound:") for message in outcome.warnings)

    def test_reproduce_half_ball(self):
        document = json.loads(run(RunConfig(command="reproduce", example="half_ball")).output)
        assert document["intermediates"]["bound_n4"] == pytest.approx(2.643, abs=0.01)
        assert all(claim["match"] for claim in document["claims"])

    @pytest.mark.parametrize("example", ["mikhlin_table", "pzero_table"])
    def test_tables_match(self, example):
        outcome = run(RunConfig(command="reproduce", example=example))
        assert outcome.exit_code == 0
        assert not outcome.warnings or all("published" not in w for w in outcome.warnings)

    def test_deterministic_output(self):
        config = RunConfig(command="reproduce", example="bowtie", seed=3)
        assert run(config).output == run(config).output

    def test_significant_digits(self, monkeypatch):
        monkeypatch.setenv("NEUMANN_FLOAT_DIGITS", "4")
        document = json.loads(run(RunConfig(command="mikhlin", n=3, R=2.0)).output)
        assert document["value_sq"] == 8.389

    def test_pzero_keeps_ten_decimals(self, monkeypatch):
        monkeypatch.setenv("NEUMANN_FLOAT_DIGITS", "3")
        document = json.loads(run(RunConfig(command="pzero", n=2)).output)
        assert document["p"] == pytest.approx(1.8411837813, abs=1e-10)

    def test_missing_flags(self):
        with pytest.raises(ValidationError):
            RunConfig(command="mikhlin", n=3)

    def test_refine_range(self):
        with pytest.raises(ValidationError):
            RunConfig(command="fem", domain_path="x.json", refine=9)

    def test_seed_from_environment(self, monkeypatch):
        monkeypatch.setenv("NEUMANN_SEED", "17")
        assert RunConfig(command="pzero", n=2).seed == 17

    def test_service_layer_does_not_import_cli(self):
        for path in Path(services.__file__).parent.glob("*.py"):
            tree = ast.parse(path.read_text(encoding="utf-8"))
            modules = [node.module for node in ast.walk(tree) if isinstance(node, ast.ImportFrom)]
            modules += [alias.name for node in ast.walk(tree) if isinstance(node, ast.Import) for alias in node.names]
            assert not [m for m in modules if m and m.split(".")[0] == "cli"], path.name

    def test_bad_integer_setting_warns(self, monkeypatch):
        messages = []
        logger.add(messages.append, level="WARNING", format="{message}")
        monkeypatch.setenv("NEUMANN_SEED", "seventeen")
        assert RunConfig(command="pzero", n=2).seed == 0
        assert any("NEUMANN_SEED" in m and "seventeen" in m for m in messages)

    def test_round_floats(self):
        assert round_floats({"a": [1.23456, 2], "b": "x"}, 3) == {"a": [1.23, 2], "b": "x"}

    def test_csv_rows_per_bound(self):
        text = to_csv({"bounds": [{"formula": "a", "value": 1.0}, {"formula": "b", "value": 2.0}]})
        assert text.splitlines() == ["formula,value", "a,1.0", "b,2.0"]
