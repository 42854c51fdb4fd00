import json
from fractions import Fraction

import pytest
from click.testing import CliRunner

from cli import cli
from cohft_algebra import omega as omega_module
from exact_core import factorial


@pytest.fixture
def runner():
    return CliRunner()


def test_volume_all_methods(runner):
    result = runner.invoke(cli, ["volume", "--m", "2,1", "--method", "all"])
    assert result.exit_code == 0, result.output
    assert result.output.count("161/48") == 3
    assert "integral = 161" in result.output


@pytest.mark.parametrize("text,value", [("1", "1"), ("0,0,1", "1/6"), ("1,1", "3/2")])
def test_volume_values(runner, text, value):
    result = runner.invoke(cli, ["volume", "--m", text])
    assert result.exit_code == 0
    assert f"= {value}\n" in result.output


def test_volume_json(runner):
    result = runner.invoke(cli, ["volume", "--m", "1,1", "--format", "json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["values"] == {"recursive": "3/2"}
    assert payload["integral"] == 9


def test_volume_parse_error_exits_two(runner):
    result = runner.invoke(cli, ["volume", "--m", "1,x"])
    assert result.exit_code == 2


def test_volume_needs_m_or_table(runner):
    assert runner.invoke(cli, ["volume"]).exit_code == 2


def test_volume_table_csv(runner):
    result = runner.invoke(cli, ["volume", "--table", "--order", "3", "--format", "csv"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "m,weight,norm,value,integral"
    assert "2,2,2,5/4,5" in lines
    assert '"1,1",3,2,3/2,9' in lines


def test_genus_one_volume_from_table(runner, tmp_path):
    table = tmp_path / "correlators.jsonl"
    table.write_text('{"g": 1, "d": [0, 2], "value": "1/24"}\n')
    result = runner.invoke(
        cli, ["volume", "--m", "1", "--genus", "1", "--method", "closed"],
        env={"WPVOL_CORRELATOR_TABLE": str(table)},
    )
    assert result.exit_code == 0, result.output
    assert "= 1/24" in result.output


def test_genus_one_missing_correlator_exits_one(runner, tmp_path):
    table = tmp_path / "correlators.jsonl"
    table.write_text("")
    result = runner.invoke(
        cli, ["volume", "--m", "1", "--genus", "1", "--method", "closed"],
        env={"WPVOL_CORRELATOR_TABLE": str(table)},
    )
    assert result.exit_code == 1


def test_cache_dir_is_written(runner, tmp_path):
    result = runner.invoke(cli, ["volume", "--m", "2,1"], env={"WPVOL_CACHE_DIR": str(tmp_path)})
    assert result.exit_code == 0
    cached = json.loads((tmp_path / "volumes.json").read_text())
    assert cached["2,1"] == "161/48"


def test_zograf(runner):
    result = runner.invoke(cli, ["zograf", "--n", "8"])
    assert result.output == "49946\n"
    closed = runner.invoke(cli, ["zograf", "--n", "10", "--method", "closed"])
    recursive = runner.invoke(cli, ["zograf", "--n", "10"])
    assert closed.output == recursive.output
    assert runner.invoke(cli, ["zograf", "--n", "2"]).exit_code == 2


def test_series_json_is_deterministic(runner):
    first = runner.invoke(cli, ["series", "--order", "4", "--format", "json"])
    second = runner.invoke(cli, ["series", "--order", "4", "--format", "json"])
    assert first.exit_code == 0
    assert first.output == second.output
    payload = json.loads(first.output)
    assert payload["trunc_degree"] == 4
    assert {"d": 3, "e": [3, 0, 0, 0], "value": "61/36"} in payload["terms"]


def test_betti_poly(runner):
    result = runner.invoke(cli, ["betti", "--n", "4", "--poly"])
    assert result.output == "1 + 5q^2 + q^4\n"


def test_betti_csv(runner, tmp_path):
    out = tmp_path / "betti.csv"
    result = runner.invoke(cli, ["betti", "--n", "5", "--format", "csv", "--out", str(out)])
    assert result.exit_code == 0
    assert out.read_text().splitlines()[-1] == "5,1 0 16 0 16 0 1,34"


def _write(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)


def test_tensor(runner, tmp_path):
    left = _write(tmp_path / "a.json", {"order": 7, "coords": "C", "values": ["1", "1", "0", "0", "0"]})
    right = _write(tmp_path / "b.json", {"order": 7, "coords": "C", "values": ["1", "2", "0", "0", "0"]})
    result = runner.invoke(cli, ["tensor", "--left", left, "--right", right, "--order", "7"])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    # C4 = 1 + 2, C5 = 5·1·2, C6 = 8·2 + 8·4, C7 = 61·4
    assert payload == {"order": 7, "coords": "C", "values": ["1", "3", "10", "48", "244"]}


def test_tensor_accepts_other_coordinates(runner, tmp_path):
    left = _write(tmp_path / "a.json", {"order": 2, "coords": "s", "values": ["1", "0"]})
    right = _write(tmp_path / "b.json", {"order": 2, "coords": "B", "values": ["1", "0", "0"]})
    result = runner.invoke(cli, ["tensor", "--left", left, "--right", right])
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["order"] == 5


def test_coords_conversion(runner, tmp_path):
    source = _write(tmp_path / "s.json", {"order": 3, "coords": "s", "values": ["1", "0", "0"]})
    result = runner.invoke(cli, ["coords", source, "--to", "C"])
    assert result.exit_code == 0, result.output
    # Φ‴ = F(x; s1=1): C4 = V(δ1) = 1, C5 = 2!·V(2δ1) = 5/2, C6 = 3!·V(3δ1) = 61/6
    assert json.loads(result.output)["values"] == ["1", "1", "5/2", "61/6"]
    back = runner.invoke(cli, ["coords", source, "--to", "s"])
    assert json.loads(back.output)["values"] == ["1", "0", "0"]


def test_bad_coordinate_file_exits_one(runner, tmp_path):
    source = _write(tmp_path / "bad.json", {"order": 5, "coords": "C", "values": ["2", "0", "0"]})
    assert runner.invoke(cli, ["coords", source, "--to", "B"]).exit_code == 1


def test_asym_csv(runner):
    result = runner.invoke(cli, ["asym", "--kind", "wp", "--start", "10", "--n", "12"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "n,numerator,denominator,ratio,extrapolated"
    assert len(lines) == 4


def test_asym_out_of_range_exits_two(runner):
    assert runner.invoke(cli, ["asym", "--kind", "wp", "--n", "90"]).exit_code == 2


def test_check_suite_passes(runner):
    result = runner.invoke(cli, ["check", "--suite", "omega"])
    assert result.exit_code == 0, result.output
    assert "omega: passed" in result.output


def test_check_pde(runner):
    result = runner.invoke(cli, ["check", "--suite", "pde", "--order", "5"])
    assert result.exit_code == 0, result.output


def test_check_json_is_deterministic(runner):
    args = ["check", "--suite", "laplace", "--order", "4", "--seed", "5", "--format", "json"]
    first, second = runner.invoke(cli, args), runner.invoke(cli, args)
    assert first.exit_code == 0
    assert first.output == second.output
    assert json.loads(first.output)["seed"] == 5


def test_check_reports_a_sign_mutation(runner, monkeypatch):
    monkeypatch.setattr(
        omega_module,
        "_partition_weight",
        lambda p, k: Fraction((-1) ** (p - k + 1), factorial(k)) if k < p else Fraction(1, factorial(k)),
    )
    result = runner.invoke(cli, ["check", "--suite", "omega"])
    assert result.exit_code == 1
    assert "[FAIL] omega-expansions" in result.output


@pytest.mark.slow
def test_check_all(runner):
    result = runner.invoke(cli, ["check", "--suite", "all", "--order", "6"])
    assert result.exit_code == 0, result.output
