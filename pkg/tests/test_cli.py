import json
import sys

import loguru
import pytest
from click.testing import CliRunner

from brauer_kit import cli
from brauer_kit.base import Verification
from brauer_kit.category.coeff import DiagramSum
from brauer_kit.category.diagram import cap, cup, e_i, enumerate_diagrams, identity
from brauer_kit.cli import main
from brauer_kit.columns import NAME_PASS
from brauer_kit.suites.ep import EpSuite


def _json(result):
    """Erste JSON-Zeile der Ausgabe; Protokollzeilen von loguru werden übersprungen."""
    for line in result.output.splitlines():
        if line.startswith(("{", "[")):
            return json.loads(line)
    raise AssertionError(f"Keine JSON-Ausgabe: {result.output!r}")


@pytest.fixture
def runner():
    yield CliRunner()
    # die Kommandozeile hängt loguru an den umgelenkten stderr des Runners
    loguru.logger.remove()
    loguru.logger.add(sys.stderr)


def test_compose(runner):
    result = runner.invoke(main, ["compose", "--a", json.dumps(cap().to_json()), "--b", json.dumps(cup().to_json())])
    assert result.exit_code == 0
    assert _json(result) == {"diagram": {"k": 0, "ell": 0, "pairs": []}, "loops": 1}


def test_compose_from_file(runner, tmp_path):
    path = tmp_path / "e.json"
    path.write_text(json.dumps(e_i(2, 1).to_json()), encoding="utf-8")
    result = runner.invoke(main, ["compose", "--a", str(path), "--b", str(path)])
    assert result.exit_code == 0
    assert _json(result)["loops"] == 1


def test_bad_input_is_a_usage_error(runner):
    result = runner.invoke(main, ["compose", "--a", "{kaputt", "--b", json.dumps(cup().to_json())])
    assert result.exit_code == 2
    result = runner.invoke(main, ["compose", "--a", json.dumps(cup().to_json()), "--b", json.dumps(cup().to_json())])
    assert result.exit_code == 2
    result = runner.invoke(main, ["render", "--in", "gibt-es-nicht.json"])
    assert result.exit_code == 2


def test_enumerate_count(runner):
    result = runner.invoke(main, ["enumerate", "--k", "3", "--l", "3", "--count"])
    assert result.exit_code == 0
    assert _json(result) == {"k": 3, "ell": 3, "count": 15}


def test_render(runner):
    result = runner.invoke(main, ["render", "--in", json.dumps(e_i(2, 1).to_json())])
    assert result.exit_code == 0
    assert "Kappe   1-2" in result.output


def test_eval_word(runner, tmp_path):
    path = tmp_path / "cup.txt"
    path.write_text("valency 0 2\nloops 0\n0 U 0\n", encoding="utf-8")
    result = runner.invoke(main, ["eval-word", "--in", str(path)])
    assert result.exit_code == 0
    assert _json(result) == {"diagram": cup().to_json(), "loops": 0}


def test_trace(runner, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    a.write_text("valency 2 2\nloops 0\n0 X 0\n0 X 0\n", encoding="utf-8")
    b.write_text("valency 2 2\nloops 0\n", encoding="utf-8")
    result = runner.invoke(main, ["trace", "--a", str(a), "--b", str(b)])
    assert result.exit_code == 0
    data = _json(result)
    assert data["length"] == len(data["steps"]) > 0


def test_walled(runner):
    result = runner.invoke(main, ["walled", "--r", "2", "--s", "1"])
    assert result.exit_code == 0
    assert _json(result)["dimension"] == 6


def test_fft(runner):
    result = runner.invoke(main, ["fft", "--group", "o3", "--k", "2", "--l", "2"])
    assert result.exit_code == 0
    data = _json(result)
    assert data["rank"] == data["oracle"] == 3


def test_fft_pretty(runner):
    result = runner.invoke(main, ["--pretty", "fft", "--group", "sp2", "--k", "0", "--l", "2"])
    assert result.exit_code == 0
    assert "Sp(2): rank 1, oracle 1" in result.output


def test_forced(runner):
    result = runner.invoke(main, ["forced", "--m", "2"])
    assert result.exit_code == 0
    assert _json(result)["common"] == ["2"]


def test_oracle_rejects_signs_for_orthogonal_groups(runner):
    result = runner.invoke(main, ["oracle", "--group", "o2", "--source", "+-", "--target", "+-"])
    assert result.exit_code == 2


def test_list_suites(runner):
    result = runner.invoke(main, ["list-suites"])
    assert result.exit_code == 0
    names = _json(result)
    assert "presentation" in names and names[-1] == "all"


def test_functor(runner):
    result = runner.invoke(main, ["functor", "--group", "o2", "--in", json.dumps(cap().to_json())])
    assert result.exit_code == 0
    data = _json(result)
    assert (data["rows"], data["cols"]) == (1, 4)
    assert data["entries"] == [["1", "0", "0", "1"]]


def test_adjoint_over_osp22(runner):
    for d in enumerate_diagrams(2, 2):
        result = runner.invoke(main, ["adjoint", "--group", "osp2|2", "--in", json.dumps(d.to_json())])
        assert result.exit_code == 0, result.output
        assert _json(result)["equals_star"] is True


def test_sft(runner):
    result = runner.invoke(main, ["sft", "--group", "o1", "--r", "2"])
    assert result.exit_code == 0
    data = _json(result)
    assert data["kernel_dim"] == data["ideal_dim"] == 2
    assert runner.invoke(main, ["sft", "--group", "o1"]).exit_code == 2


def test_ideal(runner):
    generator = DiagramSum.of(identity(2)) - DiagramSum.of(e_i(2, 1))
    result = runner.invoke(main, ["ideal", "--in", json.dumps(generator.to_json()), "--delta", "1", "--r", "2"])
    assert result.exit_code == 0
    assert _json(result)["dimension"] == 2


class BrokenCheck(Verification):
    name = "kaputt"

    def run(self) -> None:
        self.check("1 = 2", 1, 2)
        self.finish()


def _ran(suite: Verification) -> Verification:
    suite.run()
    return suite


def test_suite_exit_codes(runner, monkeypatch):
    monkeypatch.setattr(cli, "run_suite", lambda name: _ran(EpSuite(max_m=1)))
    result = runner.invoke(main, ["suite", "--name", "ep"])
    assert result.exit_code == 0
    assert _json(result)[NAME_PASS] is True

    monkeypatch.setattr(cli, "run_suite", lambda name: _ran(BrokenCheck()))
    result = runner.invoke(main, ["suite", "--name", "ep"])
    assert result.exit_code == 1
    assert _json(result)[NAME_PASS] is False
