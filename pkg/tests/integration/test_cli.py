"""
Command line tests driving app.main
"""

import json

import pytest

import app
from models.pipeline_models import SuiteConfig, CaseResult, Report, BatchReport

pytestmark = pytest.mark.integration

ZERO_ROW = [0.0] * 8


def _row(index: int, value: float = 1.0):
    row = list(ZERO_ROW)
    row[index] = value
    return row


def _write(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.fixture
def identity_file(tmp_path):
    return _write(tmp_path / "identity.json", {'coeffs': [ZERO_ROW, _row(0)]})


class TestFunctionCommands:

    def test_eval_identity(self, identity_file, capsys):
        assert app.main(["eval", identity_file, "0,1,0,0,0,0,0,0"]) == 0
        assert json.loads(capsys.readouterr().out) == pytest.approx(_row(1))

    def test_construct_then_eval(self, tmp_path, capsys):
        out = str(tmp_path / "koebe.json")
        code = app.main(["construct", "koebe", "--param", "unit=[0,1,0,0,0,0,0,0]", "--param", "theta=0",
                         "--out", out])
        assert code == 0
        assert app.main(["eval", out, "[0.3,0,0,0,0,0,0,0]"]) == 0
        value = json.loads(capsys.readouterr().out)
        assert value[0] == pytest.approx(0.3 / 0.49)
        assert value[1:] == pytest.approx([0.0] * 7, abs=1e-12)

    def test_construct_worked_example_by_listed_name(self, tmp_path, capsys):
        out = str(tmp_path / "worked.json")
        code = app.main(["construct", "example_3_3", "--param", "unit_i=[0,1,0,0,0,0,0,0]",
                         "--param", "unit_j=[0,0,1,0,0,0,0,0]", "--out", out])
        assert code == 0
        assert app.main(["eval", out, "0,0,1,0,0,0,0,0"]) == 0
        assert json.loads(capsys.readouterr().out) == pytest.approx(_row(2), abs=1e-12)

    def test_star(self, identity_file, tmp_path, capsys):
        out = str(tmp_path / "square.json")
        assert app.main(["star", identity_file, identity_file, "--out", out]) == 0
        assert app.main(["eval", out, "0,0,0,1,0,0,0,0"]) == 0
        assert json.loads(capsys.readouterr().out) == pytest.approx(_row(0, -1.0))

    def test_recip_with_degree(self, tmp_path, capsys):
        one_minus_w = _write(tmp_path / "f.json", {'coeffs': [_row(0), _row(0, -1.0)]})
        assert app.main(["recip", one_minus_w, "--degree", "4"]) == 0
        coeffs = json.loads(capsys.readouterr().out)['coeffs']
        assert [row[0] for row in coeffs] == pytest.approx([1.0] * 5)

    def test_recip_degree_needs_series(self, tmp_path):
        rational = _write(tmp_path / "r.json", {'num': {'coeffs': [_row(0)]}, 'den': [1.0, -0.5]})
        assert app.main(["recip", rational, "--degree", "4"]) == 2

    def test_zeros_of_a_sphere(self, tmp_path, capsys):
        shifted = _write(tmp_path / "q.json", {'coeffs': [_row(1, -1.0), _row(0)]})
        assert app.main(["zeros", shifted, "--y0", "1", "--delta", "0.3", "--unit", "e2"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload['result']['count'] == 2
        assert payload['convention'] == 'zeros of f^s'


class TestUsageErrors:

    def test_out_of_domain_parameter(self):
        assert app.main(["construct", "mobius", "--param", "u=1.5"]) == 2

    def test_malformed_param(self):
        assert app.main(["construct", "mobius", "--param", "u"]) == 2

    def test_malformed_file(self, tmp_path):
        broken = tmp_path / "broken.json"
        broken.write_text("{")
        assert app.main(["eval", str(broken), "0,0,0,0,0,0,0,0"]) == 2

    def test_unknown_suite(self):
        assert app.main(["verify", "--suite", "bogus"]) == 2

    def test_argparse_errors_exit_two(self):
        with pytest.raises(SystemExit) as excinfo:
            app.main(["zeros", "f.json"])
        assert excinfo.value.code == 2


class TestVerifyAndReport:

    def test_verify_json(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        code = app.main(["verify", "--suite", "algebra", "--samples", "5", "--seed", "3", "--json",
                         "--out", str(out)])
        assert code == 0
        printed = json.loads(capsys.readouterr().out)
        assert printed == json.loads(out.read_text())
        assert printed['pass'] is True
        assert printed['config']['seed'] == 3
        assert len(printed['digest']) == 64

        assert app.main(["report", str(out), "--csv", str(tmp_path / "cases.csv")]) == 0
        assert (tmp_path / "cases.csv").exists()

    def test_verify_failure_exit_code(self, mocker, capsys):
        failing = BatchReport(
            config=SuiteConfig(suites=["growth"]),
            reports=[Report(suite="growth", cases=[CaseResult(name="koebe_bound", passed=False, margin=-0.1)])]
        )
        orchestrator = mocker.patch("app.VerificationOrchestrator")
        orchestrator.return_value.run.return_value = failing
        assert app.main(["verify", "--suite", "growth"]) == 1
        assert "FAIL" in capsys.readouterr().out

    def test_report_of_failed_run(self, tmp_path):
        payload = {'pass': False, 'reports': [
            {'suite': 'zeros', 'pass': False, 'cases': [{'name': 'c', 'pass': False, 'margin': None, 'details': {}}]}
        ]}
        assert app.main(["report", _write(tmp_path / "r.json", payload)]) == 1
