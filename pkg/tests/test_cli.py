"""Tests for the command line interface"""

import json

import pytest

from tph_invert.cli import build_parser, load_spec, main, run
from tph_invert.config import RunConfig
from tph_invert.errors import InvalidSymbolSpec

ONE = {"gain": 1}
SHIFT = {"power": 1}


def create_config(subcommand, a=ONE, b=SHIFT, **kwargs):
    """RunConfig for the pair (a, b) with a small window"""
    kwargs.setdefault("n", 64)
    return RunConfig(subcommand=subcommand, symbol_a=a, symbol_b=b, **kwargs)


class TestRun:
    """Tests for run"""

    def test_analyze(self):
        """Test the classification of I + H(t)"""
        status, text = run(create_config("analyze"))
        report = json.loads(text)

        assert status == 0
        assert report["status"] == "Invertible"
        assert report["clause"] == "signature-case-viii"
        assert (report["kappa1"], report["kappa2"]) == (1, -1)
        assert "defect_numbers_be" in report

    def test_analyze_gamma_pair(self):
        """Test that (a, a·t^{−2}) with γ = 0.5 is decided by the W₁ correction"""
        a = {"num": {"0": 1, "-1": -0.5}, "den": {"0": 1, "1": -0.5}}
        b = {"num": {"-2": 1, "-3": -0.5}, "den": {"0": 1, "1": -0.5}}

        status, text = run(create_config("analyze", a=a, b=b))
        report = json.loads(text)

        assert status == 0
        assert report["status"] == "Invertible"
        assert report["clause"] == "shift-correction"
        assert (report["kappa1"], report["kappa2"]) == (-2, 2)
        assert report["wn_determinant"][0] == pytest.approx(0.75, abs=1e-10)

    def test_kernel(self):
        """Test the kernel of I − H(t)"""
        status, text = run(create_config("kernel", sign="-"))
        report = json.loads(text)

        assert status == 0
        assert report["operator_sign"] == "-"
        assert len(report["kernel"]["elements"]) == 1

    def test_inverse(self):
        """Test that the inverse passes its residual checks"""
        status, text = run(create_config("inverse"))
        report = json.loads(text)

        assert status == 0
        assert report["within_tol"] is True
        assert set(report["residuals"]) == {"operator_after_inverse", "inverse_after_operator"}

    def test_verify(self):
        """Test the oracle report for an invertible operator"""
        status, text = run(create_config("verify", n=32))
        report = json.loads(text)

        assert status == 0
        assert (report["est_dim_ker"], report["est_dim_coker"]) == (0, 0)
        assert report["matches_expected"] is True

    def test_verify_csv(self, tmp_path):
        """Test singular value CSV output"""
        output_path = tmp_path / "oracle.csv"

        status, text = run(create_config("verify", n=32, output=str(output_path)))

        assert status == 0
        assert output_path.read_text(encoding="utf-8") == text
        assert text.splitlines()[0] == "N,spectrum,position,singular_value"

    def test_pc_index(self):
        """Test the index of T(t) on H²"""
        status, text = run(create_config("pc-index", a=SHIFT, b=ONE))
        report = json.loads(text)

        assert status == 0
        assert report["fredholm"] is True
        assert report["index"] == -1
        assert (report["wind_c"], report["wind_d_tilde"]) == (1, 0)

    def test_pc_index_direct_data(self):
        """Test piecewise constant data violating the end point conditions"""
        jump = {"breakpoints": [0.0, 3.141592653589793], "values": [[0, 1], [0, -1]]}
        config = RunConfig(subcommand="pc-index", symbol_c=jump, symbol_d_tilde=ONE)

        status, text = run(config)
        report = json.loads(text)

        assert status == 0
        assert report["fredholm"] is False
        assert report["index"] is None
        assert "c:endpoint-one" in report["violated_clauses"]

    def test_curve_dump(self):
        """Test the CSV header of a dumped curve"""
        status, text = run(create_config("curve-dump", a=SHIFT, b=ONE))

        assert status == 0
        assert text.splitlines()[0] == "re,im,segment_kind,cumulative_arg"

    @pytest.mark.parametrize(
        "a,b,code",
        [
            ({"gain": 1, "poles": [1.0]}, SHIFT, "POLE_ON_CIRCLE"),
            (ONE, {"gain": 2}, "NOT_MATCHING"),
            ({"gain": 1, "colour": "red"}, SHIFT, "INVALID_SYMBOL_SPEC"),
        ],
    )
    def test_domain_errors(self, a, b, code):
        """Test that domain errors exit with 2 and an error code"""
        status, text = run(create_config("analyze", a=a, b=b))

        assert status == 2
        assert json.loads(text)["error"]["code"] == code

    def test_invalid_config(self):
        """Test that N must be a power of two"""
        status, text = run(create_config("analyze", n=100))

        assert status == 2
        assert json.loads(text)["error"]["code"] == "INVALID_CONFIG"

    def test_missing_symbol(self):
        """Test that analyze needs both symbols"""
        status, text = run(RunConfig(subcommand="analyze", symbol_a=ONE))

        assert status == 2
        assert "--b" in json.loads(text)["error"]["message"]


class TestMain:
    """Tests for main and argument parsing"""

    def test_main_analyze(self, capsys):
        """Test a full invocation writing to stdout"""
        status = main(["analyze", "--a", '{"gain": 1}', "--b", '{"power": 1}', "--n", "64"])

        assert status == 0
        assert json.loads(capsys.readouterr().out)["status"] == "Invertible"

    def test_main_invalid_n(self, capsys):
        """Test the exit status for an invalid window size"""
        status = main(["analyze", "--a", '{"gain": 1}', "--b", '{"power": 1}', "--n", "100"])

        assert status == 2
        assert json.loads(capsys.readouterr().out)["error"]["code"] == "INVALID_CONFIG"

    def test_main_bad_spec(self, capsys):
        """Test that unreadable specs are reported before running"""
        status = main(["analyze", "--a", "missing-file.json", "--b", '{"power": 1}'])

        assert status == 2
        assert json.loads(capsys.readouterr().out)["error"]["code"] == "INVALID_SYMBOL_SPEC"

    def test_main_output_file(self, tmp_path, capsys):
        """Test that --out keeps stdout empty"""
        output_path = tmp_path / "report.json"

        status = main(["pc-index", "--a", '{"power": 1}', "--b", '{"gain": 1}',
                       "--out", str(output_path)])

        assert status == 0
        assert capsys.readouterr().out == ""
        assert json.loads(output_path.read_text(encoding="utf-8"))["index"] == -1

    def test_main_config_file(self, tmp_path, capsys):
        """Test a run configured entirely from a JSON file"""
        config_path = tmp_path / "run.json"
        config_path.write_text(
            json.dumps({"symbol_a": {"gain": 1}, "symbol_b": {"power": 1}, "n": 64}),
            encoding="utf-8",
        )

        status = main(["analyze", "--config", str(config_path)])

        assert status == 0
        assert json.loads(capsys.readouterr().out)["status"] == "Invertible"

    def test_main_options_override_config(self, tmp_path, capsys):
        """Test that command line options take precedence over the file"""
        config_path = tmp_path / "run.json"
        config_path.write_text(
            json.dumps({"symbol_a": {"gain": 1}, "symbol_b": {"power": 1}, "n": 100}),
            encoding="utf-8",
        )

        status = main(["analyze", "--config", str(config_path), "--n", "64"])

        assert status == 0
        assert json.loads(capsys.readouterr().out)["status"] == "Invertible"

    def test_main_invalid_config_values(self, tmp_path, capsys):
        """Test that values from the file are validated like options"""
        config_path = tmp_path / "run.json"
        config_path.write_text(
            json.dumps({"symbol_a": {"gain": 1}, "symbol_b": {"power": 1}, "n": 100}),
            encoding="utf-8",
        )

        status = main(["analyze", "--config", str(config_path)])

        assert status == 2
        assert json.loads(capsys.readouterr().out)["error"]["code"] == "INVALID_CONFIG"

    def test_main_missing_config(self, tmp_path, capsys):
        """Test that an unreadable configuration file is a config error"""
        status = main(["analyze", "--config", str(tmp_path / "missing.json")])

        assert status == 2
        assert json.loads(capsys.readouterr().out)["error"]["code"] == "INVALID_CONFIG"

    def test_parser_defaults(self):
        """Test the documented defaults"""
        args = build_parser().parse_args(["analyze"])

        assert args.n == 256
        assert args.p == 2.0
        assert args.seed == 0x5EED
        assert args.rho_reading == "tilde-of-plus"

    def test_seed_accepts_hex(self):
        """Test that seeds may be given in any integer base"""
        args = build_parser().parse_args(["verify", "--seed", "0x10"])

        assert args.seed == 16


class TestLoadSpec:
    """Tests for load_spec"""

    def test_inline(self):
        """Test inline JSON"""
        assert load_spec(' {"gain": 2} ') == {"gain": 2}

    def test_file(self, tmp_path):
        """Test a path to a JSON file"""
        spec_path = tmp_path / "a.json"
        spec_path.write_text('{"zeros": [2.0]}', encoding="utf-8")

        assert load_spec(str(spec_path)) == {"zeros": [2.0]}

    def test_none(self):
        """Test that a missing option stays None"""
        assert load_spec(None) is None

    def test_not_an_object(self, tmp_path):
        """Test that JSON lists are rejected"""
        spec_path = tmp_path / "list.json"
        spec_path.write_text("[1, 2]", encoding="utf-8")

        with pytest.raises(InvalidSymbolSpec):
            load_spec(str(spec_path))
