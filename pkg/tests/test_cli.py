import csv
import io
import json

from probmink.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_point_plain(capsys):
    code, out, _ = run(capsys, "eval", "--dist", "dyadic", "--x", "1/2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1/3"
    assert lines[1].startswith("0.3333") and lines[1].endswith("…")


def test_eval_digits_json(capsys):
    code, out, _ = run(
        capsys, "eval", "--dist", "geometric:1/3", "--digits", "(1,2)", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["value"]["rational"] == "6/7"


def test_eval_enclosure(capsys):
    code, out, _ = run(
        capsys, "eval", "--dist", "geometric:1/3", "--x", "1/5", "--enclose", "8",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["exact"] is False
    from fractions import Fraction

    lower = Fraction(payload["lower"]["rational"])
    upper = Fraction(payload["upper"]["rational"])
    assert 0 < lower < upper < 1


def test_encode_decode(capsys):
    code, out, _ = run(capsys, "encode", "--dist", "dyadic", "--digits", "(2,1)")
    assert code == 0
    assert out.splitlines()[0] == "4/7"
    code, out, _ = run(capsys, "decode", "--dist", "dyadic", "--x", "2/3", "--depth", "4")
    assert code == 0
    assert out.splitlines() == ["digits 2,2,2,2", "remainder 2/3"]
    code, out, _ = run(capsys, "decode", "--dist", "dyadic", "--x", "2/3", "--periodic")
    assert code == 0
    assert out.strip() == "(2)"


def test_decode_periodic_not_detected_is_domain_error(capsys):
    code, _, err = run(
        capsys, "decode", "--dist", "geometric:1/3", "--x", "1/5", "--periodic",
        "--max-steps", "40",
    )
    assert code == 3
    assert "no digit period" in err


def test_qmark_exact_decimal(capsys):
    code, out, _ = run(capsys, "qmark", "--x", "2/5", "--precision", "8")
    assert code == 0
    assert out.splitlines() == ["3/8", "0.37500000"]


def test_integral_closed_json(capsys):
    code, out, _ = run(
        capsys, "integral", "--dist", "dyadic", "--method", "closed", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["closed_form_alpha"]["rational"] == "1/2"
    assert payload["closed_form_gamma"]["rational"] == "7/12"


def test_integral_all_plain(capsys):
    code, out, _ = run(
        capsys, "integral", "--dist", "geometric:1/3", "--depth", "10", "--samples", "200",
    )
    assert code == 0
    assert "verdict alpha_form" in out
    assert "closed_form_alpha 2/5" in out


def test_graph_stdout_csv(capsys):
    code, out, _ = run(capsys, "graph", "--dist", "dyadic", "--depth", "2", "--cap", "2")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["x_rational", "y_rational", "x_decimal", "y_decimal"]
    assert len(rows) == 5
    xs = [row[0] for row in rows[1:]]
    assert xs == ["0", "1/4", "1/2", "5/8"]


def test_graph_file_output(tmp_path, capsys):
    out_path = tmp_path / "graph.csv"
    code, out, _ = run(
        capsys, "graph", "--dist", "dyadic", "--depth", "2", "--cap", "3",
        "--out", str(out_path),
    )
    assert code == 0
    assert "points 9" in out
    assert "uncovered_mass" in out
    rows = list(csv.reader(out_path.open()))
    assert len(rows) == 10
    from fractions import Fraction

    xs = [Fraction(row[0]) for row in rows[1:]]
    assert xs == sorted(xs)


def test_diagnose(capsys):
    code, out, _ = run(capsys, "diagnose", "--dist", "geometric:1/3", "--digits", "2,1")
    assert code == 0
    assert "depth 1" in out and "depth 2" in out
    assert "match True" in out
    code, _, _ = run(capsys, "diagnose", "--dist", "dyadic", "--digits", "(2)")
    assert code == 2


def test_selftest_quick(capsys):
    code, out, _ = run(capsys, "selftest", "--quick")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("PASS")]
    assert len(lines) == 12
    assert "all 12 criteria passed" in out


def test_parse_errors_exit_2(capsys):
    assert run(capsys, "eval", "--dist", "nope", "--x", "1/2")[0] == 2
    assert run(capsys, "qmark", "--x", "0.5")[0] == 2
    assert run(capsys, "qmark", "--x", "1/2", "--precision", "0")[0] == 2
    assert run(capsys, "encode", "--dist", "dyadic", "--digits", "oops")[0] == 2


def test_domain_errors_exit_3(capsys):
    assert run(capsys, "eval", "--dist", "dyadic", "--x", "3/2")[0] == 3
    assert run(capsys, "decode", "--dist", "dyadic", "--x", "7/5")[0] == 3
    assert run(capsys, "qmark", "--x", "9/4")[0] == 3


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "eval", "--dist", "dyadic")[0] == 2
    assert run(capsys, "nosuchcommand")[0] == 2
    assert run(capsys)[0] == 2


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
    assert run(capsys, "eval", "--help")[0] == 0
