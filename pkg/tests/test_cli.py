import json
import subprocess
import sys

import pytest

from thetanulls.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


def test_count_ramified_values(capsys):
    code, report = run_json(capsys, "count", "--case", "ramified", "--b", "1", "--r", "5")
    assert code == 0
    results = report["results"]
    assert results["even"] == "544"
    assert results["odd"] == "480"
    assert results["vanishing_lb"] == "40"
    assert results["asymptotic_ratio"] == {"fraction": "5/64", "decimal": "0.078125"}


def test_count_etale_values(capsys):
    code, report = run_json(capsys, "count", "--case", "etale", "--b", "3")
    assert code == 0
    results = report["results"]
    assert (results["even"], results["odd"], results["T_size"]) == ("48", "16", "6")


def test_count_genus2_edge(capsys):
    code, report = run_json(capsys, "count", "--case", "ramified", "--b", "0", "--r", "3")
    assert code == 0
    assert report["results"]["vanishing_lb"] == "0"


def test_integers_are_decimal_strings(capsys):
    _, report = run_json(capsys, "count", "--case", "ramified", "--b", "2", "--r", "6")
    def only_strings(node):
        if isinstance(node, dict):
            return all(only_strings(v) for v in node.values())
        if isinstance(node, list):
            return all(only_strings(v) for v in node)
        return isinstance(node, (str, bool))
    assert only_strings(report)


def test_byte_identical_reports(capsys):
    _, first = run_cli(capsys, "construct", "bielliptic-g6", "--seed", "4")
    _, second = run_cli(capsys, "construct", "bielliptic-g6", "--seed", "4")
    assert first == second


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["count", "--case", "ramified", "--b", "50", "--r", "1"])
    assert err.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as err:
        main(["count", "--case", "etale", "--b", "2", "--r", "3"])
    assert err.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as err:
        main(["count", "--case", "etale", "--b", "2", "--rho", "0000"])
    assert err.value.code == 2
    capsys.readouterr()


def test_model_error_exits_3(capsys):
    assert main(["construct", "bielliptic-g6", "--N", "238"]) == 3
    capsys.readouterr()


def test_verify_counts_passes(capsys):
    code, report = run_json(capsys, "verify", "--suite", "counts", "--max-b", "2", "--max-r", "4")
    assert code == 0
    assert report["checks_passed"] is True
    assert all(c["pass"] for c in report["checks"])


def test_verify_identities(capsys):
    code, report = run_json(capsys, "verify", "--suite", "identities")
    assert code == 0
    assert len(report["checks"]) == 30


def test_verify_syzygetic_small(capsys):
    code, report = run_json(capsys, "verify", "--suite", "syzygetic", "--max-b", "3")
    assert code == 0


def test_verify_threads_do_not_change_output(capsys):
    _, single = run_cli(capsys, "verify", "--suite", "counts", "--max-b", "1", "--max-r", "3")
    _, double = run_cli(capsys, "verify", "--suite", "counts", "--max-b", "1", "--max-r", "3", "--threads", "2")
    assert single == double


def test_construct_genus6(capsys):
    code, report = run_json(capsys, "construct", "bielliptic-g6", "--N", "240", "--seed", "0")
    assert code == 0
    assert report["results"]["count"] == "43"
    assert report["results"]["forced_extras_present"] is True
    assert len(report["results"]["extras"]) == 3


def test_construct_hyperelliptic(capsys):
    code, report = run_json(capsys, "construct", "hyperelliptic", "--g", "3")
    assert code == 0
    assert report["results"]["enumerated"]["vanishing"] == "1"


def test_construct_generic_bielliptic(capsys):
    code, report = run_json(capsys, "construct", "bielliptic-generic", "--g", "6", "--seed", "1")
    assert code == 0
    assert report["results"]["count"] == "40"


def test_json_out_matches_stdout(tmp_path, capsys):
    target = tmp_path / "report.json"
    _, out = run_cli(capsys, "count", "--case", "etale", "--b", "4", "--json-out", str(target))
    assert target.read_text() == out


def test_pretty_renders_same_data(capsys):
    code, out = run_cli(capsys, "count", "--case", "ramified", "--b", "1", "--r", "5", "--pretty")
    assert code == 0
    assert "even = 544" in out
    assert out.startswith("command: count")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "thetanulls", "count", "--case", "etale", "--b", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["T_size"] == "1"
    assert "elapsed_ms=" in proc.stderr
