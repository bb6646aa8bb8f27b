import json
import math

import pytest

from monomial_lab import SCHEMA, Inequality
from monomial_lab.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, build_parser, main
from monomial_lab.io import save_polynomial
from monomial_lab.poly import CheckRecord, CheckReport, SparsePolynomial


def run_json(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    assert code == EXIT_OK, captured.err
    document = json.loads(captured.out)
    assert document["schema"] == SCHEMA
    return document


@pytest.fixture
def poly_file(tmp_path):
    path = tmp_path / "p.json"
    save_polynomial(SparsePolynomial({(1, 1): 1.0, (1, 2): -0.5, (2, 2): 0.25j}), path)
    return str(path)


def test_parser_lists_commands():
    parser = build_parser()
    assert parser.prog == "monomial-lab"


def test_census_counts_integers(capsys):
    document = run_json(capsys, "census", "--weights", "primes", "--family", "jx", "--x", "100000")
    assert document["command"] == "census"
    assert document["result"]["cardinality"] == 100000


def test_census_margin_enlarges_the_family(capsys):
    argv = ["census", "--weights", "primes", "--family", "jx", "--x", "1000"]
    exact = run_json(capsys, *argv)["result"]
    relaxed = run_json(capsys, *argv, "--margin", "0.5")["result"]
    assert exact["cardinality"] == 1000
    assert relaxed["cardinality"] == 1500
    assert relaxed["margin"] == 0.5


def test_enum_margin(capsys):
    argv = ["enum", "--weights", "primes", "--family", "jxm", "--x", "10", "--m", "2"]
    assert run_json(capsys, *argv)["result"]["count"] == 4
    relaxed = run_json(capsys, *argv, "--margin", "0.45")["result"]
    assert relaxed["count"] == 5
    assert [1, 4] in relaxed["indices"]


def test_enum_jmn(capsys):
    document = run_json(capsys, "enum", "--family", "jmn", "--m", "2", "--n", "2")
    assert document["result"] == {"count": 3, "indices": [[1, 1], [1, 2], [2, 2]]}


def test_enum_csv(capsys):
    assert main(["enum", "--family", "jxm", "--weights", "primes", "--x", "10", "--m", "2", "--format", "csv"]) == 0
    assert capsys.readouterr().out == 'index,degree\n"[1,1]",2\n"[1,2]",2\n"[1,3]",2\n"[2,2]",2\n'


def test_enum_jsonl(capsys):
    assert main(["enum", "--x", "4", "--format", "jsonl"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [json.loads(line)["index"] for line in lines] == [[], [1], [1, 1], [2]]


def test_enum_cap(capsys):
    assert main(["enum", "--x", "1000", "--max-elements", "10"]) == EXIT_USAGE
    assert "monomial-lab enum: error" in capsys.readouterr().err


def test_decompose(capsys):
    document = run_json(capsys, "decompose", "--weights", "primes", "--x", "100", "--y", "4", "--index", "2,1")
    row = document["result"]["decompositions"][0]
    assert row["k"] == [1, 2]
    assert sorted(row["i"] + row["j"]) == [1, 2]


def test_bound_cmr(capsys):
    document = run_json(capsys, "bound", "cmr", "--m", "2", "--r", "2")
    assert document["result"]["value"] == pytest.approx(8.9634, abs=1e-4)
    assert document["result"]["inputs"] == {"m": 2, "r": "2"}


def test_bound_kq_master(capsys):
    document = run_json(capsys, "bound", "kq-master", "--weights", "primes", "--x", "1000", "--r", "2", "--y", "3")
    assert document["result"]["flags"] == ["empirical-constant"]


def test_bound_missing_flag(capsys):
    assert main(["bound", "chi", "--m", "2", "--r", "2"]) == EXIT_USAGE
    assert "--j-star-size" in capsys.readouterr().err


def test_bound_domain_error(capsys):
    assert main(["bound", "y", "--x", "10", "--theta", "1"]) == EXIT_USAGE
    assert "e^e" in capsys.readouterr().err


def test_bound_table(capsys):
    assert main(["bound", "cmr", "--r", "inf", "--table", "--sweep", "m=1,2"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "m,r,value"
    assert lines[1] == f"1,inf,{format(math.e, '.17g')}"
    assert len(lines) == 3


def test_unknown_command(capsys):
    assert main(["frobnicate"]) == EXIT_USAGE


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == EXIT_OK
    assert "monomial-lab" in capsys.readouterr().out


def test_check_kq_partition(capsys):
    document = run_json(capsys, "check", "kq-partition", "--weights", "primes", "--x", "10000", "--y", "7")
    result = document["result"]
    assert result["status"] == "passed"
    assert result["partition"]["direct_count"] == 10000
    assert document["command"] == "check kq-partition"


def test_check_reduced_inclusion(capsys):
    document = run_json(capsys, "check", "reduced-inclusion", "--weights", "klog:1", "--x", "1000", "--m", "3")
    assert document["result"]["violations"] == []


@pytest.mark.parametrize("kind", ["cauchy", "mixed"])
@pytest.mark.parametrize("r", ["1", "2", "inf"])
def test_check_polynomial(capsys, poly_file, kind, r):
    argv = ["check", kind, "--poly", poly_file, "--r", r, "--restarts", "2", "--iterations", "20"]
    document = run_json(capsys, *argv)
    assert document["result"]["status"] == "passed"


def test_check_thm_monomial(capsys, poly_file):
    argv = ["check", "thm-monomial", "--poly", poly_file, "--r", "2", "--u", "vec:0.6,0.8", "--indices", "1,2;2,2"]
    document = run_json(capsys, *argv)
    assert document["result"]["inputs"]["index_count"] == 2
    assert document["result"]["status"] == "passed"


def test_check_failure_record(capsys, poly_file, monkeypatch):
    def failing(*args, **kwargs):
        return CheckReport.from_records(Inequality.CAUCHY, [CheckRecord([1, 1], 2.0, 1.0)])

    monkeypatch.setattr("monomial_lab.cli._commands.cauchy_bound_check", failing)
    assert main(["check", "cauchy", "--poly", poly_file, "--r", "2"]) == EXIT_CHECK_FAILED
    document = json.loads(capsys.readouterr().out)
    assert document["result"]["status"] == "failed"
    assert document["result"]["failures"][0]["key"] == [1, 1]


def test_check_missing_file(capsys, tmp_path):
    missing = str(tmp_path / "missing.json")
    assert main(["check", "cauchy", "--poly", missing, "--r", "2"]) == EXIT_USAGE
    assert "missing.json" in capsys.readouterr().err


def test_sidon_singleton(capsys):
    document = run_json(capsys, "sidon", "--set", "1", "--r", "2", "--seeds", "3")
    assert document["result"]["value"] == 1.0


def test_blocks_command(capsys):
    document = run_json(capsys, "probe", "blocks", "--u", "vec:1,1,1,1", "--weights", "primes", "--N-max", "2")
    assert document["result"]["rows"][-1]["cumulative"] == 8.0


def test_bohr_trend_command(capsys):
    document = run_json(capsys, "probe", "bohr-trend", "--r", "1", "--ns", "16,64,256")
    assert document["result"]["fits"]["exponent"]["slope"] == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("r", ["1", "2", "inf"])
def test_bohr_trend_command_default_sweep(capsys, r):
    document = run_json(capsys, "probe", "bohr-trend", "--r", r)
    rows = document["result"]["rows"]
    assert [row["n"] for row in rows] == [2**k for k in range(4, 13)]
    fit = document["result"]["fits"]["exponent"]
    assert abs(fit["slope"] - fit["target"]) <= 0.1


def test_kq_envelope_command_csv(capsys):
    assert main(["probe", "kq-envelope", "--weights", "klog:1", "--r", "2", "--xs", "100,1000", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("x,y,t,log_value")
    assert len(lines) == 3


def test_out_file(tmp_path, capsys):
    out = tmp_path / "cmr.json"
    assert main(["bound", "cmr", "--m", "1", "--r", "1", "--out", str(out)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text(encoding="utf-8"))["result"]["value"] == pytest.approx(math.e)
