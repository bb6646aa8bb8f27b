import json

import pytest

from monomial_lab import obj_canonicalized_hash
from monomial_lab.cli import main
from monomial_lab.io import save_polynomial
from monomial_lab.poly import random_polynomial


def _output(capsys, argv):
    assert main(argv) == 0
    return capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["sidon", "--set", "powers:8", "--seeds", "16", "--seed", "5"],
        ["check", "kq-partition", "--weights", "primes", "--x", "3000", "--y", "5", "--fields", "3", "--seed", "9"],
        ["census", "--weights", "klog:0.75", "--family", "jplus", "--x", "5000", "--y", "3", "--m", "2"],
        ["probe", "blocks", "--u", "n:-1", "--weights", "primes", "--N-max", "6", "--coeffs", "signs", "--seed", "2"],
    ],
)
def test_same_seed_same_bytes(capsys, argv):
    first = _output(capsys, argv + ["--threads", "1"])
    second = _output(capsys, argv + ["--threads", "1"])
    threaded = _output(capsys, argv + ["--threads", "4"])
    assert first == second == threaded


def test_check_output_is_seed_dependent(capsys, tmp_path):
    path = tmp_path / "p.json"
    save_polynomial(random_polynomial([(1, 1), (1, 2), (2, 3)], seed=0), path)
    argv = ["check", "cauchy", "--poly", str(path), "--r", "1.5", "--restarts", "3", "--iterations", "30"]
    first = _output(capsys, argv + ["--seed", "1", "--threads", "1"])
    again = _output(capsys, argv + ["--seed", "1", "--threads", "3"])
    assert first == again
    assert '"seed":1' in first


def test_digest_matches_result_across_threads(capsys):
    argv = ["census", "--weights", "primes", "--family", "jxm", "--x", "20000", "--m", "3"]
    digests = set()
    for threads in ("1", "4"):
        document = json.loads(_output(capsys, argv + ["--threads", threads]))
        assert document["digest"] == obj_canonicalized_hash(document["result"])
        digests.add(document["digest"])
    assert len(digests) == 1
