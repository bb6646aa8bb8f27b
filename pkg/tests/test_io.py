import hashlib
import io
import json
import math

import pytest

from monomial_lab import SCHEMA, obj_canonicalized_hash
from monomial_lab.index import enumerate_jmn
from monomial_lab.io import (
    envelope,
    load_polynomial,
    polynomial_from_dict,
    polynomial_to_dict,
    save_polynomial,
    to_csv,
    to_json,
    to_jsonl,
    write_text,
)
from monomial_lab.poly import SparsePolynomial, random_polynomial


@pytest.fixture
def poly(rng):
    return random_polynomial(enumerate_jmn(2, 3), seed=rng)


@pytest.mark.parametrize("name", ["p.json", "p.json.gz", "p.json.bz2", "p.json.xz"])
def test_polynomial_file(tmp_path, poly, name):
    path = tmp_path / name
    save_polynomial(poly, path)
    assert load_polynomial(path) == poly
    assert load_polynomial(str(path)) == poly


def test_polynomial_file_layout(poly):
    data = polynomial_to_dict(poly)
    assert data["degree"] == 2
    assert len(data["terms"]) == 6
    assert set(data["terms"][0]) == {"index", "re", "im"}


def test_polynomial_from_stdin():
    text = json.dumps({"degree": 2, "terms": [{"index": [1, 2], "re": 1.5}]})
    P = load_polynomial("-", stdin=io.StringIO(text))
    assert P == SparsePolynomial({(1, 2): 1.5})


def test_degree_mismatch():
    with pytest.raises(ValueError, match="does not match"):
        polynomial_from_dict({"degree": 3, "terms": [{"index": [1, 2], "re": 1.0}]})


@pytest.mark.parametrize(
    "data",
    [{}, [], {"terms": [{"re": 1.0}]}, {"terms": [{"index": [1, 2], "re": "x"}]}],
)
def test_malformed_polynomial(data):
    with pytest.raises(ValueError):
        polynomial_from_dict(data)


def test_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{", encoding="utf-8")
    with pytest.raises(ValueError, match="not valid JSON"):
        load_polynomial(path)


def test_envelope_and_json():
    document = envelope("bound cmr", {"value": math.inf}, {"seed": 0})
    assert document["schema"] == SCHEMA
    digest = hashlib.sha256(b'{"value":"inf"}').hexdigest()
    assert document["digest"] == digest == obj_canonicalized_hash({"value": float("inf")})
    assert to_json(document) == (
        '{"command":"bound cmr","config":{"seed":0},"digest":"'
        + digest
        + '","result":{"value":"inf"},"schema":"'
        + SCHEMA
        + '"}\n'
    )


def test_jsonl():
    assert to_jsonl([{"b": 1, "a": 2}, {"a": 0.5}]) == '{"a":2,"b":1}\n{"a":0.5}\n'


def test_csv():
    rows = [{"a": 1, "b": 0.1}, {"a": 2, "c": "x,y", "d": True}]
    assert to_csv(rows) == 'a,b,c,d\n1,0.10000000000000001,,\n2,,"x,y",true\n'
    assert to_csv(rows, columns=["b"]) == "b\n0.10000000000000001\n\"\"\n"


def test_csv_nested_values():
    assert to_csv([{"index": [1, 2], "value": -math.inf}]) == 'index,value\n"[1,2]",-inf\n'


def test_write_text(tmp_path, capsys):
    out = tmp_path / "out.txt"
    write_text("a\n", str(out))
    assert out.read_text(encoding="utf-8") == "a\n"
    write_text("b\n")
    assert capsys.readouterr().out == "b\n"
    stream = io.StringIO()
    write_text("c\n", "-", stream)
    assert stream.getvalue() == "c\n"
