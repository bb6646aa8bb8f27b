"""Polynomial files: ``{"degree": m | null, "terms": [{"index": [...], "re": f, "im": f}]}``.

Files may be compressed (``.gz``, ``.bz2``, ``.xz``); ``"-"`` reads stdin.
"""

import bz2
import gzip
import json
import lzma
import pathlib
import sys
from typing import Any, Dict, Optional, TextIO, Union

from monomial_lab._util import canonical_dumps
from monomial_lab.index import index_from_json, index_to_json
from monomial_lab.poly import SparsePolynomial

_OPENERS = {".gz": gzip.open, ".bz2": bz2.open, ".xz": lzma.open, ".lzma": lzma.open}

PathLike = Union[str, pathlib.Path]


def _open_text(path: PathLike, mode: str) -> TextIO:
    suffix = pathlib.Path(path).suffix.lower()
    opener = _OPENERS.get(suffix)
    if opener is not None:
        return opener(path, mode + "t", encoding="utf-8")
    return open(path, mode, encoding="utf-8")


def polynomial_to_dict(P: SparsePolynomial) -> Dict[str, Any]:
    return {
        "degree": P.homogeneous_degree,
        "terms": [{"index": index_to_json(j), "re": c.real, "im": c.imag} for j, c in P.items()],
    }


def polynomial_from_dict(data: Dict[str, Any]) -> SparsePolynomial:
    """Build a polynomial from the file structure.

    Raises:
        ValueError: for missing fields or a ``degree`` that does not match the terms.
    """
    if not isinstance(data, dict) or "terms" not in data:
        raise ValueError("A polynomial file needs a 'terms' list")
    terms = []
    for position, term in enumerate(data["terms"]):
        try:
            index = index_from_json(term["index"])
            value = complex(float(term.get("re", 0.0)), float(term.get("im", 0.0)))
        except (KeyError, TypeError) as e:
            raise ValueError(f"Malformed term #{position}: {term!r}") from e
        terms.append((index, value))
    P = SparsePolynomial(terms)
    degree = data.get("degree")
    if degree is not None and len(P) > 0 and P.homogeneous_degree != degree:
        raise ValueError(f"Declared degree {degree} does not match the terms (found {P.homogeneous_degree})")
    return P


def load_polynomial(source: PathLike, stdin: Optional[TextIO] = None) -> SparsePolynomial:
    """Read a polynomial file; ``"-"`` reads from ``stdin``."""
    if str(source) == "-":
        text = (stdin or sys.stdin).read()
    else:
        with _open_text(source, "r") as handle:
            text = handle.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"Polynomial file {source} is not valid JSON: {e}") from e
    return polynomial_from_dict(data)


def save_polynomial(P: SparsePolynomial, path: PathLike) -> None:
    with _open_text(path, "w") as handle:
        handle.write(canonical_dumps(polynomial_to_dict(P), indent=2))
        handle.write("\n")
