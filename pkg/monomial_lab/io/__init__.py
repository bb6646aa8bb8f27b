from monomial_lab.io._polyfile import load_polynomial, polynomial_from_dict, polynomial_to_dict, save_polynomial
from monomial_lab.io._writers import envelope, to_csv, to_json, to_jsonl, write_text

__all__ = [
    "envelope",
    "load_polynomial",
    "polynomial_from_dict",
    "polynomial_to_dict",
    "save_polynomial",
    "to_csv",
    "to_json",
    "to_jsonl",
    "write_text",
]
