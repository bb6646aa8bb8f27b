from monomial_lab._settings import USE_SHEWCHUK
from monomial_lab.extensions._optional import OptionalModule

shewchuk = OptionalModule("shewchuk" if USE_SHEWCHUK else "_monomial_lab_no_shewchuk", "pip install monomial-lab[fast]")

__all__ = ["OptionalModule", "shewchuk"]
