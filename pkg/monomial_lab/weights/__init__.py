from monomial_lab.weights._sequence import (
    KLogSequence,
    PrimeSequence,
    WeightSequence,
    g_theta,
    weight_sequence,
)
from monomial_lab.weights._sieve import sieve_segment, simple_sieve

__all__ = [
    "KLogSequence",
    "PrimeSequence",
    "WeightSequence",
    "g_theta",
    "sieve_segment",
    "simple_sieve",
    "weight_sequence",
]
