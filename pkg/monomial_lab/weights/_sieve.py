import math

import numpy as np


def simple_sieve(limit: int) -> np.ndarray:
    """All primes ``<= limit``."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p : limit + 1 : p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def sieve_segment(low: int, high: int, segment_odd_count: int = 1 << 20) -> np.ndarray:
    """Primes ``p`` with ``low < p <= high``, odd-only segmented sieve."""
    if high <= low or high < 2:
        return np.array([], dtype=np.int64)
    chunks = []
    if low < 2 <= high:
        chunks.append(np.array([2], dtype=np.int64))
    base = simple_sieve(math.isqrt(high) + 1)
    start_odd = max(low + 1, 3)
    if start_odd % 2 == 0:
        start_odd += 1
    span = 2 * segment_odd_count
    seg_low = start_odd
    while seg_low <= high:
        seg_high = min(seg_low + span, high + 1)  # exclusive
        odd_count = (seg_high - seg_low + 1) // 2
        mask = np.ones(odd_count, dtype=bool)
        for p in base:
            if p == 2:
                continue
            p2 = int(p) * int(p)
            if p2 >= seg_high:
                break
            start = max(p2, ((seg_low + p - 1) // p) * p)
            if (start & 1) == 0:
                start += p
            if start >= seg_high:
                continue
            mask[(start - seg_low) // 2 :: p] = False
        if mask.any():
            chunks.append(seg_low + 2 * np.flatnonzero(mask).astype(np.int64))
        seg_low = seg_high if seg_high % 2 == 1 else seg_high + 1
    if not chunks:
        return np.array([], dtype=np.int64)
    return np.concatenate(chunks)


def nth_prime_upper(k: int) -> int:
    """Upper bound for the k-th prime (Rosser), valid for k >= 6; small k handled directly."""
    if k < 6:
        return 13
    return int(k * (math.log(k) + math.log(math.log(k)))) + 1
