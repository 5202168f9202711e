"""Exhaustive enumerators over permutations, signed permutations and lattice
paths.  These are the ground truth that the closed forms, recurrences and
grammar outputs get certified against, so they stay deliberately naive.
Each enumerator has a hard size guard; asking beyond it raises with the
bound named rather than silently truncating.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

__all__ = [
    "count_alternating",
    "descent_b_distribution",
    "descent_distribution",
    "left_factor_h_histogram",
    "left_factors_with_h",
    "motzkin_up_histogram",
    "motzkin_with_up_steps",
    "signed_windows",
]


def _guard(what: str, n: int, lo: int, hi: int) -> None:
    if not lo <= n <= hi:
        raise ValueError(f"{what} supports {lo} <= n <= {hi}, got {n}")


def descent_distribution(n: int) -> tuple[int, ...]:
    """Histogram of descent counts over all n! permutations of [n]."""
    _guard("descent_distribution", n, 1, 9)
    hist = [0] * n
    for perm in itertools.permutations(range(1, n + 1)):
        hist[sum(perm[i] > perm[i + 1] for i in range(n - 1))] += 1
    return tuple(hist)


def signed_windows(n: int):
    """All 2^n n! windows (pi(1), ..., pi(n)) of signed permutations of [n]."""
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield tuple(s * p for s, p in zip(signs, perm))


def descent_b_distribution(n: int) -> tuple[int, ...]:
    """Histogram of descents over signed permutations, window read with pi(0) = 0."""
    _guard("descent_b_distribution", n, 1, 7)
    hist = [0] * (n + 1)
    for w in signed_windows(n):
        hist[(w[0] < 0) + sum(w[i] > w[i + 1] for i in range(n - 1))] += 1
    return tuple(hist)


def _is_alternating(w) -> bool:
    # down-up: w1 > w2 < w3 > w4 ...
    return all(w[i] > w[i + 1] if i % 2 == 0 else w[i] < w[i + 1]
               for i in range(len(w) - 1))


def count_alternating(n: int, family: str) -> int:
    """Number of alternating elements: family 'A' (plain) or 'B' (signed)."""
    family = family.upper()
    if family == "A":
        _guard("count_alternating family A", n, 1, 9)
        return sum(_is_alternating(p) for p in itertools.permutations(range(1, n + 1)))
    if family == "B":
        _guard("count_alternating family B", n, 1, 7)
        return sum(_is_alternating(w) for w in signed_windows(n))
    raise ValueError(f"family must be 'A' or 'B', got {family!r}")


@lru_cache(maxsize=None)
def motzkin_up_histogram(length: int) -> tuple[int, ...]:
    """Counts of Motzkin paths of a given length, split by number of up steps.

    Depth-first walk over {U, D, H}; prefixes that dip below the axis or can
    no longer return to it are pruned immediately.
    """
    _guard("motzkin_up_histogram", length, 0, 18)
    counts = [0] * (length // 2 + 1)

    def walk(remaining: int, height: int, ups: int) -> None:
        if height > remaining:
            return
        if remaining == 0:
            counts[ups] += 1
            return
        walk(remaining - 1, height + 1, ups + 1)
        if height:
            walk(remaining - 1, height - 1, ups)
        walk(remaining - 1, height, ups)

    walk(length, 0, 0)
    return tuple(counts)


def motzkin_with_up_steps(length: int, k: int) -> int:
    hist = motzkin_up_histogram(length)
    return hist[k] if 0 <= k < len(hist) else 0


@lru_cache(maxsize=None)
def left_factor_h_histogram(length: int) -> tuple[int, ...]:
    """Counts of nonnegative {U, D, H} prefixes of a given length, by H steps."""
    _guard("left_factor_h_histogram", length, 0, 18)
    counts = [0] * (length + 1)

    def walk(remaining: int, height: int, flats: int) -> None:
        if remaining == 0:
            counts[flats] += 1
            return
        walk(remaining - 1, height + 1, flats)
        if height:
            walk(remaining - 1, height - 1, flats)
        walk(remaining - 1, height, flats + 1)

    walk(length, 0, 0)
    return tuple(counts)


def left_factors_with_h(length: int, k: int) -> int:
    hist = left_factor_h_histogram(length)
    return hist[k] if 0 <= k < len(hist) else 0
