"""Base micro-workloads: array fill, naive Fibonacci, integer comparison."""

from __future__ import annotations

from xbench.rng import Rng

_MASK64 = (1 << 64) - 1

INT_RANGE = 1 << 31  # random integers live in [0, 2^31)

FIB_MAX = 60  # F(60) < 2^63, safe on every target


def fill_array_rand(n: int, rng: Rng) -> int:
    """Fill an n-element array with random integers and fold it back.

    The fold reads the array at n rng-chosen indices and wrap-sums the
    values, so an optimizer cannot drop the fill or the reads.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    arr = [rng.next_int(0, INT_RANGE) for _ in range(n)]
    acc = 0
    for _ in range(n):
        acc = (acc + arr[rng.next_int(0, n)]) & _MASK64
    return acc


def fib_recursive(n: int) -> int:
    """Doubly-recursive Fibonacci, F(0)=0, F(1)=1.

    Intentionally naive: the workload is function-call pressure, not the
    number itself.
    """
    if n < 0 or n > FIB_MAX:
        raise ValueError(f"n must be in [0, {FIB_MAX}]")
    return _fib(n)


def _fib(n: int) -> int:
    if n < 2:
        return n
    return _fib(n - 1) + _fib(n - 2)


def int_compare(n_pairs: int, rng: Rng) -> tuple[int, int, int]:
    """Compare n_pairs random integer pairs; returns (less, equal, greater)."""
    if n_pairs < 1:
        raise ValueError("n_pairs must be >= 1")
    less = equal = greater = 0
    for _ in range(n_pairs):
        a = rng.next_int(0, INT_RANGE)
        b = rng.next_int(0, INT_RANGE)
        if a < b:
            less += 1
        elif a == b:
            equal += 1
        else:
            greater += 1
    return less, equal, greater
