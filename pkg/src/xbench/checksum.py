"""Result folding for dead-code-elimination guards and cross-target checks.

Every workload reduces its output to a single u64 via these helpers.  The
WASM kernels implement the identical fold, so a checksum mismatch between
targets means the two legs computed different results, not just different
timings.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3


def fold_u64(h: int, v: int) -> int:
    """Mix one 64-bit value into the running hash (FNV-1a style, word-wide)."""
    return ((h ^ (v & _MASK64)) * FNV_PRIME) & _MASK64


def fold_bytes(h: int, data: bytes) -> int:
    """Classic byte-wise FNV-1a over ``data``."""
    for b in data:
        h = ((h ^ b) * FNV_PRIME) & _MASK64
    return h


def fold_f64_micro(h: int, v: float) -> int:
    """Fold a double after rounding to 1e-6.

    Rounding uses round-half-to-even, matching WebAssembly's f64.nearest,
    so tiny cross-target floating differences below the grid are absorbed.
    """
    q = round(v * 1e6)  # Python round() on floats is half-to-even
    return fold_u64(h, q & _MASK64)
