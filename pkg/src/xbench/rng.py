"""Deterministic 64-bit PRNG shared by every workload and build target.

Host-library generators differ between platforms and runtimes, so all
randomness flows through this xorshift64 generator.  The WASM kernel module
implements the exact same state transition; equal seeds therefore produce
bit-identical integer streams everywhere, which is what makes cross-target
checksum comparison possible.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1

# splitmix64 constants, used once to turn an arbitrary seed (including 0,
# which raw xorshift cannot accept) into a valid nonzero state.
_SM_GAMMA = 0x9E3779B97F4A7C15
_SM_MUL1 = 0xBF58476D1CE4E5B9
_SM_MUL2 = 0x94D049BB133111EB


def _splitmix64(x: int) -> int:
    z = (x + _SM_GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * _SM_MUL1) & _MASK64
    z = ((z ^ (z >> 27)) * _SM_MUL2) & _MASK64
    return z ^ (z >> 31)


class Rng:
    """xorshift64 with a splitmix64-mixed seed.

    State is a single nonzero 64-bit word; the update is Marsaglia's
    13/7/17 shift triple.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = _splitmix64(seed & _MASK64)
        if self.state == 0:  # unreachable for splitmix64, kept as a guard
            self.state = _SM_GAMMA

    def next_u64(self) -> int:
        x = self.state
        x ^= (x << 13) & _MASK64
        x ^= x >> 7
        x ^= (x << 17) & _MASK64
        self.state = x
        return x

    def next_int(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi) via modulo reduction.

        Modulo bias is irrelevant for benchmark inputs; what matters is that
        the reduction is trivially reproducible in every target language.
        """
        if hi <= lo:
            raise ValueError(f"empty range [{lo}, {hi})")
        return lo + self.next_u64() % (hi - lo)

    def next_double(self) -> float:
        """Double in [0, 1) from the top 53 bits, exact on all targets."""
        return (self.next_u64() >> 11) * 2.0 ** -53
