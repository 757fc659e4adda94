"""Discrete Fourier transform: O(N^2) direct form and recursive FFT.

Normalization: the forward transform is unnormalized; the 1/N factor sits
entirely on the inverse.  Kernel and oracle share that convention, so their
equivalence is convention-free, and Parseval reads sum|H|^2 = N * sum|x|^2.

Twiddle factors use a fixed Taylor-polynomial sin/cos (valid for |x| <= pi)
instead of libm: the math library differs between platforms and targets,
while a pinned polynomial over IEEE doubles evaluates bit-identically
everywhere, making FFT checksums portable.  The direct-form oracle uses
cmath on purpose, keeping the two routes independent.
"""

from __future__ import annotations

import cmath
import math

TWO_PI = 2.0 * math.pi

_TERMS = 16

# 1/(2k)! and 1/(2k+1)! with alternating signs; float() and the division
# are correctly rounded, so these are identical on every IEEE host.
_COS_COEFFS = [(-1.0) ** k / float(math.factorial(2 * k)) for k in range(_TERMS)]
_SIN_COEFFS = [(-1.0) ** k / float(math.factorial(2 * k + 1)) for k in range(_TERMS)]


def ptaylor_cos(x: float) -> float:
    """Pinned cos for |x| <= pi: Horner over x^2, 16 terms."""
    t = x * x
    acc = _COS_COEFFS[_TERMS - 1]
    for k in range(_TERMS - 2, -1, -1):
        acc = _COS_COEFFS[k] + t * acc
    return acc


def ptaylor_sin(x: float) -> float:
    """Pinned sin for |x| <= pi: x * Horner over x^2, 16 terms."""
    t = x * x
    acc = _SIN_COEFFS[_TERMS - 1]
    for k in range(_TERMS - 2, -1, -1):
        acc = _SIN_COEFFS[k] + t * acc
    return x * acc


def _cis(theta: float) -> complex:
    return complex(ptaylor_cos(theta), ptaylor_sin(theta))


def dft_naive(x: list[complex]) -> list[complex]:
    """Direct evaluation H(k) = sum_j x_j e^(-2 pi i k j / N); the FFT oracle."""
    n = len(x)
    if n < 1:
        raise ValueError("need at least one sample")
    roots = [cmath.exp(-2j * math.pi * m / n) for m in range(n)]
    out = []
    for k in range(n):
        acc = 0j
        for j in range(n):
            acc += x[j] * roots[(k * j) % n]
        out.append(acc)
    return out


def fft_recursive(x: list[complex]) -> list[complex]:
    """Even/odd-split recursive FFT; N must be a power of two."""
    n = len(x)
    if n < 1 or n & (n - 1):
        raise ValueError(f"length {n} is not a power of two")
    return _fft(list(x))


def _fft(x: list[complex]) -> list[complex]:
    n = len(x)
    if n == 1:
        return x
    m = n // 2
    top = _fft(x[0::2])
    bottom = _fft(x[1::2])
    out = [0j] * n
    for k in range(m):
        d = _cis(-TWO_PI * k / n)
        z = d * bottom[k]
        out[k] = top[k] + z
        out[k + m] = top[k] - z
    return out


def fft_inverse(y: list[complex]) -> list[complex]:
    """Inverse transform carrying the 1/N factor; reconstructs fft input."""
    n = len(y)
    conj = [v.conjugate() for v in y]
    back = fft_recursive(conj)
    return [v.conjugate() / n for v in back]
