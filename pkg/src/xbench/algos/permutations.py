"""All string orderings via head + inner-permutations recursion."""

from __future__ import annotations

MAX_PERMUTATION_LEN = 10  # n! strings; beyond 10 the heap explodes


def permutations(text: str) -> list[str]:
    """Every ordering of text, n! entries for distinct characters.

    Each character in turn becomes the head and is prepended to every
    permutation of the remaining characters.  Output order is fixed by
    that recursion, so results are comparable across targets.
    """
    if not 1 <= len(text) <= MAX_PERMUTATION_LEN:
        raise ValueError(f"text length must be in [1, {MAX_PERMUTATION_LEN}]")
    return _perms(text)


def _perms(text: str) -> list[str]:
    if len(text) == 1:
        return [text]
    results = []
    for i in range(len(text)):
        head = text[i]
        for s in _perms(text[:i] + text[i + 1 :]):
            results.append(head + s)
    return results
