"""Huffman coding: min-heap tree construction, bitstring encode/decode.

Symbols are byte values (0..255); texts are ``bytes``; bitstrings are
Python strings over '0'/'1'.  Heap ties are broken by insertion order,
which keeps runs deterministic (any tie-break yields an optimal code).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Optional


class CodingError(ValueError):
    """Unknown symbol during encode, or a bitstream that is not a valid
    codeword concatenation during decode."""


@dataclass
class HuffmanNode:
    freq: int
    symbol: Optional[int] = None
    left: Optional["HuffmanNode"] = None
    right: Optional["HuffmanNode"] = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None


@dataclass
class HuffmanTree:
    root: HuffmanNode
    leaves: list[tuple[int, int]]  # (symbol, weight) in build order


def huffman_build(weights: list[tuple[int, int]]) -> HuffmanTree:
    """Build the optimal prefix-code tree for (symbol, weight) pairs."""
    if len(weights) < 2:
        raise ValueError("need at least 2 symbols")
    heap: list[tuple[int, int, HuffmanNode]] = []
    seq = 0
    for symbol, weight in weights:
        if weight <= 0:
            raise ValueError(f"weight of symbol {symbol!r} must be positive")
        heap.append((weight, seq, HuffmanNode(weight, symbol)))
        seq += 1
    heapq.heapify(heap)
    for _ in range(len(weights) - 1):
        fx, _, x = heapq.heappop(heap)
        fy, _, y = heapq.heappop(heap)
        z = HuffmanNode(fx + fy, None, x, y)
        heapq.heappush(heap, (z.freq, seq, z))
        seq += 1
    return HuffmanTree(heapq.heappop(heap)[2], list(weights))


def code_table(tree: HuffmanTree) -> dict[int, str]:
    """Symbol -> codeword map; left edges emit '0', right edges '1'."""
    table: dict[int, str] = {}
    _collect(tree.root, "", table)
    return table


def _collect(node: HuffmanNode, prefix: str, table: dict[int, str]) -> None:
    if node.is_leaf:
        table[node.symbol] = prefix
        return
    _collect(node.left, prefix + "0", table)
    _collect(node.right, prefix + "1", table)


def weighted_length(tree: HuffmanTree) -> int:
    """Sum of weight * codeword-length over all leaves."""
    table = code_table(tree)
    return sum(w * len(table[sym]) for sym, w in tree.leaves)


def huffman_encode(text: bytes, table: dict[int, str]) -> str:
    """Concatenate codewords for each byte of text."""
    parts = []
    for b in text:
        code = table.get(b)
        if code is None:
            raise CodingError(f"symbol {b} not in code table")
        parts.append(code)
    return "".join(parts)


def huffman_decode(bits: str, tree: HuffmanTree) -> bytes:
    """Inverse of huffman_encode for bitstrings produced with this tree."""
    out = bytearray()
    node = tree.root
    for bit in bits:
        if bit == "0":
            node = node.left
        elif bit == "1":
            node = node.right
        else:
            raise CodingError(f"invalid bit {bit!r}")
        if node is None:
            raise CodingError("bitstream walked off the tree")
        if node.is_leaf:
            out.append(node.symbol)
            node = tree.root
    if node is not tree.root:
        raise CodingError("bitstream ends inside a codeword")
    return bytes(out)


def byte_frequencies(text: bytes) -> list[tuple[int, int]]:
    """(symbol, count) pairs in ascending symbol order."""
    counts = [0] * 256
    for b in text:
        counts[b] += 1
    return [(sym, c) for sym, c in enumerate(counts) if c > 0]
