"""Algorithm kernels: the six non-graph-cut workloads.

Each kernel deliberately follows the classic formulation (naive recursion,
dense triple loop, head-plus-rest permutation) because the call/loop shape
itself is what the benchmark measures.  Faster rewrites belong in tests as
oracles, not here.
"""

from xbench.algos.basic import fill_array_rand, fib_recursive, int_compare
from xbench.algos.floyd_warshall import INF, DenseGraph, floyd_warshall, random_dense_graph
from xbench.algos.fourier import dft_naive, fft_inverse, fft_recursive
from xbench.algos.huffman import (
    CodingError,
    HuffmanNode,
    HuffmanTree,
    code_table,
    huffman_build,
    huffman_decode,
    huffman_encode,
)
from xbench.algos.permutations import MAX_PERMUTATION_LEN, permutations

__all__ = [
    "fill_array_rand",
    "fib_recursive",
    "int_compare",
    "INF",
    "DenseGraph",
    "floyd_warshall",
    "random_dense_graph",
    "dft_naive",
    "fft_recursive",
    "fft_inverse",
    "HuffmanNode",
    "HuffmanTree",
    "CodingError",
    "huffman_build",
    "code_table",
    "huffman_encode",
    "huffman_decode",
    "MAX_PERMUTATION_LEN",
    "permutations",
]
