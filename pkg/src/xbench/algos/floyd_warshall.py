"""Dense all-pairs shortest paths via the Floyd-Warshall triple loop."""

from __future__ import annotations

from dataclasses import dataclass

from xbench.rng import Rng

INF = float("inf")


@dataclass
class DenseGraph:
    """Square weight matrix; missing edges carry the INF sentinel."""

    n: int
    weights: list[list[float]]

    def __post_init__(self):
        if len(self.weights) != self.n or any(len(row) != self.n for row in self.weights):
            raise ValueError(f"weight matrix must be {self.n}x{self.n}")
        for i in range(self.n):
            if self.weights[i][i] != 0:
                raise ValueError(f"diagonal entry ({i},{i}) must be 0")
            for w in self.weights[i]:
                if w != INF and w < 0:
                    raise ValueError("finite weights must be non-negative")


def floyd_warshall(g: DenseGraph) -> DenseGraph:
    """All-pairs shortest distances; the input graph is left untouched.

    Plain k-i-j relaxation over the full matrix, no sparsity shortcuts:
    the dense loop is the workload.
    """
    n = g.n
    dist = [row[:] for row in g.weights]
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            di = dist[i]
            dik = di[k]
            for j in range(n):
                alt = dik + dk[j]
                if di[j] > alt:
                    di[j] = alt
    return DenseGraph(n, dist)


def random_dense_graph(n: int, rng: Rng) -> DenseGraph:
    """Complete directed graph, integer weights uniform in [1, 100].

    Draw order is row-major with the diagonal skipped, which pins the rng
    stream so both build targets construct the identical instance.
    """
    weights: list[list[float]] = []
    for i in range(n):
        row: list[float] = []
        for j in range(n):
            row.append(0 if i == j else rng.next_int(1, 101))
        weights.append(row)
    return DenseGraph(n, weights)
