"""Graph-cut segmentation stack: images, flow networks, BK max-flow,
expansion-move energy minimization."""

from xbench.graphcut.bk import BKState, bk_maxflow
from xbench.graphcut.energy import EnergyModel, build_expansion_graph, energy, grid_pairs
from xbench.graphcut.expansion import alpha_expansion
from xbench.graphcut.flownet import CutResult, FlowNetwork, GraphFileError, cut_cost, load_graph, save_graph
from xbench.graphcut.image import GrayImage, PgmError, generate_test_image, read_pgm, threshold, write_pgm

__all__ = [
    "GrayImage",
    "PgmError",
    "threshold",
    "generate_test_image",
    "read_pgm",
    "write_pgm",
    "FlowNetwork",
    "CutResult",
    "GraphFileError",
    "cut_cost",
    "save_graph",
    "load_graph",
    "BKState",
    "bk_maxflow",
    "EnergyModel",
    "grid_pairs",
    "energy",
    "build_expansion_graph",
    "alpha_expansion",
]
