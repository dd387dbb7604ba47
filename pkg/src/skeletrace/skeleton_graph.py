"""Pixel-adjacency graph built from a skeleton image.

One node per foreground pixel, numbered in row-major scan order; an edge
joins two nodes exactly when their pixels are 8-neighbors (Chebyshev
distance 1). Diagonal adjacency matters: Zhang-Suen skeletons stay
connected through diagonals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .raster_io import BinaryImage

__all__ = ["SkeletonGraph", "SubgraphSet", "build_skeleton_graph", "split_and_despeckle"]

DEFAULT_SPECKLE_THRESHOLD = 2


@dataclass(frozen=True)
class SkeletonGraph:
    """Graph plus the pixel coordinate of every node and the image dims."""

    graph: Graph
    coords: tuple[tuple[int, int], ...]  # node id -> (row, col)
    rows: int
    cols: int

    def node_count(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class SubgraphSet:
    """Despeckled partition: kept components plus noise node ids."""

    subgraphs: tuple[tuple[int, ...], ...]  # each sorted, ordered by min id
    noise_nodes: tuple[int, ...]


def build_skeleton_graph(skel: BinaryImage) -> SkeletonGraph:
    grid = skel.pixels
    coords = [(int(r), int(c)) for r, c in np.argwhere(grid)]
    index = {rc: i for i, rc in enumerate(coords)}
    g = Graph(len(coords))
    # Scanning row-major, earlier neighbors are W, NW, N, NE.
    back_offsets = ((0, -1), (-1, -1), (-1, 0), (-1, 1))
    for i, (r, c) in enumerate(coords):
        for dr, dc in back_offsets:
            j = index.get((r + dr, c + dc))
            if j is not None:
                g.add_edge(j, i)
    return SkeletonGraph(graph=g, coords=tuple(coords), rows=skel.rows, cols=skel.cols)


def split_and_despeckle(
    sg: SkeletonGraph, speckle_threshold: int = DEFAULT_SPECKLE_THRESHOLD
) -> SubgraphSet:
    """Split into components, keeping those above the speckle threshold.

    Components of at most ``speckle_threshold`` nodes are reported as
    noise rather than segmented; they stay in the result so coverage
    accounting can subtract them explicitly.
    """
    kept: list[tuple[int, ...]] = []
    noise: list[int] = []
    for component in sg.graph.connected_components():
        if len(component) > speckle_threshold:
            kept.append(tuple(component))
        else:
            noise.extend(component)
    return SubgraphSet(subgraphs=tuple(kept), noise_nodes=tuple(sorted(noise)))
