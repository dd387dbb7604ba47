"""Zhang-Suen parallel thinning.

Reduces foreground regions to 1-pixel-wide centerlines while preserving
8-connectivity. Out-of-bounds neighbors count as background. For a center
pixel with the 8 neighbors labeled clockwise from north
(N, NE, E, SE, S, SW, W, NW), let B be the number of foreground neighbors
and A the number of 0->1 transitions in the cyclic neighbor sequence.
Each pass runs two subiterations; a subiteration marks a foreground pixel
for deletion iff 2 <= B <= 6, A == 1, and two direction products are zero
(N*E*S and E*S*W in the first subiteration, N*E*W and N*S*W in the
second). Marks are applied in one batch after the full scan, so results
do not depend on scan order. Passes repeat until a full pass deletes
nothing.
"""

from __future__ import annotations

import numpy as np

from .raster_io import BinaryImage

__all__ = ["thin_zhang_suen"]


def _neighbor_views(padded: np.ndarray) -> tuple[np.ndarray, ...]:
    # Clockwise from north: N, NE, E, SE, S, SW, W, NW.
    return (
        padded[:-2, 1:-1],
        padded[:-2, 2:],
        padded[1:-1, 2:],
        padded[2:, 2:],
        padded[2:, 1:-1],
        padded[2:, :-2],
        padded[1:-1, :-2],
        padded[:-2, :-2],
    )


def thin_zhang_suen(img: BinaryImage) -> BinaryImage:
    grid = img.pixels.astype(np.uint8)
    while True:
        deleted = False
        for second_pass in (False, True):
            padded = np.pad(grid, 1)
            nbrs = _neighbor_views(padded)
            b_count = np.zeros(grid.shape, dtype=np.uint8)
            for view in nbrs:
                b_count += view
            transitions = np.zeros(grid.shape, dtype=np.uint8)
            cyc = nbrs + (nbrs[0],)
            for a, b in zip(cyc, cyc[1:]):
                transitions += (a == 0) & (b == 1)
            n, e, s, w = nbrs[0], nbrs[2], nbrs[4], nbrs[6]
            if second_pass:
                prod1 = n * e * w
                prod2 = n * s * w
            else:
                prod1 = n * e * s
                prod2 = e * s * w
            marks = (
                (grid == 1)
                & (b_count >= 2)
                & (b_count <= 6)
                & (transitions == 1)
                & (prod1 == 0)
                & (prod2 == 0)
            )
            if marks.any():
                grid[marks] = 0
                deleted = True
        if not deleted:
            return BinaryImage(grid)
