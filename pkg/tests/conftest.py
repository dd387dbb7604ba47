from __future__ import annotations

import random

import numpy as np
import pytest

from skeletrace import BinaryImage, GrayImage, thin_zhang_suen

# ---------------------------------------------------------------------------
# ASCII-art helpers: '#' is foreground, '.' background.
# ---------------------------------------------------------------------------


def grid(art: str) -> np.ndarray:
    rows = [line.strip() for line in art.strip().splitlines()]
    return np.array([[1 if ch == "#" else 0 for ch in line] for line in rows], dtype=np.uint8)


def binary(art: str) -> BinaryImage:
    return BinaryImage(grid(art))


def gray_from_binary(img: BinaryImage, fg: int = 0, bg: int = 255) -> GrayImage:
    return GrayImage(np.where(img.pixels == 1, fg, bg).astype(np.uint8))


# A loop whose stem forks into two strokes: 4 initial junctions around the
# fork form 2 cliques; after simplification there are 2 primary junctions
# (loop vertex and fork center) and 2 terminals.
LOOP_FORK = """
..#..
.#.#.
#...#
.#.#.
..#..
..#..
..#..
.###.
#...#
"""

# A loop with two diagonal spur strokes leaving its bottom vertex: one
# primary junction of degree 4, two terminals; segments into exactly
# two open paths plus one cycle.
LOOP_SPURS = """
..#..
.#.#.
#...#
.#.#.
..#..
.#.#.
#...#
"""

# Two components: a flat stroke and a loop with a tail.
TWO_COMPONENT_SCENE = """
.........
.#######.
.........
..##.....
.#..#....
.#..#....
..##.....
...#.....
...#.....
"""

TEE = """
.....
#####
..#..
..#..
..#..
"""

RING = """
.##.
#..#
#..#
.##.
"""


@pytest.fixture
def loop_fork() -> BinaryImage:
    return binary(LOOP_FORK)


@pytest.fixture
def loop_spurs() -> BinaryImage:
    return binary(LOOP_SPURS)


@pytest.fixture
def two_component_scene() -> BinaryImage:
    return binary(TWO_COMPONENT_SCENE)


@pytest.fixture
def tee() -> BinaryImage:
    return binary(TEE)


@pytest.fixture
def ring() -> BinaryImage:
    return binary(RING)


# ---------------------------------------------------------------------------
# Random corpora (seeded, so every run sees the same images).
# ---------------------------------------------------------------------------


def random_blob(rng: random.Random, rows: int, cols: int, growth: int) -> np.ndarray:
    """Connected random blob grown by neighbor accretion."""
    out = np.zeros((rows, cols), dtype=np.uint8)
    r, c = rng.randrange(rows), rng.randrange(cols)
    out[r, c] = 1
    cells = [(r, c)]
    for _ in range(growth):
        rr, cc = cells[rng.randrange(len(cells))]
        nr, nc = rr + rng.choice((-1, 0, 1)), cc + rng.choice((-1, 0, 1))
        if 0 <= nr < rows and 0 <= nc < cols and not out[nr, nc]:
            out[nr, nc] = 1
            cells.append((nr, nc))
    return out


def random_skeletons(seed: int, count: int, max_side: int = 16) -> list[BinaryImage]:
    """Skeletons obtained by thinning random blobs; the criterion-3 corpus."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        rows = rng.randrange(4, max_side + 1)
        cols = rng.randrange(4, max_side + 1)
        blob = random_blob(rng, rows, cols, rng.randrange(8, rows * cols))
        out.append(thin_zhang_suen(BinaryImage(blob)))
    return out


def random_pixel_sets(seed: int, count: int, side: int = 6, max_pixels: int = 12) -> list[BinaryImage]:
    """Arbitrary sparse pixel subsets used as raw skeletons (criterion 4)."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randrange(1, max_pixels + 1)
        cells = rng.sample([(r, c) for r in range(side) for c in range(side)], n)
        img = np.zeros((side, side), dtype=np.uint8)
        for r, c in cells:
            img[r, c] = 1
        out.append(BinaryImage(img))
    return out
