"""Independent reference implementations the tests check the library against.

Everything here is deliberately written the slow, obvious way (per-pixel
loops, exhaustive enumeration) and shares no code with the package.
"""

from __future__ import annotations

from collections import deque

import numpy as np


def thin_reference(grid: np.ndarray) -> np.ndarray:
    """Per-pixel Zhang-Suen written the textbook way, loops and all."""
    img = grid.astype(np.uint8).copy()
    rows, cols = img.shape

    def at(r: int, c: int) -> int:
        if 0 <= r < rows and 0 <= c < cols:
            return int(img[r, c])
        return 0

    def neighbors(r: int, c: int) -> list[int]:
        # P2..P9 clockwise from north
        return [
            at(r - 1, c), at(r - 1, c + 1), at(r, c + 1), at(r + 1, c + 1),
            at(r + 1, c), at(r + 1, c - 1), at(r, c - 1), at(r - 1, c - 1),
        ]

    while True:
        deleted = False
        for phase in (1, 2):
            marks = []
            for r in range(rows):
                for c in range(cols):
                    if not img[r, c]:
                        continue
                    n = neighbors(r, c)
                    p2, p3, p4, p5, p6, p7, p8, p9 = n
                    b = sum(n)
                    if not 2 <= b <= 6:
                        continue
                    cyc = n + [n[0]]
                    a = sum(1 for x, y in zip(cyc, cyc[1:]) if x == 0 and y == 1)
                    if a != 1:
                        continue
                    if phase == 1:
                        if p2 * p4 * p6 == 0 and p4 * p6 * p8 == 0:
                            marks.append((r, c))
                    else:
                        if p2 * p4 * p8 == 0 and p2 * p6 * p8 == 0:
                            marks.append((r, c))
            for r, c in marks:
                img[r, c] = 0
            if marks:
                deleted = True
        if not deleted:
            return img


def otsu_scan(pixels: np.ndarray) -> int:
    """Try all 256 thresholds, maximize between-class variance, smallest wins."""
    hist = [0] * 256
    for v in pixels.ravel():
        hist[int(v)] += 1
    best_t, best_var = 0, -1.0
    for t in range(256):
        lo = [(v, hist[v]) for v in range(t)]
        hi = [(v, hist[v]) for v in range(t, 256)]
        n0 = sum(n for _, n in lo)
        n1 = sum(n for _, n in hi)
        if n0 == 0 or n1 == 0:
            var = 0.0
        else:
            mu0 = sum(v * n for v, n in lo) / n0
            mu1 = sum(v * n for v, n in hi) / n1
            var = n0 * n1 * (mu0 - mu1) ** 2
        if var > best_var:
            best_var, best_t = var, t
    return best_t


def count_components_8(grid: np.ndarray) -> int:
    """8-connected foreground component count by flood fill."""
    seen = np.zeros_like(grid, dtype=bool)
    rows, cols = grid.shape
    count = 0
    for r in range(rows):
        for c in range(cols):
            if not grid[r, c] or seen[r, c]:
                continue
            count += 1
            queue = deque([(r, c)])
            seen[r, c] = True
            while queue:
                cr, cc = queue.popleft()
                for dr in (-1, 0, 1):
                    for dc in (-1, 0, 1):
                        nr, nc = cr + dr, cc + dc
                        if (
                            0 <= nr < rows and 0 <= nc < cols
                            and grid[nr, nc] and not seen[nr, nc]
                        ):
                            seen[nr, nc] = True
                            queue.append((nr, nc))
    return count


def chebyshev_edges(coords: list[tuple[int, int]]) -> set[tuple[int, int]]:
    """All index pairs at Chebyshev distance exactly 1."""
    found = set()
    for i, (r1, c1) in enumerate(coords):
        for j in range(i + 1, len(coords)):
            r2, c2 = coords[j]
            if max(abs(r1 - r2), abs(c1 - c2)) == 1:
                found.add((i, j))
    return found


def brute_triangles(n: int, edges: set[tuple[int, int]]) -> list[tuple[int, int, int]]:
    """Scan all node triples for mutual adjacency."""
    has = lambda a, b: (min(a, b), max(a, b)) in edges
    out = []
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                if has(a, b) and has(a, c) and has(b, c):
                    out.append((a, b, c))
    return out


def all_simple_paths(adj: dict[int, list[int]], src: int, dst: int) -> list[list[int]]:
    """Every simple path between two nodes (tiny graphs only)."""
    out: list[list[int]] = []

    def walk(path: list[int]) -> None:
        if path[-1] == dst:
            out.append(list(path))
            return
        for nxt in adj[path[-1]]:
            if nxt not in path:
                path.append(nxt)
                walk(path)
                path.pop()

    walk([src])
    return out


def all_simple_cycles(adj: dict[int, list[int]]) -> list[frozenset[tuple[int, int]]]:
    """Edge sets of all simple cycles (length >= 3), deduplicated."""
    cycles: set[frozenset[tuple[int, int]]] = set()
    nodes = sorted(adj)

    def walk(start: int, path: list[int]) -> None:
        for nxt in adj[path[-1]]:
            if nxt == start and len(path) >= 3:
                closed = path + [start]
                cycles.add(
                    frozenset(
                        (min(a, b), max(a, b)) for a, b in zip(closed, closed[1:])
                    )
                )
            elif nxt not in path and nxt > start:
                path.append(nxt)
                walk(start, path)
                path.pop()

    for start in nodes:
        walk(start, [start])
    return sorted(cycles, key=lambda s: sorted(s))


def cut_segments(
    edges: set[tuple[int, int]], endpoints: set[int]
) -> list[tuple[str, frozenset[tuple[int, int]]]]:
    """Segment a simplified subgraph by cutting it at its endpoints.

    Two edges belong to the same segment iff they share a NON-endpoint
    node; a segment whose touched nodes all keep two segment edges is
    closed (a cycle), otherwise it is an open chain. Assumes every
    non-endpoint node has degree exactly 2, which holds for any
    simplified subgraph (degree-1 and degree->=3 nodes are endpoints by
    definition).
    """
    incident: dict[int, list[tuple[int, int]]] = {}
    for e in edges:
        for v in e:
            incident.setdefault(v, []).append(e)
    unvisited = set(edges)
    segments: list[tuple[str, frozenset[tuple[int, int]]]] = []
    while unvisited:
        seed = min(unvisited)
        component = {seed}
        queue = deque([seed])
        unvisited.discard(seed)
        while queue:
            e = queue.popleft()
            for v in e:
                if v in endpoints:
                    continue
                for other in incident[v]:
                    if other in unvisited:
                        unvisited.discard(other)
                        component.add(other)
                        queue.append(other)
        degree: dict[int, int] = {}
        for e in component:
            for v in e:
                degree[v] = degree.get(v, 0) + 1
        kind = "cycle" if all(d == 2 for d in degree.values()) else "open"
        segments.append((kind, frozenset(component)))
    return segments
