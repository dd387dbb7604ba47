"""Path segmentation of a simplified subgraph.

Output paths partition the subgraph's edge set: every edge lands in
exactly one path, open paths run endpoint-to-endpoint with no endpoint
in between, and a cycle path carries at most one endpoint. The schedule
runs on a disposable copy of the subgraph:

cycle phase
    Fundamental cycles are claimed first, in ascending order of their
    node sets. A cycle whose edges are all unclaimed becomes a Cycle
    path; one that lost edges to earlier cycles contributes its
    surviving arcs as open-candidate chains. Claimed edges leave the
    copy, so afterwards only bridges remain and the copy is a forest.

path phase
    While any segmentation endpoint still has an incident edge, the
    smallest such endpoint BFS-walks to the nearest other endpoint
    (ascending-id tie-breaks); the found path's edges and exhausted
    nodes leave the copy. Endpoints survive while they keep edges, so
    one junction can anchor several paths. If an endpoint has edges but
    no reachable partner, its chain is recorded to the dead end rather
    than looping forever.

split phase
    Recorded candidates are cut at interior endpoints. Cycles through
    two or more endpoints become open segments; a cycle through exactly
    one endpoint is rotated to start there; an endpoint-free cycle is
    rotated to its smallest node, oriented toward its smaller neighbor.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InternalInvariantError
from .graph import Edge, Graph, edge_key
from .simplify import SimplifiedSubgraph

__all__ = ["PathKind", "PathSeq", "SegmentationOutcome", "segment_subgraph", "verify_span"]


class PathKind(Enum):
    OPEN = "open"
    CYCLE = "cycle"


@dataclass(frozen=True)
class PathSeq:
    """Ordered node sequence; a cycle closes from its last node to its first."""

    kind: PathKind
    nodes: tuple[int, ...]

    def edges(self) -> list[Edge]:
        pairs = [edge_key(a, b) for a, b in zip(self.nodes, self.nodes[1:])]
        if self.kind is PathKind.CYCLE:
            pairs.append(edge_key(self.nodes[-1], self.nodes[0]))
        return pairs


@dataclass(frozen=True)
class SegmentationOutcome:
    paths: tuple[PathSeq, ...]
    covered_edges: frozenset[Edge]
    uncovered_nodes: tuple[int, ...]


def _cycle_edges(seq: list[int]) -> list[Edge]:
    closed = seq + seq[:1]
    return [edge_key(a, b) for a, b in zip(closed, closed[1:])]


def _drop_isolated(copy: Graph, nodes) -> None:
    for u in nodes:
        if copy.is_live(u) and copy.degree(u) == 0:
            copy.remove_node(u)


def _surviving_arcs(seq: list[int], alive: list[bool]) -> list[list[int]]:
    """Maximal runs of surviving edges around a cycle, as node chains.

    ``alive[i]`` says whether the edge from seq[i] to seq[(i+1) % n]
    survived. Runs are read in cycle order starting just after a dead
    edge, so a single dead edge yields one chain spanning the rest.
    """
    n = len(seq)
    start = next(i for i, ok in enumerate(alive) if not ok)
    arcs: list[list[int]] = []
    current: list[int] | None = None
    for k in range(1, n + 1):
        i = (start + k) % n
        if alive[i]:
            if current is None:
                current = [seq[i]]
            current.append(seq[(i + 1) % n])
        elif current is not None:
            arcs.append(current)
            current = None
    if current is not None:
        arcs.append(current)
    return arcs


def _orient(seq: list[int]) -> list[int]:
    # Canonical direction: second node smaller than last.
    if len(seq) >= 3 and seq[1] > seq[-1]:
        return [seq[0]] + seq[:0:-1]
    return seq


def _rotate_cycle(seq: list[int], anchor: int) -> list[int]:
    i = seq.index(anchor)
    return _orient(seq[i:] + seq[:i])


def _split_chain(seq: list[int], endpoints: set[int]) -> list[list[int]]:
    cuts = [i for i in range(1, len(seq) - 1) if seq[i] in endpoints]
    bounds = [0] + cuts + [len(seq) - 1]
    return [seq[a : b + 1] for a, b in zip(bounds, bounds[1:])]


def _split_cycle(seq: list[int], endpoints: set[int]) -> list[list[int]]:
    rotated = _rotate_cycle(seq, min(u for u in seq if u in endpoints))
    closed = rotated + [rotated[0]]
    return _split_chain(closed, endpoints)


def segment_subgraph(s: SimplifiedSubgraph) -> SegmentationOutcome:
    copy = s.graph.copy()
    endpoints = set(s.endpoints)
    cycles: list[list[int]] = []
    chains: list[list[int]] = []
    consumed: set[Edge] = set()

    # Cycle phase.
    basis = sorted(
        copy.fundamental_cycles(),
        key=lambda c: (sorted(c), sorted(_cycle_edges(c))),
    )
    for seq in basis:
        edges = _cycle_edges(seq)
        alive = [e not in consumed for e in edges]
        if not any(alive):
            continue
        if all(alive):
            cycles.append(seq)
        else:
            chains.extend(_surviving_arcs(seq, alive))
        for e, ok in zip(edges, alive):
            if ok:
                consumed.add(e)
                copy.remove_edge(*e)
        _drop_isolated(copy, seq)

    # Path phase; the copy is now a forest.
    while True:
        active = [u for u in endpoints if copy.is_live(u) and copy.degree(u) >= 1]
        if not active:
            break
        src = min(active)
        others = {u for u in endpoints if copy.is_live(u) and u != src}
        path = copy.shortest_path_bfs(src, others) if others else None
        if path is None:
            # Degenerate guard: no partner endpoint, walk to the dead end.
            path = [src]
            prev = -1
            for _ in range(copy.node_count()):
                step = [v for v in copy.neighbors(path[-1]) if v != prev]
                if not step:
                    break
                prev = path[-1]
                path.append(step[0])
        chains.append(path)
        for a, b in zip(path, path[1:]):
            copy.remove_edge(a, b)
        _drop_isolated(copy, path)

    if copy.edge_count() != 0:
        raise InternalInvariantError(
            f"{copy.edge_count()} edges left uncovered after segmentation"
        )

    # Split phase.
    paths: list[PathSeq] = []
    for seq in cycles:
        inside = sum(1 for u in seq if u in endpoints)
        if inside >= 2:
            paths.extend(
                PathSeq(PathKind.OPEN, tuple(piece))
                for piece in _split_cycle(seq, endpoints)
            )
        else:
            anchor = (
                next(u for u in seq if u in endpoints) if inside else min(seq)
            )
            paths.append(PathSeq(PathKind.CYCLE, tuple(_rotate_cycle(seq, anchor))))
    for seq in chains:
        paths.extend(
            PathSeq(PathKind.OPEN, tuple(piece))
            for piece in _split_chain(seq, endpoints)
        )

    covered: set[Edge] = set()
    covered_count = 0
    in_paths: set[int] = set()
    for path in paths:
        for e in path.edges():
            covered.add(e)
            covered_count += 1
        in_paths.update(path.nodes)
    total = s.graph.edge_count()
    if len(covered) != covered_count or len(covered) != total:
        raise InternalInvariantError(
            f"edge partition broken: {covered_count} path edges, "
            f"{len(covered)} distinct, {total} in subgraph"
        )
    uncovered = tuple(u for u in s.nodes if u not in in_paths)
    return SegmentationOutcome(
        paths=tuple(paths),
        covered_edges=frozenset(covered),
        uncovered_nodes=uncovered,
    )


def verify_span(all_nodes, noise, paths) -> bool:
    """True iff every node is covered by a path or classified as noise."""
    in_paths: set[int] = set()
    for path in paths:
        in_paths.update(path.nodes)
    return not (set(all_nodes) - set(noise) - in_paths)
