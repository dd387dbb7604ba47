"""Subgraph simplification: classify nodes, drop clique diagonals.

Node classes follow degree: Terminal (1), Turning (2), Junction (>= 3).
Junction pixels that touch each other form 3-cliques whose diagonal
chords (endpoint pixels differing in both row and column) make the
segmentation double back on itself, so those chords are removed. The
orthogonal sides of a clique always survive, which keeps every component
connected. Classes are then recomputed on the simplified view: a former
junction may drop to a turning node, and the survivors -- primary
junctions plus terminals -- are the path segmentation endpoints.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence

from .errors import ContractViolationError
from .graph import Edge, Graph, edge_key
from .skeleton_graph import SkeletonGraph

__all__ = [
    "NodeClass",
    "SimplifiedSubgraph",
    "classify_nodes",
    "junction_triangles",
    "select_removable_edges",
    "simplify_subgraph",
]

logger = logging.getLogger(__name__)


class NodeClass(Enum):
    TERMINAL = "terminal"
    TURNING = "turning"
    JUNCTION = "junction"


@dataclass(frozen=True)
class SimplifiedSubgraph:
    """One component after clique-diagonal removal."""

    graph: Graph  # simplified view, original ids, only this component live
    nodes: tuple[int, ...]
    removed_edges: tuple[Edge, ...]
    cliques: tuple[tuple[int, int, int], ...]
    endpoints: tuple[int, ...]  # junctions + terminals on the simplified view
    junctions: tuple[int, ...]
    terminals: tuple[int, ...]


def classify_nodes(g: Graph, nodes: Iterable[int]) -> dict[int, NodeClass]:
    classes: dict[int, NodeClass] = {}
    for u in nodes:
        degree = g.degree(u)
        if degree == 0:
            raise ContractViolationError(
                f"node {u} has degree 0; speckle removal should have dropped it"
            )
        if degree == 1:
            classes[u] = NodeClass.TERMINAL
        elif degree == 2:
            classes[u] = NodeClass.TURNING
        else:
            classes[u] = NodeClass.JUNCTION
    return classes


def junction_triangles(g: Graph, junctions: Iterable[int]) -> list[tuple[int, int, int]]:
    """3-cliques of the subgraph induced on junction nodes only."""
    junction_set = list(junctions)
    if not junction_set:
        return []
    return g.induced_subgraph(junction_set).triangles()


def select_removable_edges(
    triangles: Sequence[tuple[int, int, int]],
    coords: Mapping[int, tuple[int, int]] | Sequence[tuple[int, int]],
) -> list[Edge]:
    """Diagonal edges of the given triangles, deduplicated and sorted.

    A diagonal joins pixels differing in both row and column. Pixel
    geometry forces every 3-clique to contain exactly one; a triangle
    with none can only come from a non-pixel graph and is skipped.
    """
    removable: set[Edge] = set()
    for tri in triangles:
        a, b, c = tri
        found = False
        for u, v in ((a, b), (a, c), (b, c)):
            (ur, uc), (vr, vc) = coords[u], coords[v]
            if ur != vr and uc != vc:
                removable.add(edge_key(u, v))
                found = True
        if not found:
            logger.warning("triangle %s has no diagonal edge; skipping", tri)
    return sorted(removable)


def simplify_subgraph(sg: SkeletonGraph, nodes: Iterable[int]) -> SimplifiedSubgraph:
    """Run simplification on one despeckled component of the skeleton graph."""
    component = tuple(sorted(nodes))
    view = sg.graph.induced_subgraph(component)
    classes = classify_nodes(view, component)
    initial_junctions = [u for u in component if classes[u] is NodeClass.JUNCTION]
    cliques = junction_triangles(view, initial_junctions)
    removable = select_removable_edges(cliques, sg.coords)
    for u, v in removable:
        view.remove_edge(u, v)
    final = classify_nodes(view, component)
    junctions = tuple(u for u in component if final[u] is NodeClass.JUNCTION)
    terminals = tuple(u for u in component if final[u] is NodeClass.TERMINAL)
    endpoints = tuple(sorted(junctions + terminals))
    return SimplifiedSubgraph(
        graph=view,
        nodes=component,
        removed_edges=tuple(removable),
        cliques=tuple(cliques),
        endpoints=endpoints,
        junctions=junctions,
        terminals=terminals,
    )
