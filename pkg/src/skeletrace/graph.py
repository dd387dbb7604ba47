"""Undirected graph substrate with stable integer node ids.

Node ids are assigned densely at construction (``0..n-1``) and never
change: removing a node deactivates its id rather than compacting, so
ids stay tied to pixel coordinates downstream. Adjacency lists are kept
sorted and every traversal expands neighbors in ascending id order,
which makes components, triangles, BFS paths and fundamental cycles
byte-reproducible.
"""

from __future__ import annotations

from bisect import insort
from collections import deque
from typing import Iterable, Iterator

from .errors import InvalidNodeError, InvalidReferenceError

__all__ = ["Graph", "Edge", "edge_key"]

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Normalize an undirected edge to (min, max)."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Mutable undirected graph, no self-loops, no duplicate edges."""

    __slots__ = ("_adj",)

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("node count must be >= 0")
        # Live node -> sorted neighbor list. Dead nodes have no entry.
        self._adj: dict[int, list[int]] = {u: [] for u in range(n)}

    # -- queries ---------------------------------------------------------

    def is_live(self, u: int) -> bool:
        return u in self._adj

    def _check_live(self, u: int) -> None:
        if u not in self._adj:
            raise InvalidNodeError(f"node {u} is dead or unknown")

    def live_nodes(self) -> list[int]:
        return sorted(self._adj)

    def node_count(self) -> int:
        return len(self._adj)

    def degree(self, u: int) -> int:
        self._check_live(u)
        return len(self._adj[u])

    def neighbors(self, u: int) -> list[int]:
        self._check_live(u)
        return list(self._adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> Iterator[Edge]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in sorted(self._adj):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    # -- mutation --------------------------------------------------------

    def add_edge(self, u: int, v: int) -> None:
        self._check_live(u)
        self._check_live(v)
        if u == v:
            raise InvalidReferenceError(f"self-loop {u} not allowed")
        if v in self._adj[u]:
            raise InvalidReferenceError(f"duplicate edge ({u}, {v})")
        insort(self._adj[u], v)
        insort(self._adj[v], u)

    def remove_edge(self, u: int, v: int) -> None:
        if u not in self._adj or v not in self._adj[u]:
            raise InvalidReferenceError(f"edge ({u}, {v}) does not exist")
        self._adj[u].remove(v)
        self._adj[v].remove(u)

    def remove_node(self, u: int) -> None:
        self._check_live(u)
        for v in self._adj[u]:
            self._adj[v].remove(u)
        del self._adj[u]

    def copy(self) -> "Graph":
        dup = Graph(0)
        dup._adj = {u: list(nbrs) for u, nbrs in self._adj.items()}
        return dup

    def induced_subgraph(self, nodes: Iterable[int]) -> "Graph":
        """Keep exactly the given nodes and the edges among them.

        Node ids are preserved; everything else is dropped.
        """
        keep = set(nodes)
        for u in keep:
            self._check_live(u)
        sub = Graph(0)
        sub._adj = {u: [v for v in self._adj[u] if v in keep] for u in keep}
        return sub

    # -- algorithms ------------------------------------------------------

    def connected_components(self) -> list[list[int]]:
        """Components as sorted id lists, ordered by their minimum id."""
        seen: set[int] = set()
        components: list[list[int]] = []
        for start in sorted(self._adj):
            if start in seen:
                continue
            seen.add(start)
            component = [start]
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for v in self._adj[u]:
                    if v not in seen:
                        seen.add(v)
                        component.append(v)
                        queue.append(v)
            component.sort()
            components.append(component)
        return components

    def triangles(self) -> list[tuple[int, int, int]]:
        """All 3-cliques, each once, lexicographic by sorted ids."""
        found: list[tuple[int, int, int]] = []
        for u in sorted(self._adj):
            adj_u = self._adj[u]
            for v in adj_u:
                if v <= u:
                    continue
                adj_v = set(self._adj[v])
                for w in adj_u:
                    if w > v and w in adj_v:
                        found.append((u, v, w))
        return found

    def shortest_path_bfs(self, src: int, targets: Iterable[int]) -> list[int] | None:
        """Minimum-hop path from src to the nearest target, or None.

        Neighbors expand in ascending id order; among equally near targets
        the smallest id wins; the path follows first-discovery parents.
        """
        self._check_live(src)
        target_set = {t for t in targets if t in self._adj}
        if src in target_set:
            raise ValueError("src must not be a target")
        if not target_set:
            return None
        parent = {src: -1}
        frontier = [src]
        while frontier:
            next_frontier: list[int] = []
            reached: list[int] = []
            for u in frontier:
                for v in self._adj[u]:
                    if v not in parent:
                        parent[v] = u
                        next_frontier.append(v)
                        if v in target_set:
                            reached.append(v)
            if reached:
                path = [min(reached)]
                while parent[path[-1]] != -1:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            frontier = next_frontier
        return None

    def fundamental_cycles(self) -> list[list[int]]:
        """One cycle per non-tree edge of a BFS spanning forest.

        The forest is rooted at each component's smallest id with
        ascending-id expansion. Each cycle is returned as a node sequence
        without repeating its start, ordered by its defining non-tree edge.
        """
        parent: dict[int, int] = {}
        non_tree: list[Edge] = []
        for root in sorted(self._adj):
            if root in parent:
                continue
            parent[root] = -1
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for v in self._adj[u]:
                    if v not in parent:
                        parent[v] = u
                        queue.append(v)
                    elif parent[u] != v and u < v:
                        non_tree.append((u, v))
        cycles: list[list[int]] = []
        for u, v in sorted(non_tree):
            cycles.append(self._tree_cycle(u, v, parent))
        return cycles

    @staticmethod
    def _tree_cycle(u: int, v: int, parent: dict[int, int]) -> list[int]:
        # Walk both chains up to the common ancestor; the cycle runs
        # u .. lca .. v, closed implicitly by the non-tree edge (v, u).
        up_u = [u]
        while parent[up_u[-1]] != -1:
            up_u.append(parent[up_u[-1]])
        on_u_chain = {node: i for i, node in enumerate(up_u)}
        up_v = [v]
        while up_v[-1] not in on_u_chain:
            up_v.append(parent[up_v[-1]])
        lca = up_v.pop()
        return up_u[: on_u_chain[lca] + 1] + up_v[::-1]
