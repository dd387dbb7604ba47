"""End-to-end detection: skeleton in, segmented paths and metrics out.

``detect_from_skeleton`` is the core entry point and takes no tuning
parameters; the only knob, the speckle threshold, controls what counts
as noise rather than how lines are detected. ``detect_from_gray`` bolts
the preprocessing (binarize, optional invert, thin) on the front.

Subgraphs are processed sequentially in ascending order of their
smallest node id, but each one is pure and touches a disjoint node set,
so a parallel executor could run them concurrently and merge by
subgraph index without changing any output.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .graph import Edge
from .raster_io import BinaryImage, GrayImage, binarize_fixed, binarize_otsu, invert
from .segment import PathSeq, segment_subgraph, verify_span
from .simplify import simplify_subgraph
from .skeleton_graph import (
    DEFAULT_SPECKLE_THRESHOLD,
    build_skeleton_graph,
    split_and_despeckle,
)
from .thinning import thin_zhang_suen

__all__ = [
    "Metrics",
    "SubgraphRecord",
    "DetectionResult",
    "detect_from_skeleton",
    "detect_from_gray",
    "compute_metrics",
]


@dataclass(frozen=True)
class Metrics:
    """The seven ablation statistics plus wall time per stage."""

    junction_count: int
    terminal_count: int
    endpoint_count: int
    node_count: int
    endpoint_fraction: float
    image_pixel_count: int
    skeleton_pixel_fraction: float
    runtime: dict[str, float] = field(default_factory=dict)  # seconds, incl. "total"


@dataclass(frozen=True)
class SubgraphRecord:
    """Everything detected within one kept component."""

    nodes: tuple[int, ...]
    removed_edges: tuple[Edge, ...]
    cliques: tuple[tuple[int, int, int], ...]
    endpoints: tuple[int, ...]
    junctions: tuple[int, ...]
    terminals: tuple[int, ...]
    paths: tuple[PathSeq, ...]


@dataclass(frozen=True)
class DetectionResult:
    rows: int
    cols: int
    coords: tuple[tuple[int, int], ...]  # node id -> (row, col)
    paths: tuple[PathSeq, ...]  # subgraph lists concatenated in order
    endpoints: tuple[int, ...]
    removed_edges: tuple[Edge, ...]
    cliques: tuple[tuple[int, int, int], ...]
    noise_nodes: tuple[int, ...]
    subgraphs: tuple[SubgraphRecord, ...]
    metrics: Metrics
    span_ok: bool

    def node_class(self, node: int) -> str:
        """Class name for a node: junction, terminal, turning or noise."""
        if node in self._class_index():
            return self._class_index()[node]
        raise KeyError(f"unknown node id {node}")

    def _class_index(self) -> dict[int, str]:
        cached = getattr(self, "_classes", None)
        if cached is None:
            cached = {u: "noise" for u in self.noise_nodes}
            for record in self.subgraphs:
                for u in record.nodes:
                    cached[u] = "turning"
                for u in record.junctions:
                    cached[u] = "junction"
                for u in record.terminals:
                    cached[u] = "terminal"
            object.__setattr__(self, "_classes", cached)
        return cached


def _assemble_metrics(
    subgraphs: tuple[SubgraphRecord, ...],
    node_count: int,
    image_pixel_count: int,
    runtime: dict[str, float],
) -> Metrics:
    junctions = sum(len(r.junctions) for r in subgraphs)
    terminals = sum(len(r.terminals) for r in subgraphs)
    endpoints = junctions + terminals
    return Metrics(
        junction_count=junctions,
        terminal_count=terminals,
        endpoint_count=endpoints,
        node_count=node_count,
        endpoint_fraction=endpoints / node_count if node_count else 0.0,
        image_pixel_count=image_pixel_count,
        skeleton_pixel_fraction=node_count / image_pixel_count if image_pixel_count else 0.0,
        runtime=runtime,
    )


def compute_metrics(
    result: "DetectionResult",
    image_pixel_count: int | None = None,
    runtime: dict[str, float] | None = None,
) -> Metrics:
    """Recompute the metric set from an assembled detection result.

    Everything except the runtimes derives from the result itself, so a
    result parsed back from disk reproduces its own metrics.
    """
    return _assemble_metrics(
        result.subgraphs,
        len(result.coords),
        image_pixel_count if image_pixel_count is not None else result.rows * result.cols,
        dict(runtime) if runtime is not None else dict(result.metrics.runtime),
    )


def detect_from_skeleton(
    skel: BinaryImage,
    speckle_threshold: int = DEFAULT_SPECKLE_THRESHOLD,
    _runtime: dict[str, float] | None = None,
) -> DetectionResult:
    """Run detection on an image assumed to already be a skeleton.

    Any binary image is accepted; results on thick or noisy input follow
    from its pixel graph as-is.
    """
    runtime = _runtime if _runtime is not None else {}
    started = time.perf_counter()

    t0 = time.perf_counter()
    sg = build_skeleton_graph(skel)
    parts = split_and_despeckle(sg, speckle_threshold)
    runtime["build"] = time.perf_counter() - t0

    runtime["simplify"] = 0.0
    runtime["segment"] = 0.0
    records: list[SubgraphRecord] = []
    for component in parts.subgraphs:
        t0 = time.perf_counter()
        simplified = simplify_subgraph(sg, component)
        runtime["simplify"] += time.perf_counter() - t0
        t0 = time.perf_counter()
        outcome = segment_subgraph(simplified)
        runtime["segment"] += time.perf_counter() - t0
        records.append(
            SubgraphRecord(
                nodes=simplified.nodes,
                removed_edges=simplified.removed_edges,
                cliques=simplified.cliques,
                endpoints=simplified.endpoints,
                junctions=simplified.junctions,
                terminals=simplified.terminals,
                paths=outcome.paths,
            )
        )

    t0 = time.perf_counter()
    merged_paths: list[PathSeq] = []
    merged_removed: list[Edge] = []
    merged_cliques: list[tuple[int, int, int]] = []
    merged_endpoints: list[int] = []
    for record in records:
        merged_paths.extend(record.paths)
        merged_removed.extend(record.removed_edges)
        merged_cliques.extend(record.cliques)
        merged_endpoints.extend(record.endpoints)
    span_ok = verify_span(range(sg.node_count()), parts.noise_nodes, merged_paths)
    runtime["merge"] = time.perf_counter() - t0
    preprocess = runtime.get("binarize", 0.0) + runtime.get("thin", 0.0)
    runtime["total"] = (time.perf_counter() - started) + preprocess

    metrics = _assemble_metrics(
        tuple(records), sg.node_count(), skel.rows * skel.cols, runtime
    )
    return DetectionResult(
        rows=skel.rows,
        cols=skel.cols,
        coords=sg.coords,
        paths=tuple(merged_paths),
        endpoints=tuple(sorted(merged_endpoints)),
        removed_edges=tuple(merged_removed),
        cliques=tuple(merged_cliques),
        noise_nodes=parts.noise_nodes,
        subgraphs=tuple(records),
        metrics=metrics,
        span_ok=span_ok,
    )


def detect_from_gray(
    img: GrayImage,
    *,
    polarity: str = "auto",
    do_invert: bool = False,
    threshold: int | None = None,
    speckle_threshold: int = DEFAULT_SPECKLE_THRESHOLD,
) -> DetectionResult:
    """Binarize, optionally invert, thin, then detect."""
    runtime: dict[str, float] = {}
    t0 = time.perf_counter()
    if threshold is not None:
        binary = binarize_fixed(img, threshold, polarity)
    else:
        binary = binarize_otsu(img, polarity)
    if do_invert:
        binary = invert(binary)
    runtime["binarize"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    skeleton = thin_zhang_suen(binary)
    runtime["thin"] = time.perf_counter() - t0
    return detect_from_skeleton(skeleton, speckle_threshold, _runtime=runtime)
