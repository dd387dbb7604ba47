"""Serialization of detection results.

JSON document, schema_version "1", keys in this fixed order:

    schema_version  "1"
    image           {"rows": R, "cols": C}
    nodes           [{"id", "row", "col", "class"}, ...] in id order;
                    class is junction / terminal / turning / noise
    paths           [{"kind": "open"|"cycle", "node_ids": [...]}, ...]
    endpoints       sorted node ids
    removed_edges   [[u, v], ...] with u < v
    noise           sorted node ids
    subgraphs       per-component records (nodes, removed_edges, cliques,
                    endpoints, junctions, terminals, paths)
    span_ok         bool
    metrics         counts, fractions and per-stage runtime seconds

``parse_json(to_json(result))`` reconstructs an equal result.

The SVG rendering draws one polyline per open path and one polygon per
cycle in the raster coordinate frame (x = col, y = row, no vertical
flip), plus endpoint marker circles in a trailing group. Colors come
from a seeded palette so renders are reproducible.
"""

from __future__ import annotations

import colorsys
import json
import random
from dataclasses import dataclass
from xml.sax.saxutils import quoteattr

from .pipeline import DetectionResult, Metrics, SubgraphRecord
from .segment import PathKind, PathSeq

__all__ = ["SvgStyle", "to_json", "parse_json", "to_svg"]

SCHEMA_VERSION = "1"


def _path_payload(path: PathSeq) -> dict:
    return {"kind": path.kind.value, "node_ids": list(path.nodes)}


def _record_payload(record: SubgraphRecord) -> dict:
    return {
        "nodes": list(record.nodes),
        "removed_edges": [list(e) for e in record.removed_edges],
        "cliques": [list(c) for c in record.cliques],
        "endpoints": list(record.endpoints),
        "junctions": list(record.junctions),
        "terminals": list(record.terminals),
        "paths": [_path_payload(p) for p in record.paths],
    }


def to_json(result: DetectionResult, indent: int | None = None) -> bytes:
    """Serialize to UTF-8 JSON with a fixed key order."""
    metrics = result.metrics
    document = {
        "schema_version": SCHEMA_VERSION,
        "image": {"rows": result.rows, "cols": result.cols},
        "nodes": [
            {"id": i, "row": r, "col": c, "class": result.node_class(i)}
            for i, (r, c) in enumerate(result.coords)
        ],
        "paths": [_path_payload(p) for p in result.paths],
        "endpoints": list(result.endpoints),
        "removed_edges": [list(e) for e in result.removed_edges],
        "noise": list(result.noise_nodes),
        "subgraphs": [_record_payload(r) for r in result.subgraphs],
        "span_ok": result.span_ok,
        "metrics": {
            "junction_count": metrics.junction_count,
            "terminal_count": metrics.terminal_count,
            "endpoint_count": metrics.endpoint_count,
            "node_count": metrics.node_count,
            "endpoint_fraction": metrics.endpoint_fraction,
            "image_pixel_count": metrics.image_pixel_count,
            "skeleton_pixel_fraction": metrics.skeleton_pixel_fraction,
            "runtime": dict(metrics.runtime),
        },
    }
    return json.dumps(document, indent=indent).encode("utf-8")


def _parse_path(payload: dict) -> PathSeq:
    return PathSeq(kind=PathKind(payload["kind"]), nodes=tuple(payload["node_ids"]))


def parse_json(data: bytes | str) -> DetectionResult:
    """Rebuild a DetectionResult from its JSON serialization."""
    document = json.loads(data)
    version = document.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {version!r}")
    metrics = document["metrics"]
    records = tuple(
        SubgraphRecord(
            nodes=tuple(r["nodes"]),
            removed_edges=tuple(tuple(e) for e in r["removed_edges"]),
            cliques=tuple(tuple(c) for c in r["cliques"]),
            endpoints=tuple(r["endpoints"]),
            junctions=tuple(r["junctions"]),
            terminals=tuple(r["terminals"]),
            paths=tuple(_parse_path(p) for p in r["paths"]),
        )
        for r in document["subgraphs"]
    )
    return DetectionResult(
        rows=document["image"]["rows"],
        cols=document["image"]["cols"],
        coords=tuple((n["row"], n["col"]) for n in document["nodes"]),
        paths=tuple(_parse_path(p) for p in document["paths"]),
        endpoints=tuple(document["endpoints"]),
        removed_edges=tuple(tuple(e) for e in document["removed_edges"]),
        cliques=tuple(
            tuple(c) for record in document["subgraphs"] for c in record["cliques"]
        ),
        noise_nodes=tuple(document["noise"]),
        subgraphs=records,
        metrics=Metrics(
            junction_count=metrics["junction_count"],
            terminal_count=metrics["terminal_count"],
            endpoint_count=metrics["endpoint_count"],
            node_count=metrics["node_count"],
            endpoint_fraction=metrics["endpoint_fraction"],
            image_pixel_count=metrics["image_pixel_count"],
            skeleton_pixel_fraction=metrics["skeleton_pixel_fraction"],
            runtime=dict(metrics["runtime"]),
        ),
        span_ok=document["span_ok"],
    )


@dataclass(frozen=True)
class SvgStyle:
    stroke_width: float = 1.0
    palette_seed: int = 0
    marker_radius: float = 0.6


def _palette(count: int, seed: int) -> list[str]:
    rng = random.Random(seed)
    offset = rng.random()
    colors = []
    for i in range(count):
        # Golden-ratio hue walk gives well-spread, reproducible colors.
        hue = (offset + i * 0.61803398875) % 1.0
        r, g, b = colorsys.hls_to_rgb(hue, 0.42, 0.85)
        colors.append(f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}")
    return colors


def to_svg(result: DetectionResult, style: SvgStyle = SvgStyle()) -> bytes:
    """Render paths as SVG polylines/polygons with endpoint markers."""
    width, height = result.cols, result.rows
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
    ]
    colors = _palette(len(result.paths), style.palette_seed)
    for path, color in zip(result.paths, colors):
        points = " ".join(f"{result.coords[u][1]},{result.coords[u][0]}" for u in path.nodes)
        tag = "polygon" if path.kind is PathKind.CYCLE else "polyline"
        lines.append(
            f'<{tag} points={quoteattr(points)} fill="none" '
            f'stroke="{color}" stroke-width="{style.stroke_width}" '
            'stroke-linecap="round" stroke-linejoin="round"/>'
        )
    if result.endpoints:
        lines.append('<g class="endpoints">')
        for u in result.endpoints:
            row, col = result.coords[u]
            lines.append(
                f'<circle cx="{col}" cy="{row}" r="{style.marker_radius}" '
                'fill="#222222"/>'
            )
        lines.append("</g>")
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")
