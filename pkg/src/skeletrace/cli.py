"""Command-line interface.

    skeletrace detect  <input> --out result.json [--svg view.svg] [...]
    skeletrace metrics <input> [--format table|csv|json] [...]
    skeletrace bench   <dir> [--repeat K] [--figures DIR]

All commands share the preprocessing flags; detection itself has no
tunables. Exit codes: 0 success, 1 usage, 2 I/O or decode failure,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from pathlib import Path

from .errors import InternalInvariantError, SkeletraceError
from .export import SvgStyle, to_json, to_svg
from .pipeline import DetectionResult, detect_from_gray, detect_from_skeleton
from .raster_io import GrayImage, binarize_fixed, invert, load_gray
from .skeleton_graph import DEFAULT_SPECKLE_THRESHOLD
from .thinning import thin_zhang_suen

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_INTERNAL = 3

METRIC_COLUMNS = (
    "junctions",
    "terminals",
    "endpoints",
    "nodes",
    "endpoint_fraction",
    "image_pixels",
    "skeleton_fraction",
    "runtime_ms",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_preprocess_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("preprocessing")
    method = group.add_mutually_exclusive_group()
    method.add_argument("--otsu", action="store_true", help="Otsu threshold (default)")
    method.add_argument("--threshold", type=int, metavar="N", help="fixed threshold 0..255")
    group.add_argument(
        "--polarity",
        choices=("auto", "bright", "dark"),
        default="auto",
        help="which side of the threshold is foreground (default: auto = minority)",
    )
    group.add_argument("--invert", action="store_true", help="flip the binary image")
    group.add_argument(
        "--speckle",
        type=int,
        default=DEFAULT_SPECKLE_THRESHOLD,
        metavar="N",
        help="components of at most N nodes are noise (default: %(default)s)",
    )
    group.add_argument(
        "--skip-preprocess",
        action="store_true",
        help="input is already a binary skeleton; nonzero pixels are foreground",
    )


def _polarity_name(short: str) -> str:
    return {"auto": "auto", "bright": "foreground-bright", "dark": "foreground-dark"}[short]


def _run_detection(path: str, args: argparse.Namespace) -> DetectionResult:
    img = load_gray(path)
    if args.skip_preprocess:
        binary = binarize_fixed(img, 1, "foreground-bright")
        if args.invert:
            binary = invert(binary)
        return detect_from_skeleton(binary, args.speckle)
    return detect_from_gray(
        img,
        polarity=_polarity_name(args.polarity),
        do_invert=args.invert,
        threshold=args.threshold,
        speckle_threshold=args.speckle,
    )


def _metric_row(result: DetectionResult) -> dict[str, object]:
    m = result.metrics
    return {
        "junctions": m.junction_count,
        "terminals": m.terminal_count,
        "endpoints": m.endpoint_count,
        "nodes": m.node_count,
        "endpoint_fraction": round(m.endpoint_fraction, 6),
        "image_pixels": m.image_pixel_count,
        "skeleton_fraction": round(m.skeleton_pixel_fraction, 6),
        "runtime_ms": round(m.runtime.get("total", 0.0) * 1000.0, 3),
    }


def _cmd_detect(args: argparse.Namespace) -> int:
    result = _run_detection(args.input, args)
    Path(args.out).write_bytes(to_json(result, indent=2))
    if args.svg:
        Path(args.svg).write_bytes(to_svg(result, SvgStyle()))
    runtime_ms = result.metrics.runtime.get("total", 0.0) * 1000.0
    print(
        f"subgraphs={len(result.subgraphs)} paths={len(result.paths)} "
        f"endpoints={len(result.endpoints)} runtime_ms={runtime_ms:.2f}"
    )
    return EXIT_OK


def _cmd_metrics(args: argparse.Namespace) -> int:
    result = _run_detection(args.input, args)
    row = _metric_row(result)
    if args.format == "csv":
        print(",".join(METRIC_COLUMNS))
        print(",".join(str(row[c]) for c in METRIC_COLUMNS))
    elif args.format == "json":
        print(json.dumps(row))
    else:
        width = max(len(c) for c in METRIC_COLUMNS)
        for column in METRIC_COLUMNS:
            print(f"{column:<{width}}  {row[column]}")
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    directory = Path(args.dir)
    if not directory.is_dir():
        print(f"not a directory: {directory}", file=sys.stderr)
        return EXIT_IO
    files = sorted(
        p for p in directory.iterdir()
        if p.is_file() and p.suffix.lower() in (".png", ".pgm", ".csv", ".txt")
    )
    print("file," + ",".join(METRIC_COLUMNS))
    rows: list[dict[str, object]] = []
    failures = 0
    for path in files:
        try:
            timings = []
            result = None
            for _ in range(max(1, args.repeat)):
                t0 = time.perf_counter()
                result = _run_detection(str(path), args)
                timings.append((time.perf_counter() - t0) * 1000.0)
            row = _metric_row(result)
            row["runtime_ms"] = round(statistics.median(timings), 3)
        except (SkeletraceError, OSError) as exc:
            print(f"warning: skipping {path.name}: {exc}", file=sys.stderr)
            failures += 1
            continue
        rows.append(row)
        print(f"{path.name}," + ",".join(str(row[c]) for c in METRIC_COLUMNS))
    if args.figures and rows:
        from .report import render_runtime_figures

        for figure in render_runtime_figures(rows, args.figures):
            print(f"wrote {figure}", file=sys.stderr)
    if files and failures == len(files):
        return EXIT_IO
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="skeletrace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    detect = sub.add_parser("detect", help="detect line paths, write JSON (and SVG)")
    detect.add_argument("input", help="PNG, PGM or CSV-grid image")
    detect.add_argument("--out", required=True, help="output JSON path")
    detect.add_argument("--svg", help="also render paths to this SVG file")
    _add_preprocess_flags(detect)
    detect.set_defaults(handler=_cmd_detect)

    metrics = sub.add_parser("metrics", help="print detection metrics")
    metrics.add_argument("input", help="PNG, PGM or CSV-grid image")
    metrics.add_argument(
        "--format", choices=("table", "csv", "json"), default="table"
    )
    _add_preprocess_flags(metrics)
    metrics.set_defaults(handler=_cmd_metrics)

    bench = sub.add_parser("bench", help="batch metrics over a directory, CSV on stdout")
    bench.add_argument("dir", help="directory of images")
    bench.add_argument("--repeat", type=int, default=1, metavar="K",
                       help="run K times per image, report median runtime")
    bench.add_argument("--figures", metavar="DIR",
                       help="also render runtime scatter figures into DIR")
    _add_preprocess_flags(bench)
    bench.set_defaults(handler=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "threshold", None) is not None and not 0 <= args.threshold <= 255:
            parser.error("--threshold must be within 0..255")
    except SystemExit as exc:  # argparse exits; keep main() callable
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (SkeletraceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
