"""Image loading, grayscale conversion and binarization.

Supported input formats:

* PNG (8-bit grayscale or RGB/RGBA; color is reduced to luma with the
  standard 0.299 R + 0.587 G + 0.114 B rounding)
* PGM, both binary ``P5`` and ASCII ``P2``, maxval <= 255
* CSV grid: comma-separated integers, one image row per line. A single
  line whose value count is a perfect square is treated as a flattened
  square raster (the layout MNIST-style dumps use).

Binarization is Otsu by default; a fixed threshold is available for
callers that know their data. Polarity selects which side of the
threshold is foreground: ``foreground-bright`` (>= t), ``foreground-dark``
(< t), or ``auto`` which picks the minority class, since line features
occupy few pixels.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import DecodeError, DegenerateHistogramError, FormatError

__all__ = [
    "GrayImage",
    "BinaryImage",
    "load_gray",
    "binarize_otsu",
    "binarize_fixed",
    "otsu_threshold",
    "invert",
]

POLARITIES = ("auto", "foreground-bright", "foreground-dark")


def _frozen_array(data, dtype) -> np.ndarray:
    arr = np.asarray(data)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2D pixel grid, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"image must be at least 1x1, got shape {arr.shape}")
    arr = arr.astype(dtype, copy=True)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class GrayImage:
    """Dense 2D grid of 8-bit intensities, row-major."""

    pixels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.pixels)
        if arr.size and (arr.min() < 0 or arr.max() > 255):
            raise ValueError("intensities must lie in [0, 255]")
        object.__setattr__(self, "pixels", _frozen_array(arr, np.uint8))

    @property
    def rows(self) -> int:
        return self.pixels.shape[0]

    @property
    def cols(self) -> int:
        return self.pixels.shape[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)


@dataclass(frozen=True, eq=False)
class BinaryImage:
    """Dense 2D grid of 0/1 foreground flags; also carries skeletons."""

    pixels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.pixels)
        if arr.dtype != np.bool_ and arr.size and not np.isin(arr, (0, 1)).all():
            raise ValueError("binary image values must be exactly 0 or 1")
        object.__setattr__(self, "pixels", _frozen_array(arr, np.uint8))

    @property
    def rows(self) -> int:
        return self.pixels.shape[0]

    @property
    def cols(self) -> int:
        return self.pixels.shape[1]

    def foreground_count(self) -> int:
        return int(self.pixels.sum())

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryImage):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)


def _sniff_format(data: bytes, name: str | None) -> str:
    if name:
        suffix = Path(name).suffix.lower()
        if suffix == ".png":
            return "png"
        if suffix == ".pgm":
            return "pgm"
        if suffix in (".csv", ".txt"):
            return "csv"
    if data.startswith(b"\x89PNG\r\n\x1a\n"):
        return "png"
    if data[:2] in (b"P5", b"P2"):
        return "pgm"
    head = data[:4096]
    if head and all(c in b"0123456789,.-+ \t\r\n" for c in head):
        return "csv"
    raise FormatError(f"cannot determine image format of {name or 'stream'}")


def load_gray(source, fmt: str | None = None) -> GrayImage:
    """Load a grayscale image from a path, byte string or binary stream.

    Args:
        source: file path, ``bytes``, or a binary file object.
        fmt: one of ``png``, ``pgm``, ``csv``; inferred from the file
            extension or content when omitted.

    Raises:
        FormatError: unknown or unsupported format.
        DecodeError: the bytes are malformed for the declared format.
    """
    name = None
    if isinstance(source, (str, Path)):
        name = str(source)
        data = Path(source).read_bytes()
    elif isinstance(source, bytes):
        data = source
    else:
        data = source.read()
        name = getattr(source, "name", None)

    fmt = (fmt or _sniff_format(data, name)).lower()
    if fmt == "png":
        return _decode_png(data)
    if fmt == "pgm":
        return _decode_pgm(data)
    if fmt == "csv":
        return _decode_csv(data)
    raise FormatError(f"unsupported format {fmt!r} (expected png, pgm or csv)")


def _decode_png(data: bytes) -> GrayImage:
    try:
        with Image.open(io.BytesIO(data)) as img:
            img.load()
            if img.mode in ("L", "1", "I;16", "I"):
                arr = np.asarray(img.convert("L"))
            else:
                rgb = np.asarray(img.convert("RGB"), dtype=np.float64)
                luma = 0.299 * rgb[..., 0] + 0.587 * rgb[..., 1] + 0.114 * rgb[..., 2]
                arr = np.rint(luma).astype(np.uint8)
    except UnidentifiedImageError as exc:
        raise DecodeError(f"not a decodable PNG: {exc}", 0) from exc
    except OSError as exc:
        # Pillow raises OSError on truncated image data mid-stream.
        raise DecodeError(f"truncated or corrupt PNG: {exc}", len(data)) from exc
    return GrayImage(arr)


def _decode_pgm(data: bytes) -> GrayImage:
    pos = 0

    def skip_ws() -> None:
        nonlocal pos
        while pos < len(data):
            if data[pos : pos + 1].isspace():
                pos += 1
            elif data[pos : pos + 1] == b"#":
                while pos < len(data) and data[pos : pos + 1] != b"\n":
                    pos += 1
            else:
                return

    def read_token() -> bytes:
        nonlocal pos
        skip_ws()
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        if start == pos:
            raise DecodeError("unexpected end of PGM header", start)
        return data[start:pos]

    magic = read_token()
    if magic not in (b"P5", b"P2"):
        raise DecodeError(f"bad PGM magic {magic!r}", 0)

    def read_int(what: str) -> int:
        start = pos
        tok = read_token()
        try:
            return int(tok)
        except ValueError:
            raise DecodeError(f"bad PGM {what} {tok!r}", start) from None

    cols = read_int("width")
    rows = read_int("height")
    maxval = read_int("maxval")
    if cols < 1 or rows < 1:
        raise DecodeError(f"bad PGM dimensions {cols}x{rows}", 0)
    if not 0 < maxval <= 255:
        raise FormatError(f"only 8-bit PGM supported, maxval={maxval}")

    if magic == b"P5":
        pos += 1  # single whitespace byte after maxval
        need = rows * cols
        raster = data[pos : pos + need]
        if len(raster) < need:
            raise DecodeError(
                f"PGM raster truncated, need {need} bytes, have {len(raster)}",
                pos + len(raster),
            )
        arr = np.frombuffer(raster, dtype=np.uint8, count=need).reshape(rows, cols)
    else:
        values = []
        for _ in range(rows * cols):
            values.append(read_int("sample"))
        arr = np.array(values, dtype=np.uint16).reshape(rows, cols)
    if arr.max(initial=0) > maxval:
        raise DecodeError(f"PGM sample exceeds maxval {maxval}", pos)
    return GrayImage(arr.astype(np.uint8))


def _decode_csv(data: bytes) -> GrayImage:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DecodeError("CSV grid is not valid UTF-8", exc.start) from exc
    rows: list[list[int]] = []
    offset = 0
    for line in text.splitlines(keepends=True):
        stripped = line.strip()
        if stripped:
            values = []
            for cell in stripped.split(","):
                cell = cell.strip()
                try:
                    value = int(cell)
                except ValueError:
                    raise DecodeError(f"bad CSV value {cell!r}", offset) from None
                if not 0 <= value <= 255:
                    raise DecodeError(f"CSV value {value} outside [0, 255]", offset)
                values.append(value)
            rows.append(values)
        offset += len(line.encode("utf-8"))
    if not rows:
        raise DecodeError("CSV grid is empty", 0)
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise DecodeError(f"ragged CSV grid, row widths {sorted(widths)}", 0)
    arr = np.array(rows, dtype=np.uint8)
    if arr.shape[0] == 1 and arr.shape[1] >= 4:
        # One flat line: MNIST-style dumps store a square image per line.
        side = math.isqrt(arr.shape[1])
        if side * side == arr.shape[1]:
            arr = arr.reshape(side, side)
    return GrayImage(arr)


def otsu_threshold(img: GrayImage) -> int:
    """Threshold maximizing between-class variance; smallest t wins ties.

    Classes are split as below-t versus at-or-above-t, matching
    :func:`binarize_fixed` semantics.
    """
    hist = np.bincount(img.pixels.ravel(), minlength=256).astype(np.float64)
    total = hist.sum()
    cum_n = np.cumsum(hist)
    cum_sum = np.cumsum(hist * np.arange(256))
    grand = cum_sum[-1]
    best_t, best_var = 0, -1.0
    for t in range(256):
        n0 = cum_n[t - 1] if t > 0 else 0.0
        n1 = total - n0
        if n0 == 0 or n1 == 0:
            var = 0.0
        else:
            s0 = cum_sum[t - 1] if t > 0 else 0.0
            mu0 = s0 / n0
            mu1 = (grand - s0) / n1
            var = n0 * n1 * (mu0 - mu1) ** 2
        if var > best_var:
            best_var, best_t = var, t
    return best_t


def binarize_fixed(img: GrayImage, t: int, polarity: str = "foreground-bright") -> BinaryImage:
    """Threshold at t: bright keeps intensity >= t, dark keeps intensity < t.

    ``auto`` picks whichever class has fewer pixels (bright on a tie).
    """
    if not 0 <= t <= 255:
        raise ValueError(f"threshold {t} outside [0, 255]")
    if polarity not in POLARITIES:
        raise ValueError(f"polarity must be one of {POLARITIES}, got {polarity!r}")
    bright = img.pixels >= t
    if polarity == "foreground-dark":
        return BinaryImage(~bright)
    if polarity == "auto" and bright.sum() > bright.size - bright.sum():
        return BinaryImage(~bright)
    return BinaryImage(bright)


def binarize_otsu(img: GrayImage, polarity: str = "auto") -> BinaryImage:
    """Otsu-threshold the image; see module docstring for polarity rules."""
    if polarity not in POLARITIES:
        raise ValueError(f"polarity must be one of {POLARITIES}, got {polarity!r}")
    if polarity == "auto" and img.pixels.min() == img.pixels.max():
        raise DegenerateHistogramError(
            "constant image has no class separation; pass an explicit polarity "
            "or a fixed threshold"
        )
    return binarize_fixed(img, otsu_threshold(img), polarity)


def invert(img: BinaryImage) -> BinaryImage:
    """Flip every foreground flag; an involution."""
    return BinaryImage(1 - img.pixels)
