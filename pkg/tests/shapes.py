"""Deterministic fixture images for the acceptance suite."""

from __future__ import annotations

import numpy as np
from PIL import Image, ImageDraw, ImageFilter, ImageFont


def _canvas(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.uint8)


def bar_h(thickness: int, length: int = 20) -> np.ndarray:
    img = _canvas(thickness + 4, length + 4)
    img[2 : 2 + thickness, 2 : 2 + length] = 1
    return img


def bar_v(thickness: int, length: int = 20) -> np.ndarray:
    return bar_h(thickness, length).T.copy()


def ell(thickness: int, arm: int = 16) -> np.ndarray:
    img = _canvas(arm + 4, arm + 4)
    img[2 : 2 + arm, 2 : 2 + thickness] = 1
    img[2 + arm - thickness : 2 + arm, 2 : 2 + arm] = 1
    return img


def tee(thickness: int, arm: int = 16) -> np.ndarray:
    img = _canvas(arm + 4, arm + 5)
    img[2 : 2 + thickness, 2 : 2 + arm] = 1
    mid = 2 + arm // 2 - thickness // 2
    img[2 : 2 + arm, mid : mid + thickness] = 1
    return img


def plus(thickness: int, arm: int = 16) -> np.ndarray:
    img = _canvas(arm + 4, arm + 4)
    mid = 2 + arm // 2 - thickness // 2
    img[mid : mid + thickness, 2 : 2 + arm] = 1
    img[2 : 2 + arm, mid : mid + thickness] = 1
    return img


def ring(thickness: int, outer: int = 12) -> np.ndarray:
    size = 2 * outer + 5
    yy, xx = np.mgrid[0:size, 0:size]
    dist = np.hypot(yy - size // 2, xx - size // 2)
    return ((dist <= outer) & (dist > outer - thickness)).astype(np.uint8)


def frame(thickness: int, side: int = 18) -> np.ndarray:
    img = _canvas(side + 4, side + 4)
    img[2 : 2 + side, 2 : 2 + side] = 1
    img[2 + thickness : 2 + side - thickness, 2 + thickness : 2 + side - thickness] = 0
    return img


def diag(thickness: int, length: int = 18) -> np.ndarray:
    size = length + 6
    img = _canvas(size, size)
    for i in range(3, 3 + length):
        img[i, i : min(size, i + thickness)] = 1
    return img


def hand_checkable_shapes() -> list[tuple[str, np.ndarray]]:
    """25 shapes with 3 to 5 px stroke thickness."""
    shapes: list[tuple[str, np.ndarray]] = []
    for t in (3, 4, 5):
        shapes.append((f"bar_h_{t}", bar_h(t)))
        shapes.append((f"bar_v_{t}", bar_v(t)))
        shapes.append((f"ell_{t}", ell(t)))
        shapes.append((f"tee_{t}", tee(t)))
        shapes.append((f"plus_{t}", plus(t)))
        shapes.append((f"ring_{t}", ring(t)))
        shapes.append((f"frame_{t}", frame(t)))
        shapes.append((f"diag_{t}", diag(t)))
    shapes.append(("square_solid", np.pad(np.ones((10, 10), dtype=np.uint8), 3)))
    return shapes


def glyph_28() -> np.ndarray:
    """28x28 grayscale glyph: a closed-top figure with stem and crossbar."""
    img = Image.new("L", (28, 28), 255)
    draw = ImageDraw.Draw(img)
    draw.line((14, 3, 5, 14), fill=0, width=2)
    draw.line((5, 14, 20, 14), fill=0, width=2)
    draw.line((14, 3, 14, 24), fill=0, width=2)
    return np.asarray(img)


def glyph_64() -> np.ndarray:
    """64x64 grayscale glyph: loop plus three strokes."""
    img = Image.new("L", (64, 64), 255)
    draw = ImageDraw.Draw(img)
    draw.ellipse((18, 8, 46, 30), outline=0, width=3)
    draw.line((32, 30, 32, 56), fill=0, width=3)
    draw.line((12, 44, 52, 44), fill=0, width=3)
    draw.line((12, 56, 52, 56), fill=0, width=3)
    return np.asarray(img)


def dense_contours_512() -> np.ndarray:
    """512x512 grayscale contour map: many nested and open level lines."""
    yy, xx = np.mgrid[0:512, 0:512].astype(np.float64)
    z = (
        np.sin(xx / 23.0)
        + np.sin(yy / 29.0)
        + np.sin((xx + yy) / 41.0)
        + np.sin(np.hypot(xx - 256.0, yy - 256.0) / 31.0)
    )
    fg = np.zeros((512, 512), dtype=bool)
    for level in np.arange(-3.0, 3.01, 0.5):
        fg |= np.abs(z - level) < 0.045
    return np.where(fg, 0, 255).astype(np.uint8)


def letter_m(size_px: int = 64) -> np.ndarray:
    """Rendered lowercase m, dark on white, lightly smoothed like a scan."""
    from matplotlib import font_manager

    font_path = font_manager.findfont("DejaVu Sans Mono")
    font = ImageFont.truetype(font_path, size_px)
    img = Image.new("L", (int(size_px * 2.2), int(size_px * 2.2)), 255)
    ImageDraw.Draw(img).text((size_px // 4, size_px // 4), "m", fill=0, font=font)
    img = img.filter(ImageFilter.GaussianBlur(2))
    return np.asarray(img)
