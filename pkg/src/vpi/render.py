"""Deterministic top-down rasterization of scenes into RGB images.

Rasterization is pure numpy so two renders of equal scenes are byte-identical;
PNG encoding uses fixed settings for the same reason. The pixel mapping places
larger y nearer the image top, matching the "behind" convention.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np
from PIL import Image, ImageDraw, ImageFont

from .episode import EpisodeRecord
from .scene import Position, Scene

_COLOR_RGB = {
    "red": (214, 48, 49),
    "green": (0, 148, 50),
    "blue": (9, 132, 227),
    "yellow": (253, 203, 17),
    "orange": (243, 125, 36),
    "purple": (108, 92, 231),
    "white": (236, 240, 241),
    "brown": (139, 94, 60),
}
_BACKGROUND = (222, 216, 205)
_OUTLINE_SCALE = 0.55  # outline shade relative to fill


@dataclass(frozen=True)
class RenderOptions:
    width: int = 512
    height: int = 512
    background: tuple[int, int, int] = _BACKGROUND
    glyph_size: int = 40
    annotate: bool = False

    def __post_init__(self) -> None:
        if self.width < 64 or self.height < 64:
            raise ValueError("render size must be at least 64x64")


def scene_to_pixel(position: Position, width: int, height: int) -> tuple[int, int]:
    """Map a table position to (column, row); shared with the UI canvas."""
    x, y = position
    return round(x * (width - 1)), round((1.0 - y) * (height - 1))


def _star_vertices(cx: float, cy: float, outer: float) -> list[tuple[float, float]]:
    inner = 0.42 * outer
    points = []
    for i in range(10):
        radius = outer if i % 2 == 0 else inner
        angle = -np.pi / 2.0 + i * np.pi / 5.0
        points.append((cx + radius * np.cos(angle), cy + radius * np.sin(angle)))
    return points


def _polygon_mask(
    xs: np.ndarray, ys: np.ndarray, vertices: list[tuple[float, float]]
) -> np.ndarray:
    """Even-odd-rule point-in-polygon test over the pixel grid."""
    inside = np.zeros(xs.shape, dtype=bool)
    count = len(vertices)
    for i in range(count):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % count]
        if y1 == y2:
            continue
        crosses = ((ys >= min(y1, y2)) & (ys < max(y1, y2)))
        with np.errstate(divide="ignore", invalid="ignore"):
            x_at = x1 + (ys - y1) * (x2 - x1) / (y2 - y1)
        inside ^= crosses & (xs < x_at)
    return inside


def _glyph_mask(
    shape: str, xs: np.ndarray, ys: np.ndarray, cx: int, cy: int, size: int
) -> tuple[np.ndarray, np.ndarray]:
    """Fill mask plus an accent mask (used for the cylinder's inner ring)."""
    half = size / 2.0
    dx = xs - cx
    dy = ys - cy
    accent = np.zeros(xs.shape, dtype=bool)
    if shape == "cube":
        fill = (np.abs(dx) <= half) & (np.abs(dy) <= half)
    elif shape == "sphere":
        fill = dx * dx + dy * dy <= half * half
    elif shape == "cylinder":
        rr = dx * dx + dy * dy
        fill = rr <= half * half
        accent = (rr >= (0.45 * half) ** 2) & (rr <= (0.62 * half) ** 2)
    elif shape == "triangle":
        fill = _polygon_mask(
            xs, ys, [(cx, cy - half), (cx - half, cy + half), (cx + half, cy + half)]
        )
    elif shape == "star":
        fill = _polygon_mask(xs, ys, _star_vertices(cx, cy, half))
    elif shape == "box":
        hw, hh, corner = half, 0.72 * half, 0.35 * half
        core = ((np.abs(dx) <= hw - corner) & (np.abs(dy) <= hh)) | (
            (np.abs(dx) <= hw) & (np.abs(dy) <= hh - corner)
        )
        cdx = np.abs(dx) - (hw - corner)
        cdy = np.abs(dy) - (hh - corner)
        corners = (cdx > 0) & (cdy > 0) & (cdx * cdx + cdy * cdy <= corner * corner)
        fill = core | corners
    else:
        fill = dx * dx + dy * dy <= half * half
    return fill, accent


def render_scene(scene: Scene, options: RenderOptions = RenderOptions()) -> np.ndarray:
    """Rasterize a scene to an (H, W, 3) uint8 array.

    Objects draw in ascending id order, farther rows first never matter since
    glyphs of a valid scene barely overlap; determinism is the contract.
    """
    height, width = options.height, options.width
    image = np.empty((height, width, 3), dtype=np.uint8)
    image[:, :] = options.background

    ys, xs = np.mgrid[0:height, 0:width]
    for obj in scene.objects:
        cx, cy = scene_to_pixel(obj.position, width, height)
        fill_rgb = np.array(_COLOR_RGB.get(obj.color, (120, 120, 120)), dtype=np.uint8)
        outline_rgb = (fill_rgb.astype(np.float64) * _OUTLINE_SCALE).astype(np.uint8)
        fill, accent = _glyph_mask(obj.shape, xs, ys, cx, cy, options.glyph_size)
        image[fill] = fill_rgb
        image[fill & accent] = outline_rgb

    if options.annotate:
        pil = Image.fromarray(image)
        draw = ImageDraw.Draw(pil)
        font = ImageFont.load_default()
        offset = options.glyph_size // 2 + 2
        for obj in scene.objects:
            cx, cy = scene_to_pixel(obj.position, width, height)
            draw.text((cx, cy + offset), obj.name, fill=(20, 20, 20), font=font, anchor="ma")
        image = np.asarray(pil)

    return image


def encode_png(image: np.ndarray) -> bytes:
    """Encode a raster as PNG bytes with fixed, deterministic settings."""
    buffer = io.BytesIO()
    Image.fromarray(image).save(buffer, format="PNG", compress_level=6)
    return buffer.getvalue()


def decode_png(data: bytes) -> np.ndarray:
    """Inverse of encode_png (lossless)."""
    with Image.open(io.BytesIO(data)) as pil:
        return np.asarray(pil.convert("RGB"))


def render_scene_png(scene: Scene, options: RenderOptions = RenderOptions()) -> bytes:
    return encode_png(render_scene(scene, options))


def render_episode_images(
    episode: EpisodeRecord, options: RenderOptions = RenderOptions()
) -> list[bytes]:
    """PNG bytes for every scene of an episode, in order."""
    return [render_scene_png(scene, options) for scene in episode.scenes]
