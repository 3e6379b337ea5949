"""Frame ordering and GIF assembly for graph animations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .backend import write_atomic
from .errors import FrameError, OptionError, SortError
from .gifenc import encode_gif
from .terms import Function, Integer, Term, Tuple, print_term

__all__ = ["SORT_MODES", "AnimationSpec", "order_frames", "assemble_gif"]

SORT_MODES = ("none", "asc-str", "desc-str", "asc-int", "desc-int")


@dataclass
class AnimationSpec:
    fps: float | Fraction = 1
    sort_mode: str = "none"
    loop: bool = True

    def delay_centiseconds(self) -> int:
        if self.fps <= 0:
            raise OptionError(f"fps must be positive, got {self.fps}")
        return max(1, round(100 / self.fps))


def _collect_integers(term: Term, found: list[int]):
    if isinstance(term, Integer):
        found.append(term.value)
    elif isinstance(term, (Function, Tuple)):
        for arg in term.args:
            _collect_integers(arg, found)


def _integer_key(graph_id: Term) -> int:
    found: list[int] = []
    _collect_integers(graph_id, found)
    if len(found) != 1:
        raise SortError(
            f"graph id {print_term(graph_id)} must contain exactly one integer "
            f"for integer sorting, found {len(found)}"
        )
    return found[0]


def order_frames(graph_ids: list[Term], mode: str) -> list[Term]:
    """Order graph identifiers for animation.

    ``none`` keeps fact-base order; ``asc-str``/``desc-str`` sort by the
    printed identifier; ``asc-int``/``desc-int`` sort by the single
    integer embedded in each identifier.
    """
    if mode not in SORT_MODES:
        raise OptionError(
            f"unknown sort mode '{mode}'; expected one of {', '.join(SORT_MODES)}"
        )
    if mode == "none":
        return list(graph_ids)
    if mode in ("asc-str", "desc-str"):
        ordered = sorted(graph_ids, key=print_term)
    else:
        ordered = sorted(graph_ids, key=_integer_key)
    if mode.startswith("desc"):
        ordered.reverse()
    return ordered


def _load_frame(path: Path) -> Image.Image:
    try:
        with Image.open(path) as image:
            return image.convert("RGB")
    except FileNotFoundError as exc:
        raise FrameError(f"frame not found: {path}") from exc
    except UnidentifiedImageError as exc:
        raise FrameError(f"frame is not a decodable image: {path}") from exc


def assemble_gif(
    frames: list[str | Path], spec: AnimationSpec, out: str | Path
) -> Path:
    """Assemble raster frames into one animated GIF at ``out``.

    Frames of differing sizes are letterboxed centered on a white canvas
    of the maximum width and height. The encoded file holds exactly one
    image per input frame, each with the same delay derived from fps.
    """
    if not frames:
        raise FrameError("no frames to assemble")
    delay = spec.delay_centiseconds()
    images = [_load_frame(Path(path)) for path in frames]
    canvas_w = max(image.width for image in images)
    canvas_h = max(image.height for image in images)
    arrays: list[np.ndarray] = []
    for image in images:
        if image.size != (canvas_w, canvas_h):
            canvas = Image.new("RGB", (canvas_w, canvas_h), (255, 255, 255))
            canvas.paste(
                image, ((canvas_w - image.width) // 2, (canvas_h - image.height) // 2)
            )
            image = canvas
        arrays.append(np.asarray(image, dtype=np.uint8))
    data = encode_gif(arrays, delay, loop=spec.loop)
    return write_atomic(data, Path(out))
