"""Minimal GIF89a encoder: global palette, per-frame delay, loop extension.

Hand-rolled on purpose: the common imaging library's GIF writer merges
identical consecutive frames into one longer-delayed frame, which breaks
the contract that the encoded frame count equals the input frame count.
The encoder here writes exactly one image block per input frame.
"""

from __future__ import annotations

import struct

import numpy as np

__all__ = ["encode_gif", "quantize"]

_MAX_COLORS = 256


def quantize(frames: list[np.ndarray]) -> tuple[np.ndarray, list[np.ndarray]]:
    """Build one global palette and per-frame index arrays.

    Frames are (H, W, 3) uint8 arrays sharing one shape. When the frames
    use at most 256 distinct colors the palette is exact; otherwise a
    weighted median cut reduces them to 256 entries. Deterministic for
    fixed input.
    """
    stacked = np.concatenate([frame.reshape(-1, 3).astype(np.uint32) for frame in frames])
    codes = (stacked[:, 0] << 16) | (stacked[:, 1] << 8) | stacked[:, 2]
    unique_codes, counts = np.unique(codes, return_counts=True)
    unique_colors = np.stack(
        [(unique_codes >> 16) & 0xFF, (unique_codes >> 8) & 0xFF, unique_codes & 0xFF],
        axis=1,
    ).astype(np.int64)

    if len(unique_codes) <= _MAX_COLORS:
        palette = unique_colors.astype(np.uint8)
        color_to_index = np.arange(len(unique_codes))
    else:
        color_to_index, palette = _median_cut(unique_colors, counts)

    index_frames = []
    for frame in frames:
        flat = frame.reshape(-1, 3).astype(np.uint32)
        frame_codes = (flat[:, 0] << 16) | (flat[:, 1] << 8) | flat[:, 2]
        positions = np.searchsorted(unique_codes, frame_codes)
        index_frames.append(
            color_to_index[positions].astype(np.uint8).reshape(frame.shape[:2])
        )
    return palette, index_frames


def _median_cut(
    colors: np.ndarray, weights: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    boxes = [np.arange(len(colors))]
    while len(boxes) < _MAX_COLORS:
        # widest spread over any channel decides which box splits next
        ranges = [
            (np.ptp(colors[box], axis=0).max() if len(box) > 1 else -1)
            for box in boxes
        ]
        pick = int(np.argmax(ranges))
        if ranges[pick] <= 0:
            break
        box = boxes[pick]
        channel = int(np.ptp(colors[box], axis=0).argmax())
        order = box[np.argsort(colors[box, channel], kind="stable")]
        cumulative = np.cumsum(weights[order])
        half = cumulative[-1] / 2
        split_at = int(np.searchsorted(cumulative, half)) + 1
        split_at = min(max(split_at, 1), len(order) - 1)
        boxes[pick : pick + 1] = [order[:split_at], order[split_at:]]
    palette = np.zeros((len(boxes), 3), dtype=np.uint8)
    color_to_index = np.zeros(len(colors), dtype=np.int64)
    for slot, box in enumerate(boxes):
        weight = weights[box].astype(np.float64)
        palette[slot] = np.round(
            (colors[box] * weight[:, None]).sum(axis=0) / weight.sum()
        ).astype(np.uint8)
        color_to_index[box] = slot
    return color_to_index, palette


class _BitPacker:
    """LSB-first bit stream, the packing order GIF's LZW variant uses."""

    def __init__(self):
        self.data = bytearray()
        self._accumulator = 0
        self._bits = 0

    def put(self, code: int, width: int):
        self._accumulator |= code << self._bits
        self._bits += width
        while self._bits >= 8:
            self.data.append(self._accumulator & 0xFF)
            self._accumulator >>= 8
            self._bits -= 8

    def finish(self) -> bytes:
        if self._bits:
            self.data.append(self._accumulator & 0xFF)
        return bytes(self.data)


def _lzw_encode(indices: bytes, min_code_size: int) -> bytes:
    clear = 1 << min_code_size
    end = clear + 1
    packer = _BitPacker()

    def fresh_table() -> dict[bytes, int]:
        return {bytes([value]): value for value in range(clear)}

    table = fresh_table()
    next_code = end + 1
    width = min_code_size + 1
    packer.put(clear, width)
    run = b""
    for value in indices:
        candidate = run + bytes([value])
        if candidate in table:
            run = candidate
            continue
        packer.put(table[run], width)
        table[candidate] = next_code
        next_code += 1
        if next_code - 1 > (1 << width) - 1:
            if width < 12:
                width += 1
            else:
                packer.put(clear, width)
                table = fresh_table()
                next_code = end + 1
                width = min_code_size + 1
        run = bytes([value])
    if run:
        packer.put(table[run], width)
    packer.put(end, width)
    return packer.finish()


def _sub_blocks(data: bytes) -> bytes:
    out = bytearray()
    for start in range(0, len(data), 255):
        chunk = data[start : start + 255]
        out.append(len(chunk))
        out.extend(chunk)
    out.append(0)
    return bytes(out)


def encode_gif(
    frames: list[np.ndarray],
    delay_cs: int,
    loop: bool = True,
) -> bytes:
    """Encode (H, W, 3) uint8 frames into one animated GIF.

    All frames must share one shape. ``delay_cs`` applies uniformly, in
    centiseconds. ``loop`` adds the Netscape extension with an infinite
    repeat count.
    """
    if not frames:
        raise ValueError("at least one frame required")
    height, width = frames[0].shape[:2]
    palette, index_frames = quantize(frames)

    color_bits = max(2, int(len(palette) - 1).bit_length())
    table_size = 1 << color_bits

    out = bytearray()
    out.extend(b"GIF89a")
    packed = 0x80 | 0x70 | (color_bits - 1)
    out.extend(struct.pack("<HHBBB", width, height, packed, 0, 0))
    padded = np.zeros((table_size, 3), dtype=np.uint8)
    padded[: len(palette)] = palette
    out.extend(padded.tobytes())

    if loop:
        out.extend(b"\x21\xff\x0bNETSCAPE2.0\x03\x01\x00\x00\x00")

    for indices in index_frames:
        out.extend(b"\x21\xf9\x04")
        out.append(0x04)  # disposal method 1, no transparency
        out.extend(struct.pack("<H", delay_cs))
        out.extend(b"\x00\x00")
        out.extend(b"\x2c")
        out.extend(struct.pack("<HHHHB", 0, 0, width, height, 0))
        out.append(color_bits)
        out.extend(_sub_blocks(_lzw_encode(indices.tobytes(), color_bits)))
    out.append(0x3B)
    return bytes(out)
