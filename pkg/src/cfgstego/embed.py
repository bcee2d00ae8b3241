"""Random carrier-pixel selection and 3-LSB chunk substitution.

A 9-bit chunk c8..c0 is spread over one pixel as::

    R[2:0] = c8 c7 c6    G[2:0] = c5 c4 c3    B[2:0] = c2 c1 c0

so no channel moves by more than 7.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .bmp import Image, Pixel
from .errors import CapacityExceeded, OutOfBounds, PlanMismatch
from .payload import CHUNK_BITS, HEADER_BITS, ChunkStream

LSB_PER_CHANNEL = 3
CHANNEL_MASK = (1 << LSB_PER_CHANNEL) - 1
BITS_PER_PIXEL = 24
RAW_RATIO = CHUNK_BITS / BITS_PER_PIXEL


class Coordinate(NamedTuple):
    x: int
    y: int


PixelPlan = list[Coordinate]


def substitute_lsb(value: int, bits: int, n: int) -> int:
    """Replace the ``n`` low bits of an 8-bit ``value`` with ``bits``."""
    mask = (1 << n) - 1
    return (value & ~mask & 0xFF) | (bits & mask)


def read_lsb(value: int, n: int) -> int:
    return value & ((1 << n) - 1)


def embed_chunk(p: Pixel, chunk: int) -> Pixel:
    if not 0 <= chunk < 1 << CHUNK_BITS:
        raise ValueError(f"chunk {chunk} is not a 9-bit value")
    return Pixel(
        substitute_lsb(p[0], chunk >> 6, LSB_PER_CHANNEL),
        substitute_lsb(p[1], chunk >> 3, LSB_PER_CHANNEL),
        substitute_lsb(p[2], chunk, LSB_PER_CHANNEL),
    )


def extract_chunk(p: Pixel) -> int:
    r, g, b = (read_lsb(int(c), LSB_PER_CHANNEL) for c in p)
    return (r << 6) | (g << 3) | b


def select_pixels(width: int, height: int, count: int,
                  seed: int | np.random.Generator | None = None) -> PixelPlan:
    """Draw ``count`` distinct pixels uniformly without replacement.

    Partial Fisher-Yates over the flat index space; swapped slots live in a
    dict so memory is O(count) rather than O(width * height). Randomness
    comes from numpy's PCG64 generator.
    """
    total = width * height
    if count > total:
        raise CapacityExceeded(f"{count} pixels requested from a {width}x{height} image")
    if count < 0:
        raise ValueError("count must be non-negative")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    # draw j_i uniform in [i, total) for every step up front
    picks = rng.integers(np.arange(count), total) if count else ()
    swapped: dict[int, int] = {}
    plan: PixelPlan = []
    for i, j in enumerate(picks):
        j = int(j)
        at_j = swapped.get(j, j)
        swapped[j] = swapped.get(i, i)
        plan.append(Coordinate(at_j % width, at_j // width))
    return plan


def _check_plan(img: Image, plan: Sequence[Coordinate]) -> np.ndarray:
    coords = np.asarray(plan, dtype=np.int64).reshape(-1, 2)
    bad = ((coords < 0) | (coords >= (img.width, img.height))).any(axis=1)
    if bad.any():
        x, y = coords[np.argmax(bad)]
        raise OutOfBounds(int(x), int(y), img.width, img.height)
    return coords


def embed_all(img: Image, plan: Sequence[Coordinate], chunks: ChunkStream) -> Image:
    """Return a copy of ``img`` with ``chunks[i]`` hidden at ``plan[i]``."""
    if len(plan) != len(chunks):
        raise PlanMismatch(f"{len(plan)} pixels for {len(chunks)} chunks")
    coords = _check_plan(img, plan)
    out = img.copy()
    if not len(coords):
        return out
    values = np.asarray(chunks.chunks, dtype=np.int64)
    if values.min() < 0 or values.max() >= 1 << CHUNK_BITS:
        raise ValueError("chunk values must be 9-bit")
    lows = np.stack([values >> 6, values >> 3, values], axis=1) & CHANNEL_MASK
    xs, ys = coords[:, 0], coords[:, 1]
    px = out.pixels[ys, xs]
    out.pixels[ys, xs] = (px & ~np.uint8(CHANNEL_MASK)) | lows.astype(np.uint8)
    return out


def extract_all(img: Image, plan: Sequence[Coordinate]) -> ChunkStream:
    coords = _check_plan(img, plan)
    if not len(coords):
        return ChunkStream(())
    lows = (img.pixels[coords[:, 1], coords[:, 0]] & CHANNEL_MASK).astype(np.uint16)
    values = (lows[:, 0] << 6) | (lows[:, 1] << 3) | lows[:, 2]
    return ChunkStream(tuple(int(v) for v in values))


def capacity_bits(width: int, height: int) -> int:
    return width * height * CHUNK_BITS


def max_payload_bytes(width: int, height: int) -> int:
    return max(0, (capacity_bits(width, height) - HEADER_BITS) // 8)
