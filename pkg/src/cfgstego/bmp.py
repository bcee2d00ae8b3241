"""Uncompressed 24-bit BMP reading and writing.

Pixels are exposed top-down with (0, 0) at the top-left corner, x = column
and y = row, whatever the row order on disk. An image loaded from a file
keeps the original bytes; saving writes the pixel grid back into a copy of
them, so headers, row padding and trailing bytes survive unchanged.
"""

from __future__ import annotations

import struct
from typing import NamedTuple

import numpy as np

from .errors import (
    CorruptFile,
    NotBmp,
    OutOfBounds,
    UnsupportedCompression,
    UnsupportedDepth,
)

FILE_HEADER_SIZE = 14
INFO_HEADER_SIZE = 40


class Pixel(NamedTuple):
    r: int
    g: int
    b: int


def row_stride(width: int) -> int:
    return (3 * width + 3) & ~3


class Image:
    """A width x height grid of RGB pixels backed by a numpy array."""

    def __init__(self, pixels: np.ndarray, *, _source: bytes | None = None,
                 _offset: int = 0, _bottom_up: bool = True):
        pixels = np.asarray(pixels)
        if pixels.ndim != 3 or pixels.shape[2] != 3:
            raise ValueError(f"expected an (height, width, 3) array, got {pixels.shape}")
        if pixels.shape[0] < 1 or pixels.shape[1] < 1:
            raise ValueError("image must be at least 1x1")
        self.pixels = np.array(pixels, dtype=np.uint8, order="C")
        self._source = _source
        self._offset = _offset
        self._bottom_up = _bottom_up

    @classmethod
    def blank(cls, width: int, height: int, color=(0, 0, 0)) -> "Image":
        px = np.empty((height, width, 3), dtype=np.uint8)
        px[...] = color
        return cls(px)

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def preserved_header(self) -> bytes:
        if self._source is None:
            return _fresh_header(self.width, self.height)
        return self._source[:self._offset]

    def copy(self) -> "Image":
        return Image(self.pixels.copy(), _source=self._source,
                     _offset=self._offset, _bottom_up=self._bottom_up)

    def in_bounds(self, x: int, y: int) -> bool:
        return 0 <= x < self.width and 0 <= y < self.height

    def __eq__(self, other) -> bool:
        if not isinstance(other, Image):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)

    def __repr__(self) -> str:
        return f"Image({self.width}x{self.height})"


def _check(img: Image, x: int, y: int) -> None:
    if not img.in_bounds(x, y):
        raise OutOfBounds(x, y, img.width, img.height)


def get_pixel(img: Image, x: int, y: int) -> Pixel:
    _check(img, x, y)
    r, g, b = img.pixels[y, x]
    return Pixel(int(r), int(g), int(b))


def set_pixel(img: Image, x: int, y: int, p) -> Image:
    """Write ``p`` at (x, y) in place and return the image."""
    _check(img, x, y)
    img.pixels[y, x] = tuple(p)
    return img


def load(data: bytes) -> Image:
    data = bytes(data)
    if data[:2] != b"BM":
        raise NotBmp("file does not start with 'BM'")
    if len(data) < FILE_HEADER_SIZE + INFO_HEADER_SIZE:
        raise CorruptFile(f"{len(data)} bytes is too short for a BMP header")

    (offset,) = struct.unpack_from("<I", data, 10)
    dib_size, width, height, planes, bpp, compression = struct.unpack_from(
        "<IiiHHI", data, FILE_HEADER_SIZE
    )
    if dib_size < INFO_HEADER_SIZE:
        raise CorruptFile(f"info header of {dib_size} bytes; need at least 40")
    if bpp != 24:
        raise UnsupportedDepth(f"{bpp} bits per pixel; only 24 is supported")
    if compression != 0:
        raise UnsupportedCompression(f"compression type {compression}; only 0 (none) is supported")
    if width <= 0 or height == 0:
        raise CorruptFile(f"bad dimensions {width}x{height}")

    bottom_up = height > 0
    height = abs(height)
    stride = row_stride(width)
    if offset < FILE_HEADER_SIZE + dib_size or offset + stride * height > len(data):
        raise CorruptFile(
            f"pixel array ({stride * height} bytes at offset {offset}) "
            f"does not fit in {len(data)}-byte file"
        )

    rows = np.frombuffer(data, dtype=np.uint8, count=stride * height, offset=offset)
    grid = rows.reshape(height, stride)[:, :3 * width].reshape(height, width, 3)
    if bottom_up:
        grid = grid[::-1]
    return Image(grid[..., ::-1], _source=data, _offset=offset, _bottom_up=bottom_up)


def _fresh_header(width: int, height: int) -> bytes:
    size = row_stride(width) * height
    offset = FILE_HEADER_SIZE + INFO_HEADER_SIZE
    return (
        struct.pack("<2sIHHI", b"BM", offset + size, 0, 0, offset)
        + struct.pack("<IiiHHIIiiII", INFO_HEADER_SIZE, width, height, 1, 24, 0,
                      size, 2835, 2835, 0, 0)
    )


def save(img: Image) -> bytes:
    stride = row_stride(img.width)
    bgr = img.pixels[..., ::-1]
    if img._source is not None:
        out = bytearray(img._source)
        offset, bottom_up = img._offset, img._bottom_up
    else:
        header = _fresh_header(img.width, img.height)
        out = bytearray(header) + bytearray(stride * img.height)
        offset, bottom_up = len(header), True

    view = np.frombuffer(out, dtype=np.uint8, count=stride * img.height, offset=offset)
    view = view.reshape(img.height, stride)
    view[:, :3 * img.width] = (bgr[::-1] if bottom_up else bgr).reshape(img.height, -1)
    return bytes(out)


def read(path) -> Image:
    with open(path, "rb") as fh:
        return load(fh.read())


def write(img: Image, path) -> None:
    with open(path, "wb") as fh:
        fh.write(save(img))
