"""Payload framing and 9-bit chunking.

Frame layout (MSB-first throughout)::

    [32 bits  payload byte count, big-endian]
    [8*N bits payload bytes]

The frame is then cut into 9-bit chunks, one per carrier pixel; the last
chunk is zero-padded on the right.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import MalformedHeader, PayloadTooLarge, TruncatedStream

HEADER_BITS = 32
CHUNK_BITS = 9
MAX_PAYLOAD_BYTES = 2**32 - 1


@dataclass(frozen=True)
class FramedBits:
    bits: np.ndarray  # uint8 array of 0/1
    payload_bit_count: int

    def __len__(self) -> int:
        return len(self.bits)


@dataclass(frozen=True)
class ChunkStream:
    chunks: tuple[int, ...]
    pad_bits: int = 0

    def __len__(self) -> int:
        return len(self.chunks)

    def bits(self) -> np.ndarray:
        if not self.chunks:
            return np.zeros(0, dtype=np.uint8)
        values = np.asarray(self.chunks, dtype=np.uint16)
        shifts = np.arange(CHUNK_BITS - 1, -1, -1, dtype=np.uint16)
        return ((values[:, None] >> shifts) & 1).astype(np.uint8).ravel()


def frame(payload: bytes) -> FramedBits:
    n = len(payload)
    if n > MAX_PAYLOAD_BYTES:
        raise PayloadTooLarge(f"{n} bytes does not fit a 32-bit length header")
    raw = n.to_bytes(4, "big") + bytes(payload)
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8))
    return FramedBits(bits, 8 * n)


def chunk_count(bit_count: int) -> int:
    return -(-bit_count // CHUNK_BITS)


def chunk(framed: FramedBits) -> ChunkStream:
    bits = np.asarray(framed.bits, dtype=np.uint16)
    n = chunk_count(len(bits))
    pad = n * CHUNK_BITS - len(bits)
    padded = np.concatenate([bits, np.zeros(pad, dtype=np.uint16)]).reshape(n, CHUNK_BITS)
    weights = 1 << np.arange(CHUNK_BITS - 1, -1, -1, dtype=np.uint16)
    values = (padded * weights).sum(axis=1)
    return ChunkStream(tuple(int(v) for v in values), pad)


def unframe(stream: ChunkStream) -> bytes:
    bits = stream.bits()
    if len(bits) < HEADER_BITS:
        raise MalformedHeader(
            f"need {HEADER_BITS} header bits, stream has only {len(bits)}"
        )
    declared = int.from_bytes(np.packbits(bits[:HEADER_BITS]).tobytes(), "big")
    available = len(bits) - HEADER_BITS
    if 8 * declared > available:
        raise TruncatedStream(
            f"header declares {declared} bytes but only {available // 8} follow"
        )
    body = bits[HEADER_BITS:HEADER_BITS + 8 * declared]
    return np.packbits(body).tobytes()


def to_chunks(payload: bytes) -> ChunkStream:
    return chunk(frame(payload))
