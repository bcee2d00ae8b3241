import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cfgstego.errors import MalformedHeader, PayloadTooLarge, TruncatedStream
from cfgstego.payload import ChunkStream, FramedBits, chunk, frame, to_chunks, unframe

from oracles import byte_bits

# header 8, then "kill joe"; produced by oracles.byte_bits and frozen here
KILL_JOE_FRAMED = (
    "00000000000000000000000000001000"
    "0110101101101001011011000110110000100000011010100110111101100101"
)
KILL_JOE_CHUNKS = (0, 0, 0, 134, 365, 91, 54, 32, 212, 445, 296)


def bitstring(framed):
    return "".join(map(str, framed.bits))


def test_frame_empty():
    f = frame(b"")
    assert len(f) == 32
    assert not f.bits.any()


def test_frame_single_ff():
    assert bitstring(frame(b"\xff")) == "0" * 31 + "1" + "1" * 8


def test_frame_kill_joe():
    f = frame(b"kill joe")
    assert len(f) == 96
    assert bitstring(f) == KILL_JOE_FRAMED
    assert bitstring(f)[32:] == byte_bits(b"kill joe")


def test_frame_rejects_oversized():
    class Huge(bytes):
        def __len__(self):
            return 2**32

    with pytest.raises(PayloadTooLarge):
        frame(Huge())


@pytest.mark.parametrize("nbits, nchunks, pad", [(32, 4, 4), (96, 11, 3), (9, 1, 0)])
def test_chunk_arithmetic(nbits, nchunks, pad):
    stream = chunk(FramedBits(np.zeros(nbits, dtype=np.uint8), 0))
    assert (len(stream), stream.pad_bits) == (nchunks, pad)


def test_chunk_exact_fit_value():
    bits = np.array([1, 0, 1, 0, 1, 0, 1, 0, 1], dtype=np.uint8)
    assert chunk(FramedBits(bits, 0)) == ChunkStream((341,), 0)


def test_kill_joe_chunks():
    assert to_chunks(b"kill joe").chunks == KILL_JOE_CHUNKS


def test_unframe_empty_header():
    assert unframe(ChunkStream((0, 0, 0, 0))) == b""


def test_unframe_kill_joe():
    assert unframe(ChunkStream(KILL_JOE_CHUNKS)) == b"kill joe"


def test_unframe_short_stream():
    with pytest.raises(MalformedHeader):
        unframe(ChunkStream((0, 0, 0)))


def test_unframe_truncated():
    # header claims 8 bytes, only 4 bytes of body follow
    with pytest.raises(TruncatedStream):
        unframe(ChunkStream(KILL_JOE_CHUNKS[:7]))


@settings(max_examples=200, deadline=None)
@given(st.binary(max_size=64 * 1024))
def test_round_trip(payload):
    stream = to_chunks(payload)
    assert unframe(stream) == payload
    assert len(stream) * 9 - stream.pad_bits == 32 + 8 * len(payload)
    assert 0 <= stream.pad_bits <= 8
    assert all(0 <= c < 512 for c in stream.chunks)


@given(st.binary(max_size=512))
def test_deterministic(payload):
    assert to_chunks(payload) == to_chunks(payload)
