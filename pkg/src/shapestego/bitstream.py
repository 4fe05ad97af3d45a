"""Message bytes <-> bit strings, and the length-prefixed frame.

Bits are plain strings over ``"01"``, most-significant bit first within
each byte. A frame is a 16-bit big-endian byte count followed by the
payload bytes; extractors read past the frame and ignore trailing bits,
so over-reading a cover is harmless.
"""

from __future__ import annotations

from .errors import MessageTooLongError, RaggedLengthError, TruncatedFrameError

FRAME_HEADER_BITS = 16
MAX_MESSAGE_BYTES = 0xFFFF


def bytes_to_bits(data: bytes) -> str:
    return "".join(f"{byte:08b}" for byte in data)


def bits_to_bytes(bits: str) -> bytes:
    if len(bits) % 8 != 0:
        raise RaggedLengthError(f"bit count {len(bits)} is not a multiple of 8")
    return bytes(int(bits[i : i + 8], 2) for i in range(0, len(bits), 8))


def frame(message: bytes) -> str:
    if len(message) > MAX_MESSAGE_BYTES:
        raise MessageTooLongError(f"{len(message)} bytes exceeds {MAX_MESSAGE_BYTES}")
    return bytes_to_bits(len(message).to_bytes(2, "big") + message)


def deframe(bits: str) -> bytes:
    if len(bits) < FRAME_HEADER_BITS:
        raise TruncatedFrameError(f"only {len(bits)} bits, header needs 16")
    payload_bytes = int(bits[:FRAME_HEADER_BITS], 2)
    end = FRAME_HEADER_BITS + 8 * payload_bytes
    if len(bits) < end:
        raise TruncatedFrameError(
            f"header declares {payload_bytes} bytes but only "
            f"{len(bits) - FRAME_HEADER_BITS} payload bits follow"
        )
    return bits_to_bytes(bits[FRAME_HEADER_BITS:end])
