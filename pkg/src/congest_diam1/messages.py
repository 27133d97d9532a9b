"""Fixed-width big-endian bit-string encodings for broadcast payloads."""

from __future__ import annotations


def encode_width(n: int) -> int:
    """Field width in bits for values 0..n-1 (width 1 when n == 1)."""
    if n < 1:
        raise ValueError(f"need a positive vertex count, got {n}")
    return max(1, (n - 1).bit_length())


def encode_uint(value: int, n: int) -> str:
    """Encode value in the fixed width for range 0..n-1."""
    width = encode_width(n)
    if not 0 <= value < max(n, 1):
        raise ValueError(f"value {value} outside 0..{n - 1}")
    return format(value, f"0{width}b")


def decode_uint(bits: str, n: int) -> int:
    width = encode_width(n)
    if len(bits) != width:
        raise ValueError(f"expected {width} bits, got {len(bits)}")
    value = int(bits, 2)
    if value >= max(n, 1):
        raise ValueError(f"decoded value {value} outside 0..{n - 1}")
    return value


def pair_message(a: int, b: int, n: int) -> str:
    """Two fixed-width fields concatenated, 2 * encode_width(n) bits total."""
    return encode_uint(a, n) + encode_uint(b, n)


def decode_pair(bits: str, n: int) -> tuple[int, int]:
    width = encode_width(n)
    if len(bits) != 2 * width:
        raise ValueError(f"expected {2 * width} bits, got {len(bits)}")
    return decode_uint(bits[:width], n), decode_uint(bits[width:], n)
