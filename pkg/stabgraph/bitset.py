from __future__ import annotations

from typing import Iterable, Iterator

# Vertex sets are single-word bitmasks: bit v is set iff vertex v is a member.


def bit(v: int) -> int:
    return 1 << v


def full_mask(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_frozenset(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))
