"""Permutations as image tuples, composed left to right.

``p`` maps ``i`` to ``p[i]``; ``compose(p, q)`` applies ``p`` first, then
``q``.  Tuples keep elements hashable; packing to bytes gives a compact,
hash-stable key for the large conjugacy-orbit sets.
"""

from __future__ import annotations

from typing import Iterable

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def compose(p: Perm, q: Perm) -> Perm:
    """Apply p, then q."""
    return tuple(map(q.__getitem__, p))


def compose_many(perms: Iterable[Perm]) -> Perm:
    result = None
    for p in perms:
        result = p if result is None else compose(result, p)
    if result is None:
        raise ValueError("empty composition")
    return result


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def conjugate(p: Perm, g: Perm) -> Perm:
    """g^-1 p g, computed without forming g^-1."""
    out = [0] * len(p)
    for i, pi in enumerate(p):
        out[g[i]] = g[pi]
    return tuple(out)


def perm_order(p: Perm) -> int:
    from math import lcm

    n = len(p)
    seen = bytearray(n)
    order = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = 1
            j = p[j]
            length += 1
        order = lcm(order, length)
    return order


def is_involution(p: Perm) -> bool:
    return all(p[p[i]] == i for i in range(len(p)))


def pack(p: Perm, width: int) -> bytes:
    if width == 1:
        return bytes(p)
    return b"".join(i.to_bytes(2, "big") for i in p)


def unpack(data: bytes, width: int) -> Perm:
    if width == 1:
        return tuple(data)
    return tuple(
        int.from_bytes(data[i : i + 2], "big") for i in range(0, len(data), 2)
    )


def pack_width(n_points: int) -> int:
    return 1 if n_points <= 255 else 2
