"""Small finite-order helpers on index sets encoded as bitmasks."""

from __future__ import annotations

from typing import Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def strict_uppers(leq: Sequence[int]) -> list[int]:
    """``leq[i]`` is the mask of j with i <= j; returns masks of j with i < j."""
    return [m & ~(1 << i) for i, m in enumerate(leq)]


def upsets(leq: Sequence[int], limit: int | None = None) -> Iterator[int]:
    """Every up-closed subset (as a mask) of a finite partial order, empty set included.

    Elements are decided from the top down, so each branch stays extendable
    and the walk visits exactly one leaf per up-set.
    """
    n = len(leq)
    ups = strict_uppers(leq)
    order = sorted(range(n), key=lambda i: bin(ups[i]).count("1"))
    count = 0
    stack = [(0, 0)]
    while stack:
        k, cur = stack.pop()
        if k == n:
            yield cur
            count += 1
            if limit is not None and count >= limit:
                return
            continue
        i = order[k]
        stack.append((k + 1, cur))
        if ups[i] & ~cur == 0:
            stack.append((k + 1, cur | 1 << i))


def is_upset(leq: Sequence[int], mask: int) -> bool:
    return all(leq[i] & ~mask == 0 for i in bits(mask))


def up_closure(leq: Sequence[int], mask: int) -> int:
    out = 0
    for i in bits(mask):
        out |= leq[i]
    return out
