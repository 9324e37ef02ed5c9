"""Integer partitions and Young-diagram cell data.

Partitions are plain tuples of weakly decreasing positive parts; the empty
partition is ``()``.  Cells are 1-based pairs ``(i, j)`` with ``i`` indexing
rows and ``j`` columns, so ``(1, 1)`` is the corner cell.
"""

from __future__ import annotations

from typing import Iterator

Partition = tuple[int, ...]


def is_partition(parts: tuple[int, ...]) -> bool:
    """True when ``parts`` is weakly decreasing with all parts positive."""
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts: tuple[int, ...]) -> Partition:
    y = tuple(parts)
    if not is_partition(y):
        raise ValueError(f"not a partition: {parts!r}")
    return y


def size(y: Partition) -> int:
    return sum(y)


def transpose(y: Partition) -> Partition:
    """Conjugate diagram: column lengths of ``y`` read left to right."""
    if not y:
        return ()
    return tuple(sum(1 for p in y if p >= j) for j in range(1, y[0] + 1))


def cells(y: Partition) -> list[tuple[int, int]]:
    """All cells ``(i, j)`` of the diagram, row by row."""
    return [(i, j) for i, p in enumerate(y, start=1) for j in range(1, p + 1)]


def arm(y: Partition, i: int, j: int) -> int:
    """Cells strictly right of ``(i, j)`` in its row."""
    return y[i - 1] - j


def leg(y: Partition, i: int, j: int) -> int:
    """Cells strictly below ``(i, j)`` in its column."""
    return sum(1 for p in y if p >= j) - i


def cell_data(y: Partition) -> Iterator[tuple[int, int, int, int]]:
    """Yield ``(i, j, arm, leg)`` for every cell of ``y``."""
    conj = transpose(y)
    for i, p in enumerate(y, start=1):
        for j in range(1, p + 1):
            yield i, j, p - j, conj[j - 1] - i


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, ``(n,)`` first.

    ``n = 0`` gives the empty partition only.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")

    out: list[Partition] = []

    def extend(prefix: list[int], remaining: int, cap: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            extend(prefix, remaining - part, part)
            prefix.pop()

    extend([], n, n if n else 1)
    return out


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """Dominance order on partitions of equal size: mu <= lam."""
    if size(mu) != size(lam):
        raise ValueError("dominance compares partitions of the same size")
    total_mu = 0
    total_lam = 0
    for idx in range(max(len(mu), len(lam))):
        total_mu += mu[idx] if idx < len(mu) else 0
        total_lam += lam[idx] if idx < len(lam) else 0
        if total_mu > total_lam:
            return False
    return True
