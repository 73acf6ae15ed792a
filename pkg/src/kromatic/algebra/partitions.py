"""Integer partitions."""
from __future__ import annotations

from typing import Iterable, Mapping


class Partition(tuple):
    """A partition as a nonincreasing tuple of positive integers.

    Parts given in any order are sorted.  ``Partition.from_multiplicities``
    builds the partition with ``i_j`` parts equal to ``j``, i.e. the
    exponent notation ``l^{i_l} ... 2^{i_2} 1^{i_1}``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if parts and parts[-1] < 1:
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_multiplicities(cls, mult: Mapping[int, int]) -> "Partition":
        parts = []
        for j, i in mult.items():
            if i < 0:
                raise ValueError("multiplicities must be nonnegative")
            parts.extend([j] * i)
        return cls(parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Inverse of :meth:`to_text`; the empty string is the empty partition."""
        text = text.strip().strip("()")
        if not text:
            return cls()
        return cls(int(t) for t in text.split(","))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def multiplicity_vector(self) -> tuple[int, ...]:
        """``(i_1, i_2, ..., i_{largest part})``."""
        if not self:
            return ()
        vec = [0] * self[0]
        for p in self:
            vec[p - 1] += 1
        return tuple(vec)

    def to_text(self) -> str:
        return ",".join(map(str, self))

    def sort_key(self) -> tuple:
        """Weight first, then reverse lexicographic on parts."""
        return (self.weight, tuple(-p for p in self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def partitions_of(weight: int, max_part: int | None = None, max_length: int | None = None):
    """Partitions of exactly ``weight`` in reverse lexicographic order."""
    if max_part is None:
        max_part = weight
    if max_length is None:
        max_length = weight

    def rec(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    for parts in rec(weight, max_part, max_length):
        yield Partition(parts)


def partitions_bounded(max_part: int, max_length: int, max_weight: int) -> list[Partition]:
    """Every nonempty partition with largest part, length and weight within
    the bounds, ordered by :meth:`Partition.sort_key`."""
    if min(max_part, max_length, max_weight) < 1:
        raise ValueError("bounds must be positive")
    out = []
    for w in range(1, max_weight + 1):
        out.extend(partitions_of(w, max_part, max_length))
    return out
