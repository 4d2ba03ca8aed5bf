"""Cycle types of permutations, written like ``1+3^4``."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = ["CycleType"]

_PART = re.compile(r"(\d+)(?:\^(\d+))?")


@dataclass(frozen=True, order=True)
class CycleType:
    """Multiset of cycle lengths as ``((length, multiplicity), ...)``, lengths ascending."""

    parts: tuple[tuple[int, int], ...]

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> CycleType:
        for length, mult in counts.items():
            if length < 1 or mult < 0:
                raise ValueError(f"bad cycle part {length}^{mult}")
        return cls(tuple(sorted((ln, mu) for ln, mu in counts.items() if mu)))

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> CycleType:
        return cls.from_counts(Counter(lengths))

    @classmethod
    def parse(cls, text: str) -> CycleType:
        counts: Counter[int] = Counter()
        for chunk in text.replace(" ", "").split("+"):
            m = _PART.fullmatch(chunk)
            if not m:
                raise ValueError(f"bad cycle type {text!r}")
            counts[int(m.group(1))] += int(m.group(2) or 1)
        return cls.from_counts(counts)

    @property
    def size(self) -> int:
        """Number of points permuted: sum of length * multiplicity."""
        return sum(ln * mu for ln, mu in self.parts)

    @property
    def cycle_count(self) -> int:
        return sum(mu for _, mu in self.parts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.parts)

    def __str__(self) -> str:
        return "+".join(str(ln) if mu == 1 else f"{ln}^{mu}" for ln, mu in self.parts)
