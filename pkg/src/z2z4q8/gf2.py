"""GF(2) linear algebra on int bitsets (little-endian rows)."""

from __future__ import annotations

from typing import Iterable, List


class Gf2Basis:
    """Row basis in reduced echelon form, one pivot per stored row."""

    def __init__(self, rows: Iterable[int] = ()) -> None:
        self._pivots: dict[int, int] = {}  # pivot bit index -> reduced row
        for row in rows:
            self.add(row)

    def reduce(self, vec: int) -> int:
        """Residual of vec after elimination against the basis."""
        for pivot, row in self._pivots.items():
            if (vec >> pivot) & 1:
                vec ^= row
        return vec

    def add(self, vec: int) -> bool:
        """Insert vec; returns True if it enlarged the span."""
        residual = self.reduce(vec)
        if residual == 0:
            return False
        pivot = residual.bit_length() - 1
        for p in list(self._pivots):
            if (self._pivots[p] >> pivot) & 1:
                self._pivots[p] ^= residual
        self._pivots[pivot] = residual
        return True

    def contains(self, vec: int) -> bool:
        return self.reduce(vec) == 0

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def rows(self) -> List[int]:
        return [self._pivots[p] for p in sorted(self._pivots)]


def gf2_rank(rows: Iterable[int]) -> int:
    return Gf2Basis(rows).rank


def gf2_in_span(vec: int, rows: Iterable[int]) -> bool:
    return Gf2Basis(rows).contains(vec)


def gf2_span(rows: Iterable[int]) -> frozenset[int]:
    """All vectors in the row span (use only for small ranks)."""
    span = {0}
    for row in Gf2Basis(rows).rows():
        span |= {v ^ row for v in span}
    return frozenset(span)
