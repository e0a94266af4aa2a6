"""Rank computation over GF(2) with rows packed into Python ints."""

from __future__ import annotations

from typing import Iterable


def rank_of_rows(rows: Iterable[int]) -> int:
    """GF(2) rank of a matrix whose rows are given as bitmask integers."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            hb = row.bit_length() - 1
            if hb in pivots:
                row ^= pivots[hb]
            else:
                pivots[hb] = row
                rank += 1
                break
    return rank
