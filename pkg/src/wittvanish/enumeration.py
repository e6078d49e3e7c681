"""Exhaustive classification of every ``(Theta, Lambda)`` decoration.

Each vertex is independently in ``Theta``, in ``Lambda`` or in neither, so a
rank-``n`` diagram has ``3^n`` decorations.  Rows are ordered by ``Theta``
as a bitmask (bit ``v-1`` for vertex ``v``), then by ``Lambda`` as a bitmask.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple

from .dynkin import DynkinDiagram
from .errors import RankLimitExceeded
from .vanishing import (
    GrassmannianOddOdd, MainTheorem, VanishingVerdict, blocked_mask, classify_masks,
)

__all__ = ["Row", "ClassificationTable", "enumerate_decorations", "filter_rows",
           "decorations", "mask_to_set", "DEFAULT_RANK_LIMIT"]

DEFAULT_RANK_LIMIT = 12


class Row(NamedTuple):
    theta_mask: int
    lam_mask: int
    verdict: VanishingVerdict

    @property
    def theta(self) -> frozenset[int]:
        return mask_to_set(self.theta_mask)

    @property
    def lam(self) -> frozenset[int]:
        return mask_to_set(self.lam_mask)


def mask_to_set(mask: int) -> frozenset[int]:
    out, v = [], 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def _submasks_ascending(mask: int) -> list[int]:
    subs, s = [], mask
    while True:
        subs.append(s)
        if s == 0:
            break
        s = (s - 1) & mask
    subs.reverse()
    return subs


def decorations(n: int) -> Iterator[tuple[int, int]]:
    """``(theta_mask, lambda_mask)`` pairs in canonical order."""
    full = (1 << n) - 1
    for theta in range(1 << n):
        for lam in _submasks_ascending(full & ~theta):
            yield theta, lam


def _totals(rows) -> dict[str, int]:
    c = Counter()
    for row in rows:
        v = row.verdict
        c[v.status.value] += 1
        if isinstance(v.rule, MainTheorem):
            c["MainTheorem"] += 1
        elif isinstance(v.rule, GrassmannianOddOdd):
            c["GrassmannianOddOdd"] += 1
    keys = ("VanishesAllDegrees", "Inconclusive", "MainTheorem", "GrassmannianOddOdd")
    return {k: c.get(k, 0) for k in keys}


@dataclass(frozen=True)
class ClassificationTable:
    diagram: DynkinDiagram
    rows: tuple[Row, ...]

    @property
    def totals(self) -> dict[str, int]:
        return _totals(self.rows)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)


def enumerate_decorations(d: DynkinDiagram, rank_limit: int = DEFAULT_RANK_LIMIT) -> ClassificationTable:
    """Classify all ``3^n`` decorations of ``d`` in canonical order."""
    if d.rank > rank_limit:
        raise RankLimitExceeded(d.rank, rank_limit)
    rows = []
    append = rows.append
    full = (1 << d.rank) - 1
    for theta_mask in range(1 << d.rank):
        blocked = blocked_mask(d, theta_mask)
        # at most one MainTheorem verdict per (theta, least witness)
        by_witness = {}
        for lam_mask in _submasks_ascending(full & ~theta_mask):
            free = lam_mask & ~blocked
            if free:
                key = free & -free
                verdict = by_witness.get(key)
                if verdict is None:
                    verdict = by_witness[key] = classify_masks(d, theta_mask, lam_mask, blocked)
            else:
                verdict = classify_masks(d, theta_mask, lam_mask, blocked)
            append(Row(theta_mask, lam_mask, verdict))
    return ClassificationTable(d, tuple(rows))


def filter_rows(
    table: ClassificationTable,
    predicate: Callable[[frozenset[int], frozenset[int], VanishingVerdict], bool],
) -> ClassificationTable:
    return ClassificationTable(
        table.diagram,
        tuple(r for r in table.rows if predicate(r.theta, r.lam, r.verdict)),
    )
