"""Dynkin diagrams of split semi-simple groups.

Vertices are numbered 1..n globally: components are concatenated in the
order given, and each component uses Bourbaki numbering internally.  For
``D_n`` the fork vertices are ``n-1`` and ``n``; for ``E_n`` vertex 2 hangs
off vertex 4.

The Cartan matrix follows ``a[i][j] = <alpha_j, alpha_i^vee>``, so column
``j`` is ``alpha_j`` written in the fundamental-weight basis.

>>> d = build_diagram([SimpleType("D", 4)])
>>> sorted(d.edges)
[(1, 2), (2, 3), (2, 4)]
>>> adjacent(d, 1, 3)
False
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import AlphaInTheta, InvalidRank, VertexOutOfRange

__all__ = [
    "SimpleType", "DynkinDiagram", "build_diagram", "cartan_matrix",
    "adjacent", "orthogonal_to_set", "determinant", "admissible_types",
]

LETTERS = "ABCDEFG"

# smallest admissible rank per letter; E, F, G are restricted further below
_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def _admissible(letter: str, rank: int) -> bool:
    if letter in _MIN_RANK:
        return rank >= _MIN_RANK[letter]
    return rank in _FIXED_RANKS.get(letter, ())


def admissible_types(max_rank: int) -> list[tuple[str, int]]:
    """All admissible (letter, rank) pairs with rank <= max_rank."""
    return [
        (letter, r)
        for letter in LETTERS
        for r in range(1, max_rank + 1)
        if _admissible(letter, r)
    ]


@dataclass(frozen=True, order=True)
class SimpleType:
    letter: str
    rank: int

    def __post_init__(self):
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise InvalidRank(self.letter, self.rank)
        if self.letter not in LETTERS or not _admissible(self.letter, self.rank):
            raise InvalidRank(self.letter, self.rank)

    def __str__(self):
        return f"{self.letter}{self.rank}"

    def local_cartan(self) -> list[list[int]]:
        """Standard Cartan matrix of this simple type (0-based rows)."""
        n = self.rank
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

        def link(i, j, a_ij=-1, a_ji=-1):
            # 1-based Bourbaki vertices
            a[i - 1][j - 1] = a_ij
            a[j - 1][i - 1] = a_ji

        letter = self.letter
        if letter in "ABC":
            for i in range(1, n):
                link(i, i + 1)
            if letter == "B":
                # alpha_n short
                link(n - 1, n, -1, -2)
            elif letter == "C":
                # alpha_n long
                link(n - 1, n, -2, -1)
        elif letter == "D":
            for i in range(1, n - 1):
                link(i, i + 1)
            link(n - 2, n)
        elif letter == "E":
            link(1, 3)
            link(2, 4)
            for i in range(3, n):
                link(i, i + 1)
        elif letter == "F":
            link(1, 2)
            link(2, 3, -1, -2)
            link(3, 4)
        elif letter == "G":
            # alpha_1 short
            link(1, 2, -3, -1)
        return a


@dataclass(frozen=True)
class DynkinDiagram:
    """A finite product of simple Dynkin diagrams with global numbering."""

    components: tuple[SimpleType, ...]
    _cartan: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        n = self.rank
        rows = [[0] * n for _ in range(n)]
        for comp, offset in zip(self.components, self.offsets):
            local = comp.local_cartan()
            for i, row in enumerate(local):
                for j, v in enumerate(row):
                    rows[offset + i][offset + j] = v
        object.__setattr__(self, "_cartan", tuple(tuple(r) for r in rows))

    @cached_property
    def rank(self) -> int:
        return sum(c.rank for c in self.components)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for c in self.components:
            out.append(acc)
            acc += c.rank
        return tuple(out)

    @property
    def vertices(self) -> range:
        return range(1, self.rank + 1)

    @property
    def name(self) -> str:
        return "x".join(str(c) for c in self.components)

    def __str__(self):
        return self.name

    @cached_property
    def edges(self) -> frozenset[tuple[int, int]]:
        """Unordered edges as pairs ``(i, j)`` with ``i < j``."""
        n = self.rank
        return frozenset(
            (i + 1, j + 1)
            for i in range(n)
            for j in range(i + 1, n)
            if self._cartan[i][j] != 0
        )

    @cached_property
    def neighbour_masks(self) -> tuple[int, ...]:
        # bit (v-1) set for each neighbour v; index 0 unused
        masks = [0] * (self.rank + 1)
        for i, j in self.edges:
            masks[i] |= 1 << (j - 1)
            masks[j] |= 1 << (i - 1)
        return tuple(masks)

    def check_vertex(self, v: int) -> int:
        if type(v) is not int or not 1 <= v <= self.rank:
            raise VertexOutOfRange(v, self.rank)
        return v

    def cartan_entry(self, i: int, j: int) -> int:
        self.check_vertex(i)
        self.check_vertex(j)
        return self._cartan[i - 1][j - 1]

    def component_of(self, v: int) -> tuple[int, SimpleType, int]:
        """Return ``(component index, type, local Bourbaki index)`` of ``v``."""
        self.check_vertex(v)
        for k, (comp, offset) in enumerate(zip(self.components, self.offsets)):
            if v <= offset + comp.rank:
                return k, comp, v - offset
        raise AssertionError("unreachable")

    def edge_multiplicity(self, i: int, j: int) -> int:
        """Number of lines joining ``i`` and ``j`` (0 if not adjacent)."""
        return self.cartan_entry(i, j) * self.cartan_entry(j, i)

    def legend(self) -> str:
        parts = []
        for comp, offset in zip(self.components, self.offsets):
            lo, hi = offset + 1, offset + comp.rank
            span = str(lo) if lo == hi else f"{lo}-{hi}"
            parts.append(f"{span}={comp}")
        return "numbering (Bourbaki per component): " + ", ".join(parts)


def build_diagram(components: Iterable[SimpleType | tuple[str, int]]) -> DynkinDiagram:
    comps = []
    for c in components:
        if not isinstance(c, SimpleType):
            c = SimpleType(*c)
        comps.append(c)
    return DynkinDiagram(tuple(comps))


def cartan_matrix(d: DynkinDiagram) -> tuple[tuple[int, ...], ...]:
    return d._cartan


def adjacent(d: DynkinDiagram, i: int, j: int) -> bool:
    return i != j and d.cartan_entry(i, j) != 0


def orthogonal_to_set(d: DynkinDiagram, alpha: int, theta: Iterable[int]) -> bool:
    """True iff ``alpha`` shares no edge with any vertex of ``theta``."""
    theta = {d.check_vertex(b) for b in theta}
    d.check_vertex(alpha)
    if alpha in theta:
        raise AlphaInTheta(alpha)
    return not any(adjacent(d, alpha, b) for b in theta)


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
