"""Weight-lattice arithmetic in the fundamental-weight basis.

A :class:`Weight` is an integer vector of coefficients on the fundamental
weights; via ``lambda -> [L_lambda]`` it also stands for a class in
``Pic(G/B)``.  Coefficients are bounded to signed 64-bit range and
overflow raises instead of wrapping, since parity is what downstream code
consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .dynkin import DynkinDiagram
from .errors import DiagramMismatch, WeightOverflow

__all__ = ["Weight", "fundamental_weight", "pairing", "root_as_weight", "add", "scale", "zero"]

INT_MIN = -(2**63)
INT_MAX = 2**63 - 1


def _checked(values: Iterable[int]) -> tuple[int, ...]:
    out = []
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool):
            raise TypeError(f"weight coefficients must be int, got {v!r}")
        if not INT_MIN <= v <= INT_MAX:
            raise WeightOverflow(v)
        out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class Weight:
    diagram: DynkinDiagram
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = _checked(self.coeffs)
        if len(coeffs) != self.diagram.rank:
            raise ValueError(
                f"weight has {len(coeffs)} coefficients, diagram {self.diagram} has rank {self.diagram.rank}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    def __add__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __rmul__(self, c):
        if not isinstance(c, int):
            return NotImplemented
        return scale(c, self)

    def __str__(self):
        return "(" + ",".join(map(str, self.coeffs)) + ")"


def zero(d: DynkinDiagram) -> Weight:
    return Weight(d, (0,) * d.rank)


def fundamental_weight(d: DynkinDiagram, alpha: int) -> Weight:
    d.check_vertex(alpha)
    return Weight(d, tuple(int(v == alpha) for v in d.vertices))


def pairing(lam: Weight, beta: int) -> int:
    """``<lambda, beta^vee>``; in this basis it is just a coefficient read."""
    lam.diagram.check_vertex(beta)
    return lam.coeffs[beta - 1]


def root_as_weight(d: DynkinDiagram, j: int) -> Weight:
    d.check_vertex(j)
    return Weight(d, tuple(d.cartan_entry(i, j) for i in d.vertices))


def _same_diagram(a: Weight, b: Weight):
    if a.diagram != b.diagram:
        raise DiagramMismatch(a.diagram, b.diagram)


def add(lam: Weight, mu: Weight) -> Weight:
    _same_diagram(lam, mu)
    return Weight(lam.diagram, tuple(x + y for x, y in zip(lam.coeffs, mu.coeffs)))


def scale(c: int, lam: Weight) -> Weight:
    return Weight(lam.diagram, tuple(c * x for x in lam.coeffs))
