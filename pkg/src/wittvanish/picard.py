"""Parabolic subsets, Picard classes of ``X_Theta`` and the parity set Lambda.

``Pic(X_Theta)`` is identified with the weights supported off ``Theta``;
reducing mod 2 gives a bijection between its classes and the subsets of
``Delta - Theta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .dynkin import DynkinDiagram
from .errors import DiagramMismatch, LambdaMeetsTheta, NotInPicard
from .weights import Weight

__all__ = [
    "ParabolicSubset", "LineBundleClass", "parabolic", "picard_basis",
    "line_bundle", "lambda_of", "lambda_to_class",
]


@dataclass(frozen=True)
class ParabolicSubset:
    """``Theta``; the empty set is the Borel case, the full set is a point."""

    diagram: DynkinDiagram
    theta: frozenset[int]

    def __post_init__(self):
        theta = frozenset(self.diagram.check_vertex(v) for v in self.theta)
        object.__setattr__(self, "theta", theta)

    @property
    def is_borel(self) -> bool:
        return not self.theta


def parabolic(d: DynkinDiagram, theta: Iterable[int] = ()) -> ParabolicSubset:
    return ParabolicSubset(d, frozenset(theta))


@dataclass(frozen=True)
class LineBundleClass:
    weight: Weight
    theta: ParabolicSubset

    def __post_init__(self):
        if self.weight.diagram != self.theta.diagram:
            raise DiagramMismatch(self.weight.diagram, self.theta.diagram)
        for beta in sorted(self.theta.theta):
            if self.weight.coeffs[beta - 1] != 0:
                raise NotInPicard(beta)

    @property
    def diagram(self) -> DynkinDiagram:
        return self.weight.diagram

    def __add__(self, other: Weight) -> LineBundleClass:
        # tensoring by another line bundle on the same X_Theta
        if isinstance(other, LineBundleClass):
            other = other.weight
        if not isinstance(other, Weight):
            return NotImplemented
        return LineBundleClass(self.weight + other, self.theta)


def picard_basis(p: ParabolicSubset) -> tuple[int, ...]:
    return tuple(v for v in p.diagram.vertices if v not in p.theta)


def line_bundle(p: ParabolicSubset, lam: Weight) -> LineBundleClass:
    return LineBundleClass(lam, p)


def lambda_of(bundle: LineBundleClass) -> frozenset[int]:
    # Python's % is mathematical mod, so -3 % 2 == 1
    return frozenset(
        v for v in picard_basis(bundle.theta) if bundle.weight.coeffs[v - 1] % 2 == 1
    )


def lambda_to_class(p: ParabolicSubset, lam: Iterable[int]) -> LineBundleClass:
    lam = frozenset(p.diagram.check_vertex(v) for v in lam)
    if lam & p.theta:
        raise LambdaMeetsTheta(lam & p.theta)
    w = Weight(p.diagram, tuple(int(v in lam) for v in p.diagram.vertices))
    return LineBundleClass(w, p)
