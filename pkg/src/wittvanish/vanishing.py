"""Vanishing criteria for twisted Witt groups of ``X_Theta = G/P_Theta``.

Two certification rules are implemented:

* the main criterion: if some ``alpha`` in ``Lambda(L)`` has no edge to
  ``Theta`` then ``W^i(X_Theta, L) = 0`` for every ``i``.  The witness
  ``alpha`` comes with a :class:`BundleReduction` describing ``X_Theta`` as
  a ``P^1``-bundle over ``X_{Theta + alpha}``;
* the odd/odd Grassmannian rule for ``Gr(d, d+e)`` with ``d, e`` odd.

A verdict is either "vanishes in all degrees" or "inconclusive".  Nothing
here ever asserts non-vanishing.  All conclusions assume ``char(k) != 2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from .dynkin import DynkinDiagram, orthogonal_to_set
from .errors import AlphaInTheta, NotBorel, NotOrthogonal, ThetaLambdaOverlap
from .picard import LineBundleClass, lambda_of

__all__ = [
    "CAVEAT", "Status", "MainTheorem", "GrassmannianOddOdd", "VanishingVerdict",
    "BundleReduction", "criterion_witnesses", "grassmannian_odd_odd",
    "classify", "classify_sets", "classify_masks", "blocked_mask", "set_mask",
    "borel_classify", "bundle_reduction",
]

CAVEAT = "assumes char(k) ≠ 2"


class Status(str, enum.Enum):
    VANISHES = "VanishesAllDegrees"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class MainTheorem:
    witness: int

    def __str__(self):
        return "MainTheorem"


@dataclass(frozen=True)
class GrassmannianOddOdd:
    d: int
    e: int

    def __str__(self):
        return f"GrassmannianOddOdd({self.d},{self.e})"


Rule = Union[MainTheorem, GrassmannianOddOdd]


@dataclass(frozen=True)
class BundleReduction:
    """``X_Theta -> X_{Theta'}`` is the projectivization of a rank-2 bundle."""

    alpha: int
    theta: frozenset[int]
    theta_prime: frozenset[int]
    fiber_rank: int = 2


@dataclass(frozen=True)
class VanishingVerdict:
    status: Status
    rule: Optional[Rule] = None
    reduction: Optional[BundleReduction] = None
    caveat: str = field(default=CAVEAT)

    @property
    def vanishes(self) -> bool:
        return self.status is Status.VANISHES

    @property
    def witness(self) -> Optional[int]:
        return self.rule.witness if isinstance(self.rule, MainTheorem) else None


INCONCLUSIVE = VanishingVerdict(Status.INCONCLUSIVE)


def _vertex_sets(d: DynkinDiagram, theta: Iterable[int], lam: Iterable[int]):
    theta = frozenset(d.check_vertex(v) for v in theta)
    lam = frozenset(d.check_vertex(v) for v in lam)
    if theta & lam:
        raise ThetaLambdaOverlap(theta & lam)
    return theta, lam


def set_mask(vertices: Iterable[int]) -> int:
    return sum(1 << (v - 1) for v in set(vertices))


def blocked_mask(d: DynkinDiagram, theta_mask: int) -> int:
    """Vertices sharing an edge with some vertex of ``theta_mask``."""
    masks = d.neighbour_masks
    out, v = 0, 1
    while theta_mask:
        if theta_mask & 1:
            out |= masks[v]
        theta_mask >>= 1
        v += 1
    return out


def criterion_witnesses(d: DynkinDiagram, theta: Iterable[int], lam: Iterable[int]) -> tuple[int, ...]:
    """All ``alpha`` in ``lam`` with no edge into ``theta``, ascending."""
    theta, lam = _vertex_sets(d, theta, lam)
    free = set_mask(lam) & ~blocked_mask(d, set_mask(theta))
    return tuple(a for a in sorted(lam) if free >> (a - 1) & 1)


def _grassmannian_masks(d: DynkinDiagram, theta_mask: int, lam_mask: int) -> Optional[tuple[int, int]]:
    if len(d.components) != 1 or d.components[0].letter != "A":
        return None
    n = d.rank
    omitted = ((1 << n) - 1) & ~theta_mask
    # exactly one vertex outside theta, and lambda is that vertex
    if omitted == 0 or omitted & (omitted - 1) or lam_mask != omitted:
        return None
    k = omitted.bit_length()
    e = n + 1 - k
    if k % 2 == 1 and e % 2 == 1:
        return k, e
    return None


def grassmannian_odd_odd(
    d: DynkinDiagram, theta: Iterable[int], lam: Iterable[int]
) -> Optional[tuple[int, int]]:
    """``(d, e)`` when ``X_Theta = Gr(d, d+e)``, ``Lambda = {alpha_d}``, ``d, e`` odd."""
    theta, lam = _vertex_sets(d, theta, lam)
    return _grassmannian_masks(d, set_mask(theta), set_mask(lam))


def bundle_reduction(d: DynkinDiagram, theta: Iterable[int], alpha: int) -> BundleReduction:
    theta = frozenset(d.check_vertex(v) for v in theta)
    d.check_vertex(alpha)
    if alpha in theta:
        raise AlphaInTheta(alpha)
    for beta in sorted(theta):
        if d.cartan_entry(alpha, beta) != 0:
            raise NotOrthogonal(alpha, beta)
    return BundleReduction(alpha, theta, theta | {alpha})


def classify_masks(
    d: DynkinDiagram, theta_mask: int, lam_mask: int, blocked: Optional[int] = None
) -> VanishingVerdict:
    """Bitmask core shared by :func:`classify` and the enumerator.

    ``blocked`` may be passed in precomputed as ``blocked_mask(d, theta_mask)``.
    Masks are trusted to be disjoint and in range.
    """
    if blocked is None:
        blocked = blocked_mask(d, theta_mask)
    free = lam_mask & ~blocked
    if free:
        alpha = (free & -free).bit_length()
        theta = frozenset(v for v in d.vertices if theta_mask >> (v - 1) & 1)
        return VanishingVerdict(
            Status.VANISHES, MainTheorem(alpha), BundleReduction(alpha, theta, theta | {alpha})
        )
    de = _grassmannian_masks(d, theta_mask, lam_mask)
    if de is not None:
        return VanishingVerdict(Status.VANISHES, GrassmannianOddOdd(*de))
    return INCONCLUSIVE


def classify_sets(d: DynkinDiagram, theta: Iterable[int], lam: Iterable[int]) -> VanishingVerdict:
    """Classify directly from ``(Theta, Lambda)``; the class mod 2 is all that matters."""
    theta, lam = _vertex_sets(d, theta, lam)
    return classify_masks(d, set_mask(theta), set_mask(lam))


def classify(bundle: LineBundleClass) -> VanishingVerdict:
    return classify_sets(bundle.diagram, bundle.theta.theta, lambda_of(bundle))


def borel_classify(bundle: LineBundleClass) -> VanishingVerdict:
    """Full flag variety: vanishing unless ``[L]`` is trivial mod 2."""
    if not bundle.theta.is_borel:
        raise NotBorel(bundle.theta.theta)
    lam = lambda_of(bundle)
    if not lam:
        return INCONCLUSIVE
    alpha = min(lam)
    # every vertex is orthogonal to the empty set
    assert orthogonal_to_set(bundle.diagram, alpha, ())
    return VanishingVerdict(
        Status.VANISHES, MainTheorem(alpha), bundle_reduction(bundle.diagram, (), alpha)
    )
