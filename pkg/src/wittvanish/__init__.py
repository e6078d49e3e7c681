"""Dynkin-diagram criteria for the vanishing of twisted Witt groups of G/P."""

from .dynkin import (
    DynkinDiagram, SimpleType, adjacent, build_diagram, cartan_matrix,
    orthogonal_to_set,
)
from .enumeration import ClassificationTable, enumerate_decorations, filter_rows
from .parsing import parse_diagram
from .picard import (
    LineBundleClass, ParabolicSubset, lambda_of, lambda_to_class, line_bundle,
    parabolic, picard_basis,
)
from .vanishing import (
    CAVEAT, BundleReduction, GrassmannianOddOdd, MainTheorem, Status,
    VanishingVerdict, borel_classify, bundle_reduction, classify, classify_sets,
    criterion_witnesses, grassmannian_odd_odd,
)
from .weights import Weight, fundamental_weight, pairing, root_as_weight

__version__ = "0.1.0"
