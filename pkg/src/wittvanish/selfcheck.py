"""Built-in invariant suite behind ``wittvanish selfcheck``."""

from __future__ import annotations

import random
from itertools import combinations

from .dynkin import admissible_types, build_diagram, cartan_matrix, determinant
from .enumeration import enumerate_decorations
from .euclid import cartan_from_roots, gram_determinant_cartan, simple_roots
from .picard import lambda_of, lambda_to_class, line_bundle, parabolic
from .vanishing import classify, classify_sets
from .weights import Weight

__all__ = ["run_checks"]


def _subsets(vs):
    vs = list(vs)
    for k in range(len(vs) + 1):
        yield from combinations(vs, k)


def check_cartan(max_rank=8):
    for letter, r in admissible_types(max_rank):
        d = build_diagram([(letter, r)])
        a = cartan_matrix(d)
        n = d.rank
        for i in range(n):
            if a[i][i] != 2:
                return False, f"{d}: diagonal"
            for j in range(n):
                if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
                    return False, f"{d}: off-diagonal ({i + 1},{j + 1})"
        if [list(row) for row in a] != cartan_from_roots(simple_roots(letter, r)):
            return False, f"{d}: differs from Euclidean realization"
        if determinant(a) != gram_determinant_cartan(letter, r):
            return False, f"{d}: determinant"
    return True, "all admissible types rank <= 8"


def check_d4_panel():
    d = build_diagram([("D", 4)])
    expected = {
        frozenset({2, 3}): 3, frozenset({2}): None,
        frozenset({3}): 3, frozenset(): None,
    }
    for lam, wit in expected.items():
        if classify_sets(d, {1, 4}, lam).witness != wit:
            return False, f"theta={{1,4}} lambda={sorted(lam)}"
    for lam in _subsets([1, 3, 4]):
        if classify_sets(d, {2}, lam).vanishes:
            return False, f"theta={{2}} lambda={sorted(lam)}"
    return True, "cases (a)-(e)"


def check_borel(max_rank=8):
    for letter, r in admissible_types(max_rank):
        d = build_diagram([(letter, r)])
        p = parabolic(d)
        for lam in _subsets(d.vertices):
            if classify(lambda_to_class(p, lam)).vanishes != bool(lam):
                return False, f"{d} lambda={lam}"
    return True, "Theta empty: vanishes iff Lambda nonempty"


def check_mod2(trials=1000, seed=0):
    rng = random.Random(seed)
    diagrams = [build_diagram([t]) for t in [("D", 4), ("E", 6), ("F", 4), ("B", 3), ("G", 2)]]
    for _ in range(trials):
        d = rng.choice(diagrams)
        theta = {v for v in d.vertices if rng.random() < 0.4}
        p = parabolic(d, theta)
        coeffs = lambda: tuple(0 if v in theta else rng.randint(-50, 50) for v in d.vertices)  # noqa: E731
        bundle = line_bundle(p, Weight(d, coeffs()))
        shifted = bundle + 2 * Weight(d, coeffs())
        if lambda_of(shifted) != lambda_of(bundle) or classify(shifted) != classify(bundle):
            return False, f"{d} theta={sorted(theta)}"
    return True, f"{trials} random shifts L -> L + 2mu"


def check_rows():
    for spec in [[("A", 1)], [("A", 3)], [("D", 4)], [("A", 1), ("A", 1)], [("G", 2)]]:
        d = build_diagram(spec)
        if len(enumerate_decorations(d)) != 3 ** d.rank:
            return False, str(d)
    return True, "row count 3^n"


CHECKS = [
    ("cartan", check_cartan),
    ("d4-panel", check_d4_panel),
    ("borel", check_borel),
    ("mod2-stability", check_mod2),
    ("enumeration-rows", check_rows),
]


def run_checks() -> list[tuple[str, bool, str]]:
    results = []
    for name, fn in CHECKS:
        ok, detail = fn()
        results.append((name, ok, detail))
    return results
