"""Euclidean realizations of the simple roots (Bourbaki tables).

This is an independent route to Cartan data: it never looks at the
hard-coded tables in :mod:`wittvanish.dynkin`, only at explicit root
vectors and their inner products.  Used by the self-check and the tests.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["simple_roots", "gram_matrix", "cartan_from_roots", "gram_determinant_cartan"]

_H = Fraction(1, 2)


def _e(i: int, dim: int, c=1) -> list[Fraction]:
    v = [Fraction(0)] * dim
    v[i - 1] = Fraction(c)
    return v


def _sub(u, v):
    return [a - b for a, b in zip(u, v)]


def _add(u, v):
    return [a + b for a, b in zip(u, v)]


def _e8_roots() -> list[list[Fraction]]:
    dim = 8
    e = lambda i: _e(i, dim)  # noqa: E731
    a1 = [_H, -_H, -_H, -_H, -_H, -_H, -_H, _H]
    roots = [a1, _add(e(1), e(2)), _sub(e(2), e(1))]
    for i in range(3, 8):
        roots.append(_sub(e(i), e(i - 1)))
    return roots


def simple_roots(letter: str, rank: int) -> list[list[Fraction]]:
    """Simple roots alpha_1..alpha_rank as rational vectors."""
    n = rank
    if letter == "A":
        dim = n + 1
        return [_sub(_e(i, dim), _e(i + 1, dim)) for i in range(1, n + 1)]
    if letter in "BCD":
        dim = n
        roots = [_sub(_e(i, dim), _e(i + 1, dim)) for i in range(1, n)]
        if letter == "B":
            roots.append(_e(n, dim))
        elif letter == "C":
            roots.append(_e(n, dim, 2))
        else:
            roots.append(_add(_e(n - 1, dim), _e(n, dim)))
        return roots
    if letter == "E":
        # E6 and E7 span sub-lattices of the E8 realization
        return _e8_roots()[:n]
    if letter == "F":
        dim = 4
        return [
            _sub(_e(2, dim), _e(3, dim)),
            _sub(_e(3, dim), _e(4, dim)),
            _e(4, dim),
            [_H, -_H, -_H, -_H],
        ]
    if letter == "G":
        return [[Fraction(1), Fraction(-1), Fraction(0)],
                [Fraction(-2), Fraction(1), Fraction(1)]]
    raise ValueError(f"unknown type {letter}{rank}")


def _dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def gram_matrix(roots) -> list[list[Fraction]]:
    return [[_dot(u, v) for v in roots] for u in roots]


def cartan_from_roots(roots) -> list[list[int]]:
    """``a[i][j] = 2 (alpha_j, alpha_i) / (alpha_i, alpha_i)``."""
    g = gram_matrix(roots)
    out = []
    for i, row in enumerate(g):
        entries = [2 * x / g[i][i] for x in row]
        assert all(x.denominator == 1 for x in entries)
        out.append([int(x) for x in entries])
    return out


def _fraction_det(m) -> Fraction:
    a = [list(map(Fraction, row)) for row in m]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        pivot = next((r for r in range(k, n) if a[r][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        for r in range(k + 1, n):
            f = a[r][k] / a[k][k]
            for c in range(k, n):
                a[r][c] -= f * a[k][c]
    return det


def gram_determinant_cartan(letter: str, rank: int) -> int:
    """det of the Cartan matrix, obtained as ``2^n det(Gram) / prod |alpha_i|^2``."""
    roots = simple_roots(letter, rank)
    g = gram_matrix(roots)
    value = Fraction(2) ** rank * _fraction_det(g)
    for i in range(rank):
        value /= g[i][i]
    assert value.denominator == 1
    return int(value)
