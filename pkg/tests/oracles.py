"""Independent oracles: edges from Euclidean inner products, criterion by brute force."""

from itertools import product

from wittvanish.euclid import gram_matrix, simple_roots


def euclidean_edges(components):
    """Edge set of a product diagram from Gram matrices of explicit roots."""
    edges, offset = set(), 0
    for letter, rank in components:
        g = gram_matrix(simple_roots(letter, rank))
        for i in range(rank):
            for j in range(i + 1, rank):
                if g[i][j] != 0:
                    edges.add((offset + i + 1, offset + j + 1))
        offset += rank
    return edges


def brute_witnesses(edges, theta, lam):
    """Double loop over Lambda x Theta with raw edge lookups."""
    out = []
    for a in sorted(lam):
        ok = True
        for b in theta:
            if (min(a, b), max(a, b)) in edges:
                ok = False
        if ok:
            out.append(a)
    return tuple(out)


def all_decorations(n):
    """Every (theta, lambda) as sets, via ternary labels per vertex."""
    for labels in product((0, 1, 2), repeat=n):
        theta = frozenset(v + 1 for v in range(n) if labels[v] == 1)
        lam = frozenset(v + 1 for v in range(n) if labels[v] == 2)
        yield theta, lam
