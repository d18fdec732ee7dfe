"""Brute-force oracles and corpus generators shared across the test suite.

Everything here is deliberately independent of the library's own algorithms:
cap ends come from a stack matcher, extension counts from filtering raw
permutations, Schur weights from semistandard tableaux, lattice points from
plain nested loops.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from superchar.weights import CROSS, GREATER, LESS, HighestWeight, WeightDiagram


def dominant_weights(m, n, lo, hi):
    out = []
    for lam in itertools.product(range(hi, lo - 1, -1), repeat=m):
        if any(lam[i] < lam[i + 1] for i in range(m - 1)):
            continue
        for mu in itertools.product(range(hi, lo - 1, -1), repeat=n):
            if any(mu[j] < mu[j + 1] for j in range(n - 1)):
                continue
            out.append(HighestWeight(m, n, lam, mu))
    return out


def random_diagram(rng, lo=0, hi=8, r_max=4, with_core=True) -> WeightDiagram:
    positions = list(range(lo, hi + 1))
    rng.shuffle(positions)
    r = rng.randint(0, r_max)
    symbols = {p: CROSS for p in positions[:r]}
    rest = positions[r:]
    if with_core and rest:
        k = rng.randint(0, min(2, len(rest)))
        for p in rest[:k]:
            symbols[p] = rng.choice([LESS, GREATER])
    return WeightDiagram(symbols)


def stack_cap_ends(f: WeightDiagram) -> dict[int, int]:
    """Match crosses to circles like balanced parentheses: scan left to right,
    every circle closes the most recent open cross."""
    crosses = f.crosses
    if not crosses:
        return {}
    open_stack: list[int] = []
    ends: dict[int, int] = {}
    pos = min(crosses)
    while len(ends) < len(crosses):
        sym = f.symbol(pos)
        if sym == CROSS:
            open_stack.append(pos)
        elif sym is None and open_stack:
            ends[open_stack.pop()] = pos
        pos += 1
    return ends


def brute_extension_count(r: int, edges) -> int:
    """Count permutations respecting every edge by filtering all r! of them."""
    total = 0
    for perm in itertools.permutations(range(r)):
        if all(perm[i] < perm[j] for i, j in edges):
            total += 1
    return total


def all_rooted_forests(max_vertices: int):
    """Canonical unlabeled rooted forests with up to max_vertices nodes, as
    (vertex_count, edge tuple) pairs with edges pointing away from roots and
    parents numbered before children."""

    @lru_cache(maxsize=None)
    def trees(n):
        # a tree of size n is a root plus a forest of size n - 1
        if n == 1:
            return [()]
        return [f for f in forests(n - 1)]

    @lru_cache(maxsize=None)
    def forests(n):
        # multisets of trees totaling n, canonical (sorted) tuples
        if n == 0:
            return [()]
        out = set()
        for first_size in range(1, n + 1):
            for t in trees(first_size):
                for rest in forests(n - first_size):
                    out.add(tuple(sorted(((first_size, t),) + rest)))
        return sorted(out)

    def materialize(forest) -> tuple[int, tuple[tuple[int, int], ...]]:
        edges = []
        counter = 0

        def walk_tree(children, parent):
            nonlocal counter
            my_id = counter
            counter += 1
            if parent is not None:
                edges.append((parent, my_id))
            for size, sub in children:
                walk_tree(sub, my_id)

        for size, tree in forest:
            walk_tree(tree, None)
        return counter, tuple(edges)

    out = []
    for n in range(1, max_vertices + 1):
        for forest in forests(n):
            out.append(materialize(forest))
    return out


def ssyt_weight_multiplicities(lam: tuple[int, ...], k: int) -> dict[tuple[int, ...], int]:
    """Weight multiplicities of the gl(k) irreducible from semistandard
    tableaux; Laurent highest weights are translated to a partition first."""
    if len(lam) != k:
        raise ValueError("lam must have k entries")
    base = lam[-1]
    shape = tuple(x - base for x in lam)
    rows = [list(itertools.combinations_with_replacement(range(1, k + 1), width))
            for width in shape]
    counts: dict[tuple[int, ...], int] = {}

    def fill(i, prev):
        if i == k:
            weight = [0] * k
            for row in chosen:
                for entry in row:
                    weight[entry - 1] += 1
            w = tuple(x + base for x in weight)
            counts[w] = counts.get(w, 0) + 1
            return
        for row in rows[i]:
            if prev is not None and any(row[c] <= prev[c] for c in range(len(row))):
                continue
            chosen.append(row)
            fill(i + 1, row)
            chosen.pop()

    chosen: list = []
    fill(0, None)
    return counts


def weyl_dimension(lam: tuple[int, ...]) -> int:
    """Dimension of the gl(k) irreducible by the product formula."""
    k = len(lam)
    num = den = 1
    for i in range(k):
        for j in range(i + 1, k):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    dim, rem = divmod(num, den)
    assert rem == 0
    return dim


def brute_lattice_points(bounds, chains, cutoff):
    """Nested-loop enumeration of bounded order-region points (cross space)."""
    r = len(bounds)
    out = []
    for point in itertools.product(*[range(cutoff, b + 1) for b in bounds]):
        if all(point[i] <= point[j] for i, j in chains):
            out.append(point)
    return sorted(out)
