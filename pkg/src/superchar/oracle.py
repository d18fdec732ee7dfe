"""Independent verification oracle: the irreducible character as a signed,
filtration-convergent sum of Kac characters indexed by order-preserving
injections of the crosses.

Every result of the closed formula engines is checked against this expansion.
A second route sums plain alternants over the lattice points of the order
polyhedron and must agree; the two routes carry independently coded sign
conventions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .caps import cap_diagram, projective_family
from .charring import (
    CharPoly,
    Window,
    _acc,
    alt_J,
    divide_exact,
    even_positive_roots,
    kac_char_window,
    pi_map,
    q_odd_product,
    rho_exponent,
)
from .latticegen import OrderPolyhedron, enumerate_lattice
from .weights import CROSS, GREATER, LESS, WeightDiagram, weight_from_diagram


class OracleInstability(RuntimeError):
    """Deepening the enumeration cutoff changed the windowed result."""

    def __init__(self, message: str, suggested_cutoff: int):
        super().__init__(message)
        self.suggested_cutoff = suggested_cutoff


@dataclass(frozen=True)
class WeightMap:
    """Injective, nesting-order-preserving, non-increasing relocation of the
    crosses of a diagram."""

    phi: dict[int, int]

    def image_diagram(self, f: WeightDiagram) -> WeightDiagram:
        symbols = {p: s for p, s in f.symbols.items() if s != CROSS}
        for a, b in self.phi.items():
            symbols[b] = CROSS
        return WeightDiagram(symbols)

    def sorted_items(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.phi.items()))


def enumerate_weight_maps(f: WeightDiagram, cutoff: int) -> list[WeightMap]:
    """All relocations with every value >= cutoff, depth-first over the
    crosses in increasing position order.

    Constraints: values never exceed their cross, respect the cap-nesting
    order strictly, avoid each other and every core position.
    """
    crosses = f.crosses
    if crosses and cutoff > min(crosses):
        raise ValueError("cutoff must not exceed the smallest cross")
    cf = cap_diagram(f)
    cores = set(f.core_positions)
    ancestors: dict[int, list[int]] = {
        b: [a for a in crosses if cf.nested_under(a, b)] for b in crosses}

    out: list[WeightMap] = []
    chosen: dict[int, int] = {}

    def descend(k: int):
        if k == len(crosses):
            out.append(WeightMap(dict(chosen)))
            return
        c = crosses[k]
        lo = cutoff
        for a in ancestors[c]:
            lo = max(lo, chosen[a] + 1)
        used = set(chosen.values())
        for val in range(lo, c + 1):
            if val in used or val in cores:
                continue
            chosen[c] = val
            descend(k + 1)
            del chosen[c]

    descend(0)
    return out


def epsilon_sign(f: WeightDiagram, wm: WeightMap) -> int:
    """Sign of a relocation: parity of the total displacement, discounting the
    core symbols jumped over.  Invariant under core stripping."""
    crosses = set(f.crosses)
    if set(wm.phi) != crosses:
        raise ValueError("map must be defined exactly on the crosses")
    cores = sorted(f.core_positions)
    total = 0
    for a, b in wm.phi.items():
        if b > a:
            raise ValueError(f"relocation {a} -> {b} goes right")
        between = sum(1 for c in cores if b < c < a)
        total += a - b - between
    return -1 if total % 2 else 1


def _suggested_cutoff(f: WeightDiagram, window: Window) -> int:
    """Sound per-value cutoff: a relocation with any value below it cannot
    contribute inside the window, by the block-sum invariant."""
    crosses = f.crosses
    if not crosses:
        return 0
    m = f.m
    # Kac character terms have even-block sum in [sum(lam(g)) - m*n, sum(lam(g))],
    # with sum(lam(g)) = sum(values) + sum(core '>') + m(m-1)/2.
    window_lo = sum(lo for lo, _ in window.eps)
    a_core = sum(f.greater_positions)
    value_sum_lo = window_lo - m * (m - 1) // 2 - a_core
    return value_sum_lo - (sum(crosses) - min(crosses)) - 1


def _window_reachable(g: WeightDiagram, window: Window) -> bool:
    """Exact block-sum test: can any Kac character term of g fall in the box?"""
    chi = weight_from_diagram(g)
    m, n = g.m, g.n
    lam_sum, mu_sum = sum(chi.lam), sum(chi.mu)
    eps_lo = sum(lo for lo, _ in window.eps)
    eps_hi = sum(hi for _, hi in window.eps)
    delta_lo = sum(lo for lo, _ in window.delta)
    delta_hi = sum(hi for _, hi in window.delta)
    # odd factor lowers the even-block sum and raises the odd one, each by
    # at most m*n
    if lam_sum < eps_lo or lam_sum - m * n > eps_hi:
        return False
    if mu_sum > delta_hi or mu_sum + m * n < delta_lo:
        return False
    return True


def oracle_char(f: WeightDiagram, window: Window,
                cutoff: int | None = None) -> CharPoly:
    """Signed sum of Kac characters over all relocations with values above the
    cutoff, restricted to the window; recomputed three deeper and required to
    agree."""
    if cutoff is None:
        cutoff = _suggested_cutoff(f, window)
        if f.crosses:
            cutoff = min(cutoff, min(f.crosses))
    first = _oracle_sum(f, window, cutoff)
    again = _oracle_sum(f, window, cutoff - 3)
    if first != again:
        raise OracleInstability(
            f"windowed expansion changed between cutoff {cutoff} and {cutoff - 3}",
            suggested_cutoff=cutoff - 3)
    return first


def _oracle_sum(f: WeightDiagram, window: Window, cutoff: int) -> CharPoly:
    m, n = f.m, f.n
    acc = CharPoly.zero(m, n)
    for wm in enumerate_weight_maps(f, cutoff):
        g = wm.image_diagram(f)
        if not _window_reachable(g, window):
            continue
        part = kac_char_window(g, window)
        if part.is_zero():
            continue
        acc = acc + part.scale(epsilon_sign(f, wm))
    return acc


def oracle_char_lattice(f: WeightDiagram, window: Window,
                        cutoff: int | None = None) -> CharPoly:
    """Second oracle route: sum plain alternants over the lattice points of
    the order polyhedron (signs from the position sums), then divide by the
    normalized denominator.  Sign conventions are coded independently of
    epsilon_sign."""
    m, n = f.m, f.n
    crosses = f.crosses
    base_delta = sum(-b for b in _b_list(f))
    slice_lo, slice_hi = base_delta, base_delta + m * n
    if cutoff is None:
        cutoff = (min(crosses) if crosses else 0) - m * n - 1

    entries = pi_map(f)
    positions = f.positions()
    cross_slots = [k for k, p in enumerate(positions) if f.symbol(p) == CROSS]
    poly = OrderPolyhedron(
        dim=len(positions),
        bounds={k: positions[k] for k in cross_slots},
        pinned={k: positions[k] for k in range(len(positions))
                if k not in set(cross_slots)},
        chain_edges=_chain_edges(f, positions))

    sign_f = -1 if sum(crosses) % 2 else 1
    total: dict[tuple[int, ...], object] = {}
    for x in enumerate_lattice(poly, cutoff):
        cross_sum = sum(x[k] for k in cross_slots)
        sgn = sign_f * (-1 if cross_sum % 2 else 1)
        vec = [0] * (m + n)
        for k, entry in enumerate(entries):
            for t in range(m + n):
                vec[t] += x[k] * entry.exponent[t]
        if sum(vec[m:]) > slice_hi:
            continue
        _acc(total, tuple(vec), sgn)
    t = alt_J(CharPoly(m, n, total))
    folded: dict[tuple[int, ...], object] = {}
    for v, c in t.terms.items():
        for qv, qc in q_odd_product(m, n).terms.items():
            w = tuple(a + b for a, b in zip(v, qv))
            if slice_lo <= sum(w[m:]) <= slice_hi:
                _acc(folded, w, c * qc)
    result = CharPoly(m, n, folded)
    for alpha in even_positive_roots(m, n):
        result = divide_exact(result, alpha)
    result = result.shift(tuple(-x for x in rho_exponent(m, n)))
    return result.restrict(window)


def _b_list(f: WeightDiagram) -> list[int]:
    return sorted(set(f.crosses) | set(f.less_positions))


def _chain_edges(f: WeightDiagram, positions: tuple[int, ...]) -> frozenset:
    cf = cap_diagram(f)
    index = {p: k for k, p in enumerate(positions)}
    edges = set()
    for a in f.crosses:
        for b in f.crosses:
            if a < b and cf.nested_under(a, b):
                edges.add((index[a], index[b]))
    return frozenset(edges)


# ---------------------------------------------------------------------------
# projective / irreducible orthogonality

@dataclass(frozen=True)
class OrthogonalityReport:
    ok: bool
    family_size: int
    interior_rows: int
    excluded_rows: tuple[WeightDiagram, ...]


def _diagram_family(window: tuple[int, int], m: int, n: int,
                    r_max: int) -> list[WeightDiagram]:
    """All diagrams of the (m, n) family supported in the position window with
    at most r_max crosses."""
    from itertools import combinations

    lo, hi = window
    slots = list(range(lo, hi + 1))
    out = []
    for r in range(0, min(m, n, r_max) + 1):
        for cross_set in combinations(slots, r):
            rest1 = [p for p in slots if p not in cross_set]
            for gt_set in combinations(rest1, m - r):
                rest2 = [p for p in rest1 if p not in gt_set]
                for lt_set in combinations(rest2, n - r):
                    symbols = {p: CROSS for p in cross_set}
                    symbols.update({p: GREATER for p in gt_set})
                    symbols.update({p: LESS for p in lt_set})
                    out.append(WeightDiagram(symbols))
    return out


def orthogonality_report(window: tuple[int, int], m: int, n: int,
                         r_max: int) -> OrthogonalityReport:
    """Pair the projective-family matrix against the signed relocation-count
    matrix; their product must be the identity on every row whose projective
    family stays inside the window."""
    lo, hi = window
    family = _diagram_family(window, m, n, r_max)

    def in_window(d: WeightDiagram) -> bool:
        ps = d.positions()
        return not ps or (lo <= min(ps) and max(ps) <= hi)

    # signed relocation counts: b_rows[g][h] sums the signs of relocations of
    # g whose image diagram is h
    b_rows: dict[WeightDiagram, dict[WeightDiagram, int]] = {}
    for g in family:
        row: dict[WeightDiagram, int] = {}
        for wm in enumerate_weight_maps(g, lo):
            h = wm.image_diagram(g)
            row[h] = row.get(h, 0) + epsilon_sign(g, wm)
        b_rows[g] = row

    # pairing row f against column g contracts over the middle diagram h:
    # sum of a[f][h] * b[g][h] must be 1 exactly when f == g
    ok = True
    interior = 0
    excluded = []
    for f in family:
        members = projective_family(f)
        if not all(in_window(h) for h in members):
            excluded.append(f)
            continue
        interior += 1
        for g in family:
            pairing = sum(b_rows[g].get(h, 0) for h in members)
            if pairing != (1 if g == f else 0):
                ok = False
    return OrthogonalityReport(ok, len(family), interior, tuple(excluded))


def orthogonality_check(window: tuple[int, int], m: int, n: int,
                        r_max: int) -> bool:
    return orthogonality_report(window, m, n, r_max).ok
