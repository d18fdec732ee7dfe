"""Exact Laurent-polynomial character ring for gl(m|n) and both irreducible
character engines.

Exponent vectors live in Z^(m+n): the first m slots are even (x = e^eps)
coordinates, the last n odd (y = e^delta).  The alternation J, the normalized
Weyl-type denominator, Kac characters, and the closed vertex-cone formula are
all computed with exact integer/rational arithmetic; truncated geometric
series stand in for the odd denominator factors, certified by re-running at a
deeper truncation.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .capgraph import gamma, theta, theta_tilde
from .caps import cap_diagram, segment_data
from .weights import (
    CROSS,
    GREATER,
    LESS,
    HighestWeight,
    WeightDiagram,
    ab_from_diagram,
    diagram_of_weight,
    weight_from_diagram,
)

Vec = tuple[int, ...]


class ExactDivisionError(ArithmeticError):
    """A division the normalization guarantees to be exact left a remainder."""


class TruncationInstability(RuntimeError):
    """Deepening the series truncation changed the output."""

    def __init__(self, message: str, suggested_depth: int):
        super().__init__(message)
        self.suggested_depth = suggested_depth


class CharPoly:
    """Laurent polynomial over Q in m even and n odd variables.

    Terms map exponent vectors to nonzero coefficients (int or Fraction);
    the zero polynomial has no terms.
    """

    __slots__ = ("m", "n", "terms")

    def __init__(self, m: int, n: int, terms: dict[Vec, object] | None = None):
        self.m = m
        self.n = n
        self.terms = {v: _tidy(c) for v, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls, m: int, n: int) -> "CharPoly":
        return cls(m, n)

    @classmethod
    def monomial(cls, m: int, n: int, exps: Vec, coeff=1) -> "CharPoly":
        return cls(m, n, {tuple(exps): coeff})

    def _like(self, terms: dict[Vec, object]) -> "CharPoly":
        return CharPoly(self.m, self.n, terms)

    def coefficient(self, exps: Vec):
        return self.terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (isinstance(other, CharPoly) and self.m == other.m
                and self.n == other.n and self.terms == other.terms)

    def __add__(self, other: "CharPoly") -> "CharPoly":
        out = dict(self.terms)
        for v, c in other.terms.items():
            _acc(out, v, c)
        return self._like(out)

    def __sub__(self, other: "CharPoly") -> "CharPoly":
        out = dict(self.terms)
        for v, c in other.terms.items():
            _acc(out, v, -c)
        return self._like(out)

    def __neg__(self) -> "CharPoly":
        return self._like({v: -c for v, c in self.terms.items()})

    def scale(self, factor) -> "CharPoly":
        if factor == 0:
            return self.zero(self.m, self.n)
        return self._like({v: c * factor for v, c in self.terms.items()})

    def __mul__(self, other: "CharPoly") -> "CharPoly":
        out: dict[Vec, object] = {}
        for v1, c1 in self.terms.items():
            for v2, c2 in other.terms.items():
                _acc(out, tuple(a + b for a, b in zip(v1, v2)), c1 * c2)
        return self._like(out)

    def shift(self, vec: Vec) -> "CharPoly":
        return self._like({tuple(a + b for a, b in zip(v, vec)): c
                           for v, c in self.terms.items()})

    def delta_sum_slice(self, lo: int, hi: int) -> "CharPoly":
        """Keep terms whose odd-exponent sum lies in [lo, hi]."""
        m = self.m
        return self._like({v: c for v, c in self.terms.items()
                           if lo <= sum(v[m:]) <= hi})

    def restrict(self, window: "Window") -> "CharPoly":
        return self._like({v: c for v, c in self.terms.items()
                           if window.contains(v)})

    def eval_at_ones(self):
        return sum(self.terms.values())

    def sorted_terms(self) -> list[tuple[Vec, object]]:
        """Graded (total degree) then lexicographic, descending."""
        return sorted(self.terms.items(),
                      key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def __repr__(self) -> str:
        body = ", ".join(f"{v}: {c}" for v, c in self.sorted_terms()[:8])
        tail = ", ..." if len(self.terms) > 8 else ""
        return f"CharPoly(m={self.m}, n={self.n}, {{{body}{tail}}})"


def _tidy(c):
    """Collapse integral Fractions to plain ints."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _acc(d: dict, key, val) -> None:
    cur = d.get(key)
    if cur is None:
        if val != 0:
            d[key] = val
    else:
        cur = cur + val
        if cur == 0:
            del d[key]
        else:
            d[key] = cur


@dataclass(frozen=True)
class Window:
    """Per-coordinate exponent box: (lo, hi) for each even and odd slot."""

    eps: tuple[tuple[int, int], ...]
    delta: tuple[tuple[int, int], ...]

    def contains(self, v: Vec) -> bool:
        m = len(self.eps)
        return (all(lo <= x <= hi for x, (lo, hi) in zip(v[:m], self.eps))
                and all(lo <= x <= hi for x, (lo, hi) in zip(v[m:], self.delta)))

    @classmethod
    def hull(cls, p: CharPoly, margin: int = 0) -> "Window":
        """Bounding box of a polynomial's support, optionally padded."""
        if p.is_zero():
            raise ValueError("zero polynomial has no support hull")
        m, n = p.m, p.n
        eps = []
        for i in range(m):
            vals = [v[i] for v in p.terms]
            eps.append((min(vals) - margin, max(vals) + margin))
        delta = []
        for j in range(n):
            vals = [v[m + j] for v in p.terms]
            delta.append((min(vals) - margin, max(vals) + margin))
        return cls(tuple(eps), tuple(delta))


# ---------------------------------------------------------------------------
# root systems and the normalized denominator

def even_positive_roots(m: int, n: int) -> list[Vec]:
    roots = []
    for i in range(m):
        for j in range(i + 1, m):
            v = [0] * (m + n)
            v[i], v[j] = 1, -1
            roots.append(tuple(v))
    for k in range(n):
        for l in range(k + 1, n):
            v = [0] * (m + n)
            v[m + k], v[m + l] = 1, -1
            roots.append(tuple(v))
    return roots


def odd_positive_roots(m: int, n: int) -> list[Vec]:
    roots = []
    for i in range(m):
        for j in range(n):
            v = [0] * (m + n)
            v[i], v[m + j] = 1, -1
            roots.append(tuple(v))
    return roots


def rho_exponent(m: int, n: int) -> Vec:
    return tuple(1 - i for i in range(1, m + 1)) + tuple(m - j for j in range(1, n + 1))


def chi_plus_rho_exponent(chi: HighestWeight) -> Vec:
    rho = rho_exponent(chi.m, chi.n)
    return tuple(c + r for c, r in zip(chi.lam + chi.mu, rho))


@lru_cache(maxsize=None)
def q_odd_product(m: int, n: int) -> CharPoly:
    """The full odd factor: product over all eps_i - delta_j of (1 + e^{-alpha})."""
    p = CharPoly.monomial(m, n, (0,) * (m + n))
    for alpha in odd_positive_roots(m, n):
        neg = tuple(-a for a in alpha)
        p = p * CharPoly(m, n, {(0,) * (m + n): 1, neg: 1})
    return p


def dhat_denominator(m: int, n: int) -> tuple[CharPoly, CharPoly]:
    """Normalized Weyl-type denominator as a (numerator, denominator) pair:
    e^rho * prod_even (1 - e^{-alpha})  over  prod_odd (1 + e^{-alpha}).

    The monomial normalization is the unique one for which numerator times a
    Kac character equals denominator times the plain alternant of the Kac
    module's shifted highest weight, with integer exponents throughout.
    """
    num = CharPoly.monomial(m, n, rho_exponent(m, n))
    for alpha in even_positive_roots(m, n):
        neg = tuple(-a for a in alpha)
        num = num * CharPoly(m, n, {(0,) * (m + n): 1, neg: -1})
    return num, q_odd_product(m, n)


# ---------------------------------------------------------------------------
# alternation

@lru_cache(maxsize=None)
def _signed_perms(k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    out = []
    for perm in permutations(range(k)):
        inv = sum(1 for a in range(k) for b in range(a + 1, k)
                  if perm[a] > perm[b])
        out.append((perm, -1 if inv % 2 else 1))
    return tuple(out)


def _sort_desc_signed(seq: Vec) -> tuple[int, Vec | None]:
    """(sign, strictly decreasing rearrangement), or (0, None) on a repeat."""
    if len(set(seq)) != len(seq):
        return 0, None
    order = sorted(range(len(seq)), key=lambda i: -seq[i])
    inv = sum(1 for a in range(len(order)) for b in range(a + 1, len(order))
              if order[a] > order[b])
    return (-1 if inv % 2 else 1), tuple(seq[i] for i in order)


def alt_J(p: CharPoly) -> CharPoly:
    """Signed sum over separate permutations of the even and odd exponents.

    Terms are first folded onto the strictly decreasing representative of
    their orbit (terms with a repeated entry die), then each surviving
    representative is expanded over the full signed orbit.
    """
    m, n = p.m, p.n
    folded: dict[Vec, object] = {}
    for v, c in p.terms.items():
        s1, eps = _sort_desc_signed(v[:m])
        if s1 == 0:
            continue
        s2, delta = _sort_desc_signed(v[m:])
        if s2 == 0:
            continue
        _acc(folded, eps + delta, c * s1 * s2)
    out: dict[Vec, object] = {}
    perms_m = _signed_perms(m)
    perms_n = _signed_perms(n)
    for v, c in folded.items():
        eps, delta = v[:m], v[m:]
        for pm, sm in perms_m:
            left = tuple(eps[i] for i in pm)
            cs = c * sm
            for pn, sn in perms_n:
                _acc(out, left + tuple(delta[j] for j in pn), cs * sn)
    return CharPoly(m, n, out)


# ---------------------------------------------------------------------------
# exact division

def _ht(v: Vec) -> int:
    """Linear functional strictly positive on every positive root: the dot
    product with (m+n, m+n-1, ..., 1)."""
    k = len(v)
    return sum((k - i) * x for i, x in enumerate(v))


def divide_exact(p: CharPoly, alpha: Vec, plus: bool = False) -> CharPoly:
    """Exact quotient p / (1 -+ e^{-alpha}); raises if a remainder appears.

    Synthetic division from the top of the height order: each emitted
    quotient term pushes a single correction strictly downward, and an exact
    division never sends the working polynomial below the dividend's floor.
    """
    if p.is_zero():
        return p
    drop = tuple(-a for a in alpha)
    corr = -1 if plus else 1
    floor = min(_ht(v) for v in p.terms)
    work = dict(p.terms)
    heap = [(-_ht(v), v) for v in work]
    heapq.heapify(heap)
    quot: dict[Vec, object] = {}
    while heap:
        negh, v = heapq.heappop(heap)
        c = work.get(v)
        if not c:
            continue
        if -negh < floor:
            raise ExactDivisionError(
                f"division by (1 {'+' if plus else '-'} e^-{alpha}) left a remainder")
        del work[v]
        _acc(quot, v, c)
        w = tuple(a + b for a, b in zip(v, drop))
        fresh = w not in work
        _acc(work, w, corr * c)
        if fresh and w in work:
            heapq.heappush(heap, (-_ht(w), w))
    return CharPoly(p.m, p.n, quot)


# ---------------------------------------------------------------------------
# classical block characters (Laurent Schur polynomials)

@lru_cache(maxsize=None)
def _schur_block(lam: tuple[int, ...]) -> tuple[tuple[Vec, int], ...]:
    """Weight multiplicities of the gl(k) irreducible with highest weight lam,
    via the ratio of alternants with exact division."""
    k = len(lam)
    staircase = tuple(range(k - 1, -1, -1))
    shifted = tuple(l + s for l, s in zip(lam, staircase))
    # one-block alternant in a (k, 0)-variable ring; reuse alt_J with n=0
    numerator = alt_J(CharPoly.monomial(k, 0, shifted))
    for alpha in even_positive_roots(k, 0):
        numerator = divide_exact(numerator, alpha)
    schur = numerator.shift(tuple(-s for s in staircase))
    return tuple(sorted(schur.terms.items()))


def weyl0_character(chi: HighestWeight) -> CharPoly:
    """Character of the even-part irreducible: a product of two Laurent Schur
    polynomials, one per block."""
    m, n = chi.m, chi.n
    out: dict[Vec, object] = {}
    for ve, ce in _schur_block(chi.lam):
        for vd, cd in _schur_block(chi.mu):
            out[ve + vd] = ce * cd
    return CharPoly(m, n, out)


@lru_cache(maxsize=None)
def gt_multiplicity(lam: tuple[int, ...], w: Vec) -> int:
    """Weight multiplicity in the gl(k) irreducible by counting interlacing
    patterns row by row (Laurent weights allowed: everything is translated to
    a non-negative base first)."""
    k = len(lam)
    if sum(lam) != sum(w):
        return 0
    if k == 1:
        return 1 if lam[0] == w[0] else 0
    base = lam[-1]
    if base != 0:
        return gt_multiplicity(tuple(x - base for x in lam),
                               tuple(x - base for x in w))
    target = sum(lam) - w[-1]
    if target < 0:
        return 0

    def rows(i: int, remaining: int, prefix: tuple[int, ...]) -> int:
        # entry i of the length-(k-1) middle row, interlacing lam
        lo = lam[i + 1]
        hi = min(lam[i], prefix[-1]) if prefix else lam[i]
        if i == k - 2:
            if lo <= remaining <= hi:
                return gt_multiplicity(prefix + (remaining,), w[:-1])
            return 0
        rest_lo = sum(lam[j + 1] for j in range(i + 1, k - 1))
        total = 0
        for val in range(lo, hi + 1):
            if remaining - val < rest_lo:
                break
            total += rows(i + 1, remaining - val, prefix + (val,))
        return total

    return rows(0, target, ())


def schur_window(lam: tuple[int, ...],
                 box: tuple[tuple[int, int], ...]) -> dict[Vec, int]:
    """Nonzero weight multiplicities of the gl(k) irreducible inside a box."""
    k = len(lam)
    total = sum(lam)
    out: dict[Vec, int] = {}

    def fill(i: int, acc: int, prefix: tuple[int, ...]):
        if i == k:
            if acc == total:
                mult = gt_multiplicity(lam, prefix)
                if mult:
                    out[prefix] = mult
            return
        lo, hi = box[i]
        rest_lo = sum(box[j][0] for j in range(i + 1, k))
        rest_hi = sum(box[j][1] for j in range(i + 1, k))
        for val in range(lo, hi + 1):
            if acc + val + rest_lo > total or acc + val + rest_hi < total:
                continue
            fill(i + 1, acc + val, prefix + (val,))

    fill(0, 0, ())
    return out


# ---------------------------------------------------------------------------
# Kac characters

def kac_char(f: WeightDiagram, check: bool = True) -> CharPoly:
    """Character of the Kac module of a diagram.

    Product route: odd exterior factor times the even-block character.  With
    check=True the alternant route (divide the shifted alternant by the
    normalized denominator) is recomputed and both must agree.
    """
    chi = weight_from_diagram(f)
    m, n = chi.m, chi.n
    product_route = weyl0_character(chi) * q_odd_product(m, n)
    if check:
        alternant_route = _kac_by_division(chi)
        assert product_route == alternant_route, (
            "Kac character normalization mismatch; the denominator "
            "convention is broken")
    return product_route


def _kac_by_division(chi: HighestWeight) -> CharPoly:
    m, n = chi.m, chi.n
    omega = chi_plus_rho_exponent(chi)
    t = alt_J(CharPoly.monomial(m, n, omega)) * q_odd_product(m, n)
    for alpha in even_positive_roots(m, n):
        t = divide_exact(t, alpha)
    return t.shift(tuple(-x for x in rho_exponent(m, n)))


def kac_char_window(f: WeightDiagram, window: Window) -> CharPoly:
    """Kac character restricted to a box, computed without expanding the whole
    module: block multiplicities come from pattern counts on a widened box,
    then the odd factor is convolved in."""
    chi = weight_from_diagram(f)
    m, n = chi.m, chi.n
    q = q_odd_product(m, n)
    # odd-factor exponents lie in [-n, 0] per even slot and [0, m] per odd slot
    eps_box = tuple((lo, hi + n) for lo, hi in window.eps)
    delta_box = tuple((lo - m, hi) for lo, hi in window.delta)
    s_eps = schur_window(chi.lam, eps_box)
    s_delta = schur_window(chi.mu, delta_box)
    out: dict[Vec, object] = {}
    for qv, qc in q.terms.items():
        qe, qd = qv[:m], qv[m:]
        for ve, ce in s_eps.items():
            we = tuple(a + b for a, b in zip(ve, qe))
            if any(not (lo <= x <= hi) for x, (lo, hi) in zip(we, window.eps)):
                continue
            for vd, cd in s_delta.items():
                wd = tuple(a + b for a, b in zip(vd, qd))
                if any(not (lo <= x <= hi) for x, (lo, hi) in zip(wd, window.delta)):
                    continue
                _acc(out, we + wd, qc * ce * cd)
    return CharPoly(m, n, out)


# ---------------------------------------------------------------------------
# evaluation data

@dataclass(frozen=True)
class EvEntry:
    """Image of one diagram position under the evaluation substitution."""

    position: int
    symbol: str
    eps_index: int | None
    delta_index: int | None
    exponent: Vec
    sign: int


def _position_entries(f: WeightDiagram, signed: bool) -> list[EvEntry]:
    ab = ab_from_diagram(f)
    m, n = ab.m, ab.n
    a_rank = {a: i + 1 for i, a in enumerate(ab.A)}
    b_rank = {b: j + 1 for j, b in enumerate(ab.B)}
    entries = []
    for pos in f.positions():
        sym = f.symbol(pos)
        vec = [0] * (m + n)
        if sym == GREATER:
            i = a_rank[pos]
            vec[i - 1] = 1
            entries.append(EvEntry(pos, sym, i, None, tuple(vec), 1))
        elif sym == LESS:
            j = b_rank[pos]
            vec[m + j - 1] = -1
            entries.append(EvEntry(pos, sym, None, j, tuple(vec), 1))
        else:
            i, j = a_rank[pos], b_rank[pos]
            vec[i - 1] = 1
            vec[m + j - 1] = -1
            entries.append(EvEntry(pos, sym, i, j, tuple(vec),
                                   -1 if signed else 1))
    return entries


def ev_map(f: WeightDiagram) -> list[EvEntry]:
    """Evaluation substitution per non-circle position: '>' goes to e^eps_i,
    '<' to e^{-delta_j}, a cross to minus e^{eps_i - delta_j}."""
    return _position_entries(f, signed=True)


def pi_map(f: WeightDiagram) -> list[EvEntry]:
    """Unsigned companion of the evaluation substitution."""
    return _position_entries(f, signed=False)


@dataclass(frozen=True)
class RootData:
    """Positive roots plus the ordered atypical set of a dominant weight."""

    m: int
    n: int
    r0_plus: tuple[Vec, ...]
    r1_plus: tuple[Vec, ...]
    s_chi: tuple[Vec, ...]
    s_chi_pairs: tuple[tuple[int, int], ...]
    kappa_doubled: Vec

    @property
    def atypicality(self) -> int:
        return len(self.s_chi)


def root_data(chi: HighestWeight) -> RootData:
    m, n = chi.m, chi.n
    f = diagram_of_weight(chi)
    pairs = []
    vecs = []
    for entry in ev_map(f):
        if entry.symbol == CROSS:
            pairs.append((entry.eps_index, entry.delta_index))
            vec = [0] * (m + n)
            vec[entry.eps_index - 1] = 1
            vec[m + entry.delta_index - 1] = -1
            vecs.append(tuple(vec))
    kappa2 = tuple([n - m + 1] * m + [-(n - m + 1)] * n)
    return RootData(m, n, tuple(even_positive_roots(m, n)),
                    tuple(odd_positive_roots(m, n)),
                    tuple(vecs), tuple(pairs), kappa2)


# ---------------------------------------------------------------------------
# irreducible characters

def auto_depth(chi: HighestWeight) -> int:
    """Default series truncation: the spread from the largest shifted label
    down to the smallest cross, plus m*n plus slack."""
    f = diagram_of_weight(chi)
    crosses = f.crosses
    spread = (max(ab_from_diagram(f).A) - min(crosses)) if crosses else 0
    return spread + chi.m * chi.n + 5


def irreducible_char(chi: HighestWeight, variant: str = "classic",
                     depth: int | str = "auto") -> CharPoly:
    """Character of the irreducible module with highest weight chi.

    variant 'classic' sums over every spanning subgraph of the nesting
    forest; 'reduced' keeps only non-special edges and compensates with the
    segment shift.  The odd denominators are expanded as truncated geometric
    series; the result must be identical at depth and depth + 5 or a
    TruncationInstability is raised.
    """
    if variant not in ("classic", "reduced"):
        raise ValueError(f"unknown variant {variant!r}")
    depth_val = auto_depth(chi) if depth == "auto" else int(depth)
    if depth_val < 0:
        raise ValueError("depth must be non-negative")
    first = _engine(chi, variant, depth_val)
    again = _engine(chi, variant, depth_val + 5)
    if first != again:
        raise TruncationInstability(
            f"character changed between depth {depth_val} and {depth_val + 5}",
            suggested_depth=depth_val + 5)
    return first


def engine_summand_count(chi: HighestWeight, variant: str = "classic") -> int:
    """Number of subgraph summands the chosen engine touches."""
    from .capgraph import reduced_subgraphs, subgraphs

    f = diagram_of_weight(chi)
    forest = gamma(cap_diagram(f))
    if variant == "classic":
        return len(subgraphs(forest))
    return len(reduced_subgraphs(forest, segment_data(f)))


def _engine(chi: HighestWeight, variant: str, depth: int) -> CharPoly:
    m, n = chi.m, chi.n
    f = diagram_of_weight(chi)
    rd = root_data(chi)
    forest = gamma(cap_diagram(f))
    r = rd.atypicality

    if variant == "classic":
        th = theta(forest)
        shift_coeffs = (0,) * r
        global_sign = 1
    else:
        from .capgraph import reduced_formula_supported

        sd = segment_data(f)
        if not reduced_formula_supported(forest, sd):
            raise ValueError(
                "reduced variant unsupported: a non-special edge of the "
                "nesting forest leaves the core subforest (use the classic "
                "variant for this weight)")
        th, nu, shift_coeffs = theta_tilde(forest, sd)
        global_sign = -1 if nu % 2 else 1

    top = chi_plus_rho_exponent(chi)
    base_delta = sum(top[m:])
    slice_lo, slice_hi = base_delta, base_delta + m * n
    top = tuple(t + sum(s * a[k] for s, a in zip(shift_coeffs, rd.s_chi))
                for k, t in enumerate(top))

    # numerator: e^top * theta(-e^alpha) expanded over the truncated series
    num: dict[Vec, object] = {}
    for exps, coeff in th.terms.items():
        vec = list(top)
        for i, e in enumerate(exps):
            for k in range(m + n):
                vec[k] += e * rd.s_chi[i][k]
        sign = -1 if sum(exps) % 2 else 1
        _acc(num, tuple(vec), coeff * sign * global_sign)

    for i in range(r):
        alpha = rd.s_chi[i]
        nxt: dict[Vec, object] = {}
        for v, c in num.items():
            vec = list(v)
            for j in range(depth + 1):
                w = tuple(vec)
                if sum(w[m:]) > slice_hi:
                    break
                _acc(nxt, w, c if j % 2 == 0 else -c)
                for k in range(m + n):
                    vec[k] -= alpha[k]
        num = nxt

    s = alt_J(CharPoly(m, n, num))
    t: dict[Vec, object] = {}
    for v, c in s.terms.items():
        for qv, qc in q_odd_product(m, n).terms.items():
            w = tuple(a + b for a, b in zip(v, qv))
            ds = sum(w[m:])
            if slice_lo <= ds <= slice_hi:
                _acc(t, w, c * qc)
    result = CharPoly(m, n, t)
    for alpha in even_positive_roots(m, n):
        result = divide_exact(result, alpha)
    return result.shift(tuple(-x for x in rho_exponent(m, n)))


# ---------------------------------------------------------------------------
# structural checks

def is_w0_symmetric(p: CharPoly) -> bool:
    """Invariance under permutations acting separately on the two blocks."""
    m, n = p.m, p.n
    swaps = [(i, i + 1) for i in range(m - 1)]
    swaps += [(m + j, m + j + 1) for j in range(n - 1)]
    for a, b in swaps:
        for v, c in p.terms.items():
            w = list(v)
            w[a], w[b] = w[b], w[a]
            if p.terms.get(tuple(w), 0) != c:
                return False
    return True


def supersymmetry_check(p: CharPoly) -> bool:
    """Membership test for the image of the character map: the polynomial must
    be symmetric in each block, and for every pair (i, j) the combination
    x_i d/dx_i + y_j d/dy_j must vanish under the substitution x_i -> -y_j."""
    if not is_w0_symmetric(p):
        return False
    m, n = p.m, p.n
    for i in range(m):
        for j in range(n):
            folded: dict[Vec, object] = {}
            for v, c in p.terms.items():
                weight = v[i] + v[m + j]
                if weight == 0:
                    continue
                w = list(v)
                w[m + j] += w[i]
                sign = -1 if w[i] % 2 else 1
                w[i] = 0
                _acc(folded, tuple(w), c * weight * sign)
            if folded:
                return False
    return True


def dimension_eval(p: CharPoly) -> int:
    """Sum of coefficients; characters must give a (positive) integer."""
    total = p.eval_at_ones()
    frac = Fraction(total)
    if frac.denominator != 1:
        raise ArithmeticError(f"non-integer coefficient sum {frac}")
    return int(frac)


def highest_term_ok(p: CharPoly, chi: HighestWeight) -> bool:
    """The exponent of chi carries coefficient 1 and dominates the support in
    the height order."""
    top = tuple(chi.lam + chi.mu)
    if p.coefficient(top) != 1:
        return False
    h = _ht(top)
    return all(_ht(v) <= h for v in p.terms)
