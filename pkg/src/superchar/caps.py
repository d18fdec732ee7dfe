"""Cap diagrams over weight diagrams and the nesting order they induce.

Each cross is joined to a circle on its right by a cap; caps never intersect,
so they nest into a forest.  Cap ends drive the cap-swap moves whose 2^r
results form the projective family of a diagram, and the maximal runs of
consecutive crosses (segments) feed the reduced character formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .weights import CROSS, WeightDiagram


@dataclass(frozen=True)
class CapForest:
    """Caps of a diagram: cross positions, their cap ends, and nesting parents.

    parent[c] is the cross whose cap immediately encloses the cap of c, or
    None for an outermost cap.
    """

    crosses: tuple[int, ...]
    cap_end: dict[int, int]
    parent: dict[int, int | None]

    def __post_init__(self):
        _assert_noncrossing(self.crosses, self.cap_end)

    def nested_under(self, a: int, b: int) -> bool:
        """True iff the cap of b lies strictly under the cap of a."""
        return a < b and self.cap_end[b] < self.cap_end[a]


@dataclass(frozen=True)
class SegmentData:
    """Maximal consecutive runs of crosses, and the largest cross of each run."""

    segments: tuple[tuple[int, int], ...]
    tilde_c: dict[int, int]


def _assert_noncrossing(crosses, cap_end) -> None:
    for a in crosses:
        if cap_end[a] <= a:
            raise AssertionError(f"cap end {cap_end[a]} not right of cross {a}")
    for a in crosses:
        for b in crosses:
            if a >= b:
                continue
            # intervals [a, end_a], [b, end_b] must be nested or disjoint
            ea, eb = cap_end[a], cap_end[b]
            if b <= ea and not eb < ea:
                raise AssertionError(
                    f"caps ({a},{ea}) and ({b},{eb}) cross")


def _caps_greedy(f: WeightDiagram) -> dict[int, int]:
    """Rightmost cross first, each joined to the first free circle on its right."""
    used: set[int] = set()
    cap_end: dict[int, int] = {}
    for a in sorted(f.crosses, reverse=True):
        c = a + 1
        while not f.is_circle(c) or c in used:
            c += 1
        used.add(c)
        cap_end[a] = c
    return cap_end


def _caps_by_counting(f: WeightDiagram) -> dict[int, int]:
    """First circle c right of the cross with equally many crosses and circles
    strictly between (core symbols do not count)."""
    cap_end: dict[int, int] = {}
    for a in f.crosses:
        crosses_between = 0
        circles_between = 0
        c = a + 1
        while True:
            if f.is_circle(c):
                if crosses_between == circles_between:
                    cap_end[a] = c
                    break
                circles_between += 1
            elif f.symbol(c) == CROSS:
                crosses_between += 1
            c += 1
    return cap_end


def cap_diagram(f: WeightDiagram) -> CapForest:
    """Build the cap diagram; both classical constructions must agree."""
    greedy = _caps_greedy(f)
    counted = _caps_by_counting(f)
    assert greedy == counted, (
        f"cap constructions disagree on {f!r}: {greedy} vs {counted}")
    crosses = f.crosses
    parent: dict[int, int | None] = {}
    for b in crosses:
        # tightest enclosing cap, if any
        enclosing = [a for a in crosses
                     if a < b and greedy[b] < greedy[a]]
        parent[b] = max(enclosing) if enclosing else None
    return CapForest(crosses, greedy, parent)


def precedes(cf: CapForest, a: int, b: int) -> bool:
    """Nesting order: a before b iff the cap of b sits under the cap of a."""
    if a not in cf.cap_end or b not in cf.cap_end:
        raise ValueError(f"{a} and {b} must both be crosses")
    return cf.nested_under(a, b)


def sigma_swap(f: WeightDiagram, swap: set[int] | frozenset[int]) -> WeightDiagram:
    """Exchange each chosen cross with its cap end, all caps taken from f."""
    crosses = set(f.crosses)
    if not swap <= crosses:
        raise ValueError(f"{sorted(set(swap) - crosses)} are not crosses of the diagram")
    cf = cap_diagram(f)
    symbols = f.symbols
    for c in swap:
        del symbols[c]
        symbols[cf.cap_end[c]] = CROSS
    return WeightDiagram(symbols)


def projective_family(f: WeightDiagram) -> set[WeightDiagram]:
    """All 2^r diagrams obtained by swapping a subset of crosses with cap ends."""
    crosses = f.crosses
    family: set[WeightDiagram] = set()
    for mask in range(1 << len(crosses)):
        chosen = {crosses[i] for i in range(len(crosses)) if mask >> i & 1}
        family.add(sigma_swap(f, chosen))
    assert len(family) == 1 << len(crosses)
    return family


def segment_data(f: WeightDiagram) -> SegmentData:
    """Split the crosses into maximal consecutive-integer runs."""
    crosses = f.crosses
    segments: list[tuple[int, int]] = []
    tilde: dict[int, int] = {}
    i = 0
    while i < len(crosses):
        j = i
        while j + 1 < len(crosses) and crosses[j + 1] == crosses[j] + 1:
            j += 1
        lo, hi = crosses[i], crosses[j]
        segments.append((lo, hi))
        for k in range(i, j + 1):
            tilde[crosses[k]] = hi
        i = j + 1
    return SegmentData(tuple(segments), tilde)


def render_caps(f: WeightDiagram, pad: int = 1) -> str:
    """ASCII picture: one line of symbols, cap arcs stacked above by depth."""
    cf = cap_diagram(f)
    lo_candidates = list(f.positions())
    hi_candidates = list(f.positions()) + [cf.cap_end[c] for c in cf.crosses]
    if not hi_candidates:
        return "(empty diagram)"
    lo = min(lo_candidates or hi_candidates) - pad
    hi = max(hi_candidates) + pad
    width = 3

    def col(pos: int) -> int:
        return (pos - lo) * width

    total = (hi - lo + 1) * width
    sym_row = [" "] * total
    for pos in range(lo, hi + 1):
        s = f.symbol(pos)
        sym_row[col(pos)] = s if s is not None else "o"

    def depth(c: int) -> int:
        d = 0
        p = cf.parent[c]
        while p is not None:
            d += 1
            p = cf.parent[p]
        return d

    depths = {c: depth(c) for c in cf.crosses}
    max_depth = max(depths.values(), default=-1)
    arc_rows = []
    # deepest caps drawn closest to the symbol line
    for d in range(max_depth, -1, -1):
        row = [" "] * total
        for c in cf.crosses:
            if depths[c] != d:
                continue
            start, end = col(c), col(cf.cap_end[c])
            row[start] = "."
            row[end] = "."
            for k in range(start + 1, end):
                row[k] = "-"
        arc_rows.append("".join(row).rstrip())

    label_row = []
    for pos in range(lo, hi + 1):
        label_row.append(str(pos).ljust(width))
    lines = [line for line in arc_rows if line.strip()]
    lines.append("".join(sym_row).rstrip())
    lines.append("".join(label_row).rstrip())
    return "\n".join(lines)
