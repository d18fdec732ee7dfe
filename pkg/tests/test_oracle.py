import random

import pytest

from superchar.charring import (
    CharPoly,
    Window,
    alt_J,
    chi_plus_rho_exponent,
    irreducible_char,
    kac_char,
)
from superchar.latticegen import enumerate_lattice
from superchar.oracle import (
    OracleInstability,
    WeightMap,
    enumerate_weight_maps,
    epsilon_sign,
    oracle_char,
    oracle_char_lattice,
    orthogonality_check,
    orthogonality_report,
    _chain_edges,
)
from superchar.weights import (
    CROSS,
    GREATER,
    LESS,
    HighestWeight,
    WeightDiagram,
    core_strip,
    diagram_of_weight,
    weight_from_diagram,
)

from helpers import dominant_weights, random_diagram


def crosses_only(*positions):
    return WeightDiagram({p: CROSS for p in positions})


def test_enumerate_single_cross():
    maps = enumerate_weight_maps(crosses_only(0), -2)
    assert [wm.phi[0] for wm in maps] == [-2, -1, 0]


def test_enumerate_nested_pair():
    maps = enumerate_weight_maps(crosses_only(0, 1), -1)
    assert sorted(wm.sorted_items() for wm in maps) == [
        (((0, -1), (1, 0))), (((0, -1), (1, 1))), (((0, 0), (1, 1)))]


def test_enumerate_rejects_cutoff_above_min_cross():
    with pytest.raises(ValueError):
        enumerate_weight_maps(crosses_only(0, 1), 1)


def test_enumerate_avoids_core_positions():
    f = WeightDiagram({0: CROSS, -1: GREATER})
    maps = enumerate_weight_maps(f, -3)
    values = sorted(wm.phi[0] for wm in maps)
    assert values == [-3, -2, 0]  # -1 is occupied by the core symbol


def test_enumerate_matches_lattice_points_of_region():
    # relocations with values above a cutoff correspond to the injective,
    # order-compatible integer points of the full-dimensional region (core
    # coordinates pinned at their own positions)
    from superchar.latticegen import OrderPolyhedron

    rng = random.Random(67)
    diagrams = [crosses_only(0, 1, 3), crosses_only(0, 1, 2),
                WeightDiagram({0: CROSS, 1: GREATER, 2: CROSS}),
                WeightDiagram({-1: LESS, 0: CROSS, 2: CROSS, 3: GREATER})]
    diagrams += [random_diagram(rng, r_max=3) for _ in range(10)]
    for f in diagrams:
        if not f.crosses:
            continue
        cutoff = min(f.crosses) - 2
        maps = enumerate_weight_maps(f, cutoff)
        positions = f.positions()
        cross_slots = {k for k, p in enumerate(positions) if f.symbol(p) == CROSS}
        chains = _chain_edges(f, positions)
        poly = OrderPolyhedron(
            dim=len(positions),
            bounds={k: positions[k] for k in cross_slots},
            pinned={k: positions[k] for k in range(len(positions))
                    if k not in cross_slots},
            chain_edges=chains)
        points = [
            x for x in enumerate_lattice(poly, cutoff)
            if len(set(x)) == len(x)
            and all(x[i] < x[j] for i, j in chains)]
        got = sorted(tuple(wm.phi[c] for c in f.crosses) for wm in maps)
        expected = sorted(tuple(x[k] for k in sorted(cross_slots)) for x in points)
        assert got == expected, f


def test_epsilon_identity_map():
    f = crosses_only(0, 1, 3)
    wm = WeightMap({0: 0, 1: 1, 3: 3})
    assert epsilon_sign(f, wm) == 1


def test_epsilon_two_step_drop():
    f = crosses_only(5)
    assert epsilon_sign(f, WeightMap({5: 3})) == 1
    assert epsilon_sign(f, WeightMap({5: 4})) == -1


def test_epsilon_discounts_cores():
    f = WeightDiagram({5: CROSS, 3: LESS})
    # displacement 5 -> 2 jumps over the core at 3: parity from 3 - 1 = 2
    assert epsilon_sign(f, WeightMap({5: 2})) == 1
    g = crosses_only(5)
    assert epsilon_sign(g, WeightMap({5: 2})) == -1


def test_epsilon_invariant_under_core_strip():
    rng = random.Random(53)
    checked = 0
    for _ in range(80):
        f = random_diagram(rng, r_max=3, with_core=True)
        if not f.crosses:
            continue
        stripped, reindex = core_strip(f)
        cutoff = min(f.crosses) - 3
        for wm in enumerate_weight_maps(f, cutoff):
            image = wm.image_diagram(f)
            _, image_reindex = core_strip(image)
            phi_sharp = {reindex[a]: image_reindex[b] for a, b in wm.phi.items()}
            assert epsilon_sign(f, wm) == epsilon_sign(stripped, WeightMap(phi_sharp))
            checked += 1
    assert checked > 100


def test_oracle_typical_is_kac():
    chi = HighestWeight(2, 1, (2, 0), (-1,))
    f = diagram_of_weight(chi)
    assert f.crosses == ()
    k = kac_char(f)
    window = Window.hull(k, margin=1)
    assert oracle_char(f, window) == k


def test_oracle_gl11_telescopes_to_monomial():
    chi = HighestWeight(1, 1, (4,), (-4,))
    f = diagram_of_weight(chi)
    window = Window(((2, 5),), ((-5, -2),))
    ch = oracle_char(f, window)
    assert ch.terms == {(4, -4): 1}


def test_oracle_instability_reported():
    chi = HighestWeight(1, 1, (4,), (-4,))
    f = diagram_of_weight(chi)
    window = Window(((2, 5),), ((-5, -2),))
    with pytest.raises(OracleInstability):
        oracle_char(f, window, cutoff=4)


def test_oracle_agrees_with_engine_on_grid():
    for (m, n) in [(1, 1), (2, 1)]:
        for chi in dominant_weights(m, n, -2, 2):
            f = diagram_of_weight(chi)
            ch = irreducible_char(chi)
            window = Window.hull(ch, margin=1)
            assert oracle_char(f, window) == ch, chi


def test_lattice_route_agrees_with_engine():
    rng = random.Random(59)
    sample = rng.sample(dominant_weights(2, 2, -2, 2), 20)
    sample.append(HighestWeight(3, 3, (3, 2, 2), (-2, -2, -3)))
    for chi in sample:
        f = diagram_of_weight(chi)
        ch = irreducible_char(chi)
        window = Window.hull(ch, margin=1)
        assert oracle_char_lattice(f, window) == ch.restrict(window) == ch, chi


def test_all_routes_on_asymmetric_blocks():
    rng = random.Random(101)
    cases = [(3, 2, -3, 3, 12), (1, 3, -3, 3, 12), (3, 1, -4, 4, 12)]
    for (m, n, lo, hi, k) in cases:
        pool = dominant_weights(m, n, lo, hi)
        for chi in rng.sample(pool, min(k, len(pool))):
            f = diagram_of_weight(chi)
            ch = irreducible_char(chi)
            assert irreducible_char(chi, variant="reduced") == ch, chi
            window = Window.hull(ch, margin=1)
            assert oracle_char(f, window) == ch, chi
            assert oracle_char_lattice(f, window) == ch, chi


def test_all_routes_on_deeper_gl33_weights():
    # maximally atypical chain, a cored two-cross weight, and a weight whose
    # crosses spread across segments
    cases = [HighestWeight(3, 3, (2, 2, 2), (-2, -2, -2)),
             HighestWeight(3, 3, (3, 2, 2), (-1, -2, -3)),
             HighestWeight(3, 3, (1, 1, 0), (0, -1, -1))]
    for chi in cases:
        f = diagram_of_weight(chi)
        ch = irreducible_char(chi)
        assert irreducible_char(chi, variant="reduced") == ch, chi
        window = Window.hull(ch, margin=1)
        assert oracle_char(f, window) == ch, chi
        assert oracle_char_lattice(f, window) == ch, chi


def test_signed_alternant_identity_per_relocation():
    # J(e^{shifted weight of the image}) equals the alternant of the raw
    # coordinate image up to the parity of core symbols jumped over
    rng = random.Random(61)
    for _ in range(60):
        f = random_diagram(rng, lo=0, hi=6, r_max=2, with_core=True)
        if not f.crosses:
            continue
        m, n = f.m, f.n
        from superchar.charring import pi_map

        entries = pi_map(f)
        positions = f.positions()
        cutoff = min(f.crosses) - 2
        for wm in enumerate_weight_maps(f, cutoff):
            g = wm.image_diagram(f)
            omega = chi_plus_rho_exponent(weight_from_diagram(g))
            lhs = alt_J(CharPoly.monomial(m, n, omega))
            x = {p: p for p in positions}
            x.update(wm.phi)
            vec = [0] * (m + n)
            for k, p in enumerate(positions):
                for t in range(m + n):
                    vec[t] += x[p] * entries[k].exponent[t]
            tau = sum(
                sum(1 for c in f.core_positions if wm.phi[a] < c < a)
                for a in f.crosses)
            rhs = alt_J(CharPoly.monomial(m, n, tuple(vec)))
            assert lhs == (rhs if tau % 2 == 0 else -rhs), (f, wm)


def test_orthogonality_small_windows():
    assert orthogonality_check((0, 5), 1, 1, 1)
    assert orthogonality_check((0, 6), 2, 2, 2)


def test_orthogonality_report_details():
    rep = orthogonality_report((0, 5), 1, 1, 1)
    assert rep.ok
    assert rep.family_size == 36  # 6 single-cross + 30 typical diagrams
    assert rep.interior_rows < rep.family_size  # boundary rows are excluded
    assert all(max(d.positions()) == 5 for d in rep.excluded_rows)


def test_orthogonality_diagonal_entries():
    # identity relocation and the empty swap give the diagonal ones
    f = crosses_only(2)
    maps = enumerate_weight_maps(f, 0)
    identity = [wm for wm in maps if wm.phi == {2: 2}]
    assert len(identity) == 1
    assert epsilon_sign(f, identity[0]) == 1
