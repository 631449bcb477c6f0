"""Region/semi-arc colorings, translation maps, weight chains."""

import pytest

from triblink.chains import LB, NIE
from triblink.cochains import cochain_from_tensor, evaluate
from triblink.coloring import (ColoringCapExceeded, NotConnected,
                               WeightPolynomial,
                               enumerate_region_colorings,
                               enumerate_region_colorings_bruteforce,
                               format_polynomial, lb_weight_chain,
                               nie_weight_chain, parse_polynomial,
                               region_to_semiarc, semiarc_to_region)
from triblink.tables import load_table, table_names


def test_hopf_27_colorings(ctx56):
    d = load_table("L2a1")
    assert len(enumerate_region_colorings(d, ctx56)) == 27


def test_unknot_colorings(ctx56):
    d = load_table("unknot")
    cols = enumerate_region_colorings(d, ctx56)
    assert len(cols) == 9


def test_trefoil_57_colorings(ctx57):
    d = load_table("3_1")
    assert len(enumerate_region_colorings(d, ctx57)) == 27


def test_enumeration_is_lexicographic(ctx56):
    d = load_table("L2a1")
    cols = enumerate_region_colorings(d, ctx56)
    assert cols == sorted(cols)


def test_bruteforce_agrees_with_search_everywhere(ctx56):
    for name in table_names():
        d = load_table(name)
        fast = enumerate_region_colorings(d, ctx56)
        slow = enumerate_region_colorings_bruteforce(d, ctx56)
        assert fast == slow, name


def test_coloring_cap(ctx56):
    d = load_table("8_18")
    with pytest.raises(ColoringCapExceeded):
        enumerate_region_colorings(d, ctx56, cap=100)


def test_translation_round_trip(ctx56):
    for name in ("L2a1", "3_1", "L6a5", "L7a7", "8_5"):
        d = load_table(name)
        for coloring in enumerate_region_colorings(d, ctx56):
            pairs = region_to_semiarc(d, coloring, ctx56)
            assert semiarc_to_region(d, pairs, ctx56) == coloring


def test_translation_needs_connected(ctx56):
    from triblink.diagram import PlanarDiagram
    d = PlanarDiagram([], [1, 2])
    assert not d.connected
    with pytest.raises(NotConnected):
        enumerate_region_colorings(d, ctx56)


def test_semiarc_to_region_rejects_garbage(ctx56):
    d = load_table("L2a1")
    coloring = enumerate_region_colorings(d, ctx56)[0]
    pairs = region_to_semiarc(d, coloring, ctx56)
    broken = dict(pairs)
    arc = d.semi_arcs[0]
    a, b = broken[arc]
    broken[arc] = (a % 3 + 1, b)
    with pytest.raises(ValueError):
        semiarc_to_region(d, broken, ctx56)


def test_weight_chains_are_cycles(ctx56, ctx57):
    for ctx in (ctx56, ctx57):
        for name in table_names():
            d = load_table(name)
            for coloring in enumerate_region_colorings(d, ctx):
                pairs = region_to_semiarc(d, coloring, ctx)
                w = lb_weight_chain(d, pairs, ctx)
                assert ctx.boundary_chain(w).is_zero(), name
                wn = nie_weight_chain(d, coloring, ctx)
                assert ctx.boundary_chain(wn).is_zero(), name


def test_lb_weight_maps_to_nie_weight(ctx56):
    from triblink.bridge import phi_chain
    for name in ("L2a1", "3_1", "L6n1", "L7a7"):
        d = load_table(name)
        for coloring in enumerate_region_colorings(d, ctx56):
            pairs = region_to_semiarc(d, coloring, ctx56)
            lbw = lb_weight_chain(d, pairs, ctx56)
            assert phi_chain(ctx56, lbw, project=False) == \
                nie_weight_chain(d, coloring, ctx56)


def test_hopf_worked_coloring_weights(ctx56, pack56):
    """One coloring weighs theta(1,2,1)+theta(1,1,2)=1, another one 0."""
    d = load_table("L2a1")
    theta = cochain_from_tensor(ctx56, LB, pack56.cocycle_entries, 5)
    seen_one = seen_zero = False
    for coloring in enumerate_region_colorings(d, ctx56):
        pairs = region_to_semiarc(d, coloring, ctx56)
        chain = lb_weight_chain(d, pairs, ctx56)
        triples = sorted(g for g, c in chain.support.items()
                         for _ in range(abs(c)))
        value = evaluate(theta, chain)
        if triples == [(1, 1, 2), (1, 2, 1)]:
            assert value == 1
            seen_one = True
        if set(chain.support) <= {(1, 1, 1)}:
            assert value == 0
            seen_zero = True
    assert seen_one and seen_zero


def test_unknot_weight_chain_is_zero(ctx56):
    d = load_table("unknot")
    coloring = enumerate_region_colorings(d, ctx56)[0]
    pairs = region_to_semiarc(d, coloring, ctx56)
    assert lb_weight_chain(d, pairs, ctx56).is_zero()
    assert nie_weight_chain(d, coloring, ctx56).is_zero()


def test_polynomial_formatting():
    w = WeightPolynomial(5, {0: 2, 2: 3, 4: 1})
    assert format_polynomial(w) == "2+3u^2+u^4"
    assert str(WeightPolynomial(5, {})) == "0"
    assert str(WeightPolynomial(5, {0: 9, 1: 18})) == "9+18u"
    assert w.total() == 6


def test_polynomial_multiset_2_3_2_4():
    # the multiset {0,0,2,2,2,4} forces exponent 2 in the printed form
    counts = {}
    for x in (0, 0, 2, 2, 2, 4):
        counts[x] = counts.get(x, 0) + 1
    assert format_polynomial(WeightPolynomial(5, counts)) == "2+3u^2+u^4"


def test_polynomial_parse_round_trip():
    for text in ("9+18u", "2+3u^2+u^4", "0", "14+3u+2u^2+4u^3+4u^4"):
        w = parse_polynomial(text, 5)
        assert format_polynomial(w) == text


def test_constant_coloring_gives_constant_pairs(ctx57):
    # <c,c,c> = c holds for this tribracket, so constant region colorings
    # are valid and every semi-arc receives the pair (c, c)
    for name in ("3_1", "L2a1", "L6a4"):
        d = load_table(name)
        for c0 in ctx57.elements:
            assert ctx57.v(c0, c0, c0) == c0
            coloring = tuple(c0 for _ in d.faces)
            pairs = region_to_semiarc(d, coloring, ctx57)
            assert set(pairs.values()) == {(c0, c0)}
