"""Bracket combinators and the chain-map bridge between the complexes."""

import random
from itertools import product

import pytest

from triblink.bridge import (bold_angle, bold_square, phi, phi_chain,
                             pull_cochain, psi, psi_chain)
from triblink.chains import LB, NIE, FormalChain
from triblink.cochains import cochain_from_tensor, evaluate, is_cocycle
from triblink.homology import homology
from triblink.verify import bridge_ok, verify_bridge


def words(ctx, length):
    return product(ctx.elements, repeat=length)


def test_bold_angle_small_cases(ctx57):
    ctx = ctx57
    for a, b, c in words(ctx, 3):
        assert bold_angle(ctx, (a,)) == a
        assert bold_angle(ctx, (a, b)) == b
        assert bold_angle(ctx, (a, b, c)) == ctx.v(a, b, c)


def test_bold_square_single_layer(ctx57):
    ctx = ctx57
    for a, b, c in words(ctx, 3):
        assert bold_square(ctx, (a, b), c) == ctx.h(a, b, c)


def test_angle_splitting_identity(small_contexts):
    # <<a0..an>> = <<a0..ai, <<ai..an>> >> for i <= n-2, words up to length 5
    for ctx in small_contexts:
        for n in (2, 3, 4):
            for word in words(ctx, n + 1):
                whole = bold_angle(ctx, word)
                for i in range(0, n - 1):
                    inner = bold_angle(ctx, word[i:])
                    assert bold_angle(ctx, word[:i + 1] + (inner,)) == whole


def test_angle_absorption_identity(small_contexts):
    # <<a0,a1,a2,..>> = <<a0,<a0,a1,a2>,a2,..>>; needs at least one entry
    # after a2 (the length-3 case is false for generic tribrackets)
    for ctx in small_contexts:
        for n in (3, 4):
            for word in words(ctx, n + 1):
                replaced = (word[0], ctx.v(word[0], word[1], word[2])) + word[2:]
                assert bold_angle(ctx, replaced) == bold_angle(ctx, word)


def test_square_inverse_identity(small_contexts):
    # <<a0..an, [[a0..an; b]] >> = b
    for ctx in small_contexts:
        for n in (1, 2, 3):
            for word in words(ctx, n + 1):
                for b in ctx.elements:
                    sq = bold_square(ctx, word, b)
                    assert bold_angle(ctx, word + (sq,)) == b


def test_square_of_angle_reduction(small_contexts):
    # [[a0..am; <<a0..an>> ]] reduces by the three stated cases
    for ctx in small_contexts:
        elems = list(ctx.elements)
        for total in range(2, 6):
            for word in words(ctx, total):
                for m in range(1, total):
                    n = total - 1
                    prefix = word[:m + 1]
                    angle = bold_angle(ctx, word)
                    got = bold_square(ctx, prefix, angle)
                    if m < n - 1:
                        assert got == bold_angle(ctx, word[m:])
                    elif m == n - 1:
                        assert got == word[n]
                    else:
                        continue


def test_phi_psi_worked_examples(ctx56):
    ctx = ctx56
    for a, b, c, d in words(ctx, 4):
        assert phi(ctx, (a, b, c)) == (a, b, ctx.h(a, b, c))
        assert phi(ctx, (a, b, c, d)) == (
            a, b, ctx.h(a, b, c),
            ctx.h(b, ctx.h(a, b, c), ctx.h(a, b, d)))
        assert psi(ctx, (a, b, c)) == (a, b, ctx.v(a, b, c))
        assert psi(ctx, (a, b, c, d)) == (
            a, b, ctx.v(a, b, c), ctx.v(a, b, ctx.v(b, c, d)))


def test_phi_psi_inverse_all_degrees(small_contexts):
    for ctx in small_contexts:
        for n in (1, 2, 3, 4):
            for g in ctx.all_generators(LB, n):
                assert psi(ctx, phi(ctx, g)) == g
            for g in ctx.all_generators(NIE, n - 1):
                assert phi(ctx, psi(ctx, g)) == g


def test_phi_preserves_degeneracy(small_contexts):
    for ctx in small_contexts:
        for n in (2, 3):
            for g in ctx.all_generators(LB, n):
                if ctx.is_degenerate(LB, g):
                    assert ctx.is_degenerate(NIE, phi(ctx, g))
            for g in ctx.all_generators(NIE, n - 1):
                if ctx.is_degenerate(NIE, g):
                    assert ctx.is_degenerate(LB, psi(ctx, g))


def test_chain_map_identity(small_contexts):
    for ctx in small_contexts:
        for n in (2, 3):
            for g in ctx.all_generators(LB, n):
                lhs = ctx.nie_boundary(phi(ctx, g))
                rhs = phi_chain(ctx, ctx.lb_boundary(g), project=False)
                assert lhs == rhs


def test_z_and_w_closed_forms(ctx56, ctx57):
    # phi's z-run satisfies the substitution recursion through the square
    # bracket, and psi's w-run the angle-bracket substitution
    for ctx in (ctx56, ctx57):
        for n in (2, 3, 4):
            for tup in words(ctx, n + 1):
                a, rest = tup[0], tup[1:]
                z = phi(ctx, tup)
                assert z[:2] == (a, rest[0])
                for i in range(2, n + 1):
                    assert z[i] == bold_square(ctx, z[:i], rest[i - 1])
                    if i >= 3:
                        subst = bold_square(ctx, z[:i - 1], rest[i - 1])
                        assert z[i] == ctx.h(z[i - 2], z[i - 1], subst)
                w = psi(ctx, tup)[1:]
                assert w[0] == rest[0]
                for j in range(2, n + 1):
                    assert w[j - 1] == bold_angle(ctx, tup[:j + 1])
                    prefix = tup[:j - 1] + (
                        ctx.v(tup[j - 2], tup[j - 1], tup[j]),)
                    assert w[j - 1] == bold_angle(ctx, prefix)


def test_y_lemma_identities(ctx57):
    # the descending-step and angle-word expressions of the y-table
    ctx = ctx57
    for n in (3, 4):
        for tup in words(ctx, n + 1):
            w = psi(ctx, tup)[1:]
            for i in range(2, n):
                y = ctx.nie_y(tup, i - 1)
                for j in range(1, i):
                    # (2) angle word of a middle slice gives y_(i-1,j)
                    assert bold_angle(ctx, tup[j - 1:i + 1]) == y[j]
                    # (1) one horizontal step moves along the chain
                    stepped = ctx.h(tup[j - 1], tup[j], y[j])
                    if j < i - 1:
                        assert stepped == y[j + 1]
                    else:
                        assert stepped == tup[i]
                # in particular w_i = y_(i-1,1)
                assert w[i - 1] == y[1]
                # (3) suffix words rewrite through the y-values
                for j in range(i + 1, n):
                    word_plain = tup[i - 1:j + 1]
                    word_y = (tup[i - 1],) + tuple(
                        ctx.nie_y(tup, i - 1)[k] for k in range(i, j))
                    assert bold_angle(ctx, word_plain) == bold_angle(ctx, word_y)


def test_lemma_bracket_vs_y_relations(small_contexts):
    # (3),(4),(5): [a, w_j, w_i] and [a, w_i, w_j] in terms of y-words
    for ctx in small_contexts:
        if ctx.size > 3:
            continue
        for n in (3, 4):
            for tup in words(ctx, n + 1):
                w = psi(ctx, tup)[1:]
                a = tup[0]
                for i in range(2, n + 1):
                    y = ctx.nie_y(tup, i - 1)
                    for j in range(1, i):
                        got = ctx.h(a, w[j - 1], w[i - 1])
                        if j < i - 1:
                            word = tuple(y[k] for k in range(1, j + 2))
                            assert got == bold_angle(ctx, word)
                        else:
                            word = tuple(y[k] for k in range(1, i)) + (tup[i],)
                            assert got == bold_angle(ctx, word)
                    for j in range(i + 1, n + 1):
                        got = ctx.h(a, w[i - 1], w[j - 1])
                        word = (tuple(y[k] for k in range(1, i))
                                + tuple(tup[k] for k in range(i, j + 1)))
                        assert got == bold_angle(ctx, word)


def test_homology_isomorphism_all_small(small_contexts):
    for ctx in small_contexts:
        for n in (1, 2, 3):
            assert homology(ctx, LB, n) == homology(ctx, NIE, n - 1)


def test_verify_bridge_report(ctx57):
    report = verify_bridge(ctx57, max_degree=3)
    assert bridge_ok(report)


def test_phi_chain_zero_and_projection(ctx57):
    zero = FormalChain(LB, 2)
    assert phi_chain(ctx57, zero).is_zero()
    degen = FormalChain(LB, 2, {(1, 2, 2): 1})
    assert phi_chain(ctx57, degen).is_zero()  # lands on a degenerate tuple
    assert not phi_chain(ctx57, degen, project=False).is_zero()


def test_pull_cochain_round_trip(ctx57, pack57):
    theta = cochain_from_tensor(ctx57, LB, pack57.cocycle_entries, 3)
    bar = pull_cochain(ctx57, theta, "psi")
    assert is_cocycle(ctx57, bar)
    back = pull_cochain(ctx57, bar, "phi")
    assert back == theta


def test_pull_cochain_evaluation_identity(ctx57, pack57):
    theta = cochain_from_tensor(ctx57, LB, pack57.cocycle_entries, 3)
    bar = pull_cochain(ctx57, theta, "psi")
    rnd = random.Random(9)
    gens = ctx57.generators(LB, 2)
    for _ in range(20):
        chain = FormalChain(LB, 2)
        for g in rnd.sample(gens, 4):
            chain.add(g, rnd.randrange(-2, 3))
        assert evaluate(theta, chain) == evaluate(
            bar, phi_chain(ctx57, chain, project=False))


def test_pull_cochain_degree_checks(ctx57, pack57):
    theta = cochain_from_tensor(ctx57, LB, pack57.cocycle_entries, 3)
    with pytest.raises(Exception):
        pull_cochain(ctx57, theta, "phi")


def test_phi_matrix_is_permutation_conjugating_boundaries(small_contexts):
    # on nondegenerate bases the bridge map is a permutation matrix P with
    # M_Nie * P = P * M_LB
    from triblink.homology import boundary_matrix
    for ctx in small_contexts:
        if ctx.size > 2:
            continue
        for n in (2, 3):
            lb_basis = ctx.generators(LB, n)
            nie_basis = ctx.generators(NIE, n - 1)
            assert sorted(phi(ctx, g) for g in lb_basis) == sorted(nie_basis)
            perm = {g: phi(ctx, g) for g in lb_basis}
            m_lb, lb_rows, _ = boundary_matrix(ctx, LB, n)
            m_nie, nie_rows, _ = boundary_matrix(ctx, NIE, n - 1)
            col_of = {g: j for j, g in enumerate(nie_basis)}
            row_of = {g: i for i, g in enumerate(nie_rows)}
            for j, g in enumerate(lb_basis):
                for i, h in enumerate(lb_rows):
                    assert m_lb[i][j] == m_nie[row_of[phi(ctx, h)]][col_of[perm[g]]]
