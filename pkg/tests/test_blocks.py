from __future__ import annotations

from fractions import Fraction

import pytest

from affcrit.blocks import (bggh_matrix, block_partition, derived_simple_characters,
                            projective_flag)
from affcrit.characters import combine, restricted_verma_character
from affcrit.errors import PreconditionError
from affcrit.linkage import restricted_class
from affcrit.rootsys import AffineWeight, RealRoot
from affcrit.weights import Window, affine_height, leq
from affcrit.weyl import alpha_up

from conftest import A1, A2, case_id, crit

ALPHA = A1.embed_root(RealRoot((1,)))
DELTA = AffineWeight.delta_(1)
HALF = Fraction(1, 2)


def test_block_partition_examples():
    lam = crit(A1, 0)
    w = Window.below(lam, 4)
    bp = block_partition(A1, w)
    members = [m for _, cls in bp.classes for m in cls]
    assert len(members) == len(set(members))
    assert set(members) == set(w.members(A1))
    assert set(bp.class_of(lam)) == restricted_class(A1, lam, w).member_set()
    for mu in members:
        assert set(bp.class_of(mu)) == restricted_class(A1, mu, w).member_set()
    assert block_partition(A1, Window.below(lam, 0)).classes == ((lam, (lam,)),)
    with pytest.raises(PreconditionError):
        block_partition(A1, Window.below(AffineWeight.of([0], 0, 0), 2))


def test_block_partition_nonintegral_singletons():
    lam = crit(A2, HALF, HALF)
    bp = block_partition(A2, Window.below(lam, 3))
    for _, cls in bp.classes:
        assert len(cls) == 1


def test_flag_examples():
    gen = crit(A1, -1)
    assert projective_flag(A1, gen).flag == ((gen, 1),)
    lam = crit(A1, 0)
    assert projective_flag(A1, lam).flag == ((AffineWeight.of([-2], -2, 1), 1), (lam, 1))
    sub = crit(A2, 0, -HALF)
    f = projective_flag(A2, sub).flag
    assert len(f) == 2 and f[1] == (sub, 1)
    assert leq(A2, sub, f[0][0]) is not None
    with pytest.raises(PreconditionError):
        projective_flag(A2, crit(A2, 0, 0))


def _flag_matrix(rs, members):
    """Reciprocity read from the flags alone: [D(mu):L(nu)] = (P(nu):D(mu))."""
    idx = {m: i for i, m in enumerate(members)}
    out = [[0] * len(members) for _ in members]
    for nu in members:
        for mu, mult in projective_flag(rs, nu).flag:
            if mu in idx:
                out[idx[mu]][idx[nu]] += mult
    return out


@pytest.mark.parametrize("rs,lam,depth", [
    (A1, crit(A1, 0), 6), (A1, crit(A1, 1, delta=2), 5), (A1, crit(A1, -1), 3),
    (A2, crit(A2, 0, -HALF), 5), (A2, crit(A2, HALF, 0), 4)], ids=case_id)
def test_matrix_agrees_with_flags(rs, lam, depth):
    w = Window.below(lam, depth)
    m = bggh_matrix(rs, lam, w)
    n = len(m.members)
    assert [list(r) for r in m.entries] == _flag_matrix(rs, m.members)
    heights = [affine_height(rs, x) for x in m.members]
    assert heights == sorted(heights, reverse=True)
    for i in range(n):
        assert m.entries[i][i] == 1
        assert all(m.entries[i][j] == 0 for j in range(i))
        for j in range(i + 1, n):
            if m.entries[i][j]:
                assert leq(rs, m.members[j], m.members[i]) is not None
    if m.report.kind == "subgeneric":
        for j, nu in enumerate(m.members):
            col = {m.members[i] for i in range(n) if m.entries[i][j]}
            assert col == {nu, alpha_up(rs, m.report.alpha, nu)} & set(m.members)


def test_generic_matrix_is_one_by_one():
    lam = crit(A1, HALF)
    m = bggh_matrix(A1, lam, Window.below(lam, 4))
    assert m.entries == ((1,),) and m.complete == (True,)


def test_a1_chain_is_bidiagonal():
    lam = crit(A1, 0)
    top = lam - ALPHA + DELTA
    w = Window.below(top, 3)
    m = bggh_matrix(A1, lam, w)
    assert len(m.members) == 4
    assert m.entries == ((1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (0, 0, 0, 1))
    assert m.complete == (True, True, True, False)


@pytest.mark.parametrize("rs,lam,depth", [
    (A1, crit(A1, 0), 6), (A1, crit(A1, 2), 5), (A1, crit(A1, HALF), 4),
    (A2, crit(A2, 0, -HALF), 5), (A2, crit(A2, -HALF, 1), 5)], ids=case_id)
def test_simple_characters(rs, lam, depth):
    w = Window.below(lam, depth)
    chars = derived_simple_characters(rs, lam, w, depth)
    m = bggh_matrix(rs, lam, w)
    for i, mu in enumerate(m.members):
        ch = chars[mu]
        assert ch.anchor == mu and ch.coefficient(mu) == 1
        assert all(c > 0 for c in ch.support.values())
        # reconstruct the restricted Verma character within the member's validity depth
        terms = [(c, chars[nu]) for nu, c in zip(m.members, m.entries[i]) if c]
        assert combine(rs, terms, mu, ch.depth) == restricted_verma_character(rs, mu, ch.depth)
    if m.report.kind == "generic":
        assert chars[lam] == restricted_verma_character(rs, lam, depth)


def test_simple_character_validity_depths():
    lam = crit(A1, 0)
    chars = derived_simple_characters(A1, lam, Window.below(lam, 6), 6)
    assert sorted(ch.depth for ch in chars.values()) == [0, 1, 2, 3, 4, 5, 6]
    assert chars[lam].depth == 6
    # L(lam) loses lam - alpha, which is the top of the sub-Verma
    assert chars[lam].coefficient(lam - ALPHA) == 0
    assert chars[lam].coefficient(lam - DELTA) == 1


def test_simple_characters_depth_cap():
    lam = crit(A1, 0)
    with pytest.raises(PreconditionError):
        derived_simple_characters(A1, lam, Window.below(lam, 2), 13)
