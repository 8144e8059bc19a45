from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from affcrit.errors import PreconditionError
from affcrit.rootsys import AffineWeight, ImaginaryRoot, RealRoot
from affcrit.weights import Window, is_critical, leq
from affcrit.weyl import (AllIntegers, Residue, alpha_down, alpha_up, dot_reflect,
                          finite_integral_roots, integral_roots, orbit_dot, reflect,
                          shifted_generators)

from conftest import A1, A2, crit, rationals, weights

ALPHA = A1.embed_root(RealRoot((1,)))
DELTA = AffineWeight.delta_(1)


def test_reflect_examples():
    beta = RealRoot((1, 1), 2)
    b = A2.embed_root(beta)
    assert reflect(A2, beta, b) == -b
    for m in range(-3, 4):
        x = AffineWeight.of([m], 5, 7)
        assert reflect(A1, RealRoot((1,)), x) == AffineWeight.of([-m], 5, 7)
    with pytest.raises(PreconditionError):
        reflect(A1, ImaginaryRoot(1), x)


@given(weights(A2), st.sampled_from(A2.roots), st.integers(-4, 4))
def test_reflections_are_involutions(x, a, n):
    beta = RealRoot(a, n)
    assert reflect(A2, beta, reflect(A2, beta, x)) == x
    assert dot_reflect(A2, beta, dot_reflect(A2, beta, x)) == x
    assert reflect(A2, beta, x).level == x.level


def test_dot_reflect_examples():
    lam = crit(A1, 0)
    assert dot_reflect(A1, RealRoot((1,)), lam) == AffineWeight.of([-2], -2, 0)
    assert dot_reflect(A1, RealRoot((-1,), 1), lam) == AffineWeight.of([-2], -2, 1)
    assert dot_reflect(A1, RealRoot((-1,), 1), lam) == lam - ALPHA + DELTA


def test_integral_roots_examples():
    d = integral_roots(A1, crit(A1, 0))
    assert d.critical and d.imaginary_integral
    assert dict(d.entries) == {(1,): AllIntegers(), (-1,): AllIntegers()}
    d = integral_roots(A1, crit(A1, Fraction(1, 2)))
    assert d.critical and not d.entries
    d = integral_roots(A1, AffineWeight.of([0], 0, 0))
    assert not d.critical and not d.imaginary_integral
    assert all(c.contains(n) for _, c in d.entries for n in range(-10, 11))
    assert {a for a, _ in d.entries} == {(1,), (-1,)}


@given(weights(A2), st.sampled_from(A2.roots))
def test_integral_roots_match_direct_condition(lam, a):
    d = dict(integral_roots(A2, lam).entries)
    rho = A2.rho()
    for n in range(-6, 7):
        b = A2.embed_root(RealRoot(a, n))
        val = 2 * A2.pairing(lam + rho, b) / A2.pairing(b, b)
        integral = val.denominator == 1
        assert integral == (a in d and d[a].contains(n))


@given(weights(A2, level=-3), st.integers(-4, 4))
def test_critical_integral_roots_ignore_delta(lam, n):
    assert integral_roots(A2, lam.shift(n)) == integral_roots(A2, lam)
    assert all(isinstance(c, AllIntegers) for _, c in integral_roots(A2, lam).entries)


def test_residue_contains():
    r = Residue(Fraction(1), Fraction(3))
    assert r.contains(4) and r.contains(-2) and not r.contains(2)


def test_finite_integral_roots_examples():
    assert finite_integral_roots(A1, (Fraction(0),)) == {(1,), (-1,)}
    assert finite_integral_roots(A1, (Fraction(1, 3),)) == set()
    assert finite_integral_roots(A2, (Fraction(1), Fraction(0))) == set(A2.roots)


@given(st.lists(rationals(), min_size=2, max_size=2))
def test_finite_integral_roots_closed_under_negation(bar):
    s = finite_integral_roots(A2, tuple(bar))
    assert {tuple(-c for c in a) for a in s} == s


def brute_orbit(rs, lam, gens, w):
    """Plain fixpoint iteration, no queue."""
    members = {lam}
    while True:
        new = {dot_reflect(rs, g, m) for m in members for g in gens}
        new = {x for x in new if w.contains(rs, x)} | members
        if new == members:
            return members
        members = new


def test_orbit_examples():
    lam = crit(A1, 0)
    w = Window.below(lam, 6)
    assert orbit_dot(A1, lam, [], w).member_set() == {lam}
    # the chain runs above lam as well, so use a higher ceiling
    top = lam - ALPHA + DELTA
    wide = Window.below(top + (-ALPHA + DELTA), 6)
    gens = [RealRoot((1,), n) for n in range(-3, 4)]
    res = orbit_dot(A1, lam, gens, wide)
    assert {lam, lam - ALPHA, top} <= res.member_set()
    assert res.member_set() == brute_orbit(A1, lam, gens, wide)
    assert res.truncated
    fixed = crit(A1, -1)
    assert orbit_dot(A1, fixed, [RealRoot((1,))], Window.below(fixed, 3)).member_set() == {fixed}
    with pytest.raises(PreconditionError):
        orbit_dot(A1, lam + ALPHA, gens, w)


@pytest.mark.parametrize("fin", [(0, 0), (1, 0), (Fraction(1, 2), 0), (-1, -1)])
def test_orbit_matches_fixpoint_and_stabilises(fin):
    lam = crit(A2, *fin)
    w = Window.below(lam, 4)
    alphas = sorted(finite_integral_roots(A2, lam.finite))
    pos = [a for a in alphas if all(c >= 0 for c in a)]
    small = orbit_dot(A2, lam, shifted_generators(pos, w.delta_span()), w)
    big = orbit_dot(A2, lam, shifted_generators(pos, w.delta_span() + 2), w)
    assert small.member_set() == big.member_set()
    assert small.member_set() == brute_orbit(A2, lam, shifted_generators(pos, 6), w)
    assert list(small.members) == sorted(small.members, key=lambda x: x.sort_key())


def test_alpha_up_examples():
    lam = crit(A1, 0)
    up = alpha_up(A1, (1,), lam)
    assert up == AffineWeight.of([-2], -2, 1)
    up2 = alpha_up(A1, (1,), up)
    assert leq(A1, up, up2) is not None and up2 != up
    assert alpha_down(A1, (1,), up) == lam
    assert alpha_down(A1, (1,), up2) == up


def test_alpha_up_preconditions():
    with pytest.raises(PreconditionError):
        alpha_up(A1, (1,), AffineWeight.of([0], 0, 0))
    with pytest.raises(PreconditionError):
        alpha_up(A1, (1,), crit(A1, -1))
    with pytest.raises(PreconditionError):
        alpha_up(A1, (-1,), crit(A1, 0))
    with pytest.raises(PreconditionError):
        alpha_up(A1, (1,), crit(A1, Fraction(1, 2)))


def test_alpha_up_injective_on_window():
    lam = crit(A2, 0, 0)
    w = Window.below(lam, 4)
    for a in A2.positive_roots:
        images = {}
        for mu in w.members(A2):
            if A2.coroot_pairing(tuple(x + 1 for x in mu.finite), a) == 0:
                continue
            img = alpha_up(A2, a, mu)
            assert img not in images
            images[img] = mu
            assert alpha_down(A2, a, img) == mu


@given(st.sampled_from([A1, A2]), st.data())
def test_alpha_up_trichotomy(rs, data):
    a = data.draw(st.sampled_from(rs.positive_roots))
    fin = data.draw(st.lists(st.integers(-4, 4), min_size=rs.rank, max_size=rs.rank))
    lam = crit(rs, *fin, delta=data.draw(st.integers(-3, 3)))
    if dot_reflect(rs, RealRoot(a), lam) == lam:
        return
    s1 = dot_reflect(rs, RealRoot(a), lam)
    s2 = dot_reflect(rs, RealRoot(tuple(-c for c in a), 1), lam)
    above = [x for x in (s1, s2) if leq(rs, lam, x) is not None]
    assert len(above) == 1
    assert alpha_up(rs, a, lam) == above[0] != lam
    assert is_critical(rs, above[0])
