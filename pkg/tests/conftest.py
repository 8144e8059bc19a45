from __future__ import annotations

from fractions import Fraction

from hypothesis import settings, strategies as st

from affcrit.rootsys import AffineWeight, build_root_system

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

A1 = build_root_system("A1")
A2 = build_root_system("A2")


def crit(rs, *finite, delta=0) -> AffineWeight:
    """Critical-level weight with the given finite part."""
    return AffineWeight.of(finite, -rs.dual_coxeter, delta)


def rationals(max_den: int = 4, bound: int = 6):
    return st.builds(Fraction, st.integers(-bound * max_den, bound * max_den),
                     st.integers(1, max_den))


def weights(rs, level=None):
    lv = rationals() if level is None else st.just(Fraction(level))
    return st.builds(lambda f, l, d: AffineWeight.of(f, l, d),
                     st.lists(rationals(), min_size=rs.rank, max_size=rs.rank), lv, rationals())


def case_id(x) -> str:
    """Compact pytest ids: type names for root systems, comma form for weights."""
    t = getattr(x, "cartan_type", None)
    return str(t) if t is not None else str(x)
