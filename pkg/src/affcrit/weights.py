"""Partial order on affine weights, finite windows, criticality."""
from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .errors import PreconditionError
from .rootsys import AffineWeight, RootSystem

DEFAULT_DEPTH_CAP = 12


def depth_cap() -> int:
    """Safety cap on enumeration depth; ``AFFCRIT_DEPTH_CAP`` overrides."""
    env = os.environ.get("AFFCRIT_DEPTH_CAP")
    return int(env) if env else DEFAULT_DEPTH_CAP


@dataclass(frozen=True)
class OrderCertificate:
    """``lam - mu = c0*alpha_0 + sum_i c_fin[i]*alpha_i`` with ``alpha_0 = -theta + delta``."""

    c0: int
    c_fin: tuple[int, ...]

    def coords(self) -> tuple[int, ...]:
        return (self.c0, *self.c_fin)


def height(cert: OrderCertificate) -> int:
    return cert.c0 + sum(cert.c_fin)


def difference_coords(rs: RootSystem, nu: AffineWeight) -> Optional[tuple[int, ...]]:
    """Coordinates of ``nu`` in the affine simple roots, if ``nu`` is a
    nonnegative integer combination of them."""
    if nu.level != 0 or nu.delta.denominator != 1 or nu.delta < 0:
        return None
    c0 = int(nu.delta)
    theta = rs.highest_root
    c = rs.weight_to_root(nu.finite)
    out = [c0]
    for ci, ti in zip(c, theta):
        x = ci + c0 * ti
        if x.denominator != 1 or x < 0:
            return None
        out.append(int(x))
    return tuple(out)


def leq(rs: RootSystem, mu: AffineWeight, lam: AffineWeight) -> Optional[OrderCertificate]:
    """Certificate that ``mu <= lam``, or ``None`` when not comparable."""
    rs.check_weight(mu, lam)
    coords = difference_coords(rs, lam - mu)
    if coords is None:
        return None
    return OrderCertificate(coords[0], coords[1:])


def from_coords(rs: RootSystem, lam: AffineWeight, coords: Sequence[int]) -> AffineWeight:
    """``lam`` minus the affine-simple-root combination with these coordinates."""
    c0, *cf = coords
    theta = rs.highest_root
    beta = [c - c0 * t for c, t in zip(cf, theta)]
    fin = rs.root_to_weight(beta)
    return AffineWeight(tuple(x - y for x, y in zip(lam.finite, fin)), lam.level, lam.delta - c0)


def simplex_points(n: int, depth: int) -> Iterator[tuple[int, ...]]:
    """Points of ``{c in N^n : sum(c) <= depth}``, by total then lexicographically."""
    for total in range(depth + 1):
        for bars in itertools.combinations(range(total + n - 1), n - 1):
            parts, prev = [], -1
            for b in bars:
                parts.append(b - prev - 1)
                prev = b
            parts.append(total + n - 1 - prev - 1)
            yield tuple(parts)


def enumerate_below(rs: RootSystem, lam: AffineWeight, depth: int,
                    cap: Optional[int] = None) -> list[AffineWeight]:
    """All ``mu <= lam`` with height of ``lam - mu`` at most ``depth``, by height."""
    rs.check_weight(lam)
    cap = depth_cap() if cap is None else cap
    if depth < 0:
        raise PreconditionError("depth must be nonnegative")
    if depth > cap:
        raise PreconditionError(f"depth {depth} exceeds safety cap {cap}")
    return [from_coords(rs, lam, c) for c in simplex_points(rs.rank + 1, depth)]


@dataclass(frozen=True)
class Window:
    """Finite stand-in for an open bounded set: everything below some ceiling
    within ``depth`` affine heights."""

    ceilings: tuple[AffineWeight, ...]
    depth: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "ceilings", tuple(self.ceilings))
        if not self.ceilings:
            raise PreconditionError("window needs at least one ceiling")
        if len({c.level for c in self.ceilings}) != 1:
            raise PreconditionError("window ceilings must share one level")
        if self.depth < 0:
            raise PreconditionError("window depth must be nonnegative")

    @classmethod
    def below(cls, lam: AffineWeight, depth: int) -> "Window":
        return cls((lam,), depth)

    @property
    def level(self) -> Fraction:
        return self.ceilings[0].level

    def delta_span(self) -> int:
        """Bound on ``|delta(x - y)|`` for members ``x, y``."""
        ds = [c.delta for c in self.ceilings]
        return self.depth + math.ceil(max(ds) - min(ds))

    def contains(self, rs: RootSystem, mu: AffineWeight) -> bool:
        for c in self.ceilings:
            coords = difference_coords(rs, c - mu)
            if coords is not None and sum(coords) <= self.depth:
                return True
        return False

    def members(self, rs: RootSystem, cap: Optional[int] = None) -> list[AffineWeight]:
        seen: dict[AffineWeight, None] = {}
        for c in self.ceilings:
            for mu in enumerate_below(rs, c, self.depth, cap):
                seen.setdefault(mu, None)
        return list(seen)

    def to_json(self) -> dict:
        return {"ceilings": [c.to_json() for c in self.ceilings], "depth": self.depth}


def is_critical(rs: RootSystem, lam: AffineWeight) -> bool:
    """``(lam + rho, delta) == 0``, i.e. level ``-h^vee``."""
    return rs.pairing(lam + rs.rho(), AffineWeight.delta_(rs.rank)) == 0


def bar(lam: AffineWeight) -> tuple[Fraction, ...]:
    """Projection to the finite weight space."""
    return lam.finite


def affine_height(rs: RootSystem, lam: AffineWeight) -> Fraction:
    """Linear functional equal to 1 on every affine simple root.

    Strictly increasing along ``<``, so sorting by it gives a linear
    extension of the partial order on any fixed level.
    """
    return lam.delta * rs.coxeter + sum(rs.weight_to_root(lam.finite), Fraction(0))
