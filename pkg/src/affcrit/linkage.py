"""Kac-Kazhdan moves, linkage classes and their classification."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import PreconditionError
from .rootsys import AffineRoot, AffineWeight, FiniteRoot, ImaginaryRoot, RealRoot, RootSystem
from .weights import Window, is_critical
from .weyl import (
    IntegralRootDescription,
    OrbitResult,
    coroot_value,
    finite_dot,
    finite_integral_roots,
    integral_roots,
    orbit_dot,
    shifted_generators,
)


@dataclass(frozen=True)
class KKMove:
    """``target = lam - n*beta`` where ``2(lam+rho, beta) = n(beta, beta)``."""

    beta: AffineRoot
    n: int
    target: AffineWeight


@dataclass(frozen=True)
class Closed:
    """Residue field: no deformation."""


@dataclass(frozen=True)
class Generic:
    """Quotient field of the deformation ring."""


@dataclass(frozen=True)
class Subgeneric:
    """Localization at a height-one prime containing ``alpha^vee``."""

    alpha: FiniteRoot

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(self.alpha))
        if not all(c >= 0 for c in self.alpha) or not any(self.alpha):
            raise PreconditionError("subgeneric deformation needs a positive root")


DeformationSpec = Union[Closed, Generic, Subgeneric]


@dataclass(frozen=True)
class ClassReport:
    kind: str  # "generic" | "subgeneric" | "higher"
    alpha: Optional[FiniteRoot]
    finite_orbit: tuple[tuple[Fraction, ...], ...]
    integral_finite: frozenset[FiniteRoot]

    @property
    def orbit_size(self) -> int:
        return len(self.finite_orbit)

    def to_json(self) -> dict:
        return {"kind": self.kind,
                "alpha": list(self.alpha) if self.alpha is not None else None,
                "orbit_size": self.orbit_size,
                "finite_orbit": [[str(x) for x in v] for v in self.finite_orbit]}


def _require_member(rs: RootSystem, lam: AffineWeight, w: Window) -> None:
    rs.check_weight(lam)
    if not w.contains(rs, lam):
        raise PreconditionError("weight is not in the window")


def _require_critical(rs: RootSystem, lam: AffineWeight) -> None:
    rs.check_weight(lam)
    if not is_critical(rs, lam):
        raise PreconditionError(f"weight {lam} is not at the critical level {-rs.dual_coxeter}")


def positive_real_roots(rs: RootSystem, bound: int) -> list[RealRoot]:
    """Positive real roots ``alpha + m*delta`` with ``0 <= m <= bound``."""
    out = [RealRoot(a, 0) for a in rs.positive_roots]
    for m in range(1, bound + 1):
        out.extend(RealRoot(a, m) for a in rs.roots)
    return out


def _kk_scan(rs: RootSystem, lam: AffineWeight, w: Window) -> tuple[list[KKMove], bool]:
    # a nonzero integer n moves delta by n*m, so |m| <= delta span is enough
    bound = w.delta_span()
    moves: list[KKMove] = []
    clipped = False
    seen: set[AffineWeight] = set()
    lr = lam + rs.rho()
    for beta in positive_real_roots(rs, bound):
        n = coroot_value(rs, lr, beta)
        if n.denominator != 1 or n == 0:
            continue
        target = lam - n * rs.embed_root(beta)
        if not w.contains(rs, target):
            clipped = True
            continue
        if target not in seen:
            seen.add(target)
            moves.append(KKMove(beta, int(n), target))
    if is_critical(rs, lam):
        for n in range(-bound, bound + 1):
            if n == 0:
                continue
            target = lam.shift(-n)
            if not w.contains(rs, target):
                clipped = True
                continue
            if target not in seen:
                seen.add(target)
                moves.append(KKMove(ImaginaryRoot(1), n, target))
    return moves, clipped


def kk_moves(rs: RootSystem, lam: AffineWeight, w: Window) -> list[KKMove]:
    """Kac-Kazhdan moves from ``lam`` landing in ``w``.

    Real moves are listed over positive real roots with either sign of ``n``;
    imaginary moves (critical level only) are written with ``beta = delta``.
    """
    _require_member(rs, lam, w)
    return _kk_scan(rs, lam, w)[0]


def classical_class(rs: RootSystem, lam: AffineWeight, w: Window) -> OrbitResult:
    """Closure of ``lam`` under Kac-Kazhdan moves inside ``w``."""
    _require_member(rs, lam, w)
    seen = {lam}
    queue = deque([lam])
    truncated = False
    while queue:
        x = queue.popleft()
        moves, clipped = _kk_scan(rs, x, w)
        truncated |= clipped
        for mv in moves:
            if mv.target not in seen:
                seen.add(mv.target)
                queue.append(mv.target)
    return OrbitResult(tuple(sorted(seen, key=AffineWeight.sort_key)), (), truncated)


def _positive_integral(rs: RootSystem, lam: AffineWeight) -> list[FiniteRoot]:
    ints = finite_integral_roots(rs, lam.finite)
    return [a for a in rs.positive_roots if a in ints]


def restricted_class(rs: RootSystem, lam: AffineWeight, w: Window) -> OrbitResult:
    """Dot orbit of ``lam`` under the integral affine Weyl group, clipped to ``w``."""
    _require_critical(rs, lam)
    _require_member(rs, lam, w)
    gens = shifted_generators(_positive_integral(rs, lam), w.delta_span())
    return orbit_dot(rs, lam, gens, w)


def deformed_integral_roots(rs: RootSystem, lam: AffineWeight,
                            d: DeformationSpec) -> IntegralRootDescription:
    full = integral_roots(rs, lam)
    if isinstance(d, Closed):
        return full
    if isinstance(d, Generic):
        return IntegralRootDescription(full.critical, (), full.imaginary_integral)
    if isinstance(d, Subgeneric):
        if d.alpha not in rs.positive_roots:
            raise PreconditionError(f"{d.alpha} is not a positive root")
        keep = {d.alpha, tuple(-c for c in d.alpha)}
        return IntegralRootDescription(full.critical,
                                       tuple(e for e in full.entries if e[0] in keep),
                                       full.imaginary_integral)
    raise TypeError(f"unknown deformation {d!r}")


def finite_dot_orbit(rs: RootSystem, lam_bar, alphas) -> list[tuple[Fraction, ...]]:
    start = tuple(Fraction(x) for x in lam_bar)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for a in alphas:
            y = finite_dot(rs, a, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def classify_class(rs: RootSystem, lam: AffineWeight) -> ClassReport:
    """Generic / subgeneric / higher, from the finite integral dot orbit of ``bar(lam)``."""
    _require_critical(rs, lam)
    ints = finite_integral_roots(rs, lam.finite)
    pos = [a for a in rs.positive_roots if a in ints]
    orbit = finite_dot_orbit(rs, lam.finite, pos)
    if len(orbit) == 1:
        kind, alpha = "generic", None
    elif len(orbit) == 2:
        kind = "subgeneric"
        (alpha,) = [a for a in pos if finite_dot(rs, a, lam.finite) != lam.finite]
    else:
        kind, alpha = "higher", None
    return ClassReport(kind, alpha, tuple(orbit), frozenset(ints))


def refinement_check(rs: RootSystem, lam: AffineWeight, w: Window) -> bool:
    """Does the relation generated by the rank-one groups ``W_alpha`` (one per
    positive integral ``alpha``) reproduce the restricted class inside ``w``?"""
    _require_critical(rs, lam)
    _require_member(rs, lam, w)
    bound = w.delta_span()
    families = [shifted_generators([a], bound) for a in _positive_integral(rs, lam)]
    cls = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for x in frontier:
            for gens in families:
                for y in orbit_dot(rs, x, gens, w).members:
                    if y not in cls:
                        cls.add(y)
                        nxt.append(y)
        frontier = nxt
    return cls == restricted_class(rs, lam, w).member_set()
