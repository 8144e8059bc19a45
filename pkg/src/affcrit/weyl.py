"""Affine reflections, the dot action, integral roots and dot orbits."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import PreconditionError
from .rootsys import AffineRoot, AffineWeight, FiniteRoot, ImaginaryRoot, RealRoot, RootSystem
from .weights import Window, is_critical, leq


@dataclass(frozen=True)
class AllIntegers:
    """Every shift ``n`` makes ``alpha + n*delta`` integral."""


@dataclass(frozen=True)
class Residue:
    """Shifts ``n`` with ``n = r (mod m)``."""

    r: Fraction
    m: Fraction

    def contains(self, n: int) -> bool:
        return ((n - self.r) / self.m).denominator == 1


NConstraint = Union[AllIntegers, Residue]


@dataclass(frozen=True)
class IntegralRootDescription:
    critical: bool
    entries: tuple[tuple[FiniteRoot, NConstraint], ...]
    imaginary_integral: bool

    def roots(self) -> set[FiniteRoot]:
        return {a for a, _ in self.entries}

    def to_json(self) -> dict:
        def enc(c: NConstraint):
            if isinstance(c, AllIntegers):
                return "all"
            return {"residue": str(c.r), "modulus": str(c.m)}
        return {"critical": self.critical,
                "imaginary_integral": self.imaginary_integral,
                "entries": [{"alpha": list(a), "n": enc(c)} for a, c in self.entries]}


@dataclass(frozen=True)
class OrbitResult:
    members: tuple[AffineWeight, ...]
    generators_used: tuple[RealRoot, ...]
    truncated: bool

    def member_set(self) -> set[AffineWeight]:
        return set(self.members)

    def to_json(self) -> dict:
        return {"members": [m.to_json() for m in self.members], "truncated": self.truncated}


def _real(beta: AffineRoot) -> RealRoot:
    if not isinstance(beta, RealRoot):
        raise PreconditionError("reflections are only defined for real roots")
    return beta


def coroot_value(rs: RootSystem, x: AffineWeight, beta: RealRoot) -> Fraction:
    """``<x, beta^vee>``."""
    b = rs.embed_root(_real(beta))
    return 2 * rs.pairing(x, b) / rs.pairing(b, b)


def reflect(rs: RootSystem, beta: AffineRoot, x: AffineWeight) -> AffineWeight:
    beta = _real(beta)
    return x - coroot_value(rs, x, beta) * rs.embed_root(beta)


def dot_reflect(rs: RootSystem, beta: AffineRoot, lam: AffineWeight) -> AffineWeight:
    rho = rs.rho()
    return reflect(rs, beta, lam + rho) - rho


def integral_roots(rs: RootSystem, lam: AffineWeight) -> IntegralRootDescription:
    """Solve ``2(lam+rho, alpha+n*delta) in Z(alpha,alpha)`` for ``n``, per finite root."""
    rs.check_weight(lam)
    crit = is_critical(rs, lam)
    lr = lam + rs.rho()
    entries = []
    for alpha in rs.roots:
        norm = rs.root_norm(alpha)
        a = 2 * rs.finite_form(lr.finite, rs.root_to_weight(alpha)) / norm
        b = 2 * lr.level / norm
        if b == 0:
            if a.denominator == 1:
                entries.append((alpha, AllIntegers()))
            continue
        # a + n*b in Z, b = p/q in lowest terms
        p, q = b.numerator, b.denominator
        s = a * q
        if s.denominator != 1:
            continue
        r = (-int(s) * pow(p, -1, q)) % q if q > 1 else 0
        entries.append((alpha, Residue(Fraction(r), Fraction(q))))
    return IntegralRootDescription(crit, tuple(entries), crit)


def finite_integral_roots(rs: RootSystem, lam_bar: Sequence[Fraction]) -> set[FiniteRoot]:
    lr = [Fraction(x) + y for x, y in zip(lam_bar, rs.rho_finite)]
    return {a for a in rs.roots if rs.coroot_pairing(lr, a).denominator == 1}


def finite_dot(rs: RootSystem, alpha: FiniteRoot, lam_bar: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Finite dot reflection ``s_alpha.lam_bar``."""
    lr = [Fraction(x) + y for x, y in zip(lam_bar, rs.rho_finite)]
    m = rs.coroot_pairing(lr, alpha)
    aw = rs.root_to_weight(alpha)
    return tuple(Fraction(x) - m * y for x, y in zip(lam_bar, aw))


def orbit_dot(rs: RootSystem, lam: AffineWeight, gens: Iterable[RealRoot], w: Window) -> OrbitResult:
    """Breadth-first dot-orbit of ``lam`` under ``gens``, clipped to ``w``."""
    gens = tuple(_real(g) for g in gens)
    if not w.contains(rs, lam):
        raise PreconditionError("weight is not in the window")
    seen = {lam}
    queue = deque([lam])
    truncated = False
    while queue:
        x = queue.popleft()
        for g in gens:
            y = dot_reflect(rs, g, x)
            if y in seen:
                continue
            if not w.contains(rs, y):
                truncated = True
                continue
            seen.add(y)
            queue.append(y)
    return OrbitResult(tuple(sorted(seen, key=AffineWeight.sort_key)), gens, truncated)


def shifted_generators(alphas: Iterable[FiniteRoot], bound: int) -> list[RealRoot]:
    """``alpha + n*delta`` for each ``alpha`` and ``|n| <= bound``."""
    return [RealRoot(a, n) for a in sorted(alphas) for n in range(-bound, bound + 1)]


def _is_positive(a: FiniteRoot) -> bool:
    return all(c >= 0 for c in a)


def alpha_up(rs: RootSystem, alpha: FiniteRoot, lam: AffineWeight) -> AffineWeight:
    """The element of ``{s_alpha.lam, s_{-alpha+delta}.lam}`` above ``lam``."""
    if not _is_positive(alpha) or tuple(alpha) not in rs.positive_roots:
        raise PreconditionError(f"{alpha} is not a positive root")
    if not is_critical(rs, lam):
        raise PreconditionError("alpha_up needs a critical weight")
    a = dot_reflect(rs, RealRoot(alpha, 0), lam)
    if a == lam:
        raise PreconditionError("lam is fixed by s_alpha")
    b = dot_reflect(rs, RealRoot(tuple(-c for c in alpha), 1), lam)
    if leq(rs, lam, a) is not None:
        return a
    if leq(rs, lam, b) is not None:
        return b
    raise PreconditionError(f"{alpha} is not integral for this weight")


def alpha_down(rs: RootSystem, alpha: FiniteRoot, lam: AffineWeight) -> AffineWeight:
    """Inverse of :func:`alpha_up`: the element of the same pair below ``lam``."""
    if not is_critical(rs, lam):
        raise PreconditionError("alpha_down needs a critical weight")
    a = dot_reflect(rs, RealRoot(alpha, 0), lam)
    if a == lam:
        raise PreconditionError("lam is fixed by s_alpha")
    b = dot_reflect(rs, RealRoot(tuple(-c for c in alpha), 1), lam)
    for x in (a, b):
        if leq(rs, x, lam) is not None:
            return x
    raise PreconditionError(f"{alpha} is not integral for this weight")
