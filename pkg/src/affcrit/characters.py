"""Truncated formal characters of Verma and restricted Verma modules."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional

from .errors import PreconditionError
from .rootsys import AffineWeight, ImaginaryRoot, RealRoot, RootSystem
from .series import CoeffSeries
from .weights import depth_cap, difference_coords, from_coords, is_critical, simplex_points


@dataclass(frozen=True)
class FormalCharacter:
    """Finitely supported ``weight -> coefficient`` map, cut off ``depth``
    affine heights below ``anchor``."""

    anchor: AffineWeight
    depth: int
    support: Mapping[AffineWeight, int]

    def coefficient(self, mu: AffineWeight) -> int:
        return self.support.get(mu, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return (self.anchor == other.anchor and self.depth == other.depth
                and dict(self.support) == dict(other.support))

    def __hash__(self) -> int:
        return hash((self.anchor, self.depth, frozenset(self.support.items())))

    def shift(self, n) -> "FormalCharacter":
        """Move everything by ``n*delta``."""
        return FormalCharacter(self.anchor.shift(n), self.depth,
                               {mu.shift(n): c for mu, c in self.support.items()})

    def rows(self, rs: RootSystem) -> list[tuple[AffineWeight, int, int]]:
        """``(weight, height below anchor, coefficient)`` by height, then weight."""
        out = []
        for mu, c in self.support.items():
            coords = difference_coords(rs, self.anchor - mu)
            out.append((mu, sum(coords), c))
        out.sort(key=lambda t: (t[1], t[0].sort_key()))
        return out

    def to_json(self, rs: RootSystem) -> dict:
        return {"anchor": self.anchor.to_json(), "depth": self.depth,
                "support": [{"weight": mu.to_json(), "height": h, "coefficient": c}
                            for mu, h, c in self.rows(rs)]}


def combine(rs: RootSystem, terms: Iterable[tuple[int, FormalCharacter]],
            anchor: AffineWeight, depth: int) -> FormalCharacter:
    """``sum c_i * ch_i``, keeping weights within ``depth`` below ``anchor``."""
    acc: dict[AffineWeight, int] = {}
    for c, ch in terms:
        for mu, v in ch.support.items():
            coords = difference_coords(rs, anchor - mu)
            if coords is None or sum(coords) > depth:
                continue
            acc[mu] = acc.get(mu, 0) + c * v
    return FormalCharacter(anchor, depth, {mu: v for mu, v in acc.items() if v})


def positive_root_vectors(rs: RootSystem, max_height: int,
                          real_only: bool) -> list[tuple[int, ...]]:
    """Positive affine roots of height ``<= max_height`` in affine simple-root
    coordinates ``(c0, c1..cr)``; each imaginary root is repeated ``rank`` times."""
    theta = rs.highest_root
    out = []
    for n in range(0, max_height // rs.coxeter + 2):
        for a in rs.roots:
            if n == 0 and not all(c >= 0 for c in a):
                continue
            v = (n, *(c + n * t for c, t in zip(a, theta)))
            if sum(v) <= max_height:
                out.append(v)
        if n > 0 and not real_only:
            v = (n, *(n * t for t in theta))
            if sum(v) <= max_height:
                out.extend([v] * rs.rank)
    return out


def _partition_table(rs: RootSystem, depth: int, real_only: bool) -> dict[tuple[int, ...], int]:
    points = list(simplex_points(rs.rank + 1, depth))
    f = dict.fromkeys(points, 0)
    f[points[0]] = 1
    for v in positive_root_vectors(rs, depth, real_only):
        hv = sum(v)
        for p in points:
            fp = f[p]
            if fp and sum(p) + hv <= depth:
                q = tuple(x + y for x, y in zip(p, v))
                f[q] += fp
    return f


def _character(rs: RootSystem, lam: AffineWeight, depth: int, real_only: bool,
               cap: Optional[int]) -> FormalCharacter:
    rs.check_weight(lam)
    cap = depth_cap() if cap is None else cap
    if depth < 0:
        raise PreconditionError("depth must be nonnegative")
    if depth > cap:
        raise PreconditionError(f"depth {depth} exceeds safety cap {cap}")
    table = _partition_table(rs, depth, real_only)
    support = {from_coords(rs, lam, p): c for p, c in table.items() if c}
    return FormalCharacter(lam, depth, support)


def verma_character(rs: RootSystem, lam: AffineWeight, depth: int,
                    cap: Optional[int] = None) -> FormalCharacter:
    """``e^lam * prod_{beta > 0} (1 - e^{-beta})^{-mult(beta)}``, truncated."""
    return _character(rs, lam, depth, False, cap)


def restricted_verma_character(rs: RootSystem, lam: AffineWeight, depth: int,
                               cap: Optional[int] = None) -> FormalCharacter:
    """Same product over positive real roots only; critical weights only."""
    rs.check_weight(lam)
    if not is_critical(rs, lam):
        raise PreconditionError(f"weight {lam} is not at the critical level {-rs.dual_coxeter}")
    return _character(rs, lam, depth, True, cap)


def convolve_delta(rs: RootSystem, series: CoeffSeries, ch: FormalCharacter) -> FormalCharacter:
    """``sum_n series[n] * (ch shifted by -n*delta)``, cut at ``ch.depth``."""
    needed = ch.depth // rs.coxeter
    if series.order < needed:
        raise PreconditionError(
            f"series has terms up to {series.order}, depth {ch.depth} needs {needed}")
    terms = [(series[n], ch.shift(-n)) for n in range(needed + 1) if series[n]]
    return combine(rs, terms, ch.anchor, ch.depth)


def brute_force_root_partitions(rs: RootSystem, nu: AffineWeight, real_only: bool,
                                depth: int) -> int:
    """Count multisets of positive roots summing to ``nu`` by exhaustive search.

    Imaginary roots come in ``rank`` colours unless ``real_only``.  Kept
    deliberately naive: it is the reference the fast path is tested against.
    """
    rs.check_weight(nu)
    target = difference_coords(rs, nu)
    if target is None:
        raise PreconditionError("nu is not a nonnegative combination of simple roots")
    ht = sum(target)
    if ht > depth:
        raise PreconditionError(f"height {ht} exceeds depth {depth}")

    parts: list[tuple[int, ...]] = []
    for n in range(0, ht + 1):
        for a in rs.roots:
            beta = RealRoot(a, n)
            if not beta.is_positive():
                continue
            v = difference_coords(rs, rs.embed_root(beta))
            if sum(v) <= ht:
                parts.append(v)
        if n > 0 and not real_only:
            v = difference_coords(rs, rs.embed_root(ImaginaryRoot(n)))
            if sum(v) <= ht:
                parts.extend([v] * rs.rank)

    def count(rem: tuple[int, ...], start: int) -> int:
        if not any(rem):
            return 1
        total = 0
        for j in range(start, len(parts)):
            v = parts[j]
            if all(x <= y for x, y in zip(v, rem)):
                total += count(tuple(y - x for x, y in zip(v, rem)), j)
        return total

    return count(target, 0)
