"""Finite simple root systems and the affine data built on top of them.

Weights of the affine Cartan are written in coordinates
``(finite part in the fundamental-weight basis, level, delta coefficient)``;
finite roots are integer vectors in the simple-root basis.  The invariant
form is normalized so that the highest root has square length 2.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

from ._linalg import inverse, matvec
from .errors import PreconditionError

FiniteRoot = tuple[int, ...]

_RANK_RULES = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 4,
    "E": lambda r: 6 <= r <= 8,
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


def _frac(x: Union[int, str, Fraction]) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _RANK_RULES:
            raise PreconditionError(f"unknown Cartan family {self.family!r}")
        if self.family == "D" and self.rank == 3:
            raise PreconditionError("D3 is not accepted; use A3 (D3 = A3)")
        if self.family == "D" and self.rank == 2:
            raise PreconditionError("D2 is not simple (D2 = A1 x A1)")
        if not _RANK_RULES[self.family](self.rank):
            raise PreconditionError(f"invalid rank {self.rank} for type {self.family}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        """Parse ``"A2"``, ``"g2"`` or ``"E_8"``.

        Malformed strings raise ``ValueError``; well-formed strings with an
        invalid rank raise :class:`PreconditionError`.
        """
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def cartan_matrix(t: CartanType) -> list[list[int]]:
    """Cartan matrix ``a[i][j] = <alpha_i^vee, alpha_j>``.

    Bourbaki numbering, except G2 where alpha_1 is the long root.
    """
    r = t.rank
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    f = t.family
    if f in "ABC":
        for i in range(r - 1):
            link(i, i + 1)
        if f == "B":
            link(r - 2, r - 1, -1, -2)
        elif f == "C":
            link(r - 2, r - 1, -2, -1)
    elif f == "D":
        for i in range(r - 2):
            link(i, i + 1)
        link(r - 3, r - 1)
    elif f == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, r - 1):
            link(i, i + 1)
    elif f == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif f == "G":
        link(0, 1, -1, -3)
    return a


def _symmetrizers(a: list[list[int]]) -> tuple[int, ...]:
    # (alpha_i, alpha_i)/2 = 1/d_i; a_ij / d_i = a_ji / d_j
    r = len(a)
    half_len: list[Fraction | None] = [None] * r
    half_len[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(r):
            if j != i and a[i][j] != 0 and half_len[j] is None:
                half_len[j] = half_len[i] * a[i][j] / a[j][i]
                stack.append(j)
    top = max(half_len)
    d = [top / x for x in half_len]
    assert all(x.denominator == 1 for x in d)
    return tuple(int(x) for x in d)


@dataclass(frozen=True)
class AffineWeight:
    """Element of the affine weight space: ``(finite, level, delta)``."""

    finite: tuple[Fraction, ...]
    level: Fraction = Fraction(0)
    delta: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "finite", tuple(_frac(x) for x in self.finite))
        object.__setattr__(self, "level", _frac(self.level))
        object.__setattr__(self, "delta", _frac(self.delta))

    @classmethod
    def of(cls, finite: Iterable, level=0, delta=0) -> "AffineWeight":
        return cls(tuple(finite), level, delta)

    @classmethod
    def zero(cls, rank: int) -> "AffineWeight":
        return cls((0,) * rank)

    @classmethod
    def delta_(cls, rank: int, n=1) -> "AffineWeight":
        """``n`` times the null root."""
        return cls((0,) * rank, 0, n)

    @classmethod
    def kappa(cls, rank: int) -> "AffineWeight":
        return cls((0,) * rank, 1, 0)

    @property
    def rank(self) -> int:
        return len(self.finite)

    def __add__(self, other: "AffineWeight") -> "AffineWeight":
        if not isinstance(other, AffineWeight):
            return NotImplemented
        if len(other.finite) != len(self.finite):
            raise PreconditionError("weights of different rank")
        return AffineWeight(tuple(x + y for x, y in zip(self.finite, other.finite)),
                            self.level + other.level, self.delta + other.delta)

    def __neg__(self) -> "AffineWeight":
        return AffineWeight(tuple(-x for x in self.finite), -self.level, -self.delta)

    def __sub__(self, other: "AffineWeight") -> "AffineWeight":
        if not isinstance(other, AffineWeight):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c) -> "AffineWeight":
        if isinstance(c, AffineWeight):
            return NotImplemented
        c = _frac(c)
        return AffineWeight(tuple(c * x for x in self.finite), c * self.level, c * self.delta)

    __rmul__ = __mul__

    def shift(self, n) -> "AffineWeight":
        """``self + n*delta``."""
        return AffineWeight(self.finite, self.level, self.delta + _frac(n))

    def sort_key(self) -> tuple[Fraction, ...]:
        return (*self.finite, self.level, self.delta)

    def to_json(self) -> dict:
        return {"finite": [str(x) for x in self.finite],
                "level": str(self.level), "delta": str(self.delta)}

    @classmethod
    def from_json(cls, obj: dict) -> "AffineWeight":
        return cls(tuple(Fraction(x) for x in obj["finite"]),
                   Fraction(obj["level"]), Fraction(obj["delta"]))

    @classmethod
    def parse(cls, text: str, rank: int | None = None) -> "AffineWeight":
        """Parse ``"f1,...,fr,level,delta"``; raises ``ValueError`` on bad syntax."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) < 3:
            raise ValueError(f"weight {text!r} needs at least 3 comma-separated entries")
        vals = [Fraction(p) for p in parts]
        if rank is not None and len(vals) != rank + 2:
            raise ValueError(f"weight {text!r} has {len(vals)} entries, expected {rank + 2}")
        return cls(tuple(vals[:-2]), vals[-2], vals[-1])

    def __str__(self) -> str:
        return ",".join(str(x) for x in (*self.finite, self.level, self.delta))


@dataclass(frozen=True)
class RealRoot:
    """The real root ``alpha + n*delta``."""

    alpha: FiniteRoot
    n: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(int(c) for c in self.alpha))

    def is_positive(self) -> bool:
        return self.n > 0 or (self.n == 0 and all(c >= 0 for c in self.alpha))

    def __neg__(self) -> "RealRoot":
        return RealRoot(tuple(-c for c in self.alpha), -self.n)


@dataclass(frozen=True)
class ImaginaryRoot:
    """The imaginary root ``n*delta``."""

    n: int

    def __post_init__(self) -> None:
        if self.n == 0:
            raise PreconditionError("imaginary root needs n != 0")


AffineRoot = Union[RealRoot, ImaginaryRoot]


@dataclass(frozen=True)
class RootSystem:
    """Finite root system of a simple type with its affine extension data."""

    cartan_type: CartanType
    cartan: tuple[tuple[int, ...], ...] = field(init=False)
    d_values: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        a = cartan_matrix(self.cartan_type)
        object.__setattr__(self, "cartan", tuple(tuple(row) for row in a))
        object.__setattr__(self, "d_values", _symmetrizers(a))

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @cached_property
    def _cartan_inv(self):
        return inverse(self.cartan)

    @cached_property
    def _gram(self) -> tuple[tuple[Fraction, ...], ...]:
        # Gram matrix of fundamental weights: diag(1/d) * A^{-1}
        inv = self._cartan_inv
        return tuple(tuple(inv[i][j] / self.d_values[i] for j in range(self.rank))
                     for i in range(self.rank))

    @cached_property
    def positive_roots(self) -> tuple[FiniteRoot, ...]:
        """Positive roots, by height then lexicographically.

        Built by root strings: for positive ``b`` and simple ``a_i``,
        ``b + a_i`` is a root iff ``p - <b, a_i^vee> > 0`` where ``p`` is
        the length of the ``a_i``-string below ``b``.
        """
        r = self.rank
        simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        found = set(simple)
        layer = list(simple)
        while layer:
            nxt = []
            for b in layer:
                for i in range(r):
                    p = 0
                    while True:
                        below = tuple(c - (p + 1) * (j == i) for j, c in enumerate(b))
                        if below in found:
                            p += 1
                        else:
                            break
                    if p - self.coroot_pairing_root(b, i) > 0:
                        up = tuple(c + (j == i) for j, c in enumerate(b))
                        if up not in found:
                            found.add(up)
                            nxt.append(up)
            layer = nxt
        return tuple(sorted(found, key=lambda c: (sum(c), c)))

    @cached_property
    def roots(self) -> tuple[FiniteRoot, ...]:
        pos = self.positive_roots
        return pos + tuple(tuple(-c for c in b) for b in pos)

    @cached_property
    def highest_root(self) -> FiniteRoot:
        pos = self.positive_roots
        top = max(sum(b) for b in pos)
        (theta,) = [b for b in pos if sum(b) == top]
        return theta

    @cached_property
    def dual_coxeter(self) -> int:
        h = 1 + self.coroot_pairing(self.rho_finite, self.highest_root)
        assert h.denominator == 1
        return int(h)

    @cached_property
    def coxeter(self) -> int:
        """Height of delta in the affine simple roots: ``1 + ht(theta)``."""
        return 1 + sum(self.highest_root)

    @cached_property
    def rho_finite(self) -> tuple[Fraction, ...]:
        return (Fraction(1),) * self.rank

    def coroot_pairing_root(self, beta: FiniteRoot, i: int) -> int:
        """``<beta, alpha_i^vee>`` for a root in simple coordinates."""
        return sum(self.cartan[i][j] * c for j, c in enumerate(beta))

    def root_to_weight(self, beta: Sequence[int | Fraction]) -> tuple[Fraction, ...]:
        """Simple-root coordinates to fundamental-weight coordinates."""
        return matvec(self.cartan, beta)

    def weight_to_root(self, lam: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Fundamental-weight coordinates to simple-root coordinates."""
        return matvec(self._cartan_inv, lam)

    def finite_form(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        g = self._gram
        return sum((x[i] * g[i][j] * y[j] for i in range(self.rank) for j in range(self.rank)
                    if x[i] and y[j]), Fraction(0))

    def root_norm(self, beta: FiniteRoot) -> Fraction:
        """``(beta, beta)`` for a finite root."""
        w = self.root_to_weight(beta)
        return self.finite_form(w, w)

    def coroot_pairing(self, lam: Sequence[Fraction], beta: FiniteRoot) -> Fraction:
        """``<lam, beta^vee> = 2(lam, beta)/(beta, beta)`` for a finite weight."""
        w = self.root_to_weight(beta)
        return 2 * self.finite_form(lam, w) / self.finite_form(w, w)

    def check_weight(self, *ws: AffineWeight) -> None:
        for w in ws:
            if len(w.finite) != self.rank:
                raise PreconditionError(
                    f"weight has {len(w.finite)} finite coordinates, {self.cartan_type} needs {self.rank}")

    def pairing(self, x: AffineWeight, y: AffineWeight) -> Fraction:
        """Invariant form: finite form plus ``(kappa, delta) = 1``."""
        self.check_weight(x, y)
        return self.finite_form(x.finite, y.finite) + x.level * y.delta + x.delta * y.level

    def embed_root(self, beta: AffineRoot) -> AffineWeight:
        if isinstance(beta, ImaginaryRoot):
            return AffineWeight((0,) * self.rank, 0, beta.n)
        if beta.alpha not in self.roots:
            raise PreconditionError(f"{beta.alpha} is not a root of {self.cartan_type}")
        return AffineWeight(self.root_to_weight(beta.alpha), 0, beta.n)

    def rho(self) -> AffineWeight:
        """Affine Weyl vector ``(rho_bar, h^vee, 0)``; pairs to 1 with every simple coroot."""
        return AffineWeight(self.rho_finite, self.dual_coxeter, 0)

    def affine_simple_roots(self) -> list[RealRoot]:
        """``alpha_0 = -theta + delta`` first, then the finite simple roots."""
        r = self.rank
        theta = self.highest_root
        return [RealRoot(tuple(-c for c in theta), 1)] + [
            RealRoot(tuple(int(i == j) for j in range(r)), 0) for i in range(r)]

    def to_json(self) -> dict:
        return {
            "type": str(self.cartan_type),
            "cartan_matrix": [list(row) for row in self.cartan],
            "d_values": list(self.d_values),
            "positive_roots": [list(b) for b in self.positive_roots],
            "highest_root": list(self.highest_root),
            "dual_coxeter": self.dual_coxeter,
            "rho": self.rho().to_json(),
        }


_CACHE: dict[CartanType, RootSystem] = {}


def build_root_system(t: CartanType | str) -> RootSystem:
    if isinstance(t, str):
        t = CartanType.parse(t)
    rs = _CACHE.get(t)
    if rs is None:
        rs = _CACHE[t] = RootSystem(t)
    return rs
