"""Truncated integer power series in ``x = e^{-delta}``.

``p_series(r, N)`` holds the coefficients of ``prod_{l>=1} (1 - x^l)^{-r}``
(partitions with ``r`` colours) and ``q_series(r, N)`` those of its inverse
``prod_{l>=1} (1 - x^l)^r``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import PreconditionError


@dataclass(frozen=True)
class CoeffSeries:
    values: tuple[int, ...]

    @property
    def order(self) -> int:
        """Highest index stored."""
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def _check(rank: int, N: int) -> None:
    if rank < 1:
        raise PreconditionError("rank must be positive")
    if N < 0:
        raise PreconditionError("N must be nonnegative")


def multiply(a: Sequence[int], b: Sequence[int], N: int) -> list[int]:
    """Product of two series truncated after ``x^N``."""
    out = [0] * (N + 1)
    for i, ai in enumerate(a[:N + 1]):
        if ai:
            for j, bj in enumerate(b[:N + 1 - i]):
                out[i + j] += ai * bj
    return out


def divisor_sums(N: int) -> list[int]:
    sigma = [0] * (N + 1)
    for d in range(1, N + 1):
        for m in range(d, N + 1, d):
            sigma[m] += d
    return sigma


def p_series(rank: int, N: int) -> CoeffSeries:
    # n p(n) = rank * sum_{k=1}^{n} sigma(k) p(n-k)
    _check(rank, N)
    sigma = divisor_sums(N)
    p = [1] + [0] * N
    for n in range(1, N + 1):
        s = rank * sum(sigma[k] * p[n - k] for k in range(1, n + 1))
        assert s % n == 0
        p[n] = s // n
    return CoeffSeries(tuple(p))


def euler_series(N: int) -> list[int]:
    """``prod_{l>=1}(1 - x^l)`` from generalized pentagonal numbers."""
    out = [0] * (N + 1)
    out[0] = 1
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > N:
            break
        sign = -1 if k % 2 else 1
        out[g1] += sign
        g2 = k * (3 * k + 1) // 2
        if g2 <= N:
            out[g2] += sign
        k += 1
    return out


def q_series(rank: int, N: int) -> CoeffSeries:
    _check(rank, N)
    base = euler_series(N)
    out = [1] + [0] * N
    for _ in range(rank):
        out = multiply(out, base, N)
    return CoeffSeries(tuple(out))
