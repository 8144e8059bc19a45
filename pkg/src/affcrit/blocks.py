"""Window-scale blocks, restricted projective flags and reciprocity checks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .characters import FormalCharacter, combine, restricted_verma_character
from .errors import PreconditionError
from .linkage import ClassReport, classify_class, restricted_class
from .rootsys import AffineWeight, FiniteRoot, RootSystem
from .weights import Window, affine_height, depth_cap, difference_coords, is_critical
from .weyl import alpha_down, alpha_up


@dataclass(frozen=True)
class FlagData:
    """Restricted Verma flag of a projective, submodule end first."""

    projective_of: AffineWeight
    flag: tuple[tuple[AffineWeight, int], ...]

    def to_json(self) -> dict:
        return {"projective_of": self.projective_of.to_json(),
                "flag": [{"weight": w.to_json(), "multiplicity": m} for w, m in self.flag]}


@dataclass(frozen=True)
class BlockPartition:
    classes: tuple[tuple[AffineWeight, tuple[AffineWeight, ...]], ...]
    window: Window

    def class_of(self, mu: AffineWeight) -> tuple[AffineWeight, ...]:
        for _, members in self.classes:
            if mu in members:
                return members
        raise KeyError(mu)

    def to_json(self) -> dict:
        return {"window": self.window.to_json(),
                "classes": [{"representative": rep.to_json(),
                             "members": [m.to_json() for m in members]}
                            for rep, members in self.classes]}


@dataclass(frozen=True)
class BGGHMatrix:
    """``entries[i][j] = [restricted Verma(members[i]) : L(members[j])]``.

    ``members`` runs from the top of the class downwards (a linear extension
    of the order), so the matrix is upper unitriangular.  A row is incomplete
    when the weight it would couple to lies outside the window.
    """

    members: tuple[AffineWeight, ...]
    entries: tuple[tuple[int, ...], ...]
    complete: tuple[bool, ...]
    report: ClassReport

    def entry(self, mu: AffineWeight, nu: AffineWeight) -> int:
        return self.entries[self.members.index(mu)][self.members.index(nu)]

    def to_json(self) -> dict:
        return {"kind": self.report.kind,
                "alpha": list(self.report.alpha) if self.report.alpha else None,
                "members": [m.to_json() for m in self.members],
                "matrix": [list(r) for r in self.entries],
                "complete": list(self.complete)}


def _sorted_down(rs: RootSystem, ws) -> list[AffineWeight]:
    return sorted(ws, key=lambda x: (-affine_height(rs, x), x.sort_key()))


def block_partition(rs: RootSystem, w: Window) -> BlockPartition:
    for c in w.ceilings:
        rs.check_weight(c)
        if not is_critical(rs, c):
            raise PreconditionError("block partition needs critical-level ceilings")
    assigned: set[AffineWeight] = set()
    classes = []
    for mu in _sorted_down(rs, w.members(rs)):
        if mu in assigned:
            continue
        members = tuple(_sorted_down(rs, restricted_class(rs, mu, w).members))
        assigned.update(members)
        classes.append((mu, members))
    return BlockPartition(tuple(classes), w)


def _flag_class(rs: RootSystem, lam: AffineWeight) -> ClassReport:
    report = classify_class(rs, lam)
    if report.kind == "higher":
        raise PreconditionError(
            f"class has {report.orbit_size} finite dot-orbit elements; "
            "only generic and subgeneric classes have a known flag")
    return report


def projective_flag(rs: RootSystem, lam: AffineWeight) -> FlagData:
    report = _flag_class(rs, lam)
    if report.kind == "generic":
        return FlagData(lam, ((lam, 1),))
    return FlagData(lam, ((alpha_up(rs, report.alpha, lam), 1), (lam, 1)))


def bggh_matrix(rs: RootSystem, lam: AffineWeight, w: Window) -> BGGHMatrix:
    report = _flag_class(rs, lam)
    members = tuple(_sorted_down(rs, restricted_class(rs, lam, w).members))
    index = {m: i for i, m in enumerate(members)}
    rows, complete = [], []
    for mu in members:
        row = [0] * len(members)
        row[index[mu]] = 1
        ok = True
        if report.kind == "subgeneric":
            below = alpha_down(rs, report.alpha, mu)
            if below in index:
                row[index[below]] = 1
            else:
                ok = False
        rows.append(tuple(row))
        complete.append(ok)
    return BGGHMatrix(members, tuple(rows), tuple(complete), report)


def _height_below(rs: RootSystem, top: AffineWeight, mu: AffineWeight) -> int:
    return sum(difference_coords(rs, top - mu))


def derived_simple_characters(rs: RootSystem, lam: AffineWeight, w: Window, depth: int,
                              cap: Optional[int] = None) -> dict[AffineWeight, FormalCharacter]:
    """Simple characters of the class of ``lam`` by back-substitution in the
    reciprocity matrix.

    Each returned character carries its own depth: the range below its
    highest weight where it is exact.  Rows that reach out of the window
    shorten that range instead of being guessed.
    """
    cap = depth_cap() if cap is None else cap
    if depth > cap:
        raise PreconditionError(f"depth {depth} exceeds safety cap {cap}")
    m = bggh_matrix(rs, lam, w)
    valid: dict[AffineWeight, int] = {}
    chars: dict[AffineWeight, FormalCharacter] = {}
    for i in reversed(range(len(m.members))):
        mu = m.members[i]
        d = depth
        if not m.complete[i]:
            missing = alpha_down(rs, m.report.alpha, mu)
            d = min(d, _height_below(rs, mu, missing) - 1)
        lower = [(m.members[j], c) for j, c in enumerate(m.entries[i]) if c and j != i]
        for nu, _ in lower:
            d = min(d, _height_below(rs, mu, nu) + valid[nu])
        terms = [(1, restricted_verma_character(rs, mu, d, cap))]
        terms += [(-c, chars[nu]) for nu, c in lower]
        chars[mu] = combine(rs, terms, mu, d)
        valid[mu] = d
    return {mu: chars[mu] for mu in m.members}
