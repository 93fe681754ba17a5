"""The extended special linear group ESL_2 = {X : det X = +-1} over F_p and Z.

ESL_2 is never materialized as a group object; membership is a determinant test
and the enumeration-based checks below build element lists on demand.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .ffield import PrimeField
from .mat2 import ZZ, Mat2

__all__ = [
    "GroupMembership",
    "Scope",
    "CosetProfile",
    "Generators",
    "RelationReport",
    "TIReport",
    "membership",
    "generators",
    "verify_relations",
    "group_order",
    "enumerate_group",
    "coset_profile",
    "ti_property_check",
]


class GroupMembership(enum.Enum):
    SL2 = "SL2"
    ESL2_MINUS = "ESL2-minus"
    GL2_OTHER = "GL2-other"
    SINGULAR = "singular"


class Scope(enum.Enum):
    """Where roots are looked for, ordered by inclusion."""

    SL2 = "sl2"
    ESL2 = "esl2"
    GL2 = "gl2"
    M2 = "m2"

    def admits_det(self, det) -> bool:
        if self is Scope.M2:
            return True
        if self is Scope.GL2:
            return det != 0
        if self is Scope.ESL2:
            return det == 1 or det == -1
        return det == 1

    def contains(self, X: Mat2) -> bool:
        return self.admits_det(X.det)


def membership(X: Mat2) -> GroupMembership:
    det = X.det
    if det == 1:
        return GroupMembership.SL2
    if det == -1:
        return GroupMembership.ESL2_MINUS
    if det == 0:
        return GroupMembership.SINGULAR
    return GroupMembership.GL2_OTHER


class Generators(tuple):
    """(s, t, i): shift, quarter turn, and the reflection generating the C_2 top group."""

    __slots__ = ()

    @property
    def s(self) -> Mat2:
        return self[0]

    @property
    def t(self) -> Mat2:
        return self[1]

    @property
    def i(self) -> Mat2:
        return self[2]


def generators(domain=ZZ) -> Generators:
    s = Mat2(1, 1, 0, 1, domain)
    t = Mat2(0, -1, 1, 0, domain)
    i = Mat2(-1, 0, 0, 1, domain)
    return Generators((s, t, i))


@dataclass(frozen=True)
class RelationReport:
    domain: object
    results: dict[str, bool]
    collapsed: bool = False  # -1 == 1, so i = E and t^2 = E

    @property
    def all_pass(self) -> bool:
        return all(self.results.values())


def verify_relations(domain=ZZ) -> RelationReport:
    s, t, i = generators(domain)
    E = Mat2.identity(domain)
    inv = {"s": s.inverse(), "t": t.inverse(), "i": i.inverse()}
    results = {
        "i s i^-1 = s^-1": i @ s @ inv["i"] == inv["s"],
        "i t i^-1 = t^-1": i @ t @ inv["i"] == inv["t"],
        "t^4 = e": t**4 == E,
        "i^2 = e": i @ i == E,
        "t^2 = -E": t @ t == -E,
        "t^-2 s t^2 = s": inv["t"] @ inv["t"] @ s @ t @ t == s,
    }
    collapsed = isinstance(domain, PrimeField) and domain.p == 2
    return RelationReport(domain, results, collapsed)


def group_order(p: int) -> tuple[int, int]:
    """(|SL_2(F_p)|, |ESL_2(F_p)|); the two coincide for p = 2."""
    PrimeField(p)
    sl = p * (p * p - 1)
    return (sl, sl) if p == 2 else (sl, 2 * sl)


def enumerate_group(p: int, scope: Scope) -> list[Mat2]:
    """All matrices of the given scope over F_p, in lexicographic order."""
    F = PrimeField(p)
    allowed = {v for v in range(p) if scope.admits_det(F(v))}
    return [
        Mat2(a, b, c, d, F)
        for a, b, c, d in itertools.product(range(p), repeat=4)
        if (a * d - b * c) % p in allowed
    ]


@dataclass(frozen=True)
class CosetProfile:
    has_root_in_SL2: bool
    has_root_in_ESL2_minus: bool
    collapsed: bool = False  # p = 2: the two cosets coincide

    @property
    def bucket(self) -> str:
        if self.has_root_in_SL2 and self.has_root_in_ESL2_minus:
            return "both"
        if self.has_root_in_SL2:
            return "sl-only"
        if self.has_root_in_ESL2_minus:
            return "minus-only"
        return "none"


def coset_profile(A: Mat2, roots) -> CosetProfile:
    """Which cosets of SL_2 in ESL_2 contain a root from ``roots``.

    ``roots`` is a RootSet (explicit matrices, trace/det families and, over Z,
    scaled roots) or any iterable of matrices. Families are never empty, so a
    family contributes its determinant directly.
    """
    if A.det != 1:
        raise ValueError("coset profiles are defined for det A = 1")
    dets = roots.determinants() if hasattr(roots, "determinants") else {B.det for B in roots}
    collapsed = isinstance(A.domain, PrimeField) and A.domain.p == 2
    plus = any(d == 1 for d in dets)
    minus = any(d == -1 for d in dets)
    return CosetProfile(plus, minus or (collapsed and plus), collapsed)


@dataclass(frozen=True)
class TIReport:
    p: int
    holds: bool
    group_size: int
    normalizer: tuple[Mat2, ...] = field(repr=False)
    normalizer_is_diagonal: bool
    claimed_structure_holds: bool  # diagonal matrices extended by [[0,1],[1,0]]

    @property
    def normalizer_order(self) -> int:
        return len(self.normalizer)


def ti_property_check(p: int) -> TIReport:
    """Check that C_2 = <i> is a TI-subgroup of ESL_2(F_p) by full enumeration.

    For every g outside the normalizer of C_2 the intersection C_2 and g C_2 g^-1
    must be trivial. The normalizer is reported as computed, together with a
    comparison against the structure "diagonal matrices plus the swap matrix".
    """
    if p not in (3, 5, 7):
        raise ValueError("enumeration is limited to p in {3, 5, 7}")
    F = PrimeField(p)
    E = Mat2.identity(F)
    i = generators(F).i
    C2 = {E, i}
    group = enumerate_group(p, Scope.ESL2)
    normalizer = []
    holds = True
    for g in group:
        gi = g @ i @ g.inverse()
        conj = {E, gi}
        if conj == C2:
            normalizer.append(g)
        elif conj & C2 != {E}:
            holds = False
    diagonal = [g for g in group if g.b == 0 and g.c == 0]
    P = Mat2(0, 1, 1, 0, F)
    claimed = set(diagonal) | {P @ g for g in diagonal}
    return TIReport(
        p=p,
        holds=holds,
        group_size=len(group),
        normalizer=tuple(normalizer),
        normalizer_is_diagonal=set(normalizer) == set(diagonal),
        claimed_structure_holds=set(normalizer) == claimed,
    )
