"""Brute-force ground truth over small prime fields.

The oracle shares nothing with the solvers beyond the ``Mat2`` container used
for its results: matrices are raw 4-tuples of ints, powers are computed by
square-and-multiply mod p, and root sets come from a power table built once per
(p, n, scope).
"""

from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from dataclasses import asdict, dataclass, field
from functools import lru_cache

from .eslgroup import CosetProfile, Scope, coset_profile
from .ffield import PrimeField, legendre
from .mat2 import ZZ, MatrixClass, Mat2, classify
from .roots import nth_root_candidates, nth_roots, square_root_exists

__all__ = [
    "BudgetExceeded",
    "EnumerationSpace",
    "Discrepancy",
    "CosetTable",
    "MAX_PRIME",
    "enumerate_space",
    "enumerate_roots",
    "enumerate_roots_Z",
    "power_table",
    "audit_criteria",
    "audit_coset_distribution",
    "write_report",
]

# largest p each scope may be enumerated at
MAX_PRIME = {Scope.SL2: 13, Scope.ESL2: 13, Scope.GL2: 7, Scope.M2: 7}
MAX_POWER = 12


class BudgetExceeded(RuntimeError):
    def __init__(self, p: int, scope: Scope, n: int, work: int):
        self.p, self.scope, self.n, self.work = p, scope, n, work
        super().__init__(
            f"enumerating {scope.value} over F_{p} with n={n} needs about {work:,} "
            f"matrix products; budget allows p <= {MAX_PRIME[scope]} and n <= {MAX_POWER}"
        )


def _closed_form(p: int, scope: Scope) -> int:
    sl = p * (p * p - 1)
    return {
        Scope.SL2: sl,
        Scope.ESL2: sl if p == 2 else 2 * sl,
        Scope.GL2: (p * p - 1) * (p * p - p),
        Scope.M2: p**4,
    }[scope]


def _work(p: int, scope: Scope, n: int) -> int:
    return _closed_form(p, scope) * max(1, 2 * math.ceil(math.log2(max(n, 2))))


def _check_budget(p: int, scope: Scope, n: int):
    if p > MAX_PRIME[scope] or n > MAX_POWER:
        raise BudgetExceeded(p, scope, n, _work(p, scope, n))


def _det_ok(det: int, p: int, scope: Scope) -> bool:
    det %= p
    if scope is Scope.M2:
        return True
    if scope is Scope.GL2:
        return det != 0
    if scope is Scope.ESL2:
        return det == 1 or det == p - 1
    return det == 1


def _raw_space(p: int, scope: Scope):
    for a, b, c, d in itertools.product(range(p), repeat=4):
        if _det_ok(a * d - b * c, p, scope):
            yield (a, b, c, d)


def _mul(x, y, p):
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)


def _pow(x, n, p):
    result, base = (1, 0, 0, 1), x
    while n:
        if n & 1:
            result = _mul(result, base, p)
        base = _mul(base, base, p)
        n >>= 1
    return result


@dataclass(frozen=True)
class EnumerationSpace:
    p: int
    scope: Scope

    @property
    def cardinality(self) -> int:
        return sum(1 for _ in _raw_space(self.p, self.scope))

    @property
    def expected_cardinality(self) -> int:
        return _closed_form(self.p, self.scope)


def enumerate_space(p: int, scope: Scope) -> list[Mat2]:
    _check_budget(p, scope, 1)
    F = PrimeField(p)
    return [Mat2(*x, F) for x in _raw_space(p, scope)]


@lru_cache(maxsize=32)
def power_table(p: int, n: int, scope: Scope) -> dict[tuple, tuple[tuple, ...]]:
    """Map B^n -> all B in scope, as raw int tuples."""
    _check_budget(p, scope, n)
    PrimeField(p)
    table: dict[tuple, list] = {}
    for B in _raw_space(p, scope):
        table.setdefault(_pow(B, n, p), []).append(B)
    return {k: tuple(v) for k, v in table.items()}


def _raw(A: Mat2) -> tuple:
    return tuple(int(e) for e in A.entries())


def enumerate_roots(A: Mat2, n: int, scope: Scope = Scope.M2) -> set[Mat2]:
    """Exactly {B in scope : B^n = A}, by exhaustion."""
    F = A.domain
    if not isinstance(F, PrimeField):
        raise TypeError("the oracle enumerates over F_p only; see enumerate_roots_Z")
    return {Mat2(*B, F) for B in power_table(F.p, n, scope).get(_raw(A), ())}


def enumerate_roots_Z(A: Mat2, n: int = 2, bound: int = 3) -> set[Mat2]:
    """Integer roots with all entries in [-bound, bound]."""
    if A.domain is not ZZ:
        raise TypeError("expected an integer matrix")
    r = range(-bound, bound + 1)
    return {B for B in (Mat2(*e, ZZ) for e in itertools.product(r, repeat=4)) if B**n == A}


@dataclass(frozen=True)
class Discrepancy:
    p: int
    scope: str
    n: int
    matrix: str
    branch: str
    check: str
    claimed: object
    oracle: object

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def _fmt(mats) -> list[str]:
    return [B.format() for B in sorted(mats)]


def _oracle_scope(p: int, input_scope: Scope, n: int) -> Scope:
    """Where to look for roots so that the search is complete.

    A square root of a det-1 matrix has det +-1, so for SL_2 inputs and n = 2
    ESL_2 already holds every root in M_2. For n >= 3 the determinant of a root
    is any n-th root of unity and no such shortcut exists.
    """
    if p <= MAX_PRIME[Scope.M2]:
        return Scope.M2
    if input_scope is Scope.SL2 and n == 2:
        return Scope.ESL2
    raise BudgetExceeded(p, Scope.M2, n, _work(p, Scope.M2, n))


def _flags_from(roots) -> dict[str, bool]:
    dets = {B.det for B in roots}
    return {
        "SL2": any(d == 1 for d in dets),
        "ESL2": any(d == 1 or d == -1 for d in dets),
        "GL2": any(d != 0 for d in dets),
        "M2": bool(dets),
    }


def audit_criteria(p: int, n: int = 2, scope: Scope | None = None) -> list[Discrepancy]:
    """Compare the solvers with exhaustive search for every A in ``scope``.

    ``scope`` defaults to M_2 where the budget allows and SL_2 above it. For
    n = 2 the existence flags and the full root set are checked; for n >= 3 the
    full root set and, for non-scalar A, inclusion of the oracle roots among
    the verified candidates.
    """
    if scope is None:
        scope = Scope.M2 if p <= MAX_PRIME[Scope.M2] else Scope.SL2
    F = PrimeField(p)
    search = _oracle_scope(p, scope, n)
    table = power_table(p, n, search)
    out = []

    def report(A, branch, check, claimed, oracle):
        out.append(Discrepancy(p, scope.value, n, A.format(), branch, check, claimed, oracle))

    for raw in _raw_space(p, scope):
        A = Mat2(*raw, F)
        truth = {Mat2(*B, F) for B in table.get(raw, ())}
        solved = nth_roots(A, n)
        if not solved.verify():
            report(A, "verify", "soundness", _fmt(solved.explicit), _fmt(truth))
        if n == 2:
            verdict = square_root_exists(A)
            branch = verdict.branch.name
            claimed = {s.name: verdict.exists_in(s) for s in Scope}
            expected = _flags_from(truth)
            if claimed != expected:
                report(A, branch, "existence", claimed, expected)
        else:
            branch = "scalar-families" if A.is_scalar() else "candidates"
            if not A.is_scalar():
                cands = nth_root_candidates(A, n).expand()
                if not truth <= cands:
                    report(A, branch, "inclusion", _fmt(cands), _fmt(truth))
        got = solved.expand()
        if got != truth:
            report(A, branch, "root-set", _fmt(got), _fmt(truth))
    return out


@dataclass
class CosetTable:
    p: int
    profiles: dict[Mat2, CosetProfile] = field(repr=False)
    counts: Counter
    mismatches: list[Mat2]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def audit_coset_distribution(p: int) -> CosetTable:
    """Coset profile of every A in SL_2(F_p), from enumeration over ESL_2.

    For simple split A the profile is also predicted from Legendre symbols
    (tr A + 2 square for the SL_2 coset, tr A - 2 for the other); disagreements
    are listed in ``mismatches``.
    """
    F = PrimeField(p)
    table = power_table(p, 2, Scope.ESL2)
    profiles, counts, mismatches = {}, Counter(), []
    for raw in _raw_space(p, Scope.SL2):
        A = Mat2(*raw, F)
        roots = [Mat2(*B, F) for B in table.get(raw, ())]
        prof = coset_profile(A, roots)
        profiles[A] = prof
        counts[prof.bucket] += 1
        if p > 2 and classify(A) is MatrixClass.SIMPLE_SPLIT:
            predicted = (legendre(A.trace + 2) >= 0, legendre(A.trace - 2) >= 0)
            if predicted != (prof.has_root_in_SL2, prof.has_root_in_ESL2_minus):
                mismatches.append(A)
    return CosetTable(p, profiles, counts, mismatches)


def write_report(discrepancies, path) -> int:
    """One JSON record per line; an empty file means a clean audit."""
    with open(path, "w") as fh:
        for d in discrepancies:
            fh.write(d.to_json() + "\n")
    return len(discrepancies)
