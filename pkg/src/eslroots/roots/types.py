"""Result containers shared by the root solvers."""

from __future__ import annotations

import enum
from fractions import Fraction
from dataclasses import dataclass, field

from ..eslgroup import Scope
from ..ffield import PrimeField
from ..mat2 import Mat2
from .symmetric import s_t_sequence


class LimitingCaseError(ArithmeticError):
    """A root formula hit a zero denominator; use ``degenerate_square_roots``."""


class MisuseError(ValueError):
    """A limiting-case handler was called on a matrix outside the limiting case."""


class ScalarInputError(ValueError):
    """The n-th root candidate formula needs a non-scalar matrix."""


@dataclass(frozen=True)
class Family:
    """All matrices B with tr B = trace and det B = det."""

    trace: object
    det: object
    domain: object

    def contains(self, B: Mat2) -> bool:
        return B.domain is self.domain and B.trace == self.trace and B.det == self.det

    def members(self) -> list[Mat2]:
        F = self.domain
        if not isinstance(F, PrimeField):
            raise ValueError("only families over F_p can be enumerated")
        out = []
        for a in F:
            d = self.trace - a
            bc = a * d - self.det
            for b in F:
                if b:
                    out.append(Mat2(a, b, bc / b, d, F))
                elif bc == 0:
                    out.extend(Mat2(a, b, c, d, F) for c in F)
        return sorted(out)

    def companion(self) -> Mat2:
        F = self.domain
        return Mat2(0, -self.det, 1, self.trace, F)

    def powers_to(self, A: Mat2, n: int) -> bool:
        """True iff every member satisfies B^n = A.

        B^n = s_n B + t_n E with (s_n, t_n) depending only on (trace, det), so
        the whole family works iff s_n = 0 and A = t_n E.
        """
        s, t = s_t_sequence(n, self.trace, self.det)
        return s == 0 and A == Mat2.scalar(t, A.domain)

    def __str__(self):
        return f"{{B : tr B = {self.trace}, det B = {self.det}}}"


@dataclass(frozen=True)
class ScaledRoot:
    """numerator / (denominator * sqrt(radicand)) with an integer numerator matrix
    and a square-free radicand > 1."""

    numerator: Mat2
    denominator: int
    radicand: int

    def squares_to(self, A: Mat2) -> bool:
        k2r = self.denominator * self.denominator * self.radicand
        return self.numerator @ self.numerator == A * k2r

    @property
    def det(self) -> Fraction:
        return Fraction(self.numerator.det, self.denominator**2 * self.radicand)

    def __neg__(self):
        return ScaledRoot(-self.numerator, self.denominator, self.radicand)

    def __str__(self):
        k = "" if self.denominator == 1 else f"{self.denominator}*"
        return f"(1/({k}sqrt({self.radicand}))) * {self.numerator}"


@dataclass(frozen=True)
class RootSet:
    """Solutions of B^n = A: explicit matrices, trace/det families and scaled roots."""

    A: Mat2
    n: int
    explicit: tuple[Mat2, ...] = ()
    families: tuple[Family, ...] = ()
    scaled: tuple[ScaledRoot, ...] = ()

    def __post_init__(self):
        # every explicit member is re-verified; nothing unverified is ever stored
        for B in self.explicit:
            if B**self.n != self.A:
                raise AssertionError(f"{B} is not an n={self.n} root of {self.A}")
        for fam in self.families:
            if not fam.powers_to(self.A, self.n):
                raise AssertionError(f"family {fam} does not consist of roots of {self.A}")

    @classmethod
    def build(cls, A: Mat2, n: int, candidates=(), families=(), scaled=(), scope=Scope.M2):
        """Keep verified candidates inside ``scope``, drop those already in a family."""
        fams = tuple(
            sorted(
                dict.fromkeys(f for f in families if scope.admits_det(f.det)),
                key=lambda f: (int(f.det), int(f.trace)),
            )
        )
        seen = set()
        for B in candidates:
            if B is None or B in seen or not scope.contains(B):
                continue
            if B**n != A or any(f.contains(B) for f in fams):
                continue
            seen.add(B)
        sc = tuple(s for s in dict.fromkeys(scaled) if s.squares_to(A) and scope.admits_det(s.det))
        return cls(A, n, tuple(sorted(seen)), fams, sc)

    def __bool__(self):
        return bool(self.explicit or self.families or self.scaled)

    def is_empty(self) -> bool:
        return not self

    def expand(self) -> set[Mat2]:
        """All roots as matrices (families enumerated; F_p only)."""
        out = set(self.explicit)
        for fam in self.families:
            out.update(fam.members())
        return out

    def determinants(self) -> set:
        """Determinants of the roots with entries in the domain (scaled roots excluded)."""
        dets = {B.det for B in self.explicit}
        dets.update(f.det for f in self.families)
        return dets

    def restrict(self, scope: Scope) -> "RootSet":
        return RootSet.build(self.A, self.n, self.explicit, self.families, self.scaled, scope)

    def contains(self, B: Mat2) -> bool:
        return B in self.explicit or any(f.contains(B) for f in self.families)

    def verify(self) -> bool:
        return (
            all(B**self.n == self.A for B in self.explicit)
            and all(f.powers_to(self.A, self.n) for f in self.families)
            and all(s.squares_to(self.A) for s in self.scaled)
        )


class Branch(enum.Enum):
    """Criterion used to decide existence, with a short human description."""

    SCALAR = "scalar matrix: trace test, zero admitted"
    SIMPLE_SPLIT = "distinct eigenvalues in F_p: both must be squares (or 0)"
    MIXED_RESIDUES = "distinct eigenvalues in F_p, one square and one non-square: no root"
    NONRESIDUE_PAIR = "distinct eigenvalues in F_p, both non-squares, not scalar: no root"
    JORDAN_BLOCK = "non-trivial Jordan block: eigenvalue must be a nonzero square"
    IRREDUCIBLE = "irreducible characteristic polynomial: eigenvalue must be a square in F_p^2"
    CHAR2 = "characteristic 2: root exists iff diagonalizable over F_4"
    INTEGER = "integer matrix: perfect-square trace test with divisibility"
    POWER = "root set computed directly"

    @property
    def description(self) -> str:
        return self.value


@dataclass(frozen=True)
class ExistenceVerdict:
    exists_in_SL2: bool
    exists_in_ESL2: bool
    exists_in_GL2: bool
    exists_in_M2: bool
    branch: Branch
    notes: tuple[str, ...] = field(default=())

    def exists_in(self, scope: Scope) -> bool:
        return {
            Scope.SL2: self.exists_in_SL2,
            Scope.ESL2: self.exists_in_ESL2,
            Scope.GL2: self.exists_in_GL2,
            Scope.M2: self.exists_in_M2,
        }[scope]

    @classmethod
    def from_roots(cls, roots: RootSet, branch: Branch = Branch.POWER) -> "ExistenceVerdict":
        dets = roots.determinants()
        return cls(
            exists_in_SL2=any(d == 1 for d in dets),
            exists_in_ESL2=any(d == 1 or d == -1 for d in dets),
            exists_in_GL2=any(d != 0 for d in dets),
            exists_in_M2=bool(dets),
            branch=branch,
        )


__all__ = [
    "LimitingCaseError",
    "MisuseError",
    "ScalarInputError",
    "Family",
    "ScaledRoot",
    "RootSet",
    "Branch",
    "ExistenceVerdict",
]
