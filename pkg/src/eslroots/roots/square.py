"""Square and fourth roots of 2x2 matrices over F_p and Z.

Everything rests on one identity. If B^2 = A, put t = tr B and d = det B. Then
d^2 = det A, t^2 = tr A + 2d, and Cayley-Hamilton gives t B = A + d E. When
t != 0 this pins B down as (A + dE)/t, and conversely every such matrix squares
to A. The case t = 0 forces A = -dE, so it only happens for scalar A, whose
roots are the scalars +-sqrt(c) E together with the family {tr 0, det -c}.

The existence test ``square_root_exists`` does not call the solver: it decides
each case from residue symbols alone, so the two can be checked against each
other and against brute force.
"""

from __future__ import annotations

import itertools
import math

from ..eslgroup import Scope
from ..ffield import PrimeField, is_square_fp2, legendre, sqrt_fp
from ..mat2 import ZZ, DomainMismatch, MatrixClass, Mat2, classify, eigenvalues
from .types import (
    Branch,
    ExistenceVerdict,
    Family,
    LimitingCaseError,
    MisuseError,
    RootSet,
    ScaledRoot,
)

__all__ = [
    "square_root_exists",
    "sqrt_sl2_formula",
    "sqrt_gl2_formula",
    "degenerate_square_roots",
    "sqrt_all",
    "sqrt_over_Z",
    "fourth_root",
    "fourth_root_formula",
]


def _canonical_root(domain, x):
    """The distinguished square root of x (smallest residue, or the non-negative
    integer), or None when x is not a square."""
    roots = domain.sqrt(x)
    if not roots:
        return None
    if isinstance(domain, PrimeField):
        return min(roots, key=int)
    return max(roots)


def _signed_root(domain, x, sign: int):
    r = _canonical_root(domain, x)
    if r is None:
        return None
    return r if sign > 0 else -r


def _from_trace_det(A: Mat2, d, t) -> Mat2 | None:
    """(A + dE)/t, or None when the division is not exact over Z."""
    try:
        return (A + Mat2.scalar(d, A.domain)).scale_div(t)
    except ValueError:
        return None


def _check_signs(signs):
    if len(signs) != 2 or any(s not in (1, -1) for s in signs):
        raise ValueError(f"signs must be a pair of +1/-1, got {signs!r}")


def sqrt_gl2_formula(A: Mat2, signs=(1, 1)) -> Mat2 | None:
    """One branch of sqrt(A) = +-(A +- sqrt(det A) E) / sqrt(tr A +- 2 sqrt(det A)).

    ``signs = (branch, outer)``: ``branch`` picks the sign in front of sqrt(det A)
    (the same sign appears under the root below), ``outer`` the overall sign.
    The result has determinant branch * sqrt(det A).

    Returns None when a radicand is not a square (or, over Z, when the quotient
    is not integral). A zero denominator raises LimitingCaseError.
    """
    _check_signs(signs)
    branch, outer = signs
    dom = A.domain
    d = _signed_root(dom, A.det, branch)
    if d is None:
        return None
    radicand = A.trace + 2 * d
    if radicand == 0:
        raise LimitingCaseError(f"tr A + 2 sqrt(det A) = 0 for {A}; use degenerate_square_roots")
    t = _signed_root(dom, radicand, outer)
    if t is None:
        return None
    return _from_trace_det(A, d, t)


def sqrt_sl2_formula(A: Mat2, signs=(1, 1)) -> Mat2 | None:
    """sqrt(A) = (A +- E) / +-sqrt(tr A +- 2) for det A = 1.

    The plus branch (``signs[0] = 1``) gives roots of determinant 1, the minus
    branch roots of determinant -1.
    """
    if A.det != 1:
        raise ValueError(f"det {A} = {A.det}, expected 1")
    return sqrt_gl2_formula(A, signs)


def _formula_roots(A: Mat2) -> list[Mat2]:
    dom = A.domain
    out = []
    for d in dom.sqrt(A.det):
        for t in dom.sqrt(A.trace + 2 * d):
            if t != 0:
                B = _from_trace_det(A, d, t)
                if B is not None:
                    out.append(B)
    return out


def _scalar_parts(A: Mat2):
    dom = A.domain
    c = A.a
    explicit = [Mat2.scalar(b, dom) for b in dom.sqrt(c)]
    return explicit, [Family(dom.zero, -c, dom)]


def _is_limiting(A: Mat2) -> bool:
    if A.is_scalar():
        return True
    dom = A.domain
    return any(A.trace + 2 * d == 0 for d in dom.sqrt(A.det))


def degenerate_square_roots(A: Mat2, scope: Scope = Scope.M2) -> RootSet:
    """Roots in the limiting cases where tr A + 2 sqrt(det A) vanishes for one sign.

    That happens exactly for scalar A and for non-scalar A with a repeated
    eigenvalue. Scalar cE gets +-sqrt(c) E plus the family {tr 0, det -c}; a
    Jordan-type A with eigenvalue lambda gets (A + lambda E)/(+-2 sqrt(lambda)).
    """
    if not _is_limiting(A):
        raise MisuseError(f"{A} is not a limiting case")
    if A.is_scalar():
        explicit, families = _scalar_parts(A)
        return RootSet.build(A, 2, explicit, families, scope=scope)
    return RootSet.build(A, 2, _formula_roots(A), scope=scope)


def _search_char2(A: Mat2) -> list[Mat2]:
    F = A.domain
    return [
        B
        for B in (Mat2(*e, F) for e in itertools.product(range(2), repeat=4))
        if B @ B == A
    ]


def sqrt_all(A: Mat2, scope: Scope = Scope.M2) -> RootSet:
    """Every B over F_p with B^2 = A and B in ``scope``."""
    F = A.domain
    if not isinstance(F, PrimeField):
        raise DomainMismatch(f"sqrt_all works over F_p; use sqrt_over_Z for {F!r}")
    if F.p == 2:
        families = [Family(F.zero, A.a, F)] if A.is_scalar() else []
        return RootSet.build(A, 2, _search_char2(A), families, scope=scope)
    if A.is_scalar():
        return degenerate_square_roots(A, scope)
    return RootSet.build(A, 2, _formula_roots(A), scope=scope)


def _squarefree_split(m: int) -> tuple[int, int]:
    """m = k^2 r with r square-free, for m > 0."""
    k, r = 1, m
    q = 2
    while q * q <= r:
        while r % (q * q) == 0:
            r //= q * q
            k *= q
        q += 1
    return k, r


def _scaled_roots(A: Mat2) -> list[ScaledRoot]:
    """Real roots (A + dE)/sqrt(m) with integer d and m = tr A + 2d positive but
    not a perfect square."""
    out = []
    for d in ZZ.sqrt(A.det):
        m = A.trace + 2 * d
        if m <= 0 or math.isqrt(m) ** 2 == m:
            continue
        k, r = _squarefree_split(m)
        N = A + Mat2.scalar(d, ZZ)
        out += [ScaledRoot(N, k, r), ScaledRoot(-N, k, r)]
    if A.is_scalar() and A.a > 0 and math.isqrt(A.a) ** 2 != A.a:
        k, r = _squarefree_split(A.a)
        N = A
        out += [ScaledRoot(N, k, r), ScaledRoot(-N, k, r)]
    return out


def sqrt_over_Z(A: Mat2, scope: Scope = Scope.M2) -> RootSet:
    """Integer square roots of an integer matrix, plus real roots of the form
    N / (k sqrt(r)) with N an integer matrix."""
    if A.domain is not ZZ:
        raise DomainMismatch(f"expected an integer matrix, got {A.domain!r}")
    if A.is_scalar():
        explicit, families = _scalar_parts(A)
    else:
        explicit, families = _formula_roots(A), []
    return RootSet.build(A, 2, explicit, families, _scaled_roots(A), scope=scope)


def _square_roots(A: Mat2, scope: Scope = Scope.M2) -> RootSet:
    return sqrt_over_Z(A, scope) if A.domain is ZZ else sqrt_all(A, scope)


def fourth_root(A: Mat2, scope: Scope = Scope.M2) -> RootSet:
    """All C with C^4 = A, by taking square roots twice.

    A non-scalar A only has non-scalar square roots, so the second step never
    meets a family. Scalar A is handed to the scalar n-th root routine.
    """
    from .higher import scalar_nth_roots

    if A.is_scalar():
        return scalar_nth_roots(A, 4, scope)
    candidates = []
    for B in _square_roots(A).explicit:
        candidates.extend(_square_roots(B).explicit)
    return RootSet.build(A, 4, candidates, scope=scope)


def fourth_root_formula(A: Mat2, signs=(1, 1, 1, 1)) -> Mat2 | None:
    """Closed form for one fourth root:

        d1 = +-sqrt(det A),  t1 = +-sqrt(tr A + 2 d1),
        d2 = +-sqrt(d1),     t2 = +-sqrt(t1 + 2 d2),
        C  = (A + (d1 + d2 t1) E) / (t1 t2).

    ``signs`` picks the four signs in that order. Returns None when a radicand
    is not a square; a zero t1 or t2 raises LimitingCaseError.
    """
    if len(signs) != 4 or any(s not in (1, -1) for s in signs):
        raise ValueError(f"signs must be four values of +1/-1, got {signs!r}")
    dom = A.domain
    d1 = _signed_root(dom, A.det, signs[0])
    if d1 is None:
        return None
    if A.trace + 2 * d1 == 0:
        raise LimitingCaseError("t1 = 0")
    t1 = _signed_root(dom, A.trace + 2 * d1, signs[1])
    if t1 is None:
        return None
    d2 = _signed_root(dom, d1, signs[2])
    if d2 is None:
        return None
    if t1 + 2 * d2 == 0:
        raise LimitingCaseError("t2 = 0")
    t2 = _signed_root(dom, t1 + 2 * d2, signs[3])
    if t2 is None:
        return None
    return _from_trace_det(A, d1 + d2 * t1, t1 * t2)


def _verdict(sl: bool, minus: bool, gl: bool, m2: bool, branch: Branch, *notes) -> ExistenceVerdict:
    return ExistenceVerdict(sl, sl or minus, gl or sl or minus, m2 or gl or sl or minus, branch, tuple(notes))


def _char2_verdict(A: Mat2) -> ExistenceVerdict:
    # over F_2 a root exists iff A is diagonalizable over F_4, i.e. not a Jordan block
    ok = classify(A) is not MatrixClass.JORDAN_BLOCK
    gl = ok and not A.is_singular
    return _verdict(gl, False, gl, ok, Branch.CHAR2, "ESL_2 = SL_2 in characteristic 2")


def square_root_exists(A: Mat2) -> ExistenceVerdict:
    """Decide whether A has a square root in SL_2, ESL_2, GL_2 and M_2.

    Over F_p the answer comes from the class of A and Legendre symbols only;
    over Z it is read off the integer root set.
    """
    dom = A.domain
    if dom is ZZ:
        return ExistenceVerdict.from_roots(sqrt_over_Z(A), Branch.INTEGER)
    if not isinstance(dom, PrimeField):
        raise DomainMismatch(f"no existence criterion over {dom!r}")
    if dom.p == 2:
        return _char2_verdict(A)

    tr, det = A.trace, A.det
    unimodular = det == 1
    kind = classify(A)

    if kind is MatrixClass.SCALAR:
        # scalars are squares in GL_2: the family {tr 0, det -c} is never empty
        sl = unimodular and legendre(tr + 2) >= 0
        minus = unimodular and legendre(tr - 2) >= 0
        return _verdict(sl, minus, det != 0, True, Branch.SCALAR)

    if kind is MatrixClass.SIMPLE_SPLIT:
        ev = eigenvalues(A)
        r1, r2 = legendre(ev.lam1.to_base()), legendre(ev.lam2.to_base())
        if min(r1, r2) < 0:
            branch = Branch.MIXED_RESIDUES if max(r1, r2) >= 0 else Branch.NONRESIDUE_PAIR
            return _verdict(False, False, False, False, branch)
        sl = unimodular and legendre(tr + 2) == 1
        minus = unimodular and legendre(tr - 2) == 1
        return _verdict(sl, minus, det != 0, True, Branch.SIMPLE_SPLIT)

    if kind is MatrixClass.JORDAN_BLOCK:
        lam = tr / 2
        ok = legendre(lam) == 1
        # the roots (A + lam E)/(+-2 sqrt(lam)) all have determinant lam
        return _verdict(ok and lam == 1, ok and lam == -1, ok, ok, Branch.JORDAN_BLOCK)

    ev = eigenvalues(A)
    ok = is_square_fp2(ev.lam1)
    sl = unimodular and legendre(tr + 2) == 1
    minus = unimodular and legendre(tr - 2) == 1
    return _verdict(sl, minus, ok, ok, Branch.IRREDUCIBLE)
