"""Cube, fourth and general n-th roots.

If B has trace a and determinant b then B^n = s_n B + t_n E with
s_n = h_(n-1)(a, b) and t_n = -b h_(n-2)(a, b). So B^n = A forces b^n = det A
and p_n(a, b) = tr A, and when s_n != 0

    B = (A + b h_(n-2) E) / h_(n-1).

s_n = 0 makes B^n scalar, so for non-scalar A every root arises this way. For
scalar A = cE the roots are the scalars bE with b^n = c together with whole
trace/det families satisfying s_n = 0, t_n = c.
"""

from __future__ import annotations

import math

from ..eslgroup import Scope
from ..ffield import PrimeField
from ..mat2 import ZZ, DomainMismatch, Mat2
from .square import _square_roots
from .symmetric import h_sequence, power_sum_p, s_t_sequence
from .types import Family, RootSet, ScalarInputError

__all__ = ["nth_root_candidates", "scalar_nth_roots", "cube_roots", "nth_roots"]


def _integer_bound(A: Mat2, n: int) -> int:
    # every eigenvalue has modulus at most |tr A| + sqrt|det A|, so the trace of
    # an n-th root is at most twice the n-th root of that
    R = abs(A.trace) + math.isqrt(abs(A.det)) + 1
    r = 1
    while r**n < R:
        r += 1
    return 2 * r


def _trace_range(A: Mat2, n: int):
    dom = A.domain
    if isinstance(dom, PrimeField):
        return list(dom)
    if dom is ZZ:
        m = _integer_bound(A, n)
        return range(-m, m + 1)
    raise DomainMismatch(f"n-th roots are computed over F_p or Z, not {dom!r}")


def _trace_det_pairs(A: Mat2, n: int):
    """(a, b) with b^n = det A and p_n(a, b) = tr A, found by scanning a."""
    dom = A.domain
    for b in sorted(dom.nth_roots(A.det, n), key=lambda x: int(x)):
        for a in _trace_range(A, n):
            a = dom(a)
            if power_sum_p(n, a, b) == A.trace:
                yield a, b


def nth_root_candidates(A: Mat2, n: int, scope: Scope = Scope.M2) -> RootSet:
    """Verified n-th roots of a non-scalar A from the trace/det parametrisation."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if A.is_scalar():
        raise ScalarInputError(f"{A} is scalar; use scalar_nth_roots")
    candidates = []
    for a, b in _trace_det_pairs(A, n):
        h = h_sequence(n - 1, a, b)
        if h[n - 1] == 0:
            continue
        try:
            candidates.append((A + Mat2.scalar(b * h[n - 2], A.domain)).scale_div(h[n - 1]))
        except ValueError:
            pass  # not integral over Z
    return RootSet.build(A, n, candidates, scope=scope)


def _family_pairs(A: Mat2, n: int):
    dom = A.domain
    c = A.a
    # det(B)^n = det(A) = c^2 for any root B
    for b in sorted(dom.nth_roots(c * c, n), key=lambda x: int(x)):
        for a in _trace_range(A, n):
            a = dom(a)
            s, t = s_t_sequence(n, a, b)
            if s == 0 and t == c:
                yield a, b


def scalar_nth_roots(A: Mat2, n: int, scope: Scope = Scope.M2) -> RootSet:
    """All n-th roots of a scalar matrix cE."""
    if not A.is_scalar():
        raise ValueError(f"{A} is not scalar")
    dom = A.domain
    explicit = [Mat2.scalar(b, dom) for b in dom.nth_roots(A.a, n)]
    families = [Family(a, b, dom) for a, b in _family_pairs(A, n)]
    return RootSet.build(A, n, explicit, families, scope=scope)


def cube_roots(A: Mat2, mode: Scope = Scope.M2) -> RootSet:
    """Cube roots in M_2 (``mode=Scope.M2``) or GL_2 (``mode=Scope.GL2``).

    Non-scalar A: b^3 = det A, a^3 - 3ab = tr A, B = (A + ab E)/(a^2 - b).
    A = 0 gives the nilpotent family {tr 0, det 0}; other scalars cE give the
    scalar cube roots of c and the families (t, t^2) with t^3 = -c.
    """
    return nth_roots(A, 3, mode)


def nth_roots(A: Mat2, n: int, scope: Scope = Scope.M2) -> RootSet:
    """The complete n-th root set of A within ``scope``."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return RootSet.build(A, 1, [A], scope=scope)
    if n == 2:
        return _square_roots(A, scope)
    if A.is_scalar():
        return scalar_nth_roots(A, n, scope)
    return nth_root_candidates(A, n, scope)
