"""Symmetric polynomials in the two eigenvalues, evaluated from trace and determinant.

With e1 = x + y and e2 = xy:

    h_n = sum_k x^k y^(n-k)     h_n = e1 h_(n-1) - e2 h_(n-2),  h_0 = 1, h_1 = e1
    p_n = x^n + y^n             p_n = e1 p_(n-1) - e2 p_(n-2),  p_0 = 2, p_1 = e1

For a 2x2 matrix B, Cayley-Hamilton gives B^n = s_n B + t_n E where
s_n = h_(n-1) and t_n = -det(B) h_(n-2).
"""

from __future__ import annotations

__all__ = ["symmetric_poly_h", "power_sum_p", "s_t_sequence", "h_sequence"]


def _linear_recurrence(n: int, u0, u1, e1, e2):
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return u0
    prev, cur = u0, u1
    for _ in range(n - 1):
        prev, cur = cur, e1 * cur - e2 * prev
    return cur


def _unit(e1):
    zero = e1 - e1
    return zero, zero + 1


def symmetric_poly_h(n: int, e1, e2):
    """h_n(x, y) for the roots x, y of z^2 - e1 z + e2. h_(-1) is taken as 0."""
    zero, one = _unit(e1)
    if n == -1:
        return zero
    return _linear_recurrence(n, one, e1, e1, e2)


def h_sequence(n: int, e1, e2) -> list:
    """[h_0, ..., h_n]."""
    zero, one = _unit(e1)
    out = [one]
    prev = zero
    for _ in range(n):
        prev, cur = out[-1], e1 * out[-1] - e2 * prev
        out.append(cur)
    return out


def power_sum_p(n: int, e1, e2):
    zero, one = _unit(e1)
    return _linear_recurrence(n, one + one, e1, e1, e2)


def s_t_sequence(n: int, tr, det):
    """(s_n, t_n) with B^n = s_n B + t_n E for any B of the given trace and determinant."""
    if n < 0:
        raise ValueError("n must be non-negative")
    zero, one = _unit(tr)
    det = det + zero  # mixed int / field input
    s = _linear_recurrence(n, zero, one, tr, det)
    t = _linear_recurrence(n, one, zero, tr, det)
    return s, t
