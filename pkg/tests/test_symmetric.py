import itertools
import random

import pytest

from eslroots import Mat2, PrimeField
from eslroots.roots import h_sequence, power_sum_p, s_t_sequence, symmetric_poly_h


def direct_h(n, x, y):
    out = x * 0
    for k in range(n + 1):
        out = out + x**k * y ** (n - k)
    return out


def test_small_cases():
    for e1, e2 in itertools.product(range(-3, 4), repeat=2):
        assert symmetric_poly_h(0, e1, e2) == 1
        assert symmetric_poly_h(1, e1, e2) == e1
        assert symmetric_poly_h(2, e1, e2) == e1 * e1 - e2
        assert power_sum_p(1, e1, e2) == e1
        assert power_sum_p(2, e1, e2) == e1 * e1 - 2 * e2
    assert symmetric_poly_h(3, 2, 1) == 4
    assert symmetric_poly_h(-1, 5, 7) == 0


def test_h_against_bivariate_evaluation_in_f121():
    ext = PrimeField(11).extension()
    rng = random.Random(11)
    elems = list(ext)
    for _ in range(200):
        x, y = rng.choice(elems), rng.choice(elems)
        for n in range(11):
            # e1, e2 may lie in F_121 here; the recurrence does not care
            assert symmetric_poly_h(n, x + y, x * y) == direct_h(n, x, y)
            assert power_sum_p(n, x + y, x * y) == x**n + y**n


def test_h_sequence_matches_single_values():
    F = PrimeField(13)
    seq = h_sequence(8, F(3), F(5))
    assert seq == [symmetric_poly_h(n, F(3), F(5)) for n in range(9)]


@pytest.mark.parametrize("p", [3, 7, 13])
def test_power_sums_are_traces(p):
    F = PrimeField(p)
    rng = random.Random(p)
    for _ in range(200):
        B = Mat2(*(rng.randrange(p) for _ in range(4)), F)
        for n in range(11):
            assert power_sum_p(n, B.trace, B.det) == (B**n).trace


def test_s_t_decomposition_exhaustive_mod_3():
    F = PrimeField(3)
    E = Mat2.identity(F)
    for e in itertools.product(range(3), repeat=4):
        B = Mat2(*e, F)
        for n in range(11):
            s, t = s_t_sequence(n, B.trace, B.det)
            assert B**n == B * s + E * t
            if n >= 1:
                assert s == symmetric_poly_h(n - 1, B.trace, B.det)
                assert t == -B.det * symmetric_poly_h(n - 2, B.trace, B.det)


def test_s_t_recurrence():
    F = PrimeField(7)
    tr, det = F(3), F(5)
    seq = [s_t_sequence(n, tr, det) for n in range(12)]
    assert seq[1] == (1, 0) and seq[2] == (tr, -det)
    for n in range(2, 12):
        for k in (0, 1):
            assert seq[n][k] == tr * seq[n - 1][k] - det * seq[n - 2][k]


def test_negative_index():
    with pytest.raises(ValueError):
        power_sum_p(-1, 1, 1)
