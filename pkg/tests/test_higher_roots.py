import pytest

from eslroots import Family, Mat2, PrimeField, Scope, ZZ
from eslroots.roots import ScalarInputError, cube_roots, nth_root_candidates, nth_roots, scalar_nth_roots
from eslroots.oracle import enumerate_roots, enumerate_roots_Z

from conftest import all_matrices, mat, sl2


class TestCubeRoots:
    def test_integer_cube_mod_11(self, F11):
        B = Mat2.parse("1,1;2,1")
        assert B**3 == Mat2.parse("7,5;10,7")
        roots = cube_roots(Mat2.parse("7,5;10,7").reduce(F11))
        assert B.reduce(F11) in roots.explicit
        # det A = -1 and cubing is a bijection on F_11, so every root has det -1
        assert roots.expand() == enumerate_roots(Mat2.parse("7,5;10,7").reduce(F11), 3, Scope.ESL2)

    def test_identity_mod_7(self):
        F = PrimeField(7)
        E = Mat2.identity(F)
        roots = cube_roots(E).expand()
        order3 = {B for B in sl2(7) if B**3 == E and B != E}
        assert E in roots and order3 <= roots
        assert roots == enumerate_roots(E, 3)

    def test_zero_mod_3(self, F3):
        roots = cube_roots(Mat2.zero(F3))
        assert roots.families == (Family(F3(0), F3(0), F3),) and not roots.explicit
        nilpotents = {B for B in all_matrices(3) if B @ B == Mat2.zero(F3)}
        assert roots.expand() == nilpotents == enumerate_roots(Mat2.zero(F3), 3)

    def test_scalar_families_have_trace_cubed(self):
        # families (t, t^2) with t^3 = -c
        F = PrimeField(7)
        for c in range(1, 7):
            for fam in cube_roots(Mat2.scalar(F(c), F)).families:
                assert fam.det == fam.trace**2 and fam.trace**3 == -c

    def test_gl2_mode(self):
        F = PrimeField(5)
        A = Mat2.zero(F)
        assert cube_roots(A, Scope.GL2).is_empty()
        E = Mat2.identity(F)
        assert cube_roots(E, Scope.GL2).expand() == enumerate_roots(E, 3, Scope.GL2)

    def test_integer(self):
        A = Mat2.parse("7,5;10,7")
        roots = nth_roots(A, 3)
        assert roots.explicit == (Mat2.parse("1,1;2,1"),)
        assert set(roots.explicit) == enumerate_roots_Z(A, 3, bound=3)


class TestCandidates:
    def test_scalar_rejected(self, F5):
        with pytest.raises(ScalarInputError):
            nth_root_candidates(Mat2.identity(F5), 3)

    def test_fibonacci_fourth_power_mod_7(self):
        F = PrimeField(7)
        A = (Mat2.parse("0,1;1,1") ** 4).reduce(F)
        assert mat("0,1;1,1", F) in nth_root_candidates(A, 4).explicit

    def test_reproduces_cube_roots_mod_5(self):
        for A in all_matrices(5):
            if not A.is_scalar():
                assert nth_root_candidates(A, 3) == cube_roots(A)

    def test_fifth_power_inclusion_mod_3(self):
        for A in all_matrices(3):
            if not A.is_scalar():
                assert enumerate_roots(A, 5) <= nth_root_candidates(A, 5).expand()

    def test_every_candidate_powers_back(self):
        F = PrimeField(7)
        for A in sl2(7):
            if not A.is_scalar():
                for n in (3, 4, 6):
                    assert all(B**n == A for B in nth_root_candidates(A, n).explicit)


class TestScalarRoots:
    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_complete(self, p, n):
        F = PrimeField(p)
        for c in range(p):
            A = Mat2.scalar(F(c), F)
            assert scalar_nth_roots(A, n).expand() == enumerate_roots(A, n)

    def test_explicit_roots_not_duplicated_in_families(self):
        F = PrimeField(5)
        roots = scalar_nth_roots(Mat2.identity(F), 4)
        assert not any(f.contains(B) for f in roots.families for B in roots.explicit)

    def test_integer_identity(self):
        roots = scalar_nth_roots(Mat2.identity(), 4)
        assert {(f.trace, f.det) for f in roots.families} == {(0, 1), (0, -1)}
        assert all(roots.contains(B) for B in enumerate_roots_Z(Mat2.identity(), 4, bound=2))

    def test_rejects_non_scalar(self, F5):
        with pytest.raises(ValueError):
            scalar_nth_roots(mat("1,1;0,1", F5), 3)


def test_first_power():
    F = PrimeField(5)
    A = mat("1,2;3,4", F)
    assert nth_roots(A, 1).explicit == (A,)
