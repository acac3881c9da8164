import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from noetherlat.intmat import (
    IntMatrix,
    cokernel_invariants,
    determinant,
    kernel_basis,
    matrix_from_text,
    matrix_power_order,
    matrix_to_text,
    smith_diagonal,
    smith_normal_form,
    solve_exact,
    unimodular_inverse,
)

from conftest import random_unimodular


@st.composite
def matrices(draw, max_dim=6, bound=9):
    rows = draw(st.integers(0, max_dim))
    cols = draw(st.integers(0, max_dim))
    data = [[draw(st.integers(-bound, bound)) for _ in range(cols)] for _ in range(rows)]
    return IntMatrix.from_rows(data, cols=cols)


def assert_snf_contract(a):
    u, d, v = smith_normal_form(a)
    assert u @ a @ v == d
    assert abs(determinant(u)) == 1
    assert abs(determinant(v)) == 1
    for i in range(d.rows):
        for j in range(d.cols):
            if i != j:
                assert d.data[i][j] == 0
    diag = [d.data[i][i] for i in range(min(d.rows, d.cols))]
    assert all(x >= 0 for x in diag)
    for a_, b_ in zip(diag, diag[1:]):
        if a_ == 0:
            assert b_ == 0
        else:
            assert b_ % a_ == 0


class TestSmithNormalForm:
    def test_diag_2_3(self):
        # gcd(2,3) = 1, det = 6, so the invariant factors are (1, 6)
        a = IntMatrix.from_rows([[2, 0], [0, 3]])
        _, d, _ = smith_normal_form(a)
        assert d.data == ((1, 0), (0, 6))
        assert_snf_contract(a)

    @pytest.mark.parametrize("n", [0, 1, 3, 5])
    def test_identity_fixed_point(self, n):
        _, d, _ = smith_normal_form(IntMatrix.identity(n))
        assert d == IntMatrix.identity(n)

    def test_zero_matrix_fixed_point(self):
        a = IntMatrix.from_rows([[0]])
        _, d, _ = smith_normal_form(a)
        assert d == a

    @given(matrices())
    @settings(max_examples=120, deadline=None)
    def test_contract_random(self, a):
        assert_snf_contract(a)

    def test_rectangular(self):
        a = IntMatrix.from_rows([[2, 4, 4]])
        _, d, _ = smith_normal_form(a)
        assert d.data[0][0] == 2
        assert_snf_contract(a)


class TestKernelBasis:
    def test_single_equation(self):
        # x + y = 0 has primitive solution (1, -1) up to sign
        k = kernel_basis(IntMatrix.from_rows([[1, 1]]))
        assert k.cols == 1
        assert k.column(0) in ((1, -1), (-1, 1))

    def test_injective_map_empty_kernel(self):
        assert kernel_basis(IntMatrix.identity(4)).cols == 0

    def test_norm_matrix_of_small_lattice(self):
        # row reduce [[-1,3],[-1,3]]: kernel spanned by (3, 1)
        k = kernel_basis(IntMatrix.from_rows([[-1, 3], [-1, 3]]))
        assert k.cols == 1
        assert k.column(0) in ((3, 1), (-3, -1))

    def test_zero_map_full_kernel(self):
        k = kernel_basis(IntMatrix.zero(2, 3))
        assert k.cols == 3
        assert abs(determinant(k)) == 1

    @given(matrices())
    @settings(max_examples=100, deadline=None)
    def test_kernel_properties(self, a):
        k = kernel_basis(a)
        assert (a @ k).is_zero()
        # full column rank and saturation: all invariant factors are 1
        diag = smith_diagonal(k)
        assert len([x for x in diag if x != 0]) == k.cols
        assert all(x == 1 for x in diag if x != 0)
        rank_a = len([x for x in smith_diagonal(a) if x != 0])
        assert k.cols == a.cols - rank_a


class TestCokernelInvariants:
    @pytest.mark.parametrize("n,expected", [(1, ()), (2, (2,)), (12, (12,))])
    def test_single_generator(self, n, expected):
        cok = cokernel_invariants(IntMatrix.from_rows([[n]]), 1)
        assert cok.factors == expected
        assert cok.free_rank == 0

    def test_identity_trivial(self):
        cok = cokernel_invariants(IntMatrix.identity(3), 3)
        assert cok.is_trivial

    def test_diag_2_3(self):
        cok = cokernel_invariants(IntMatrix.from_rows([[2, 0], [0, 3]]), 2)
        assert cok.factors == (6,)
        assert cok.free_rank == 0

    def test_free_rank(self):
        cok = cokernel_invariants(IntMatrix.from_rows([[2], [0]]), 2)
        assert cok.factors == (2,)
        assert cok.free_rank == 1

    def test_ambient_mismatch_rejected(self):
        with pytest.raises(ValueError):
            cokernel_invariants(IntMatrix.identity(2), 3)

    def test_invariant_under_unimodular_change(self):
        rng = random.Random(7)
        for _ in range(40):
            rows = rng.randrange(1, 5)
            cols = rng.randrange(1, 5)
            a = IntMatrix.from_rows(
                [[rng.randrange(-6, 7) for _ in range(cols)] for _ in range(rows)])
            base = cokernel_invariants(a, rows)
            left = random_unimodular(rng, rows) @ a
            right = a @ random_unimodular(rng, cols)
            assert cokernel_invariants(left, rows) == base
            assert cokernel_invariants(right, rows) == base


class TestMatrixPowerOrder:
    def test_identity(self):
        assert matrix_power_order(IntMatrix.identity(3), 5) == 1

    def test_rotation(self):
        # fourth power of a quarter turn is the identity
        assert matrix_power_order(IntMatrix.from_rows([[0, -1], [1, 0]]), 10) == 4

    def test_involution(self):
        assert matrix_power_order(IntMatrix.from_rows([[-2, 3], [-1, 2]]), 10) == 2

    def test_no_order_within_bound(self):
        assert matrix_power_order(IntMatrix.from_rows([[2]]), 20) is None

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            matrix_power_order(IntMatrix.from_rows([[1, 0]]), 3)


class TestSolveAndInverse:
    def test_solve_round_trip(self):
        rng = random.Random(3)
        done = 0
        while done < 30:
            n = rng.randrange(1, 5)
            m = n + rng.randrange(0, 3)
            a = IntMatrix.from_rows(
                [[rng.randrange(-5, 6) for _ in range(n)] for _ in range(m)])
            if len([x for x in smith_diagonal(a) if x != 0]) < n:
                continue
            x = IntMatrix.from_rows(
                [[rng.randrange(-5, 6) for _ in range(2)] for _ in range(n)])
            assert solve_exact(a, a @ x) == x
            done += 1

    def test_solve_rejects_non_integral(self):
        a = IntMatrix.from_rows([[2]])
        with pytest.raises(ValueError):
            solve_exact(a, IntMatrix.from_rows([[1]]))

    def test_solve_rejects_outside_span(self):
        a = IntMatrix.from_rows([[1], [0]])
        with pytest.raises(ValueError):
            solve_exact(a, IntMatrix.from_rows([[0], [1]]))

    def test_solve_rejects_non_unique(self):
        a = IntMatrix.from_rows([[1, 1]])
        with pytest.raises(ValueError):
            solve_exact(a, IntMatrix.from_rows([[2]]))

    def test_unimodular_inverse(self):
        rng = random.Random(11)
        for _ in range(20):
            w = random_unimodular(rng, rng.randrange(1, 5))
            assert (w @ unimodular_inverse(w)).is_identity()

    def test_non_unimodular_rejected(self):
        with pytest.raises(ValueError):
            unimodular_inverse(IntMatrix.from_rows([[2]]))


class TestDeterminant:
    def test_small_cases(self):
        assert determinant(IntMatrix.identity(0)) == 1
        assert determinant(IntMatrix.from_rows([[5]])) == 5
        assert determinant(IntMatrix.from_rows([[1, 2], [3, 4]])) == -2
        assert determinant(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1

    @given(matrices(max_dim=4, bound=5))
    @settings(max_examples=60, deadline=None)
    def test_multiplicative(self, a):
        if not a.is_square:
            return
        b = IntMatrix.identity(a.rows) + a
        assert determinant(a @ b) == determinant(a) * determinant(b)


class TestInterchangeFormat:
    def test_round_trip(self):
        a = IntMatrix.from_rows([[-2, 3], [-1, 2]])
        assert matrix_from_text(matrix_to_text(a)) == a

    def test_degenerate_round_trip(self):
        a = IntMatrix.zero(0, 0)
        assert matrix_from_text(matrix_to_text(a)) == a

    @pytest.mark.parametrize("bad", [
        "", "2\n1 2", "2 2\n1 2\n3", "1 1\nx", "a b\n1", "2 2\n1 2\n3 4\n5 6"])
    def test_malformed_rejected(self, bad):
        with pytest.raises(ValueError):
            matrix_from_text(bad)


class TestMatrixBasics:
    def test_entry_type_enforced(self):
        with pytest.raises(TypeError):
            IntMatrix.from_rows([[1.5]])
        with pytest.raises(TypeError):
            IntMatrix.from_rows([[True]])

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            IntMatrix(1, 2, ((1,),))

    def test_block_diag_and_apply(self):
        a = IntMatrix.block_diag([IntMatrix.identity(1), IntMatrix.from_rows([[0, 1], [1, 0]])])
        assert a.apply((1, 2, 3)) == (1, 3, 2)

    def test_power_by_squaring(self):
        a = IntMatrix.from_rows([[0, -1], [1, 0]])
        assert a.power(4).is_identity()
        assert a.power(0).is_identity()
        assert a.power(1) == a
