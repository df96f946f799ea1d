"""Exact rational linear algebra: rref, kernel bases, and the Farkas
feasibility solver.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nlflow.linalg import farkas_nonneg_solve, kernel_basis, matrix_rank, rref, solve_upper


class TestRref:
    def test_identity(self):
        rows, pivots = rref([[1, 0], [0, 1]])
        assert rows == [[1, 0], [0, 1]] and pivots == [0, 1]

    def test_dependent_rows(self):
        rows, pivots = rref([[1, 2], [2, 4]])
        assert pivots == [0]
        assert rows == [[Fraction(1), Fraction(2)]]

    def test_rank(self):
        assert matrix_rank([[1, 1, 0], [-1, 0, 1], [0, -1, -1]]) == 2
        assert matrix_rank([]) == 0


class TestKernel:
    def test_cycle_incidence_kernel(self):
        # Reduced incidence of the directed 3-cycle.
        basis = kernel_basis([[1, 0, -1], [-1, 1, 0]], 3)
        assert len(basis) == 1
        v = basis[0]
        assert v[0] == v[1] == v[2] != 0

    def test_zero_matrix(self):
        basis = kernel_basis([[0, 0]], 2)
        assert len(basis) == 2

    @given(
        st.lists(
            st.lists(st.integers(-2, 2), min_size=3, max_size=3),
            min_size=1,
            max_size=3,
        )
    )
    def test_kernel_vectors_annihilate(self, mat):
        for v in kernel_basis(mat, 3):
            for row in mat:
                assert sum(Fraction(a) * x for a, x in zip(row, v)) == 0


class TestSolveUpper:
    def test_simple(self):
        assert solve_upper([[2, 0], [0, 4]], [2, 8]) == [1, 2]

    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            solve_upper([[1, 1], [1, 1]], [1, 2])


class TestFarkas:
    def test_feasible(self):
        status, z = farkas_nonneg_solve([[1, 1]], [2])
        assert status == "feasible"
        assert all(x >= 0 for x in z)
        assert z[0] + z[1] == 2

    def test_infeasible_certificate(self):
        # x >= 0 with -x = 1 is infeasible; the certificate y satisfies
        # y A <= 0 and y . b > 0.
        status, y = farkas_nonneg_solve([[-1]], [1])
        assert status == "infeasible"
        assert y[0] * -1 <= 0 and y[0] * 1 > 0

    @settings(max_examples=80, deadline=None)
    @given(
        st.integers(1, 3),
        st.integers(1, 4),
        st.data(),
    )
    def test_alternative_is_exact(self, p, q, data):
        a = [
            [data.draw(st.integers(-3, 3)) for _ in range(q)] for _ in range(p)
        ]
        b = [data.draw(st.integers(-3, 3)) for _ in range(p)]
        status, sol = farkas_nonneg_solve(a, b)
        if status == "feasible":
            assert all(x >= 0 for x in sol)
            for i in range(p):
                assert sum(Fraction(a[i][j]) * sol[j] for j in range(q)) == b[i]
        else:
            # y A <= 0 componentwise and y . b > 0: both sides of the
            # alternative cannot hold at once.
            for j in range(q):
                assert sum(sol[i] * a[i][j] for i in range(p)) <= 0
            assert sum(sol[i] * b[i] for i in range(p)) > 0
