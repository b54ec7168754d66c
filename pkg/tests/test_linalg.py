from fractions import Fraction

import pytest

from core.exception import SpectrumException
from core.linalg import EchelonBasis, nullspace, rank, rational_roots, solve

F = Fraction


class TestEchelonBasis:
    def test_add_and_contains(self):
        basis = EchelonBasis()
        assert basis.add({"a": F(1), "b": F(2)})
        assert basis.add({"b": F(1), "c": F(-1)})
        assert not basis.add({"a": F(2), "b": F(5), "c": F(-1)})
        assert basis.rank == 2
        assert basis.contains({"a": F(1), "b": F(3), "c": F(-1)})
        assert not basis.contains({"c": F(1)})

    def test_zero_vector(self):
        basis = EchelonBasis()
        assert not basis.add({})
        assert basis.contains({})
        assert len(basis) == 0

    def test_reduce_leaves_remainder(self):
        basis = EchelonBasis([{"a": F(1)}])
        assert basis.reduce({"a": F(3), "b": F(1, 2)}) == {"b": F(1, 2)}

    def test_rows_stay_reduced(self):
        basis = EchelonBasis([{"a": F(1), "b": F(1)}, {"a": F(1), "b": F(-1)}])
        assert basis.rank == 2
        assert basis.contains({"a": F(1)})
        assert basis.contains({"b": F(1)})


class TestDense:
    def test_nullspace(self):
        ns = nullspace([[1, 1, 0], [0, 1, 1]], 3)
        assert len(ns) == 1
        x, y, z = ns[0]
        assert x + y == 0 and y + z == 0

    def test_nullspace_without_rows(self):
        assert nullspace([], 2) == [[1, 0], [0, 1]]

    def test_rank(self):
        assert rank([[1, 2], [2, 4], [F(1, 2), 1]], 2) == 1
        assert rank([], 3) == 0

    def test_solve(self):
        assert solve([[F(1), F(0)], [F(1), F(1)]], [F(3), F(2)]) == [F(1), F(2)]

    def test_solve_inconsistent(self):
        assert solve([[F(1), F(1)]], [F(1), F(2)]) is None

    def test_solve_without_columns(self):
        assert solve([], [F(0), F(0)]) == []
        assert solve([], [F(1)]) is None


class TestRationalRoots:
    def test_simple(self):
        # x^2 - 3x + 2
        assert rational_roots([F(2), F(-3)]) == {F(1): 1, F(2): 1}

    def test_multiplicity(self):
        # (x - 1/2)^2
        assert rational_roots([F(1, 4), F(-1)]) == {F(1, 2): 2}

    def test_irrational(self):
        with pytest.raises(SpectrumException):
            rational_roots([F(-2), F(0)])

    def test_complex(self):
        with pytest.raises(SpectrumException):
            rational_roots([F(1), F(0)])
