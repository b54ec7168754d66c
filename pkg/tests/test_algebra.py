from fractions import Fraction

import pytest
from hypothesis import given

from core.algebra import AlgebraElement, Monomial, MultiIndex, max_index, partial
from core.exception import AlgebraException, DescriptorMismatchException, IndexRangeException
from core.lattice import GroupDescriptor, GroupElement, Signature

from .strategies import algebra_elements, directions, multi_indices

G = GroupDescriptor.standard(Signature(1, 1, 1))
H = GroupDescriptor.standard(Signature(0, 3, 0))


def mono(G: GroupDescriptor, alpha, idx) -> AlgebraElement:
    return AlgebraElement.monomial(G, Monomial(GroupElement(tuple(alpha)), MultiIndex(tuple(idx))))


class TestMultiIndex:
    def test_lower_out_of_range_is_none(self):
        assert MultiIndex((0, 2)).lower(1) is None
        assert MultiIndex((0, 2)).lower(2) == MultiIndex((0, 1))

    def test_lower_beyond_t_directions(self):
        assert MultiIndex((1, 1)).lower(3) is None
        assert MultiIndex((1, 1)).at(3) == 0

    def test_raised(self):
        assert MultiIndex.zero(3).raised(2) == MultiIndex((0, 1, 0))
        with pytest.raises(IndexRangeException):
            MultiIndex.zero(2).raised(3)

    def test_unit(self):
        assert MultiIndex.unit(1, 2, times=3) == MultiIndex((3, 0))

    def test_rejects_negative(self):
        with pytest.raises(AlgebraException):
            MultiIndex((1, -1))

    @given(multi_indices(3), multi_indices(3))
    def test_degree_is_additive(self, i, j):
        assert (i + j).degree == i.degree + j.degree


class TestAlgebraElement:
    def test_no_zero_coefficients(self):
        a = mono(G, (1, 0), (0, 0)) - mono(G, (1, 0), (0, 0))
        assert not a
        assert a == AlgebraElement.zero(G)
        assert str(a) == "0"

    def test_multiplication(self):
        a = mono(G, (1, 0), (1, 0))
        b = mono(G, (0, -1), (0, 2))
        assert a * b == mono(G, (1, -1), (1, 2))

    def test_group_mismatch(self):
        with pytest.raises(DescriptorMismatchException):
            AlgebraElement.one(G) + AlgebraElement.one(H)

    @given(algebra_elements(G), algebra_elements(G), algebra_elements(G))
    def test_ring_axioms(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(algebra_elements(G))
    def test_unit(self, a):
        assert a * AlgebraElement.one(G) == a
        assert a - a == AlgebraElement.zero(G)


class TestPartial:
    def test_mixed_direction(self):
        # α_2 = 2, i_2 = 1
        a = mono(G, (2, 0), (0, 1))
        assert partial(2, a) == mono(G, (2, 0), (0, 1)) * 2 + mono(G, (2, 0), (0, 0))

    def test_t_only_direction(self):
        assert partial(1, mono(G, (1, 1), (2, 0))) == mono(G, (1, 1), (1, 0)) * 2

    def test_x_only_direction(self):
        assert partial(3, mono(G, (0, -1), (1, 1))) == -mono(G, (0, -1), (1, 1))

    def test_constant(self):
        assert not partial(1, AlgebraElement.one(G))

    @given(directions(G), algebra_elements(G), algebra_elements(G))
    def test_leibniz(self, p, a, b):
        assert partial(p, a * b) == partial(p, a) * b + a * partial(p, b)

    @given(directions(G), directions(G), algebra_elements(G))
    def test_partials_commute(self, p, q, a):
        assert partial(p, partial(q, a)) == partial(q, partial(p, a))

    def test_max_index(self):
        a = mono(G, (0, 0), (3, 1)) + mono(G, (1, 0), (0, 4))
        assert max_index(a, 1) == 3
        assert max_index(a, 2) == 4
        assert max_index(AlgebraElement.zero(G), 1) == 0

    def test_scalar_multiplication(self):
        a = mono(G, (1, 0), (0, 0))
        assert (a * Fraction(1, 2)).terms[Monomial(GroupElement((1, 0)), MultiIndex((0, 0)))] == Fraction(1, 2)
        assert not a * 0
