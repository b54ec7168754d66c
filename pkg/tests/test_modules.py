from fractions import Fraction

import pytest
from hypothesis import given

from core.algebra import Monomial, MultiIndex
from core.data import Ordering, Window
from core.exception import (
    AlgebraException,
    DescriptorMismatchException,
    DimensionException,
    ModuleActionException,
    ModuleKindException,
)
from core.expr import parse
from core.lattice import GroupDescriptor, GroupElement, Signature, Weight
from core.lie import WittElement, bracket, d_monomial, spanning_family
from core.modules import (
    ModuleDescriptor,
    ModuleElement,
    ModuleKind,
    act,
    act_monomial_op,
    filtration_degree,
    four_term_formula,
    order_compare,
    shift_descriptor,
    shift_map,
    weight_decompose,
)

from .strategies import module_elements, witt_elements

G = GroupDescriptor.standard(Signature(0, 3, 0))
H = GroupDescriptor.standard(Signature(0, 0, 3))
ZERO = MultiIndex.zero(3)
HALF = Weight.of(["1/2", 0, 0])
ONE = Weight.of([1, 0, 0])


def g(*coords: int) -> GroupElement:
    return GroupElement(coords)


def idx(*entries: int) -> MultiIndex:
    return MultiIndex(entries)


def a_mu(mu: Weight = HALF) -> ModuleDescriptor:
    return ModuleDescriptor(ModuleKind.A_MU, mu, G)


def v(desc: ModuleDescriptor, beta: GroupElement, j: MultiIndex | None = None, c=1) -> ModuleElement:
    return ModuleElement.basis_vector(desc, beta, j, c)


def w(text: str, group: GroupDescriptor = G) -> WittElement:
    return parse(text, group, expect=WittElement)  # type: ignore[return-value]


class TestDescriptor:
    def test_quotient_needs_mu_in_gamma(self):
        with pytest.raises(ModuleKindException):
            ModuleDescriptor(ModuleKind.A_MU_QUOTIENT, HALF, G)
        ModuleDescriptor(ModuleKind.A_MU_QUOTIENT, ONE, G)

    def test_graded_needs_x_only_signature(self):
        with pytest.raises(ModuleKindException):
            ModuleDescriptor(ModuleKind.GRADED_M, Weight.zero(3), G)

    @pytest.mark.parametrize("kind", [ModuleKind.GRADED_A, ModuleKind.GRADED_B])
    def test_eta_nonzero(self, kind):
        with pytest.raises(ModuleKindException):
            ModuleDescriptor(kind, Weight.zero(3), H)

    def test_unknown_kind(self):
        with pytest.raises(ModuleKindException):
            ModuleDescriptor("A_nu", HALF, G)  # type: ignore[arg-type]

    def test_parameter_length(self):
        with pytest.raises(DimensionException):
            ModuleDescriptor(ModuleKind.A_MU, Weight.of([1, 0]), G)

    def test_label(self):
        assert str(a_mu()) == "A_mu(1/2,0,0)"


class TestAMu:
    def test_coordinate_action(self):
        desc = a_mu(Weight.zero(3))
        got = act(w("d1"), v(desc, g(1, 0, 0), idx(2, 0, 0)))
        assert got == v(desc, g(1, 0, 0), idx(2, 0, 0)) + v(desc, g(1, 0, 0), idx(1, 0, 0), 2)

    def test_monomial_rule(self):
        got = act_monomial_op(G, g(0, 1, 0), idx(1, 0, 0), 2, g(1, 0, 0), idx(0, 1, 0), HALF)
        desc = a_mu()
        # (β+μ)_2 = 0, 只剩 j_2 项
        assert got == v(desc, g(1, 1, 0), idx(1, 0, 0))

    def test_t_only_direction_vanishes(self):
        mixed = GroupDescriptor.standard(Signature(1, 1, 1))
        got = act_monomial_op(mixed, g(0, 0), MultiIndex.zero(2), 1, g(1, 1), MultiIndex.zero(2), Weight.of([0, "1/3", 0]))
        assert not got

    def test_d13_on_origin(self):
        desc = a_mu()
        op = d_monomial(G, 1, 3, Monomial(g(0, 0, 1), ZERO))
        assert act(op, v(desc, g(0, 0, 0))) == v(desc, g(0, 0, 1), c=Fraction(-1, 2))

    def test_d12_t_only_on_origin(self):
        desc = a_mu()
        op = d_monomial(G, 1, 2, Monomial(g(0, 0, 0), idx(1, 1, 0)))
        assert act(op, v(desc, g(0, 0, 0))) == v(desc, g(0, 0, 0), idx(1, 0, 0), Fraction(-1, 2))

    def test_trivial_submodule(self):
        desc = a_mu(ONE)
        fixed = v(desc, g(-1, 0, 0))
        for op in spanning_family(G, Window(1, 1)).operators():
            assert not act(op, fixed)

    def test_quotient_drops_null_vector(self):
        desc = ModuleDescriptor(ModuleKind.A_MU_QUOTIENT, ONE, G)
        assert not ModuleElement(desc, {(g(-1, 0, 0), ZERO): 3})
        # ∂_1 v_{-1,e_1} = 0·v_{-1,e_1} + v_{-1,0}, 后者为零陪集
        assert not act(w("d1"), v(desc, g(-1, 0, 0), idx(1, 0, 0)))

    def test_extends_to_witt(self):
        desc = a_mu()
        u = w("x{1,0,0}*t[0,0,1]*d3 + 2*d2")
        x = v(desc, g(0, 1, 0), idx(0, 0, 1))
        assert act(u, x)

    @given(witt_elements(G), witt_elements(G), module_elements(a_mu()))
    def test_module_axiom(self, a, b, x):
        assert act(bracket(a, b), x) == act(a, act(b, x)) - act(b, act(a, x))

    @given(witt_elements(G), witt_elements(G), module_elements(ModuleDescriptor(ModuleKind.A_MU_QUOTIENT, ONE, G)))
    def test_quotient_module_axiom(self, a, b, x):
        assert act(bracket(a, b), x) == act(a, act(b, x)) - act(b, act(a, x))

    def test_mismatched_modules(self):
        with pytest.raises(DescriptorMismatchException):
            v(a_mu(), g(0, 0, 0)) + v(a_mu(ONE), g(0, 0, 0))


class TestFourTerm:
    def test_zero_everything(self):
        assert not four_term_formula(a_mu(Weight.zero(3)), 1, 2, g(0, 0, 0), ZERO, g(0, 0, 0), ZERO)

    def test_first_term(self):
        desc = a_mu(Weight.zero(3))
        got = four_term_formula(desc, 1, 2, g(1, 0, 0), ZERO, g(0, 1, 0), ZERO)
        assert got == v(desc, g(1, 1, 0))

    def test_fourth_term(self):
        desc = a_mu(Weight.zero(3))
        got = four_term_formula(desc, 1, 2, g(0, 0, 0), idx(1, 0, 0), g(0, 0, 0), idx(0, 1, 0))
        assert got == v(desc, g(0, 0, 0))

    def test_rejects_equal_directions(self):
        with pytest.raises(AlgebraException):
            four_term_formula(a_mu(), 2, 2, g(0, 0, 0), ZERO, g(0, 0, 0), ZERO)

    def test_rejects_graded(self):
        desc = ModuleDescriptor(ModuleKind.GRADED_M, Weight.zero(3), H)
        with pytest.raises(ModuleKindException):
            four_term_formula(desc, 1, 2, g(0, 0, 0), MultiIndex(()), g(0, 0, 0), MultiIndex(()))

    @pytest.mark.parametrize("mu", [Weight.zero(3), HALF, ONE])
    def test_matches_act(self, mu):
        desc = a_mu(mu)
        window = Window(1, 1)
        basis = [key for key in desc.module.basis(window) if key[1].degree <= 1][:20]
        for mem in spanning_family(G, window):
            for beta, j in basis:
                got = act(mem.operator, v(desc, beta, j))
                assert got == four_term_formula(desc, mem.p, mem.q, mem.monomial.alpha, mem.monomial.idx, beta, j)


class TestGraded:
    def test_m_mu(self):
        desc = ModuleDescriptor(ModuleKind.GRADED_M, Weight.of(["1/3", 0, 0]), H)
        got = act(w("x{1,-1,0}*d1 + x{1,-1,0}*d2", H), v(desc, g(0, 0, 0)))
        assert got == v(desc, g(1, -1, 0), c=Fraction(1, 3))

    def test_a_eta_on_origin(self):
        desc = ModuleDescriptor(ModuleKind.GRADED_A, Weight.of([1, 2, 0]), H)
        # ∂ = ∂_3 ∈ ker α, ∂(η) = 0; ∂ = ∂_1 - ∂_2 ∈ ker (1,1,0), ∂(η) = -1
        assert not act(w("x{1,0,0}*d3", H), v(desc, g(0, 0, 0)))
        got = act(w("x{1,1,0}*d1 - x{1,1,0}*d2", H), v(desc, g(0, 0, 0)))
        assert got == v(desc, g(1, 1, 0), c=-1)

    def test_b_eta_into_origin(self):
        desc = ModuleDescriptor(ModuleKind.GRADED_B, Weight.of([1, 2, 0]), H)
        got = act(w("x{1,1,0}*d1 - x{1,1,0}*d2", H), v(desc, g(-1, -1, 0)))
        assert got == v(desc, g(0, 0, 0), c=-1)

    def test_degree_zero_action(self):
        desc = ModuleDescriptor(ModuleKind.GRADED_B, Weight.of([1, 2, 0]), H)
        got = act(w("2*d2", H), v(desc, g(0, 3, 0)))
        assert got == v(desc, g(0, 3, 0), c=6)

    def test_rejects_operator_outside_kernel(self):
        desc = ModuleDescriptor(ModuleKind.GRADED_M, Weight.zero(3), H)
        with pytest.raises(ModuleActionException) as e:
            act(w("x{1,0,0}*d1", H), v(desc, g(0, 0, 0)))
        assert e.value.term is not None

    def test_trivial(self):
        desc = ModuleDescriptor(ModuleKind.TRIVIAL, Weight.zero(3), G)
        assert not act(w("x{1,0,0}*d2 + d1"), v(desc, g(0, 0, 0)))
        with pytest.raises(ModuleKindException):
            v(desc, g(1, 0, 0))


class TestWeights:
    def test_single_component(self):
        desc = a_mu()
        x = v(desc, g(1, 0, -1), idx(0, 2, 0))
        assert weight_decompose(x) == {Weight.of(["3/2", 0, -1]): x}

    def test_empty(self):
        assert weight_decompose(ModuleElement(a_mu())) == {}

    def test_two_components(self):
        desc = a_mu()
        x = v(desc, g(1, 0, 0)) + v(desc, g(0, 1, 0), idx(1, 0, 0))
        parts = weight_decompose(x)
        assert len(parts) == 2
        assert sum(parts.values(), ModuleElement(desc)) == x

    def test_filtration_degree_of_weight_vector(self):
        desc = a_mu()
        assert filtration_degree(v(desc, g(1, 0, 0)), Weight.of(["3/2", 0, 0])) == 0

    @pytest.mark.parametrize("j", [(1, 0, 0), (2, 1, 0), (0, 0, 3), (1, 1, 1)])
    def test_filtration_degree_bounds(self, j):
        desc = a_mu()
        n = filtration_degree(v(desc, g(0, 1, 0), MultiIndex(j)), Weight.of(["1/2", 1, 0]))
        assert n is not None
        assert max(j) <= n <= sum(j)

    def test_filtration_degree_wrong_weight(self):
        desc = a_mu()
        assert filtration_degree(v(desc, g(1, 0, 0)), Weight.zero(3)) is None


class TestShift:
    def test_identity(self):
        x = v(a_mu(), g(1, 2, 0), idx(0, 1, 0))
        assert shift_map(x, g(0, 0, 0)) == x

    def test_relabel(self):
        x = v(a_mu(), g(1, 2, 0), idx(0, 1, 0))
        target = shift_descriptor(a_mu(), g(1, 0, 0))
        assert target.parameter == Weight.of(["3/2", 0, 0])
        assert shift_map(x, g(1, 0, 0)) == v(target, g(0, 2, 0), idx(0, 1, 0))

    @given(witt_elements(G), module_elements(a_mu()))
    def test_intertwines(self, u, x):
        gamma = g(1, -1, 0)
        assert act(u, shift_map(x, gamma)) == shift_map(act(u, x), gamma)

    def test_rejects_quotient(self):
        desc = ModuleDescriptor(ModuleKind.A_MU_QUOTIENT, ONE, G)
        with pytest.raises(ModuleKindException):
            shift_map(v(desc, g(0, 0, 0)), g(1, 0, 0))


class TestOrder:
    def test_equal_degree(self):
        assert order_compare(idx(1, 1, 0), idx(2, 0, 0)) is Ordering.GREATER

    def test_reflexive(self):
        assert order_compare(idx(1, 2, 3), idx(1, 2, 3)) is Ordering.EQUAL

    def test_degree_dominates(self):
        assert order_compare(idx(0, 0, 1), idx(5, 0, 0)) is Ordering.LESS

    def test_last_entry_first(self):
        assert order_compare(idx(2, 0, 1), idx(0, 3, 0)) is Ordering.GREATER

    def test_length_mismatch(self):
        with pytest.raises(DimensionException):
            order_compare(idx(1, 0), idx(1, 0, 0))
