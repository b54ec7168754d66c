import pytest

import core.checks.generators
import core.checks.lie
import core.checks.modules
import core.checks.order
from core.algebra import AlgebraElement, Monomial, MultiIndex
from core.checks import (
    GeneratorVariant,
    all_suites,
    check_divergence_free,
    check_generators,
    check_irreducibility_evidence,
    check_lie_axioms,
    check_module,
    check_shift_iso,
    check_subalgebra_closure,
    check_total_order,
    check_weight_multiplicities,
    run_suites,
)
from core.checks.base import Case, Recorder, Sampler
from core.checks.lie import (
    check_ad_nilpotency,
    check_closed_form,
    check_inverse_pair_identities,
    check_grading_identities,
    check_local_finiteness,
    check_partial_nilpotency,
    check_recurrence,
    check_transfer_identity,
)
from core.checks.modules import (
    check_four_term,
    check_graded_submodules,
    check_quotient_consistency,
    check_trivial_submodule,
    describe,
    module_cases,
    run_described,
)
from core.data import Ordering, Status, Window
from core.exception import AlgebraException
from core.expr import parse
from core.lattice import GroupElement, Weight
from core.lie import WittElement, bracket, divergence
from core.modules import ModuleDescriptor, ModuleElement, ModuleKind, act, shift_descriptor

from .conftest import make_ctx

HALF = Weight.of(["1/2", 0, 0])
ONE = Weight.of([1, 0, 0])
TINY = Window(1, 0, sample_count=8)


def a_mu(ctx, mu: Weight) -> ModuleDescriptor:
    return ModuleDescriptor(ModuleKind.A_MU, mu, ctx.group)


class TestBase:
    def test_registered_suites(self):
        assert {
            "lie_axioms",
            "divergence_free",
            "subalgebra",
            "closed_form",
            "identities",
            "nilpotency",
            "module_axiom",
            "four_term",
            "trivial_submodule",
            "irreducibility",
            "multiplicity",
            "shift",
            "graded_submodules",
            "generators",
            "order",
            "eigen_split",
        } <= set(all_suites())

    def test_unknown_suite(self, ctx):
        with pytest.raises(AlgebraException):
            run_suites(ctx, ["no_such_suite"])

    def test_sampler_is_deterministic(self):
        a, b = Sampler(3, "x"), Sampler(3, "x")
        assert [a.coefficient() for _ in range(10)] == [b.coefficient() for _ in range(10)]
        x, y = Sampler(3, "x"), Sampler(3, "y")
        assert [x.index(1000) for _ in range(5)] != [y.index(1000) for _ in range(5)]

    def test_recorder_keeps_first_counterexample(self):
        rec = Recorder("demo")
        assert rec.compare(1, 1)
        assert not rec.compare(1, 2, a=3)
        assert not rec.compare(4, 5, a=6)
        report = rec.report()
        assert report.status is Status.FAIL
        assert report.tested == 3
        assert report.counterexample is not None
        assert report.counterexample.inputs == {"a": "3"}
        assert (report.counterexample.lhs, report.counterexample.rhs) == ("1", "2")

    def test_reports_sorted_and_reproducible(self, ctx):
        first = run_suites(ctx, ["order", "closed_form"])
        second = run_suites(ctx, ["closed_form", "order"])
        assert [r.check for r in first] == ["closed_form", "order"]
        assert [(r.check, r.status, r.tested) for r in first] == [(r.check, r.status, r.tested) for r in second]

    def test_case_error_becomes_report(self, ctx):
        zero = Weight.zero(3)
        case = Case(
            "module_axiom[graded_A(0,0,0)]",
            run_described,
            (check_module, ModuleKind.GRADED_A, zero),
            {"module": "graded_A", "mu": zero},
        )
        report = case.run(ctx)
        assert report.status is Status.FAIL
        assert report.note == "error"
        assert report.counterexample is not None
        assert report.counterexample.inputs == {"module": "graded_A", "mu": "(0,0,0)"}
        assert report.counterexample.lhs.startswith("error: ")

    def test_failing_case_keeps_the_others(self, monkeypatch):
        ctx = make_ctx(max_workers=1)

        def flaky(ctx, desc, window=None):
            if desc.kind is ModuleKind.GRADED_M:
                raise AlgebraException("boom")
            return Recorder(f"module_axiom[{desc}]").report()

        monkeypatch.setattr(core.checks.modules, "check_module", flaky)
        reports = run_suites(ctx, ["module_axiom"])
        assert len(reports) == len(module_cases(ctx))
        failed = [r for r in reports if not r.passed]
        assert [r.check for r in failed] == [f"module_axiom[graded_M{ctx.graded_mu}]"]
        assert failed[0].counterexample.inputs["module"] == "graded_M"
        assert failed[0].counterexample.lhs == "error: boom"

    def test_four_term_split_per_pair(self, ctx):
        cases = all_suites()["four_term"](ctx)
        assert len(cases) == 3 * 3
        assert cases[0].run(ctx).check == cases[0].label


class TestLieChecks:
    @pytest.mark.parametrize(
        "check",
        [
            check_lie_axioms,
            check_divergence_free,
            check_subalgebra_closure,
            check_closed_form,
            check_recurrence,
            check_grading_identities,
            check_inverse_pair_identities,
            check_local_finiteness,
        ],
    )
    def test_passes(self, ctx, check):
        report = check(ctx)
        assert report.passed, report.counterexample
        assert report.tested > 0

    def test_nilpotency_with_t_only_directions(self):
        ctx = make_ctx(l1=1, l2=2, l3=1)
        for check in (check_partial_nilpotency, check_ad_nilpotency, check_local_finiteness):
            report = check(ctx)
            assert report.passed, report.counterexample
            assert report.tested > 0

    def test_transfer_with_x_only_directions(self):
        report = check_transfer_identity(make_ctx(l1=1, l2=2, l3=1))
        assert report.passed, report.counterexample
        assert report.tested > 0

    def test_broken_bracket_detected(self, ctx, monkeypatch):
        monkeypatch.setattr(core.checks.lie, "bracket", lambda u, v: bracket(u, v) + u)
        report = check_lie_axioms(ctx)
        assert report.status is Status.FAIL
        assert report.counterexample is not None
        assert set(report.counterexample.inputs) == {"a", "b"}

    def test_broken_divergence_detected(self, ctx, monkeypatch):
        monkeypatch.setattr(
            core.checks.lie, "divergence", lambda w: divergence(w) + AlgebraElement.one(w.group)
        )
        assert not check_divergence_free(ctx).passed

    def test_counterexample_replays(self, ctx, monkeypatch):
        monkeypatch.setattr(core.checks.lie, "bracket", lambda u, v: bracket(u, v) + u)
        ce = check_lie_axioms(ctx).counterexample
        assert ce is not None
        a = parse(ce.inputs["a"], ctx.group, expect=WittElement)
        b = parse(ce.inputs["b"], ctx.group, expect=WittElement)
        assert bracket(a, b) == -bracket(b, a)  # type: ignore[arg-type]

    @pytest.mark.parametrize("check", [check_transfer_identity, check_partial_nilpotency, check_ad_nilpotency])
    def test_vacuous_cases_say_so(self, ctx, check):
        report = check(ctx)
        assert report.passed
        assert report.tested == 0
        assert report.note is not None and report.note.startswith("vacuous")

    def test_subalgebra_residual_replays(self, ctx, monkeypatch):
        far = Monomial(GroupElement((5, 0, 0)), MultiIndex.zero(3))
        stray = WittElement.operator(ctx.group, far, 1)
        monkeypatch.setattr(core.checks.lie, "bracket", lambda u, v: bracket(u, v) + stray)
        ce = check_subalgebra_closure(ctx).counterexample
        assert ce is not None
        assert ce.rhs == "0"
        assert parse(ce.lhs, ctx.group, expect=WittElement) == stray
        parse(ce.inputs["a"], ctx.group, expect=WittElement)

    def test_local_finiteness_residual_replays(self, ctx, monkeypatch):
        far = Monomial(GroupElement((5, 0, 0)), MultiIndex.zero(3))
        stray = WittElement.operator(ctx.group, far, 1)
        monkeypatch.setattr(core.checks.lie, "bracket", lambda u, v: bracket(u, v) + stray)
        ce = check_local_finiteness(ctx).counterexample
        assert ce is not None
        assert parse(ce.lhs, ctx.group, expect=WittElement) == stray


class TestModuleChecks:
    def test_all_module_cases_pass(self, ctx):
        specs = module_cases(ctx)
        assert {kind for kind, _ in specs} == set(ModuleKind)
        for kind, mu in specs:
            report = check_module(ctx, describe(ctx, kind, mu), TINY)
            assert report.passed, (kind, mu, report.counterexample)

    @pytest.mark.parametrize("mu", [Weight.zero(3), HALF, ONE])
    def test_module_axiom_a_mu(self, ctx, mu):
        report = check_module(ctx, a_mu(ctx, mu))
        assert report.passed, report.counterexample
        assert report.check == f"module_axiom[A_mu{mu}]"

    def test_broken_action_detected(self, ctx, monkeypatch):
        monkeypatch.setattr(core.checks.modules, "act", lambda w, v: act(w, v).scale(2))
        assert not check_module(ctx, a_mu(ctx, HALF), TINY).passed

    @pytest.mark.parametrize("mu", [Weight.zero(3), HALF, ONE])
    def test_four_term(self, ctx, mu):
        report = check_four_term(ctx, mu, TINY)
        assert report.passed, report.counterexample

    def test_broken_four_term_detected(self, ctx, monkeypatch):
        monkeypatch.setattr(core.checks.modules, "four_term_formula", lambda desc, *args: ModuleElement(desc))
        assert not check_four_term(ctx, HALF, TINY).passed

    def test_trivial_submodule(self, ctx):
        assert check_trivial_submodule(ctx, ONE).passed
        report = check_trivial_submodule(ctx, HALF)
        assert report.note == "mu not in gamma"

    @pytest.mark.parametrize("mu", [Weight.zero(3), ONE])
    def test_quotient_consistency(self, ctx, mu):
        assert check_quotient_consistency(ctx, mu).passed

    def test_irreducibility_outside_gamma(self, ctx):
        report = check_irreducibility_evidence(ctx, a_mu(ctx, HALF), TINY)
        assert report.passed, report.counterexample
        assert report.details["cyclic_vectors"] == len(a_mu(ctx, HALF).module.basis(TINY))

    def test_reducible_inside_gamma(self, ctx):
        report = check_irreducibility_evidence(ctx, a_mu(ctx, ONE), TINY)
        assert report.passed
        assert report.details["trivial_orbit_dim"] == 1

    def test_multiplicities_of_quotient(self, ctx):
        desc = ModuleDescriptor(ModuleKind.A_MU_QUOTIENT, Weight.zero(3), ctx.group)
        report = check_weight_multiplicities(ctx, desc)
        assert report.passed, report.counterexample
        assert report.details["null_weight_dim"] == 3
        assert report.details["weights"] == 27

    def test_multiplicities_outside_gamma(self, ctx):
        report = check_weight_multiplicities(ctx, a_mu(ctx, HALF))
        assert report.passed, report.counterexample

    def test_shift(self, ctx):
        assert check_shift_iso(ctx, HALF, GroupElement((1, 0, 0)), TINY).passed

    def test_broken_shift_detected(self, ctx, monkeypatch):
        monkeypatch.setattr(
            core.checks.modules,
            "shift_map",
            lambda v, gamma: ModuleElement(shift_descriptor(v.descriptor, gamma), v.terms),
        )
        assert not check_shift_iso(ctx, HALF, GroupElement((1, 0, 0)), TINY).passed

    def test_graded_submodules(self, ctx):
        H = ctx.graded_group
        desc = ModuleDescriptor(ModuleKind.GRADED_M, ONE, H)
        report = check_graded_submodules(ctx, desc, TINY)
        assert report.passed, report.counterexample
        assert "v{-1,0,0}" in " ".join(report.details["candidates"])

    def test_graded_candidates_are_plain_vectors(self, ctx):
        H = ctx.graded_group
        desc = ModuleDescriptor(ModuleKind.GRADED_M, ONE, H)
        report = check_graded_submodules(ctx, desc, TINY)
        assert len(report.details["candidates"]) == len(report.details["candidate_dims"])
        for text in report.details["candidates"]:
            assert parse(text, H, module=desc, expect=ModuleElement)

    def test_hub_note_mentions_discard(self, ctx):
        report = check_irreducibility_evidence(ctx, a_mu(ctx, HALF), TINY)
        assert report.note is not None
        assert "not transitive" in report.note

    def test_missed_target_replays(self, ctx, monkeypatch):
        desc = a_mu(ctx, HALF)
        monkeypatch.setattr(core.checks.modules, "act", lambda w, v: ModuleElement(v.descriptor))
        ce = check_irreducibility_evidence(ctx, desc, TINY).counterexample
        assert ce is not None
        assert ce.rhs == "0"
        target = parse(ce.inputs["target"], ctx.group, module=desc, expect=ModuleElement)
        assert parse(ce.lhs, ctx.group, module=desc, expect=ModuleElement) == target

    def test_trivial_vector_witness_replays(self, ctx, monkeypatch):
        desc = a_mu(ctx, ONE)
        monkeypatch.setattr(core.checks.modules, "act", lambda w, v: v)
        ce = check_irreducibility_evidence(ctx, desc, TINY).counterexample
        assert ce is not None
        v = parse(ce.inputs["v"], ctx.group, module=desc, expect=ModuleElement)
        assert parse(ce.lhs, ctx.group, module=desc, expect=ModuleElement) == v
        parse(ce.inputs["w"], ctx.group, expect=WittElement)

    def test_multiplicity_counterexample_replays(self, ctx, monkeypatch):
        desc = a_mu(ctx, HALF)
        real = core.checks.modules.weight_dimensions
        monkeypatch.setattr(
            core.checks.modules,
            "weight_dimensions",
            lambda d, w: {beta: dim + 1 for beta, dim in real(d, w).items()},
        )
        ce = check_weight_multiplicities(ctx, desc).counterexample
        assert ce is not None
        assert (ce.lhs, ce.rhs) == ("2", "1")
        v = parse(ce.inputs["v"], ctx.group, module=desc, expect=ModuleElement)
        (beta, _), = v.terms
        assert ce.inputs["weight"] == str(desc.module.weight(beta))

    def test_shift_descriptor_is_shared(self, ctx):
        desc = a_mu(ctx, HALF)
        gamma = GroupElement((1, 0, 0))
        assert shift_descriptor(desc, gamma) is shift_descriptor(desc, gamma)
        assert a_mu(ctx, HALF).module is desc.module

    def test_shift_per_direction(self, ctx):
        report = check_shift_iso(ctx, HALF, GroupElement((1, 0, 0)), TINY, direction=2)
        assert report.passed, report.counterexample
        assert report.check == "shift[A_mu(1/2,0,0), {1,0,0}, d2]"
        assert report.tested == 27 * 27


class TestGenerators:
    @pytest.mark.parametrize("variant", list(GeneratorVariant))
    def test_closure_reaches_targets(self, ctx, variant):
        report = check_generators(ctx, variant)
        assert report.passed, report.counterexample
        assert report.tested == report.details["targets"] > 0

    def test_outside_hypothesis(self):
        report = check_generators(make_ctx(l1=0, l2=2, l3=0, mu=[], mu_in_gamma=[], graded_l=3), "prop21")
        assert report.passed
        assert report.tested == 0
        assert report.note is not None

    def test_broken_bracket_detected(self, ctx, monkeypatch):
        monkeypatch.setattr(core.checks.generators, "bracket", lambda u, v: WittElement(u.group))
        report = check_generators(ctx, GeneratorVariant.NONZERO_ALPHA)
        assert report.status is Status.FAIL
        assert report.details["missed"] > 0

    def test_missed_target_replays(self, ctx, monkeypatch):
        monkeypatch.setattr(core.checks.generators, "bracket", lambda u, v: WittElement(u.group))
        report = check_generators(ctx, GeneratorVariant.NONZERO_ALPHA)
        ce = report.counterexample
        assert ce is not None
        assert ce.rhs == "0"
        target = parse(ce.inputs["target"], ctx.group, expect=WittElement)
        assert parse(ce.lhs, ctx.group, expect=WittElement) == target
        assert report.note is not None and report.note.startswith("stopped at fixpoint")


class TestOrderCheck:
    def test_passes(self, ctx):
        report = check_total_order(ctx)
        assert report.passed
        assert report.details["indices"] == 35

    def test_lexicographic_detected(self, ctx, monkeypatch):
        def lexicographic(i: MultiIndex, j: MultiIndex) -> Ordering:
            if i == j:
                return Ordering.EQUAL
            return Ordering.GREATER if i.entries > j.entries else Ordering.LESS

        monkeypatch.setattr(core.checks.order, "order_compare", lexicographic)
        assert not check_total_order(ctx).passed
