import itertools

import pytest

import mindef as md
from mindef import (BudgetExceeded, EmptyFamily, ExtensionFamily,
                    NotWithinFocus, PreconditionViolated, SearchBudget,
                    build_framework, credulous_accepted,
                    filter_maximal, is_admissible, min_def_extensions,
                    minimize_restricted, preferred_extensions,
                    preferred_extensions_on, skeptical_accepted)

from conftest import instance_stream, sset


class TestPreferred:
    def test_af1_has_a_unique_preferred_extension(self, af1, backend):
        fam = preferred_extensions(af1)
        assert fam.members == (sset(af1, "o1,u2,u3,u4,u5,r1,r2,r3,o5"),)

    def test_mutual_attack_yields_both_singletons(self, backend):
        af = build_framework(["a", "b"], [("a", "b"), ("b", "a")])
        assert preferred_extensions(af) == ExtensionFamily(
            [af.subset(["a"]), af.subset(["b"])])

    def test_empty_framework(self, backend):
        af = build_framework([], [])
        fam = preferred_extensions(af)
        assert fam.members == (af.empty_set(),)


class TestPreferredOn:
    def test_af2_focus(self, af1, p2, backend):
        fam = preferred_extensions_on(af1, p2.focus)
        assert fam.members == (sset(af1, "u2,u3,u4,u5,r1,r2,r3"),)

    def test_chain_restricted_to_the_tail_is_empty(self, abc, backend):
        af, _ = abc
        fam = preferred_extensions_on(af, af.subset(["a"]))
        assert fam.members == (af.empty_set(),)

    def test_on_the_whole_universe_equals_preferred(self, backend):
        for _, af, _ in instance_stream(15, base_seed=950):
            assert (preferred_extensions_on(af, af.full_set())
                    == preferred_extensions(af))

    def test_not_the_intersection_with_the_preferred_extension(self, abc):
        af, _ = abc
        x = af.subset(["a"])
        preferred = preferred_extensions(af)
        assert preferred.members == (af.subset(["c", "a"]),)
        intersections = ExtensionFamily(e & x for e in preferred)
        assert preferred_extensions_on(af, x) != intersections


class TestMinDef:
    def test_af3_unique_min_def_extension(self, af1, p3, backend):
        fam = min_def_extensions(af1, p3)
        assert fam.members == (sset(af1, "u2,u3,u4,u5,r2"),)

    def test_without_restricted_arguments_degenerates(self, backend):
        for _, af, p in instance_stream(12, base_seed=77,
                                        restricted_fraction=0.0):
            assert not p.restricted
            assert (min_def_extensions(af, p)
                    == preferred_extensions_on(af, p.focus))

    def test_matches_oracle_on_random_instances(self, backend):
        for _, af, p in instance_stream(40, base_seed=3000):
            assert min_def_extensions(af, p) == md.oracle_min_def(af, p)


class TestMinimizeRestricted:
    def test_af3_drops_the_redundant_defenders(self, af1, p3):
        fam = minimize_restricted(af1, p3, sset(af1, "u2,u3,u4,u5,r1,r2,r3"))
        assert fam.members == (sset(af1, "u2,u3,u4,u5,r2"),)

    def test_nothing_to_remove(self, af1, p3):
        e = sset(af1, "u2,u3")
        assert minimize_restricted(af1, p3, e).members == (e,)

    def test_requires_admissible_input(self, af1, p3):
        with pytest.raises(PreconditionViolated):
            minimize_restricted(af1, p3, sset(af1, "u1"))

    def test_requires_input_within_focus(self, af1, p3):
        with pytest.raises(PreconditionViolated):
            minimize_restricted(af1, p3, sset(af1, "o1"))

    def test_outputs_are_minimal_and_complete(self):
        for _, af, p in instance_stream(25, base_seed=60):
            for e in md.oracle_admissible(af, p.focus):
                got = {s.mask for s in minimize_restricted(af, p, e)}
                eu = e.mask & p.unrestricted.mask
                er_mask = e.mask & p.restricted.mask
                er = [b for b in range(len(af)) if er_mask >> b & 1]
                admissible_supports = [
                    sum(1 << b for b in combo)
                    for size in range(len(er) + 1)
                    for combo in itertools.combinations(er, size)
                    if is_admissible(af, md.ArgumentSet(
                        af, eu | sum(1 << b for b in combo)))]
                minimal = {m for m in admissible_supports
                           if not any(o != m and o | m == m
                                      for o in admissible_supports)}
                assert got == {eu | m for m in minimal}


class TestFilterMaximal:
    def test_subset_order(self, af1):
        fam = ExtensionFamily([af1.empty_set(), sset(af1, "o1"),
                               sset(af1, "o1,u2,u3")])
        kept = filter_maximal(fam, order="subset")
        assert kept.members == (sset(af1, "o1,u2,u3"),)

    def test_singleton_family_is_fixed(self, af1):
        fam = ExtensionFamily([sset(af1, "o1")])
        assert filter_maximal(fam) == fam

    def test_prec_order(self, af1, p3):
        fam = ExtensionFamily([sset(af1, "u2,u3,u4,u5,r2"),
                               sset(af1, "u2,u3,u4,u5,r1,r2")])
        kept = filter_maximal(fam, order="prec", partition=p3)
        assert kept.members == (sset(af1, "u2,u3,u4,u5,r2"),)

    def test_prec_order_rejects_out_of_focus_members(self, af1, p3):
        fam = ExtensionFamily([sset(af1, "o1")])
        with pytest.raises(NotWithinFocus):
            filter_maximal(fam, order="prec", partition=p3)

    def test_incomparable_members_all_survive(self, af1, p3):
        fam = ExtensionFamily([sset(af1, "u1"), sset(af1, "u2"),
                               sset(af1, "u3")])
        assert filter_maximal(fam, order="prec", partition=p3) == fam


class TestAcceptance:
    def test_af1_contains_o1_everywhere(self, af1):
        fam = preferred_extensions(af1)
        assert credulous_accepted(af1, fam, "o1")
        assert skeptical_accepted(af1, fam, "o1")

    def test_af1_never_contains_r4(self, af1):
        fam = preferred_extensions(af1)
        assert not credulous_accepted(af1, fam, "r4")
        assert not skeptical_accepted(af1, fam, "r4")

    def test_mutual_attack_splits_the_two_notions(self):
        af = build_framework(["a", "b"], [("a", "b"), ("b", "a")])
        fam = preferred_extensions(af)
        assert credulous_accepted(af, fam, "a")
        assert not skeptical_accepted(af, fam, "a")

    def test_empty_family_is_an_error(self, af1):
        with pytest.raises(EmptyFamily):
            credulous_accepted(af1, ExtensionFamily([]), "o1")
        with pytest.raises(EmptyFamily):
            skeptical_accepted(af1, ExtensionFamily([]), "o1")


class TestFamily:
    def test_members_are_deduplicated_and_ordered(self, af1):
        fam = ExtensionFamily([sset(af1, "u2,u1"), sset(af1, "o1"),
                               sset(af1, "u1,u2")])
        assert fam.members == (sset(af1, "o1"), sset(af1, "u1,u2"))

    def test_canonical_order_is_by_sorted_name_tuples(self, af1):
        fam = ExtensionFamily([sset(af1, "u2"), sset(af1, "u1,u5"),
                               af1.empty_set()])
        assert [tuple(sorted(s.names)) for s in fam] == [
            (), ("u1", "u5"), ("u2",)]


class TestBudget:
    def test_wall_clock_ceiling_aborts(self):
        names = [f"x{i}" for i in range(28)]
        pairs = []
        for i in range(0, 28, 2):
            pairs += [(names[i], names[i + 1]), (names[i + 1], names[i])]
        af = build_framework(names, pairs)
        with pytest.raises(BudgetExceeded):
            md.admissible_sets(af, budget=SearchBudget(wall_clock_seconds=0.02))

    def test_enumeration_without_ceiling_completes(self, backend):
        names = [f"x{i}" for i in range(16)]
        pairs = []
        for i in range(0, 16, 2):
            pairs += [(names[i], names[i + 1]), (names[i + 1], names[i])]
        af = build_framework(names, pairs)
        fam = preferred_extensions(af)
        assert len(fam) == 2 ** 8


def test_two_step_pipeline_matches_the_exhaustive_answer(backend):
    for _, af, p in instance_stream(30, base_seed=4100):
        assert min_def_extensions(af, p) == md.oracle_min_def(af, p)


def test_solver_families_are_deterministic(af1, p3):
    first = min_def_extensions(af1, p3)
    second = min_def_extensions(af1, p3)
    assert first.members == second.members
    assert [s.names for s in first] == [s.names for s in second]
