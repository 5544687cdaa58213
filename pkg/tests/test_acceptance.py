"""Acceptance gate: every shipped guarantee, one pass/fail line each.

Run as ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines; each criterion also asserts, so a plain pytest run fails loudly.
"""

import subprocess
import sys
import time

import pytest

import mindef as md
from mindef import PrecOrdering, build_framework, prec_compare, split
from conftest import FIXTURE_DIR, instance_stream, sset


def _report(number, description, ok):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number:02d}: {description}",
          flush=True)
    assert ok, f"criterion {number:02d}: {description}"


@pytest.fixture(scope="module")
def fx():
    return md.builtin_fixtures()


# -- the 500-instance stream shared by criteria 8 and 9 ---------------------

_STREAM_CACHE = {}


def _stream_results():
    if _STREAM_CACHE:
        return _STREAM_CACHE
    records = []
    solve_seconds = 0.0
    for cfg, af, p in instance_stream(500, base_seed=0):
        started = time.perf_counter()
        rec = {
            "af": af, "p": p,
            "pref_solver": md.preferred_extensions(af),
            "pref_oracle": md.oracle_preferred(af),
            "on_solver": md.preferred_extensions_on(af, p.focus),
            "on_oracle": md.oracle_preferred_on(af, p.focus),
            "mindef_solver": md.min_def_extensions(af, p),
            "mindef_oracle": md.oracle_min_def(af, p),
        }
        solve_seconds += time.perf_counter() - started
        rec["adm_all"] = md.oracle_admissible(af)
        rec["adm_focus"] = md.oracle_admissible(af, p.focus)
        records.append(rec)
    _STREAM_CACHE["records"] = records
    _STREAM_CACHE["solve_seconds"] = solve_seconds
    return _STREAM_CACHE


def test_criterion_01_admissibility_spot_checks(fx):
    af, _ = fx["AF1"]
    cases = [("", True), ("o1", True), ("o1,u2,u3", True),
             ("o1,u2,u3,u4,u5,r1,r2,r3,o5", True), ("u5,r3,r4", False)]
    ok = True
    slowest = 0.0
    for names, expected in cases:
        s = sset(af, names)
        started = time.perf_counter()
        verdict = md.is_admissible(af, s)
        slowest = max(slowest, time.perf_counter() - started)
        ok &= verdict is expected
    ok &= slowest < 0.001
    _report(1, f"admissibility spot checks on AF1 (slowest {slowest*1e6:.0f}us)", ok)


def test_criterion_02_unique_preferred_extension(fx):
    af, _ = fx["AF1"]
    started = time.perf_counter()
    fam = md.preferred_extensions(af)
    elapsed = time.perf_counter() - started
    ok = (fam.members == (sset(af, "o1,u2,u3,u4,u5,r1,r2,r3,o5"),)
          and elapsed < 0.1)
    _report(2, f"unique preferred extension of AF1 ({elapsed*1e3:.1f}ms)", ok)


def test_criterion_03_preferred_extension_on_the_focus(fx):
    af, p = fx["AF2"]
    started = time.perf_counter()
    fam = md.preferred_extensions_on(af, p.focus)
    elapsed = time.perf_counter() - started
    ok = (fam.members == (sset(af, "u2,u3,u4,u5,r1,r2,r3"),)
          and elapsed < 0.1)
    _report(3, f"unique preferred extension on F of AF2 ({elapsed*1e3:.1f}ms)", ok)


def test_criterion_04_restricted_admissibility(fx):
    af, p = fx["AF3"]
    accepted = ["", "u2,u3", "u2,u3,u4,u5,r2", "u2,u3,u4,u5,r1,r2"]
    ok = all(md.is_restrictedly_admissible(af, p, sset(af, names))
             for names in accepted)
    ok &= not md.is_restrictedly_admissible(af, p, sset(af, "u5,r3"))
    _report(4, "restricted admissibility verdicts on AF3", ok)


def test_criterion_05_min_def_extension(fx):
    af, p = fx["AF3"]
    expected = (sset(af, "u2,u3,u4,u5,r2"),)
    started = time.perf_counter()
    solver = md.min_def_extensions(af, p)
    elapsed = time.perf_counter() - started
    oracle = md.oracle_min_def(af, p)
    ok = solver.members == expected and oracle.members == expected
    ok &= elapsed < 0.1
    _report(5, f"unique min-def extension of AF3, both engines ({elapsed*1e3:.1f}ms)", ok)


def test_criterion_06_witness_on_the_bundled_example(fx):
    af, p = fx["AF3"]
    (on_f,) = md.preferred_extensions_on(af, p.focus)
    u_part, r_part = split(on_f, p)
    ok = u_part == sset(af, "u2,u3,u4,u5")
    ok &= r_part == sset(af, "r1,r2,r3")
    ok &= sset(af, "r2") <= r_part
    _report(6, "preferred-on-F witness covers the min-def extension of AF3", ok)


def test_criterion_07_counterexample_fixture(fx):
    af, p = fx["ABC"]
    x = af.subset(["a"])
    preferred = md.preferred_extensions(af)
    on_x = md.preferred_extensions_on(af, x)
    ok = preferred.members == (af.subset(["a", "c"]),)
    ok &= on_x.members == (af.empty_set(),)
    ok &= (preferred.members[0] & x) == x  # the intersection is {a}, not empty
    _report(7, "extensions on a set are not intersections (3-chain fixture)", ok)


def test_criterion_08_solver_oracle_equivalence_on_500_instances():
    data = _stream_results()
    mismatches = sum(
        rec["pref_solver"] != rec["pref_oracle"]
        or rec["on_solver"] != rec["on_oracle"]
        or rec["mindef_solver"] != rec["mindef_oracle"]
        for rec in data["records"])
    elapsed = data["solve_seconds"]
    ok = mismatches == 0 and len(data["records"]) == 500 and elapsed < 120.0
    _report(8, "solver = oracle on 500 seeded instances for preferred, "
               f"preferred-on-F, min-def ({elapsed:.1f}s)", ok)


def test_criterion_09_proposition_suite_on_the_same_instances():
    records = _stream_results()["records"]
    violations = 0
    for rec in records:
        af, p = rec["af"], rec["p"]
        pref = rec["pref_oracle"]
        on_f = rec["on_oracle"]
        mindef = rec["mindef_oracle"]
        # every admissible set extends to a preferred extension
        violations += sum(not any(s <= e for e in pref)
                          for s in rec["adm_all"])
        # at least one preferred extension; exactly one if well-founded
        violations += len(pref) < 1
        if md.is_well_founded(af):
            violations += len(pref) != 1
        # admissible subsets of F extend to a preferred extension on F,
        # which itself sits inside a preferred extension
        violations += sum(not any(s <= e for e in on_f)
                          for s in rec["adm_focus"])
        violations += sum(not any(e <= q for q in pref) for e in on_f)
        # acyclic restriction to F forces a unique extension on F
        focus_idx = set(p.focus.indices())
        inner = [(a, b) for a, b in af.attacks
                 if a in focus_idx and b in focus_idx]
        restriction = build_framework(
            [af.names[i] for i in sorted(focus_idx)],
            [(af.names[a], af.names[b]) for a, b in inner])
        if md.is_well_founded(restriction):
            violations += len(on_f) != 1
        # min-def = preference-maximal admissible subsets of F
        violations += (md.filter_maximal(rec["adm_focus"], "prec", p)
                       != mindef)
        # every admissible subset of F is dominated by a min-def member
        violations += len(mindef) < 1
        for g in rec["adm_focus"]:
            violations += not any(
                prec_compare(p, g, s) in (PrecOrdering.STRICTLY_BETTER,
                                          PrecOrdering.EQUIVALENT)
                for s in mindef)
        # witness exchanges between min-def and preferred-on-F
        for s in mindef:
            su, sr = split(s, p)
            violations += not any(
                split(e, p)[0] == su and sr <= split(e, p)[1] for e in on_f)
        for e in on_f:
            eu = split(e, p)[0]
            violations += not any(eu <= split(s, p)[0] for s in mindef)
    _report(9, "proposition suite over the 500 instances, zero violations",
            violations == 0)


def test_criterion_10_well_founded_instances_have_one_extension():
    bad = 0
    for _, af, _ in instance_stream(100, base_seed=7000, acyclic=True,
                                    probabilities=(0.15, 0.3)):
        bad += not md.is_well_founded(af)
        bad += len(md.preferred_extensions(af)) != 1
    _report(10, "100 seeded DAG instances each have exactly one preferred "
                "extension", bad == 0)


def test_criterion_11_cli_output_is_byte_identical_across_runs():
    ok = True
    af3 = str(FIXTURE_DIR / "af3.afp")
    for args in (["solve", af3, "--semantics", "min-def"],
                 ["solve", af3, "--semantics", "preferred", "--format",
                  "structured"],
                 ["solve", af3, "--semantics", "restricted-admissible"]):
        runs = [subprocess.run([sys.executable, "-m", "mindef", *args],
                               capture_output=True) for _ in range(2)]
        ok &= runs[0].stdout == runs[1].stdout and runs[0].returncode == 0
    _report(11, "repeated solve invocations are byte-identical", ok)


def test_criterion_12_fifty_argument_smoke_bound():
    cfg = md.GeneratorConfig(argument_count=50, attack_probability=0.04,
                             seed=2024)
    af, _ = md.random_instance(cfg)
    started = time.perf_counter()
    fam = md.preferred_extensions(af)
    elapsed = time.perf_counter() - started
    ok = len(fam) >= 1 and elapsed < 10.0
    _report(12, f"n=50, expected out-degree 2: preferred enumeration in "
                f"{elapsed:.2f}s", ok)
