import json
from itertools import combinations

import pytest

from newtmod import enumerate as en
from newtmod.bundled import BUNDLED, bundled_algebra
from newtmod.enumerate import (
    FAIL,
    PASS,
    UNKNOWN,
    VerificationRecord,
    VerificationReport,
    build_pool,
    enumerate_indecomposables,
    enumerate_rigid_pairs,
    verify_injectivity,
    verify_semistable,
    verify_theorem_suite,
)
from newtmod.errors import SearchSpaceTooLarge
from newtmod.modules import direct_sum, is_isomorphic, projective, simple
from newtmod.polytope import LatticePolytope
from newtmod.torsion import in_fac, tau_rigidity

from conftest import GOLDEN, pool_for


def test_counts_match_golden(bundled_name):
    pool = pool_for(bundled_name)
    golden = json.loads((GOLDEN / f"{bundled_name}_counts.json").read_text())
    assert golden["max_dim"] == list(BUNDLED[bundled_name])
    assert len(pool.indecomposables) == golden["indecomposables"]
    assert len(pool.brick_indices()) == golden["bricks"]
    assert len(pool.rigid_indices()) == golden["tau_rigid"]
    assert len(pool.tilting_pairs) == golden["tilting_pairs"]


@pytest.mark.parametrize("name, n", [("a2", 2), ("a3", 3)])
def test_gabriel_interval_vectors(name, n):
    pool = pool_for(name)
    intervals = sorted(tuple(int(i <= v <= j) for v in range(n)) for i in range(n) for j in range(i, n))
    assert sorted(m.dims for m in pool.indecomposables) == intervals
    assert all(pool.bricks)


def test_semisimple_pool_is_simples(semisimple2):
    pool = pool_for("semisimple2")
    assert sorted(m.dims for m in pool.indecomposables) == [(0, 1), (1, 0)]
    for m in pool.indecomposables:
        assert any(is_isomorphic(m, simple(semisimple2, i)) for i in range(2))


def test_preprojective_a2_small_bound(pi_a2):
    pool = enumerate_indecomposables(pi_a2, (1, 1))
    expected = [simple(pi_a2, 0), simple(pi_a2, 1), projective(pi_a2, 0), projective(pi_a2, 1)]
    assert len(pool.indecomposables) == 4
    for m in expected:
        assert pool.index_of(m) is not None


def test_zero_bound_gives_empty_pool(bundled_name):
    alg = bundled_algebra(bundled_name)
    assert enumerate_indecomposables(alg, (0,) * alg.n).indecomposables == []


def test_bound_validation(pi_a2):
    with pytest.raises(ValueError):
        enumerate_indecomposables(pi_a2, (1,))
    with pytest.raises(ValueError):
        enumerate_indecomposables(pi_a2, (1, -1))


def test_search_space_guard(loop_x2):
    with pytest.raises(SearchSpaceTooLarge):
        enumerate_indecomposables(loop_x2, (13,))


def exhaustive_tilting_pairs(pool):
    """Every (M, P) with M a basic sum of pool modules and P a basic projective, checked directly."""
    alg = pool.algebra
    mods = pool.indecomposables
    found = []
    for r in range(len(mods) + 1):
        for ms in combinations(range(len(mods)), r):
            m = direct_sum([mods[i] for i in ms], alg)
            for s in range(alg.n + 1):
                for ps in combinations(range(alg.n), s):
                    p = direct_sum([projective(alg, k) for k in ps], alg)
                    if tau_rigidity(m, p).tilting:
                        found.append((ms, ps))
    return found


@pytest.mark.parametrize("name, count", [("a2", 5), ("pi_a2", 6), ("semisimple2", 4), ("loop_x2", 2), ("a3", 14)])
def test_tilting_pairs_match_exhaustive_oracle(name, count):
    pool = pool_for(name)
    oracle = exhaustive_tilting_pairs(pool)
    got = sorted((tuple(sorted(pool.index_of(u) for u in pr.m_summands)), pr.p_vertices) for pr in pool.tilting_pairs)
    assert got == sorted(oracle)
    assert len(got) == count
    mods = pool.indecomposables
    fac_sets = {tuple(in_fac(x, pr.m) for x in mods) for pr in pool.tilting_pairs}
    assert len(fac_sets) == count


def test_semisimple_pairs_listed(semisimple2):
    pool = pool_for("semisimple2")
    got = sorted((tuple(sorted(u.dims for u in pr.m_summands)), pr.p_vertices) for pr in pool.tilting_pairs)
    assert got == [((), (0, 1)), (((0, 1),), (0,)), (((0, 1), (1, 0)), ()), (((1, 0),), (1,))]


def test_rigid_pairs_contain_tilting_pairs(bundled_name):
    pool = pool_for(bundled_name)
    rigid = enumerate_rigid_pairs(pool)
    assert sum(pr.tilting for pr in rigid) == len(pool.tilting_pairs)
    assert all(pr.rank <= pool.algebra.n for pr in rigid)


def test_pool_determinism_serial_and_parallel():
    alg = bundled_algebra("a3")
    first = build_pool(alg, (1, 1, 1)).canonical_bytes()
    again = build_pool(alg, (1, 1, 1)).canonical_bytes()
    parallel = build_pool(alg, (1, 1, 1), workers=2).canonical_bytes()
    assert first == again == parallel


def test_pool_determinism_preprojective():
    alg = bundled_algebra("pi_a2")
    assert build_pool(alg, (2, 2)).canonical_bytes() == build_pool(alg, (2, 2), workers=2).canonical_bytes()


# -- injectivity and reports -------------------------------------------------------


def test_injectivity_examples(pi_a2):
    p1, p2 = projective(pi_a2, 0), projective(pi_a2, 1)
    assert verify_injectivity([p1, p1], "x").status == PASS
    control = verify_injectivity([p1, p2], "x", invariant="dims")
    assert control.status == FAIL and len(control.witnesses) == 1
    bricks = [m for k, m in enumerate(pool_for("pi_a2").indecomposables) if pool_for("pi_a2").bricks[k]]
    rec = verify_injectivity(bricks, "bricks")
    assert rec.status == PASS and len(bricks) == 4


def test_injectivity_unknown_past_guard(pi_a2):
    big = direct_sum([simple(pi_a2, 0)] * 13)
    assert verify_injectivity([big, simple(pi_a2, 0)], "big").status == UNKNOWN


def test_report_status_aggregation():
    def rep(*statuses):
        return VerificationReport([VerificationRecord(f"c{k}", "", s) for k, s in enumerate(statuses)])

    assert rep(PASS, PASS).status == PASS
    assert rep(PASS, UNKNOWN).status == UNKNOWN
    assert rep(UNKNOWN, FAIL, PASS).status == FAIL


def test_suite_passes_on_every_bundled_algebra(bundled_name):
    report = verify_theorem_suite(pool_for(bundled_name))
    assert report.status == PASS, [r.to_dict() for r in report.records if r.status != PASS]


def test_suite_selection():
    pool = pool_for("pi_a2")
    checks = {s: [r.check for r in verify_theorem_suite(pool, s).records] for s in ("newton", "semistable", "bijection")}
    assert "thm3.2.iii" in checks["newton"] and "lemma3.1.ii" not in checks["newton"]
    assert checks["semistable"] == ["pool.bound", "lemma3.1.ii", "lemma3.1.i"]
    assert checks["bijection"] == ["pool.bound", "thm2.5", "thm2.3.ii"]
    with pytest.raises(ValueError):
        verify_theorem_suite(pool, "bogus")


def test_control_check_reports_projective_collision():
    pool = pool_for("pi_a2")
    rec = verify_theorem_suite(pool, "newton").record("control.dimvec")
    assert rec.status == PASS
    (pair,) = rec.witnesses
    mods = [m for m in pool.indecomposables if m.dims == (1, 1)]
    assert len(mods) == 2 and all(any(is_isomorphic(m, projective(pool.algebra, k)) for k in range(2)) for m in mods)
    assert pair == [f"X{pool.indecomposables.index(m)}[1, 1]" for m in mods]


# -- sabotage: the checks must be able to fail ---------------------------------------


def test_constant_polytope_breaks_injectivity(monkeypatch):
    pool = pool_for("pi_a2")
    monkeypatch.setattr(en, "newton_polytope", lambda m: LatticePolytope(((0, 0),)))
    report = verify_theorem_suite(pool, "newton")
    assert report.record("thm3.2.iii").status == FAIL
    assert report.record("thm3.2.iv").status == FAIL
    assert report.status == FAIL


def test_wrong_semistable_class_is_caught(monkeypatch):
    pool = pool_for("pi_a2")
    monkeypatch.setattr(en, "semistable_membership", lambda delta, x: True)
    assert verify_semistable(pool).status == FAIL


def test_wrong_brick_map_is_caught(monkeypatch, pi_a2):
    pool = pool_for("pi_a2")
    monkeypatch.setattr(en, "brick_of_tau_rigid", lambda n, pool=(): simple(pi_a2, 0))
    report = verify_theorem_suite(pool, "bijection")
    assert report.record("thm2.5").status == FAIL


def test_missing_pairs_are_caught():
    pool = pool_for("a2")
    broken = en.EnumerationPool(pool.algebra, pool.dim_bound, pool.indecomposables, pool.bricks, pool.tau_rigid)
    broken.tilting_pairs = pool.tilting_pairs[:-1] + [pool.tilting_pairs[0]]
    assert en._bijection_records(en._context(broken))[1].status == FAIL


def test_oversized_pool_member_gives_unknown(pi_a2):
    pool = pool_for("pi_a2")
    big = direct_sum([simple(pi_a2, 0)] * 13)
    padded = en.EnumerationPool(
        pool.algebra, pool.dim_bound, pool.indecomposables + [big], pool.bricks + [None], pool.tau_rigid + [False]
    )
    padded.tilting_pairs = pool.tilting_pairs
    report = verify_theorem_suite(padded, "newton")
    assert report.status == UNKNOWN
    assert all(r.status != FAIL for r in report.records)
