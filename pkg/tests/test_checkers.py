import json

import pytest

from gapcheck.checkers import (Kind, RunOpts, Verdict, catalog, registry,
                               run_all, run_checker, run_many)


def test_catalog_membership_and_size():
    cat = catalog()
    ids = [c.id for c in cat]
    assert "conj-gap-sq" in ids
    assert len(cat) >= 70
    assert all(c.source for c in cat)
    assert ids == sorted(ids)


def test_conj_gap_sq_exceptions(mid_store):
    r = run_checker("conj-gap-sq", mid_store, 1, 10 ** 5)
    assert r.verdict is Verdict.EXCEPTIONS_CONFIRMED
    assert r.violations == [4, 9, 30]
    assert r.conjecture


def test_conj_gap_sq2_exceptions(mid_store):
    r = run_checker("conj-gap-sq2", mid_store, 1, 10 ** 5)
    assert r.verdict is Verdict.EXCEPTIONS_CONFIRMED
    assert r.violations == [4]


def test_delta_gt_half_survey(mid_store):
    r = run_checker("delta-gt-half", mid_store, 1, 10 ** 5)
    assert r.verdict is Verdict.SURVEY_RESULT
    assert r.survey == [2, 4, 6, 9, 11, 30]
    r2 = run_checker("survey-quarter", mid_store, 1, 10 ** 5)
    assert r2.survey == [2, 4, 6, 9, 11, 30]


def test_andrica_sharp(mid_store):
    r = run_checker("andrica-sharp", mid_store, 1, 10 ** 4)
    assert r.verdict is Verdict.PASS
    assert r.extra["max_at"] == 4
    assert r.extra["max_delta"] == "sqrt(11)-sqrt(7)"


def test_run_all_small_range_no_fail(small_store):
    reports = run_all(small_store, 1, 1000)
    assert all(r.verdict not in (Verdict.FAIL, Verdict.UNDECIDED_PRESENT)
               for r in reports), [
        (r.checker_id, r.verdict) for r in reports
        if r.verdict in (Verdict.FAIL, Verdict.UNDECIDED_PRESENT)]


def test_run_all_deterministic(small_store):
    a = [r.to_json() for r in run_all(small_store, 1, 300)]
    b = [r.to_json() for r in run_all(small_store, 1, 300)]
    assert a == b


def test_run_all_out_of_domain(small_store):
    reports = run_all(small_store, 1, 1)
    by_id = {r.checker_id: r for r in reports}
    # checkers with n_min >= 2 see the whole range as out of domain
    assert by_id["floor-32"].counts.out_of_domain == 1
    assert by_id["floor-32"].counts.holds == 0


def test_counts_partition_range(small_store):
    for r in run_all(small_store, 5, 250):
        assert r.counts.total() == 246, r.checker_id


def test_unknown_checker(small_store):
    with pytest.raises(KeyError):
        run_checker("no-such-id", small_store, 1, 10)


def test_exception_set_missing_exception_fails(small_store):
    # restricting the range so an expected exception cannot appear must
    # narrow the expected set, not fail: {4,9,30} ∩ [1,20] = {4,9}
    r = run_checker("conj-gap-sq", small_store, 1, 20)
    assert r.verdict is Verdict.EXCEPTIONS_CONFIRMED
    assert r.violations == [4, 9]


def test_survey_expected_sets_recorded():
    spec = registry()["delta-gt-half"]
    assert spec.expected_survey == frozenset({2, 4, 6, 9, 11, 30})
    spec2 = registry()["survey-dsq-p"]
    assert spec2.expected_survey == frozenset({4, 9, 30})


def test_equivalence_checkers_small(small_store):
    for cid in ["eq-15-1", "eq-15-2", "eq-15-3", "eq-15-4", "eq-16-1",
                "eq-16-2", "eq-16-3", "eq-qr", "eq-28-1", "eq-28-2",
                "eq-28-3", "twin-91", "cor-13", "cor-64", "even-73"]:
        r = run_checker(cid, small_store, 1, 2000)
        assert r.verdict is Verdict.PASS, (cid, r.verdict, r.witnesses[:3])


def test_twin_sq_exception(small_store):
    r = run_checker("twin-sq", small_store, 1, 1000)
    assert r.verdict is Verdict.EXCEPTIONS_CONFIRMED
    assert r.violations == [2]


def test_survey_dh_collects(small_store):
    r = run_checker("survey-dh", small_store, 1, 1000)
    assert 6 in r.survey and 24 in r.survey
    assert r.verdict is Verdict.SURVEY_RESULT


def test_survey_dsq_p_extras(mid_store):
    r = run_checker("survey-dsq-p", mid_store, 1, 10 ** 4)
    assert r.survey == [4, 9, 30]
    assert set(r.extra["delta_gt_half"]) == {2, 4, 6, 9, 11, 30}
    assert 4 in r.extra["d_gt_sqrt_p"]


def test_exception_indices_specific(small_store):
    cases = {
        "gap-half": [1, 2, 4],
        "cor-26": [4],
        "ext-63": [2, 4],
        "even-72": [3],
        "even-74": [3, 8],
        "odd-79": [5],
        "odd-710": [5, 16, 24],
    }
    for cid, expected in cases.items():
        r = run_checker(cid, small_store, 1, 5000)
        assert r.verdict is Verdict.EXCEPTIONS_CONFIRMED, (cid, r.verdict)
        assert r.violations == expected, (cid, r.violations)


def test_trend_reports(small_store):
    r = run_checker("trend-delta", small_store, 1, 4000)
    assert r.verdict is Verdict.TREND_RESULT
    assert r.extra["running_max_attained_at_4"] is True
    r2 = run_checker("trend-mu", small_store, 1, 4000)
    assert r2.verdict is Verdict.TREND_RESULT
    rows = r2.extra["checkpoints"]
    assert rows[-1][1] < 0.01 and rows[-1][2] > 0.99


def test_report_json_schema(small_store):
    r = run_checker("conj-gap-sq", small_store, 1, 100)
    d = json.loads(r.to_json())
    assert d["id"] == "conj-gap-sq"
    assert d["range"] == [1, 100]
    assert set(d["counts"]) == {"holds", "fails", "undecided", "out_of_domain"}
    assert d["verdict"] == "EXCEPTIONS_CONFIRMED"
    assert isinstance(d["conjecture"], bool)
    for w in d["witnesses"]:
        assert {"n", "p", "q", "d"} <= set(w)


def test_resume_equivalence(mid_store):
    ids = ["conj-gap-sq", "twin-95", "andrica-sharp", "fixedgap-mono",
           "delta-gt-half", "twin-913", "alpha-props"]
    single, _ = run_many(ids, mid_store, 1, 4000)
    for split in (2, 137, 3999):
        part1, cp = run_many(ids, mid_store, 1, split)
        resumed, _ = run_many(ids, mid_store, split + 1, 4000, resume=cp)
        for cid in ids:
            assert resumed[cid].to_json() == single[cid].to_json(), (split, cid)


def test_resume_mismatch_rejected(mid_store):
    _, cp = run_many(["conj-gap-sq"], mid_store, 1, 50)
    with pytest.raises(ValueError):
        run_many(["conj-gap-sq"], mid_store, 99, 120, resume=cp)
    with pytest.raises(ValueError):
        run_many(["andrica"], mid_store, 51, 120, resume=cp)


def test_witness_cap(small_store):
    r = run_checker("delta-gt-half", small_store, 1, 1000,
                    opts=RunOpts(witness_cap=2))
    assert len(r.witnesses) == 2
    assert r.survey == [2, 4, 6, 9, 11, 30]  # survey list unaffected by cap


def test_kind_partition():
    kinds = {k: 0 for k in Kind}
    for spec in catalog():
        kinds[spec.kind] += 1
    assert kinds[Kind.UNIVERSAL] > 30
    assert kinds[Kind.EXCEPTION_SET] >= 8
    assert kinds[Kind.EQUIVALENCE] >= 12
    assert kinds[Kind.SURVEY] >= 8
    assert kinds[Kind.TREND] == 2


def test_cor27_printed_endpoints(small_store):
    """The excluded range of the sqrt(2x)-interval claim, frozen at the
    printed endpoints: the claim fails at x = 7 and still fails at the
    printed rational endpoint 7.2041684766 (both inside the exclusion)."""
    from fractions import Fraction
    # integer endpoint x = 7: next prime 11 >= 7 + sqrt(14) ~ 10.74
    assert 11 >= 7 and (11 - 7) ** 2 > 2 * 7
    # rational endpoint: x + sqrt(2x) < 11  <=>  2x < (11 - x)^2
    x0 = Fraction("7.2041684766")
    assert 2 * x0 < (11 - x0) ** 2
    # one integer later the claim holds: 11 < 8 + 4
    assert (11 - 8) ** 2 < 2 * 8
    # and the catalog checker reports exactly {4} on a desk range
    r = run_checker("cor-27", small_store, 1, 2000)
    assert r.verdict is Verdict.EXCEPTIONS_CONFIRMED and r.violations == [4]
