import pytest

import config
import verify_oracle
from errors import BudgetError, DegreeError, IndexRangeError, InternalError
from perm_core import Parity, parity
from sn_ogs import SnCanonicalForm, decode_sn
from verify_oracle import (
    DEFAULT_SUITES,
    SUITES,
    Failure,
    SuiteOptions,
    VerificationReport,
    certify_uniqueness,
    check_alt4_table,
    check_coset_law,
    check_enumeration,
    check_exchange_sn,
    check_exchange_sn_overlap,
    check_generators,
    check_major_index,
    check_rel_t_odd,
    check_rel_tt_general,
    check_rel_tt_step,
    check_rel_vu,
    check_restriction,
    check_text_roundtrip,
    check_v_exchange,
    decode_sn_right_to_left,
    enumerate_group,
    fuzz_normalizer,
    merge_reports,
    resolve_conventions,
    run_identity_suites,
    run_suites,
)


def assert_clean(report, checked=None):
    assert report.ok, str(report.first_failure)
    assert report.first_failure is None
    if checked is not None:
        assert report.checked == checked


# --- Reports ---


def test_report_invariants():
    with pytest.raises(InternalError):
        VerificationReport("x", checked=1, passed=2)
    with pytest.raises(InternalError):
        VerificationReport("x", checked=2, passed=1)
    with pytest.raises(InternalError):
        VerificationReport("x", checked=1, passed=1, first_failure=Failure("c", "1", "2"))


def test_report_tsv():
    failed = VerificationReport("s", 3, 2, Failure("case", "a", "b"), elapsed=0.0123)
    assert failed.to_tsv() == "s\t3\t2\t12\tcase: expected a, got b"
    assert failed.to_tsv(timing=False) == "s\t3\t2\t0\tcase: expected a, got b"
    assert VerificationReport("s", 0, 0).to_tsv() == "s\t0\t0\t0\t-"


def test_merge_keeps_first_failure():
    first = VerificationReport("s", 2, 1, Failure("one", "a", "b"))
    second = VerificationReport("s", 3, 2, Failure("two", "a", "b"))
    merged = merge_reports([VerificationReport("s", 4, 4), first, second])
    assert (merged.checked, merged.passed) == (9, 7)
    assert merged.first_failure.case == "one"
    with pytest.raises(InternalError):
        merge_reports([])


# --- Enumeration and uniqueness ---


def test_enumerate_group_sizes():
    assert len(list(enumerate_group(3, alternating=True))) == 3
    assert len(list(enumerate_group(4, alternating=True))) == 12
    assert len(list(enumerate_group(4))) == 24
    with pytest.raises(DegreeError):
        list(enumerate_group(2, alternating=True))


def test_enumerate_group_parity_partition():
    evens = set(enumerate_group(5, alternating=True))
    full = set(enumerate_group(5))
    assert evens <= full
    assert {p for p in full if parity(p) is Parity.EVEN} == evens


def test_enumerate_group_is_lexicographic():
    images = [p.images for p in enumerate_group(4)]
    assert images == sorted(images)


@pytest.mark.parametrize("n, alternating, count", [(4, True, 12), (5, True, 60), (4, False, 24), (6, False, 720)])
def test_certify_uniqueness(n, alternating, count):
    assert_clean(certify_uniqueness(n, alternating), count)


def test_certify_uniqueness_budget(monkeypatch):
    monkeypatch.setattr(config, "SYM_NMAX", 3)
    with pytest.raises(BudgetError):
        certify_uniqueness(4, False)
    assert_clean(certify_uniqueness(4, False, force=True), 24)
    with pytest.raises(BudgetError):
        certify_uniqueness(config.ALT_FORCE_NMAX + 1, True, force=True)


def test_enumeration_coset_and_restriction_suites():
    assert_clean(check_enumeration(5))
    assert_clean(check_coset_law(6))
    assert_clean(check_restriction(6))


def test_generator_suite():
    assert_clean(check_generators(10))


# --- Identities ---


def test_exchange_suites():
    assert_clean(check_exchange_sn(6))
    overlap = check_exchange_sn_overlap(6)
    assert_clean(overlap)
    assert overlap.checked > 0


def test_v_exchange_suite():
    assert_clean(check_v_exchange(10))


def test_alt4_suite():
    assert_clean(check_alt4_table(), 5)


def test_relation_suites():
    assert_clean(check_rel_tt_step(8))
    assert_clean(check_rel_tt_general(8))
    assert_clean(check_rel_vu(8))
    assert_clean(check_rel_t_odd(8))


def test_printed_rel_tt_general_reports_counterexample():
    report = check_rel_tt_general(8, "printed")
    assert not report.ok
    assert report.suite == "rel_tt_general_printed"
    assert "r=2, r'=4, n=8" in report.first_failure.case


def test_identity_suites_need_degree_six():
    with pytest.raises(IndexRangeError):
        run_identity_suites(5)
    assert all(report.ok for report in run_identity_suites(6))


# --- Major index and conventions ---


def test_major_index_left_to_right():
    assert_clean(check_major_index(6), 1 + 2 + 6 + 24 + 120 + 720)


def test_major_index_right_to_left_fails_at_three():
    report = check_major_index(3, "right-to-left")
    assert not report.ok


def test_right_to_left_decode_reverses_product():
    c = SnCanonicalForm(4, (0, 1, 1))
    assert decode_sn_right_to_left(c) == decode_sn(SnCanonicalForm(4, (0, 0, 1))) * decode_sn(
        SnCanonicalForm(4, (0, 1, 0))
    )


def test_resolve_conventions_matches_config():
    result = resolve_conventions(5)
    assert result.maj_convention == "left-to-right"
    assert result.rel_tt_general_form == "inverse"
    assert_clean(result.report, 4)
    assert any(not report.ok for report in result.candidates)
    assert "r=2, r'=4, n=8" in str(result.printed_counterexample)


def test_resolve_conventions_flags_config_drift(monkeypatch):
    monkeypatch.setattr(config, "MAJ_CONVENTION", "right-to-left")
    report = resolve_conventions(4).report
    assert report.passed == 3
    assert report.first_failure.case == "maj convention"


def test_resolve_conventions_small_degree_still_decides():
    result = resolve_conventions(2)
    assert result.maj_convention == "left-to-right"
    assert_clean(result.report, 4)


def test_resolve_conventions_rejects_a_tie(monkeypatch):
    monkeypatch.setitem(verify_oracle._MAJ_CANDIDATES, "right-to-left", decode_sn)
    result = resolve_conventions(3)
    assert result.maj_convention is None
    assert not result.report.ok
    assert result.report.first_failure.case == "maj direction at n<=3"


def test_resolve_conventions_needs_printed_form_refuted(monkeypatch):
    def always_holds(n_max, form="inverse"):
        return VerificationReport(f"rel_tt_general/{form}", 1, 1)

    monkeypatch.setattr(verify_oracle, "check_rel_tt_general", always_holds)
    result = resolve_conventions(3)
    assert result.rel_tt_general_form is None
    assert result.printed_counterexample is None
    assert result.report.passed == 2
    assert result.report.first_failure.case == "printed rel_tt_general refuted at n<=8"


# --- Normalizer fuzzing ---


def test_fuzz_normalizer_small_run():
    report = fuzz_normalizer(5, trials=200, max_len=12, seed=7)
    assert_clean(report, 200)
    assert report.suite == "normalizer/n=5"


def test_fuzz_zero_trials_is_vacuous():
    assert_clean(fuzz_normalizer(4, trials=0, max_len=30, seed=1), 0)


def test_fuzz_is_deterministic_across_chunks():
    one = fuzz_normalizer(4, trials=1500, max_len=8, seed=3)
    two = fuzz_normalizer(4, trials=1500, max_len=8, seed=3)
    assert (one.checked, one.passed) == (two.checked, two.passed) == (1500, 1500)


def test_fuzz_rejects_small_degree():
    with pytest.raises(DegreeError):
        fuzz_normalizer(3, trials=1, max_len=5, seed=1)


def test_text_roundtrip_suite():
    assert_clean(check_text_roundtrip(5))


# --- Registry ---


def test_default_suites_are_registered():
    assert set(DEFAULT_SUITES) <= set(SUITES)
    assert "rel_tt_general_printed" not in DEFAULT_SUITES


def test_run_suites_unknown_name():
    with pytest.raises(IndexRangeError):
        run_suites(["nope"], SuiteOptions())


def test_run_uniqueness_for_one_group():
    reports = run_suites(["uniqueness"], SuiteOptions(n_max=4, group="alt"))
    assert [r.suite for r in reports] == ["uniqueness/alt/n=3", "uniqueness/alt/n=4"]
    assert [r.checked for r in reports] == [3, 12]


def test_uniqueness_caps_each_group_at_its_budget(monkeypatch):
    monkeypatch.setattr(config, "SYM_NMAX", 3)
    monkeypatch.setattr(config, "ALT_NMAX", 4)
    reports = run_suites(["alt4", "uniqueness"], SuiteOptions(n_max=5))
    assert [r.suite for r in reports] == [
        "alt4",
        "uniqueness/sym/n=2",
        "uniqueness/sym/n=3",
        "uniqueness/alt/n=3",
        "uniqueness/alt/n=4",
    ]
    assert all(r.ok for r in reports)


def test_uniqueness_force_lifts_the_cap(monkeypatch):
    monkeypatch.setattr(config, "SYM_NMAX", 3)
    monkeypatch.setattr(config, "ALT_NMAX", 4)
    monkeypatch.setattr(config, "ALT_FORCE_NMAX", 5)
    reports = run_suites(["uniqueness"], SuiteOptions(n_max=6, force=True))
    assert [r.suite for r in reports][-1] == "uniqueness/alt/n=5"
    assert [r.checked for r in reports if r.suite.startswith("uniqueness/sym")][-1] == 720


@pytest.mark.slow
def test_acceptance_run():
    """Every default suite at the configured budgets."""
    reports = run_suites(DEFAULT_SUITES, SuiteOptions())
    failed = [r.to_tsv() for r in reports if not r.ok]
    assert not failed
