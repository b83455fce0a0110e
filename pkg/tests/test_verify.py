"""Verification harness: records, reports, grids, failure reporting."""

import pytest

from colorpartitions import IdentityParams
from colorpartitions.verify import (
    CheckRecord,
    VerificationReport,
    check_bijection,
    check_finitized,
    check_gordon,
    check_product_counts,
    verify_all,
    verify_finitized_grid,
    verify_gordon_grid,
    verify_identity_grid,
)


def test_report_properties():
    good = CheckRecord("gordon", "k=2 r=1", "n<=10", 11, True)
    bad = CheckRecord("gordon", "k=2 r=2", "n<=10", 4, False, "n=3: 2 members vs 3")
    report = VerificationReport("demo", (good, bad, good))
    assert not report.passed
    assert report.first_failure is bad
    assert report.total_checked == 26

    clean = VerificationReport("demo", (good,))
    assert clean.passed
    assert clean.first_failure is None


def test_empty_report_passes():
    report = VerificationReport("empty")
    assert report.passed
    assert report.total_checked == 0


def test_product_counts_pass():
    record = check_product_counts(IdentityParams(7, 1), 14)
    assert record.ok
    assert record.scope == "product_counts"
    assert record.params == "M=7 r=1"
    assert record.span == "n<=14"
    assert record.checked == 15
    assert record.note == ""


def test_product_counts_half_modulus_note():
    # no product form at 2r = M; the record says what was checked instead
    record = check_product_counts(IdentityParams(8, 4), 14)
    assert record.ok
    assert "theta quotient" in record.note


def test_bijection_pass():
    for params in (IdentityParams(7, 1), IdentityParams(8, 3), IdentityParams(6, 3)):
        record = check_bijection(params, 12)
        assert record.ok, record.note
        assert record.checked > 13


def test_bijection_detects_broken_enumerator(monkeypatch):
    from colorpartitions import families, verify

    real = families.colored_members

    def lossy(params, n):
        members = real(params, n)
        return members[:-1] if n == 6 and members else members

    monkeypatch.setattr(verify.families, "colored_members", lossy)
    record = check_bijection(IdentityParams(7, 1), 10)
    assert not record.ok
    assert "n=6" in record.note
    assert "direct generation" in record.note


def test_gordon_pass():
    record = check_gordon(2, 2, 16)
    assert record.ok
    assert record.params == "k=2 r=2"


def test_gordon_detects_missing_member(monkeypatch):
    from colorpartitions import families, verify

    real = families.gordon_members

    def lossy(k, r, n):
        members = real(k, r, n)
        return members[1:] if n == 5 else members

    monkeypatch.setattr(verify.families, "gordon_members", lossy)
    record = check_gordon(2, 1, 10)
    assert not record.ok
    assert "n=5" in record.note


def test_finitized_pass_odd_and_even():
    odd = check_finitized(IdentityParams(5, 2), 7)
    assert odd.ok, odd.note
    assert odd.params == "odd k=2 r=2"
    assert odd.span == "N<=7"
    even = check_finitized(IdentityParams(8, 3), 5)
    assert even.ok, even.note
    assert even.params == "even k=4 r=3"


def test_finitized_size_zero_only():
    record = check_finitized(IdentityParams(7, 3), 0)
    assert record.ok
    assert record.checked >= 1


def test_theorem_grid_small():
    report = verify_identity_grid(moduli=(5, 7), n_max=10)
    assert report.passed
    # two residues for M=5, three for M=7, two scopes each
    assert len(report.records) == 10
    assert {r.scope for r in report.records} == {"product_counts", "bijection"}


def test_theorem_grid_residue_filter():
    report = verify_identity_grid(
        moduli=(5, 8), residues=(3,), n_max=8, scope="product_counts"
    )
    # r=3 is out of range for M=5, in range for M=8
    assert [r.params for r in report.records] == ["M=8 r=3"]


def test_theorem_grid_rejects_unknown_scope():
    with pytest.raises(ValueError):
        verify_identity_grid(scope="everything")


def test_thread_counts_agree():
    sequential = verify_identity_grid(moduli=(6, 7), n_max=10, threads=1)
    threaded = verify_identity_grid(moduli=(6, 7), n_max=10, threads=4)
    assert sequential.records == threaded.records


def test_gordon_grid_default_pairs():
    report = verify_gordon_grid(n_max=12)
    assert report.passed
    assert len(report.records) == 5


def test_finitized_grid_small():
    report = verify_finitized_grid(
        halves=(2,), odd_size_max=6, even_size_max=5, n_max=12
    )
    assert report.passed, report.first_failure
    assert [r.params for r in report.records] == [
        "odd k=2 r=1",
        "odd k=2 r=2",
        "even k=2 r=1",
        "even k=2 r=2",
    ]


def test_verify_all_merges_scopes():
    report = verify_all(
        n_max=8, gordon_n_max=8, odd_size_max=3, even_size_max=3, threads=2
    )
    assert report.passed, report.first_failure
    scopes = {r.scope for r in report.records}
    assert scopes == {"product_counts", "bijection", "gordon", "finitized"}
