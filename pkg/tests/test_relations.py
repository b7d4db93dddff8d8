import pytest

from qzeta.errors import NoPartAtLeastTwo, NotAdmissible
from qzeta.expand import Expander
from qzeta.indices import enumerate_admissible, enumerate_all, rotations
from qzeta.relations import (
    Statement,
    verify_cyclic,
    verify_cyclic_lemma,
    verify_duality,
    verify_ohno,
)
from qzeta.series import QSeries


def test_cyclic_depth_one():
    # the depth-1 instance is the classical duality of (3) and (2,1)
    report = verify_cyclic((2,), 60)
    assert report.passed and report.statement is Statement.CYCLIC_SUM


def test_cyclic_two_parts():
    assert verify_cyclic((2, 1), 60).passed


def test_cyclic_rejects_all_ones():
    with pytest.raises(NoPartAtLeastTwo):
        verify_cyclic((1, 1, 1), 10)


def test_cyclic_exhaustive_weight_le_6():
    for w in range(2, 7):
        for idx in enumerate_all(w):
            if not any(p >= 2 for p in idx):
                continue
            report = verify_cyclic(idx, 40)
            assert report.passed, idx


def test_lemma_instances():
    assert verify_cyclic_lemma((2,), 40).passed
    assert verify_cyclic_lemma((3, 1), 40).passed


def test_lemma_exhaustive_weight_le_6():
    for w in range(2, 7):
        for idx in enumerate_all(w):
            if not any(p >= 2 for p in idx):
                continue
            assert verify_cyclic_lemma(idx, 40).passed, idx


class _Corrupting(Expander):
    """Deliberately wrong expansions: the arrangement identity must survive."""

    def modified(self, parts, n):
        series = super().modified(parts, n)
        noise = QSeries.monomial(sum(parts), len(parts) + 1, n)
        return series + noise

    def tsum(self, parts, n):
        series = super().tsum(parts, n)
        return series + QSeries.monomial(2, min(3, n), n)


def test_lemma_rotation_sum_is_cyclic_residual():
    for idx in [(2, 1), (3, 1, 2), (2, 2), (4, 1, 1)]:
        for ex in (Expander(), _Corrupting()):
            total = QSeries.zero(25)
            for rot in rotations(idx):
                total = total + verify_cyclic_lemma(rot, 25, ex).residual
            cyclic = verify_cyclic(idx, 25, ex).residual
            assert total == cyclic, idx


def test_ohno_self_dual_shift_zero():
    report = verify_ohno((2,), 0, 20)
    assert report.passed


def test_ohno_duality_of_3():
    assert verify_ohno((3,), 0, 60).passed


def test_ohno_shift_one():
    assert verify_ohno((3,), 1, 60).passed


def test_ohno_rejects_non_admissible():
    with pytest.raises(NotAdmissible):
        verify_ohno((1, 2), 1, 10)


def test_ohno_exhaustive_weight_le_6_shift_le_4():
    for w in range(2, 7):
        for idx in enumerate_admissible(w):
            for l in range(5):
                assert verify_ohno(idx, l, 40).passed, (idx, l)


def test_duality_exhaustive_weight_le_7():
    for w in range(2, 8):
        for idx in enumerate_admissible(w):
            assert verify_duality(idx, 40).passed, idx


def test_report_failure_details():
    ex = _Corrupting()
    report = verify_duality((3,), 20, ex)
    assert not report.passed
    order, coeff = report.first_failure()
    assert coeff != 0
    assert "FAIL" in report.describe()
