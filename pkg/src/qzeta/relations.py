"""Order-by-order verification of the cyclic-sum and Ohno-type relations.

Each verifier reduces its statement to the vanishing of a finite linear
combination of expansions through q^N.  All terms inside one statement share
a single weight, so the combination is formed in the modified normalization
and the reported residual is converted back to raw normalization by one
common (1-q)-power.
"""

import enum
from dataclasses import dataclass

from qzeta.errors import NoPartAtLeastTwo
from qzeta.expand import DEFAULT_EXPANDER
from qzeta.indices import as_index, compositions, dual, require_admissible, rotations, weight
from qzeta.series import QSeries


class Statement(enum.Enum):
    CYCLIC_SUM = "cyclic-sum"
    CYCLIC_LEMMA = "cyclic-lemma"
    OHNO = "ohno"
    DUALITY = "duality"


@dataclass(frozen=True)
class VerificationReport:
    statement: Statement
    index: tuple
    shift: int | None
    trunc: int
    residual: QSeries
    passed: bool

    def first_failure(self):
        """(q-order, coefficient) of the first nonzero residual term, or None."""
        return self.residual.first_nonzero()

    def describe(self):
        head = f"{self.statement.value} index={self.index} "
        if self.shift is not None:
            head += f"l={self.shift} "
        head += f"order={self.trunc}: "
        if self.passed:
            return head + "residual 0, pass"
        n, c = self.first_failure()
        return head + f"FAIL, first nonzero residual {c} at q^{n}"


def _require_some_part_ge2(k):
    if not any(p >= 2 for p in k):
        raise NoPartAtLeastTwo(f"index {k} has no part >= 2")


def _report(statement, k, shift, n, res_mod, raw_weight):
    residual = res_mod * QSeries.one_minus_q_pow(raw_weight, n)
    return VerificationReport(
        statement=statement,
        index=k,
        shift=shift,
        trunc=n,
        residual=residual,
        passed=residual.is_zero(),
    )


def cyclic_sides(k):
    """Index lists (lhs, rhs) of the cyclic-sum identity for k.

    lhs: (k_i + 1, rest of the i-th rotation); rhs: for each rotation and each
    0 <= j <= k_i - 2, (k_i - j, rest, j + 1).  Every listed index is
    admissible by construction.
    """
    lhs = []
    rhs = []
    for rot in rotations(k):
        head, rest = rot[0], rot[1:]
        lhs.append((head + 1,) + rest)
        for j in range(head - 1):
            rhs.append((head - j,) + rest + (j + 1,))
    return lhs, rhs


def verify_cyclic(k, n, expander=None):
    """Cyclic sum formula for any index with some part >= 2, through q^n."""
    k = as_index(k)
    _require_some_part_ge2(k)
    ex = expander or DEFAULT_EXPANDER
    lhs, rhs = cyclic_sides(k)
    res = QSeries.zero(n)
    for idx in lhs:
        res = res + ex.modified(idx, n)
    for idx in rhs:
        res = res - ex.modified(idx, n)
    return _report(Statement.CYCLIC_SUM, k, None, n, res, weight(k) + 1)


def verify_cyclic_lemma(k, n, expander=None):
    """One-rotation lemma behind the cyclic sum formula, through q^n.

    Residual is oriented so that summing it over all rotations of k gives
    verify_cyclic's residual coefficient-for-coefficient.
    """
    k = as_index(k)
    _require_some_part_ge2(k)
    ex = expander or DEFAULT_EXPANDER
    head, rest = k[0], k[1:]
    rot = rest + (head,)
    res = ex.tsum(rot, n) - ex.tsum(k, n) + ex.modified((head + 1,) + rest, n)
    for j in range(head - 1):
        res = res - ex.modified((head - j,) + rest + (j + 1,), n)
    return _report(Statement.CYCLIC_LEMMA, k, None, n, res, weight(k) + 1)


def ohno_sides(k, l):
    """Index lists (lhs, rhs) of the Ohno relation for k at shift l."""
    kd = dual(k)
    lhs = [tuple(a + c for a, c in zip(k, comp)) for comp in compositions(l, len(k))]
    rhs = [tuple(a + c for a, c in zip(kd, comp)) for comp in compositions(l, len(kd))]
    return lhs, rhs


def verify_ohno(k, l, n, expander=None):
    """Ohno relation (composition shifts against the dual index), through q^n."""
    k = as_index(k)
    require_admissible(k)
    if l < 0:
        raise ValueError("shift l must be >= 0")
    ex = expander or DEFAULT_EXPANDER
    lhs, rhs = ohno_sides(k, l)
    res = QSeries.zero(n)
    for idx in lhs:
        res = res + ex.modified(idx, n)
    for idx in rhs:
        res = res - ex.modified(idx, n)
    return _report(Statement.OHNO, k, l, n, res, weight(k) + l)


def verify_duality(k, n, expander=None):
    """Duality (the shift-0 Ohno relation), through q^n."""
    k = as_index(k)
    require_admissible(k)
    ex = expander or DEFAULT_EXPANDER
    res = ex.modified(k, n) - ex.modified(dual(k), n)
    return _report(Statement.DUALITY, k, 0, n, res, weight(k))
