"""Coefficient matrices, exact ranks, dimension upper bounds from the proved
relation families, nullspace mining with independent re-verification, and
extraction of the induced MZV relations.

Matrix orientation: rows are q-exponents, columns are indices in canonical
(lexicographic) order.  Rank and nullspace run fraction-free over exact
integers; nullspace back-substitution uses Fractions and the vectors are
normalized to coprime integers with a positive leading coefficient.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from qzeta import kernel
from qzeta.errors import MiningVerificationError
from qzeta.expand import DEFAULT_EXPANDER
from qzeta.indices import (
    as_index,
    canonical_sort,
    enumerate_admissible,
    enumerate_all,
    format_index,
    weight,
)
from qzeta.relations import cyclic_sides, ohno_sides
from qzeta.series import QSeries

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - optional speedup
    _mpz = None

# Zagier's conjectured dimension of the weight-k MZV space over Q
# (d_k = d_{k-2} + d_{k-3}); display data only, never computed here.
CONJECTURED_MZV_DIMS = {2: 1, 3: 1, 4: 1, 5: 2, 6: 2, 7: 3, 8: 4, 9: 5, 10: 7}


@dataclass(frozen=True)
class RatMatrix:
    entries: tuple
    row_labels: tuple
    col_labels: tuple

    def __post_init__(self):
        assert len(self.entries) == len(self.row_labels)
        assert all(len(r) == len(self.col_labels) for r in self.entries)

    @property
    def shape(self):
        return (len(self.row_labels), len(self.col_labels))


class RelationStatus(enum.Enum):
    MINED_CANDIDATE = "mined-candidate"
    VERIFIED_TO_ORDER = "verified-to-order"


@dataclass(frozen=True)
class Relation:
    """Integer relation among modified expansions, with its verified q-order."""

    terms: tuple  # ((index, coeff), ...) over nonzero coefficients
    verified_to: int
    status: RelationStatus
    normalization: str = "modified"

    def __post_init__(self):
        coeffs = [c for _, c in self.terms]
        assert coeffs and all(isinstance(c, int) and c != 0 for c in coeffs)
        assert gcd(*coeffs) == 1 if len(coeffs) > 1 else abs(coeffs[0]) == 1
        assert coeffs[0] > 0

    def weights(self):
        return tuple(sorted({weight(idx) for idx, _ in self.terms}))

    def describe(self):
        body = " ".join(
            f"{c:+d}*zb{format_index(idx)}" for idx, c in self.terms
        )
        return f"{body} = 0 (verified to q^{self.verified_to})"


def residual_of(terms, n, expander=None):
    """Sum of coeff * modified expansion through q^n."""
    ex = expander or DEFAULT_EXPANDER
    res = QSeries.zero(n)
    for idx, c in terms:
        res = res + ex.modified(idx, n) * c
    return res


def _clear_denominators(rows):
    out = []
    for row in rows:
        den = 1
        for v in row:
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
        out.append([int(v * den) if isinstance(v, Fraction) else v * den for v in row])
    return out


def _as_working(rows):
    if _mpz is None:
        return [list(r) for r in rows]
    return [[_mpz(v) for v in r] for r in rows]


def rank_exact(m):
    """Exact rank over Q of a RatMatrix or a list of rows."""
    rows = list(m.entries) if isinstance(m, RatMatrix) else list(m)
    if not rows or not rows[0]:
        return 0
    work = _as_working(_clear_denominators(rows))
    return len(kernel.echelon_ff(work))


def nullspace(m):
    """Basis of the exact rational nullspace (column-side), one primitive
    integer vector per free column."""
    rows = list(m.entries) if isinstance(m, RatMatrix) else list(m)
    if not rows:
        return []
    cols = len(rows[0])
    work = _as_working(_clear_denominators(rows))
    piv = kernel.echelon_ff(work)
    rank = len(piv)
    piv_set = set(piv)
    free = [c for c in range(cols) if c not in piv_set]
    basis = []
    for f in free:
        x = [Fraction(0)] * cols
        x[f] = Fraction(1)
        for r in range(rank - 1, -1, -1):
            pc = piv[r]
            s = Fraction(0)
            row = work[r]
            for j in range(pc + 1, cols):
                if row[j] and x[j]:
                    s += Fraction(int(row[j])) * x[j]
            x[pc] = -s / Fraction(int(row[pc]))
        basis.append(_primitive(x))
    return basis


def _primitive(vec):
    den = lcm(*[v.denominator for v in vec]) if vec else 1
    ints = [int(v * den) for v in vec]
    g = gcd(*ints)
    if g:
        ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-u for u in ints]
            break
    return ints


def build_Ak(k, n_extra=0, expander=None):
    """Coefficient matrix A_k: rows are q-exponents k-1 .. k+2^(k-2)-2
    (optionally extended), columns the admissible weight-k indices."""
    if k < 2:
        raise ValueError("need weight k >= 2")
    ex = expander or DEFAULT_EXPANDER
    cols = enumerate_admissible(k)
    n_lo = k - 1
    n_hi = k + 2 ** (k - 2) - 2 + n_extra
    series = [ex.modified(idx, n_hi) for idx in cols]
    entries = tuple(
        tuple(s.coeff(n) for s in series) for n in range(n_lo, n_hi + 1)
    )
    return RatMatrix(entries, tuple(range(n_lo, n_hi + 1)), tuple(cols))


def build_A_le_k(k, expander=None):
    """Cumulative matrix A_<=k: rows 1 .. k+2^(k-2)-2, columns all admissible
    indices of weight 2..k (canonical order across weights)."""
    if k < 2:
        raise ValueError("need weight k >= 2")
    ex = expander or DEFAULT_EXPANDER
    cols = canonical_sort(
        [idx for w in range(2, k + 1) for idx in enumerate_admissible(w)]
    )
    n_hi = k + 2 ** (k - 2) - 2
    series = [ex.modified(idx, n_hi) for idx in cols]
    entries = tuple(
        tuple(s.coeff(n) for s in series) for n in range(1, n_hi + 1)
    )
    return RatMatrix(entries, tuple(range(1, n_hi + 1)), tuple(cols))


def _relation_vectors_for_weight(k):
    """Integer vectors over the admissible weight-k columns spanned by the
    cyclic-sum and Ohno families."""
    cols = enumerate_admissible(k)
    col_pos = {idx: i for i, idx in enumerate(cols)}
    vectors = []

    def vec_from(plus, minus):
        v = [0] * len(cols)
        for idx in plus:
            v[col_pos[idx]] += 1
        for idx in minus:
            v[col_pos[idx]] -= 1
        return v

    # cyclic sum on every weight-(k-1) source with some part >= 2
    for src in enumerate_all(k - 1):
        if not any(p >= 2 for p in src):
            continue
        lhs, rhs = cyclic_sides(src)
        vectors.append(vec_from(lhs, rhs))
    # Ohno on every admissible source of weight w with shift l = k - w
    for w in range(2, k + 1):
        for src in enumerate_admissible(w):
            lhs, rhs = ohno_sides(src, k - w)
            v = vec_from(lhs, rhs)
            if any(v):
                vectors.append(v)
    return cols, vectors


def upper_bound_from_relations(k):
    """2^(k-2) minus the rank of the proved relation span at weight k."""
    if k < 2:
        raise ValueError("need weight k >= 2")
    cols, vectors = _relation_vectors_for_weight(k)
    if not vectors:
        return len(cols)
    return len(cols) - rank_exact(vectors)


def _mine(cols, row_range, n_verify, expander):
    ex = expander or DEFAULT_EXPANDER
    n_hi = row_range[-1]
    series = [ex.modified(idx, max(n_hi, n_verify)) for idx in cols]
    entries = [[s.coeff(n) for s in series] for n in row_range]
    basis = nullspace(entries)
    relations = []
    for vec in basis:
        terms = tuple(
            (idx, c) for idx, c in zip(cols, vec) if c != 0
        )
        res = residual_of(terms, n_verify, ex)
        if not res.is_zero():
            bad = res.first_nonzero()
            raise MiningVerificationError(
                f"candidate {terms} fails re-verification at q^{bad[0]}"
            )
        relations.append(
            Relation(terms=terms, verified_to=n_verify, status=RelationStatus.VERIFIED_TO_ORDER)
        )
    return relations


def mine_relations(k, n_rows=None, n_verify=None, expander=None):
    """Exact nullspace of the weight-k coefficient matrix, re-verified.

    Defaults: n_rows = #columns + max(20, #columns) (tall matrix margin);
    n_verify = twice the top mining exponent.
    """
    cols = enumerate_admissible(k)
    if n_rows is None:
        n_rows = len(cols) + max(20, len(cols))
        if n_verify is not None:
            n_rows = min(n_rows, max(1, n_verify - (k - 2)))
    top = k - 2 + n_rows
    if n_verify is None:
        n_verify = 2 * top
    if n_verify < top:
        raise ValueError("n_verify must cover the mining rows")
    return _mine(cols, range(k - 1, top + 1), n_verify, expander)


def mine_mixed_weight(k, n_rows=None, n_verify=None, expander=None):
    """Nullspace mining over all admissible indices of weight 2..k."""
    cols = canonical_sort(
        [idx for w in range(2, k + 1) for idx in enumerate_admissible(w)]
    )
    if n_rows is None:
        n_rows = len(cols) + max(20, len(cols))
        if n_verify is not None:
            n_rows = min(n_rows, n_verify)
    if n_verify is None:
        n_verify = 2 * n_rows
    if n_verify < n_rows:
        raise ValueError("n_verify must cover the mining rows")
    return _mine(cols, range(1, n_rows + 1), n_verify, expander)


def relation_vector(terms, cols):
    pos = {as_index(idx): i for i, idx in enumerate(cols)}
    v = [0] * len(cols)
    for idx, c in terms:
        v[pos[as_index(idx)]] = c
    return v


def in_span(relations, terms):
    """Whether the integer relation `terms` lies in the rational span of the
    mined relations (rank comparison of the stacked vectors)."""
    cols = canonical_sort(
        {idx for r in relations for idx, _ in r.terms} | {as_index(i) for i, _ in terms}
    )
    rows = [relation_vector(r.terms, cols) for r in relations]
    base = rank_exact(rows)
    return rank_exact(rows + [relation_vector(terms, cols)]) == base


def mzv_limit(rel):
    """The induced MZV relation: the maximal-weight terms of a verified
    relation (lower-weight terms vanish in the limit after scaling)."""
    top = max(weight(idx) for idx, _ in rel.terms)
    return [(idx, c) for idx, c in rel.terms if weight(idx) == top]
