"""Floating-point evaluation of qMZVs and MZVs with rigorous tail bounds,
plus numeric spot-checks of the analytic closed forms (basic hypergeometric
solution and its product form).

Values are always plain partial sums; tail_bound is an upper bound on what
was dropped, never an extrapolation.  The working precision is 40 decimal
digits.  One exception is documented below: very long outer sums (only
needed when the leading exponent is 2 and eps is tiny) run their far tail in
chunked float64, and the float rounding allowance is added to tail_bound.
"""

from dataclasses import dataclass
from math import comb

import mpmath as mp
import numpy as np

from qzeta.errors import BadQ, DivergenceDetected, NotAdmissible
from qzeta.expand import DEFAULT_EXPANDER
from qzeta.indices import as_index, enumerate_admissible, format_index, weight
from qzeta.series import QSeries

WORKING_DPS = 40
_MPF_OUTER_LIMIT = 30_000  # beyond this the outer sum switches to float64


@dataclass(frozen=True)
class NumericResult:
    value: object  # mpf
    tail_bound: object  # mpf
    terms_used: int

    def agrees_with(self, other_value, eps):
        return abs(self.value - other_value) <= eps + self.tail_bound


def _require_q(q):
    if not (0 < q < 1):
        raise BadQ(f"need 0 < q < 1, got {q}")


def eval_qmzv(parts, q, eps):
    """Partial sum of the defining nested q-series with a dominated tail.

    Envelope: every chain factor q^{m(k-1)}/[m]^k is <= q^{m(k-1)} because
    1/[m] <= 1, so chains with top entry n contribute at most
    C(n-1, r-1) * q^{n(k_1-1)} in total.
    """
    parts = as_index(parts)
    if parts[0] < 2:
        raise NotAdmissible(f"{format_index(parts)} is not admissible")
    _require_q(q)
    if eps <= 0:
        raise ValueError("eps must be positive")
    r = len(parts)
    k1 = parts[0]
    with mp.workdps(WORKING_DPS):
        qm = mp.mpf(q)

        def envelope(n):
            return mp.mpf(comb(n - 1, r - 1)) * qm ** (n * (k1 - 1))

        def tail(m):
            ratio = (mp.mpf(m + 1) / (m + 2 - r)) * qm ** (k1 - 1)
            if ratio >= 1:
                return None
            return envelope(m + 1) / (1 - ratio)

        m_top = max(2 * r, 8)
        while tail(m_top) is None or tail(m_top) > eps:
            m_top *= 2
            if m_top > 10**8:
                raise DivergenceDetected("tail envelope failed to contract")

        # streaming DP over the outer variable; S[j] = inner prefix sums
        def f(n, k):
            br = (1 - qm**n) / (1 - qm)
            return qm ** (n * (k - 1)) / br**k

        s = [mp.mpf(0)] * (r + 2)
        s[r + 1] = mp.mpf(1)
        value = mp.mpf(0)
        for n in range(1, m_top + 1):
            term = f(n, k1) * (s[2] if r > 1 else 1)
            assert term >= 0
            value += term
            if r > 1:
                for j in range(2, r + 1):
                    s[j] = s[j] + f(n, parts[j - 1]) * (s[j + 1] if j < r else 1)
        return NumericResult(value, tail(m_top), m_top)


def _integral_tail(k, p, m):
    """Exact recursion for int_M^inf x^-k (1+ln x)^p dx, k >= 2."""
    mm = mp.mpf(m)
    head = mm ** (1 - k) * (1 + mp.log(mm)) ** p / (k - 1)
    if p == 0:
        return head
    return head + mp.mpf(p) / (k - 1) * _integral_tail(k, p - 1, m)


def _float64_guard(m, r):
    """Rounding allowance for the chunked float64 far tail.

    Sequential cumulative sums of nonnegative terms have error at most
    (n u) * sum; weighting by n^{-k_1} <= n^{-2} turns that into
    u * r * (1+ln M)^r, and the final pairwise reduction adds
    u * (log2 M + 2) * value with value <= zeta(2) (1+ln M)^{r-1}.
    Factor 8 is headroom.
    """
    u = mp.mpf(2) ** -52
    lm = 1 + mp.log(m)
    return 8 * u * (r * lm**r + (mp.log(m, 2) + 2) * 2 * lm ** (r - 1))


def _mzv_head_mpf(parts, m_top):
    r = len(parts)
    s = [mp.mpf(0)] * (r + 2)
    s[r + 1] = mp.mpf(1)
    value = mp.mpf(0)
    for n in range(1, m_top + 1):
        nn = mp.mpf(n)
        value += nn ** (-parts[0]) * (s[2] if r > 1 else 1)
        if r > 1:
            for j in range(2, r + 1):
                s[j] = s[j] + nn ** (-parts[j - 1]) * (s[j + 1] if j < r else 1)
    return value, s


def _mzv_tail_numpy(parts, start, m_top, carries):
    """Outer-variable range [start, m_top] in chunked float64.

    carries[j] holds the inner prefix sums S_j(start-1).  Chunks are kept
    cache-sized; the final reduction is numpy's pairwise sum, which the
    rounding guard assumes.
    """
    r = len(parts)
    carry = [float(carries[j]) for j in range(r + 2)]
    total = 0.0
    chunk = 1 << 19
    a = start
    while a <= m_top:
        b = min(a + chunk - 1, m_top)
        ns = np.arange(a, b + 1, dtype=np.float64)
        inv = 1.0 / ns
        powcache = {1: inv}

        def ipow(k):
            p = powcache.get(k)
            if p is None:
                h = ipow(k // 2)
                p = h * h if k % 2 == 0 else h * h * inv
                powcache[k] = p
            return p

        def shifted(arr, first):
            out = np.empty_like(arr)
            out[0] = first
            out[1:] = arr[:-1]
            return out

        levels = {}
        for j in range(r, 1, -1):
            pk = ipow(parts[j - 1])
            if j == r:
                contrib = pk  # innermost factor is identically 1
            else:
                contrib = pk * shifted(levels[j + 1], carry[j + 1])
            lev = np.cumsum(contrib)
            lev += carry[j]
            levels[j] = lev
        pk1 = ipow(parts[0])
        if r > 1:
            total += float(np.sum(pk1 * shifted(levels[2], carry[2])))
        else:
            total += float(np.sum(pk1))
        for j in range(2, r + 1):
            carry[j] = float(levels[j][-1])
        a = b + 1
    return mp.mpf(total)


def eval_mzv(parts, eps):
    """Nested partial sum for the MZV with an integral-comparison tail.

    Inner chains below n are bounded factorwise: an inner exponent p >= 2
    contributes at most zeta(p), an inner 1 contributes H(n) <= 1 + ln n.
    The outer tail is then at most
    prod(zeta) * int_M^inf x^-k1 (1+ln x)^#ones dx.
    """
    parts = as_index(parts)
    if parts[0] < 2:
        raise NotAdmissible(f"{format_index(parts)} is not admissible")
    if eps <= 0:
        raise ValueError("eps must be positive")
    r = len(parts)
    k1 = parts[0]
    with mp.workdps(WORKING_DPS):
        ones = sum(1 for p in parts[1:] if p == 1)
        const = mp.mpf(1)
        for p in parts[1:]:
            if p >= 2:
                const *= mp.zeta(p) * (1 + mp.mpf(10) ** -25)

        def bound_at(m):
            b = const * _integral_tail(k1, ones, m)
            if m > _MPF_OUTER_LIMIT:
                b += _float64_guard(m, r)
            return b

        m_top = 64
        while bound_at(m_top) > eps:
            m_top *= 2
            if m_top > 2**33:
                raise DivergenceDetected("integral tail will not reach eps")
        # shave the doubling overshoot; the far tail is the dominant cost
        lo, hi = m_top // 2, m_top
        while hi - lo > max(64, hi // 16):
            mid = (lo + hi) // 2
            if bound_at(mid) <= eps:
                hi = mid
            else:
                lo = mid
        m_top = hi
        head_top = min(m_top, _MPF_OUTER_LIMIT)
        value, carries = _mzv_head_mpf(parts, head_top)
        tail_bound = const * _integral_tail(k1, ones, m_top)
        if m_top > head_top:
            value += _mzv_tail_numpy(parts, head_top + 1, m_top, carries)
            tail_bound += _float64_guard(m_top, r)
        return NumericResult(value, tail_bound, m_top)


def check_mzv_relation(rel, eps):
    """|sum of coeff * MZV| <= eps plus the accumulated tail bounds."""
    with mp.workdps(WORKING_DPS):
        total_abs = sum(abs(c) for _, c in rel)
        eps_each = mp.mpf(eps) / (2 * max(total_abs, 1))
        total = mp.mpf(0)
        slack = mp.mpf(0)
        for idx, c in rel:
            res = eval_mzv(idx, eps_each)
            total += c * res.value
            slack += abs(c) * res.tail_bound
        return abs(total) <= eps + slack


def eval_from_series(parts, q, n, expander=None):
    """Second route to the qMZV: evaluate the exact expansion at q.

    Coefficient envelope: the number of (chain, multiplicity) patterns at
    exponent m is below (m+1)^(2r) and each binomial product is below
    (m+1)^w, so a_m <= (m+1)^(2r+w) and the dropped tail is geometric-ish.
    """
    parts = as_index(parts)
    _require_q(q)
    ex = expander or DEFAULT_EXPANDER
    series = ex.modified(parts, n)
    w = weight(parts)
    p = 2 * len(parts) + w
    with mp.workdps(WORKING_DPS):
        qm = mp.mpf(q)
        value = mp.mpf(0)
        for m in range(n, -1, -1):
            value = value * qm + series.coeff(m)
        value *= (1 - qm) ** w

        def env(m):
            return mp.mpf(m + 1) ** p * qm**m

        ratio = (mp.mpf(n + 2) / (n + 1)) ** p * qm
        if ratio >= 1:
            raise DivergenceDetected("series-evaluation envelope needs a larger n")
        tail = env(n + 1) / (1 - ratio) * (1 - qm) ** w
        return NumericResult(value, tail, n)


# ---------------------------------------------------------------------------
# Basic hypergeometric closed form
# ---------------------------------------------------------------------------


def _abc_params(qm, um, vm, wm):
    disc = (um + vm) ** 2 - 4 * wm
    root = mp.sqrt(disc) if disc >= 0 else mp.sqrt(mp.mpc(disc))
    alpha0 = (um + vm + root) / 2
    beta0 = (um + vm - root) / 2
    a = 1 / (1 - (1 - qm) * (um - alpha0))
    b = 1 / (1 - (1 - qm) * (um - beta0))
    c = qm / (1 - (1 - qm) * um)
    return a, b, c


def _phi_series(a, b, c, t, qm, n_cut):
    """Partial sum of the basic hypergeometric series and a geometric tail."""
    term = mp.mpf(1)
    total = mp.mpc(0) if any(isinstance(x, mp.mpc) for x in (a, b, t)) else mp.mpf(0)
    total += term
    for n in range(1, n_cut + 1):
        term = term * t * (1 - a * qm ** (n - 1)) * (1 - b * qm ** (n - 1)) / (
            (1 - qm**n) * (1 - c * qm ** (n - 1))
        )
        total += term
    gq = qm**n_cut
    denom = (1 - qm ** (n_cut + 1)) * (1 - abs(c) * gq)
    if denom <= 0:
        raise DivergenceDetected("hypergeometric tail envelope failed")
    ratio = abs(t) * (1 + abs(a) * gq) * (1 + abs(b) * gq) / denom
    if ratio >= 1:
        raise DivergenceDetected("hypergeometric series ratio >= 1")
    tail = abs(term) * ratio / (1 - ratio)
    return total, tail


def check_heine(q, u, v, w, n_cut, eps):
    """Series vs product form of phi(a, b, c; c/(ab)), both truncated."""
    with mp.workdps(WORKING_DPS):
        qm = mp.mpf(q)
        _require_q(q)
        a, b, c = _abc_params(qm, mp.mpf(u), mp.mpf(v), mp.mpf(w))
        t = c / (a * b)
        series, series_tail = _phi_series(a, b, c, t, qm, n_cut)

        prod = mp.mpc(1) if isinstance(a, mp.mpc) else mp.mpf(1)
        params = (c / a, c / b, c, c / (a * b))
        for n in range(n_cut + 1):
            gq = qm**n
            prod *= (1 - params[0] * gq) * (1 - params[1] * gq)
            prod /= (1 - params[2] * gq) * (1 - params[3] * gq)
        # product tail: |log factor| <= |p| q^n / (1 - |p| q^n)
        pmax = max(abs(p) for p in params)
        gq = qm ** (n_cut + 1)
        if pmax * gq >= 1:
            raise DivergenceDetected("product tail envelope failed")
        log_tail = sum(abs(p) for p in params) * gq / ((1 - qm) * (1 - pmax * gq))
        prod_tail = abs(prod) * (mp.e**log_tail - 1)
        return abs(series - prod) <= eps + series_tail + prod_tail


def _polylog_numeric(parts, t, eps, qm):
    """Nested sum t^{n_1} / ([n_1]^{k_1} ... ), with a dominated tail."""
    r = len(parts)

    def envelope(n):
        return mp.mpf(comb(n - 1, r - 1)) * abs(t) ** n

    def tail(m):
        ratio = (mp.mpf(m + 1) / (m + 2 - r)) * abs(t)
        if ratio >= 1:
            return None
        return envelope(m + 1) / (1 - ratio)

    if t == 0:
        return mp.mpf(0), mp.mpf(0)
    m_top = max(2 * r, 8)
    while tail(m_top) is None or tail(m_top) > eps:
        m_top *= 2
        if m_top > 10**7:
            raise DivergenceDetected("polylog tail failed to contract")

    def f(n, k):
        br = (1 - qm**n) / (1 - qm)
        return br ** (-k)

    s = [mp.mpf(0)] * (r + 2)
    s[r + 1] = mp.mpf(1)
    value = mp.mpf(0)
    for n in range(1, m_top + 1):
        value += (t**n) * f(n, parts[0]) * (s[2] if r > 1 else 1)
        if r > 1:
            for j in range(2, r + 1):
                s[j] = s[j] + f(n, parts[j - 1]) * (s[j + 1] if j < r else 1)
    return value, tail(m_top)


def check_solution_formula(q, u, v, w, t, eps, weight_cutoff=14):
    """Polylog-truncation route to the generating function vs the closed form
    (1 - phi(a, b, c; c t/(q a b))) / (uv - w)."""
    with mp.workdps(WORKING_DPS):
        qm = mp.mpf(q)
        _require_q(q)
        um, vm, wm, tm = mp.mpf(u), mp.mpf(v), mp.mpf(w), mp.mpf(t)
        if um * vm == wm:
            raise ValueError("need uv != w")
        mhat = max(abs(um), abs(vm), mp.sqrt(abs(wm)))
        rho = abs(tm) / (1 - abs(tm))
        if 2 * mhat >= 1 or rho >= 1:
            raise DivergenceDetected("weight-cutoff envelope needs smaller parameters")

        count = sum(2 ** (k - 2) for k in range(2, weight_cutoff + 1))
        eps_each = mp.mpf(eps) / (8 * count)
        skip_budget = mp.mpf(eps) / 8
        total = mp.mpf(0)
        slack = mp.mpf(0)
        skipped = mp.mpf(0)
        for k in range(2, weight_cutoff + 1):
            for idx in enumerate_admissible(k):
                r = len(idx)
                s = sum(1 for p in idx if p >= 2)
                mono = um ** (k - r - s) * vm ** (r - s) * wm ** (s - 1)
                if abs(mono) * rho**r <= skip_budget / count:
                    skipped += abs(mono) * rho**r
                    continue
                val, tl = _polylog_numeric(idx, tm, eps_each, qm)
                total += mono * val
                slack += abs(mono) * tl
        # dropped weights: each index bounded by mhat^(k-2) * rho
        cutoff_tail = rho * (2 * mhat) ** (weight_cutoff - 1) / (1 - 2 * mhat)

        a, b, c = _abc_params(qm, um, vm, wm)
        phi_arg = c * tm / (qm * a * b)
        phi, phi_tail = _phi_series(a, b, c, phi_arg, qm, 400)
        closed = (1 - phi) / (um * vm - wm)
        closed_tail = abs(phi_tail / (um * vm - wm))
        budget = eps + slack + skipped + cutoff_tail + closed_tail
        return abs(total - closed) <= budget
