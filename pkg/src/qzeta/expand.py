"""Exact q-expansion of qMZVs, their modified form, and the auxiliary sums
behind the cyclic-sum identity.

Everything is computed in the modified (integral) normalization: each
q-bracket [m]^j contributes (1-q^m)^{-j} after pulling out the right power of
(1-q), so the hot loops run on integer coefficient lists.  Raw values are
recovered by multiplying back (1-q)^weight.

The outer summation variable is cut at n_1 <= N.  That is exact: with the
first part >= 2 every chain's summand is divisible by q^{n_1}; for the
auxiliary sums the same holds because some part >= 2 forces q-order
>= (n_1 - m) + n_i >= n_1 (n_i > m for every i).  Truncation-stability tests
guard this argument.
"""

from itertools import combinations
from math import comb
from threading import Lock

from qzeta import kernel
from qzeta.errors import DivergentSum
from qzeta.indices import as_index, format_index, min_order, require_admissible, weight
from qzeta.series import QSeries


def _mul_geom_pow(f, n, kappa, top):
    """f * (1-q^n)^(-kappa), dense lists truncated to exponent top."""
    out = [0] * (top + 1)
    base = 0
    m = 0
    while base <= top:
        kernel.acc_scaled_shift(out, f, comb(m + kappa - 1, kappa - 1), base)
        m += 1
        base += n
    return out


def _acc_g(out, f, n, kappa):
    """out += q^{n(kappa-1)}/(1-q^n)^kappa * f."""
    top = len(out) - 1
    base = n * (kappa - 1)
    m = 0
    while base <= top:
        kernel.acc_scaled_shift(out, f, comb(m + kappa - 1, kappa - 1), base)
        m += 1
        base += n


def _modified_coeffs(parts, n):
    """Coefficients of the modified expansion through q^n, by chained prefix sums."""
    r = len(parts)
    if r == 1:
        out = [0] * (n + 1)
        one = [1]
        for v in range(1, n + 1):
            _acc_g(out, one, v, parts[0])
        return out
    # F[v] = sum over chains v > n_j > ... > n_r >= 1 of the inner factors
    prev = None
    for j in range(r, 1, -1):
        kj = parts[j - 1]
        cur = [None] * (n + 1)
        prefix = [0] * (n + 1)
        for v in range(1, n + 1):
            cur[v] = list(prefix)
            _acc_g(prefix, prev[v] if prev is not None else [1], v, kj)
        prev = cur
    out = [0] * (n + 1)
    k1 = parts[0]
    for v in range(1, n + 1):
        _acc_g(out, prev[v], v, k1)
    return out


def _bruteforce_coeffs(parts, n):
    """Literal enumeration of all chains n_1 > ... > n_r with n_1 <= n."""
    r = len(parts)
    out = [0] * (n + 1)
    for chain in combinations(range(1, n + 1), r):
        ns = chain[::-1]
        base = sum(ns[i] * (parts[i] - 1) for i in range(r))
        if base > n:
            continue
        f = [1]
        for i in range(r):
            f = _mul_geom_pow(f, ns[i], parts[i], n - base)
        kernel.acc_scaled_shift(out, f, 1, base)
    return out


def _middle_table(mid_parts, low, n):
    """M[v] = sum over chains v > n_2 > ... > n_r > low of their factors.

    mid_parts is empty for depth 1; then M[v] = 1 whenever v > low.
    """
    one = [1]
    if not mid_parts:
        return [one if v > low else None for v in range(n + 1)]
    prev = None
    for j in range(len(mid_parts), 0, -1):
        kj = mid_parts[j - 1]
        cur = [None] * (n + 1)
        prefix = [0] * (n + 1)
        for v in range(low + 1, n + 1):
            cur[v] = list(prefix)
            _acc_g(prefix, prev[v] if prev is not None else one, v, kj)
        prev = cur
    return prev


def _tsum_coeffs(parts, n):
    """Modified expansion of the difference-coupled auxiliary sum (inner
    variable >= 0, coupling factor q^d/(1-q^d) with d = n_1 - inner)."""
    r = len(parts)
    out = [0] * (n + 1)
    k1 = parts[0]
    mid = parts[1:]
    for low in range(0, n):
        mtab = _middle_table(mid, low, n)
        for v in range(low + r, n + 1):
            f = mtab[v]
            if f is None:
                continue
            tmp = [0] * (n + 1)
            _acc_g(tmp, f, v, k1)
            d = v - low
            s = d
            while s <= n:
                kernel.acc_scaled_shift(out, tmp, 1, s)
                s += d
    return out


def _ssum_coeffs(parts, last, n):
    """Modified expansion of the anchored auxiliary sum (inner variable >= 1,
    explicit q^{n_1} factor, trailing exponent `last` on the inner variable)."""
    r = len(parts)
    out = [0] * (n + 1)
    k1 = parts[0]
    mid = parts[1:]
    for low in range(1, n):
        mtab = _middle_table(mid, low, n)
        for v in range(low + r, n + 1):
            f = mtab[v]
            if f is None:
                continue
            tmp = [0] * (n + 1)
            _acc_g(tmp, f, v, k1)
            d = v - low
            if last == 0:
                # q^v * q^{-low} / (1-q^d) = q^d + q^{2d} + ...
                s = d
                while s <= n:
                    kernel.acc_scaled_shift(out, tmp, 1, s)
                    s += d
            else:
                tmp2 = [0] * (n + 1)
                _acc_g(tmp2, tmp, low, last)
                s = v
                while s <= n:
                    kernel.acc_scaled_shift(out, tmp2, 1, s)
                    s += d
    return out


class Expander:
    """Caching expansion engine.

    In-memory memo keyed by (kind, index); a request at a lower truncation is
    served by slicing a cached higher-truncation result.  An optional disk
    cache (see qzeta.cache) persists the modified/raw kinds.  Reads are
    lock-free; insertions are serialized.
    """

    def __init__(self, disk=None):
        self._memo = {}
        self._lock = Lock()
        self.disk = disk

    def _served(self, key, n):
        hit = self._memo.get(key)
        if hit is not None:
            stored_n, coeffs = hit
            if stored_n >= n:
                return QSeries(coeffs[: n + 1], n)
        return None

    def _store(self, key, n, coeffs):
        with self._lock:
            hit = self._memo.get(key)
            if hit is None or hit[0] < n:
                self._memo[key] = (n, coeffs)

    def modified(self, parts, n):
        """Modified expansion of an admissible index through q^n."""
        parts = as_index(parts)
        require_admissible(parts)
        if n < 0:
            raise ValueError("truncation order must be >= 0")
        key = ("modified", parts)
        hit = self._served(key, n)
        if hit is not None:
            return hit
        if self.disk is not None:
            coeffs = self.disk.load(parts, "modified", n)
            if coeffs is not None:
                self._store(key, n, coeffs)
                return QSeries(coeffs[: n + 1], n)
        coeffs = _modified_coeffs(parts, n)
        low = min_order(parts)
        assert all(c == 0 for c in coeffs[: min(low, n + 1)]) and all(
            isinstance(c, int) and c >= 0 for c in coeffs
        ), f"modified expansion of {format_index(parts)} violates integrality"
        self._store(key, n, coeffs)
        if self.disk is not None:
            self.disk.store(parts, "modified", n, coeffs)
        return QSeries(coeffs, n)

    def raw(self, parts, n):
        """Plain (unmodified) expansion: (1-q)^weight times the modified one."""
        parts = as_index(parts)
        require_admissible(parts)
        key = ("raw", parts)
        hit = self._served(key, n)
        if hit is not None:
            return hit
        if self.disk is not None:
            coeffs = self.disk.load(parts, "raw", n)
            if coeffs is not None:
                self._store(key, n, coeffs)
                return QSeries(coeffs[: n + 1], n)
        series = self.modified(parts, n) * QSeries.one_minus_q_pow(weight(parts), n)
        self._store(key, n, series.coeffs)
        if self.disk is not None:
            self.disk.store(parts, "raw", n, series.coeffs)
        return series

    def bruteforce(self, parts, n):
        """Oracle twin of modified(): direct chain enumeration, no DP."""
        parts = as_index(parts)
        require_admissible(parts)
        key = ("bruteforce", parts)
        hit = self._served(key, n)
        if hit is not None:
            return hit
        coeffs = _bruteforce_coeffs(parts, n)
        self._store(key, n, coeffs)
        return QSeries(coeffs, n)

    def tsum(self, parts, n):
        """Modified expansion of the difference-coupled auxiliary sum.

        Requires every part >= 1 and some part >= 2; with all parts equal to 1
        the coefficient of q^d would be an infinite count.
        """
        parts = as_index(parts)
        if not any(p >= 2 for p in parts):
            raise DivergentSum(
                f"auxiliary sum diverges for {format_index(parts)}: needs some part >= 2"
            )
        key = ("tsum", parts)
        hit = self._served(key, n)
        if hit is not None:
            return hit
        coeffs = _tsum_coeffs(parts, n)
        self._store(key, n, coeffs)
        return QSeries(coeffs, n)

    def ssum(self, parts, last, n):
        """Modified expansion of the anchored auxiliary sum with trailing
        exponent `last` >= 0 on the extra inner variable.

        For last = 0 some part of `parts` must be >= 2, matching convergence.
        """
        parts = as_index(parts)
        if last < 0:
            raise ValueError("trailing exponent must be >= 0")
        if last == 0 and not any(p >= 2 for p in parts):
            raise DivergentSum(
                f"auxiliary sum diverges for {format_index(parts)} with trailing 0"
            )
        key = ("ssum", parts, last)
        hit = self._served(key, n)
        if hit is not None:
            return hit
        coeffs = _ssum_coeffs(parts, last, n)
        self._store(key, n, coeffs)
        return QSeries(coeffs, n)


DEFAULT_EXPANDER = Expander()


def expand_modified(parts, n, expander=None):
    return (expander or DEFAULT_EXPANDER).modified(parts, n)


def expand_raw(parts, n, expander=None):
    return (expander or DEFAULT_EXPANDER).raw(parts, n)


def expand_bruteforce(parts, n, expander=None):
    return (expander or DEFAULT_EXPANDER).bruteforce(parts, n)


def expand_tsum(parts, n, expander=None):
    return (expander or DEFAULT_EXPANDER).tsum(parts, n)


def expand_ssum(parts, last, n, expander=None):
    return (expander or DEFAULT_EXPANDER).ssum(parts, last, n)
