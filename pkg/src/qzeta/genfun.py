"""Generating-function identities: q-multiple polylogarithms, the q-difference
equation they satisfy, and the three-variable closed form for the
weight/depth/height generating function of qMZVs.

Grading convention used throughout: the three formal variables carry weighted
degrees (1, 1, 2).  The monomial attached to an index of weight k, depth r,
height s has exponents (k-r-s, r-s, s-1) and weighted degree k-2, so
truncating at a fixed weighted bound keeps every operation in the identities
closed.  Truncation lemma for the exponential side: with e1 = x+y+(q-1)(z-xy)
and e2 = z, the power sums p_j = alpha^j + beta^j (alpha+beta = e1,
alpha*beta = e2) satisfy min-wdeg(p_j) >= j by induction on the Newton
recurrence p_j = e1*p_{j-1} - e2*p_{j-2}, since every monomial of e1 has
wdeg >= 1 and e2 has wdeg 2.  Hence terms with m+n > K never touch retained
monomials and both summations may stop at K.
"""

from fractions import Fraction
from math import factorial

from qzeta import kernel
from qzeta.expand import DEFAULT_EXPANDER, _mul_geom_pow
from qzeta.indices import as_index, depth, enumerate_admissible, height, weight
from qzeta.series import QSeries

_WDEG = (1, 1, 2)


def _wdeg(key):
    return key[0] * _WDEG[0] + key[1] * _WDEG[1] + key[2] * _WDEG[2]


# ---------------------------------------------------------------------------
# Series in t with QSeries coefficients
# ---------------------------------------------------------------------------


class TSeries:
    """Truncated series in t whose coefficients are QSeries with a shared
    q-truncation."""

    __slots__ = ("coeffs", "qtrunc")

    def __init__(self, coeffs, qtrunc=None):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("need at least the t^0 coefficient")
        if qtrunc is None:
            qtrunc = min(c.trunc for c in coeffs)
        self.coeffs = [
            c.slice_to(qtrunc) if c.trunc > qtrunc else c for c in coeffs
        ]
        if any(c.trunc != qtrunc for c in self.coeffs):
            raise ValueError("coefficients must share one q-truncation")
        self.qtrunc = qtrunc

    @classmethod
    def zero(cls, t_trunc, qtrunc):
        return cls([QSeries.zero(qtrunc) for _ in range(t_trunc + 1)], qtrunc)

    @classmethod
    def one(cls, t_trunc, qtrunc):
        out = cls.zero(t_trunc, qtrunc)
        out.coeffs[0] = QSeries.one(qtrunc)
        return out

    @property
    def t_trunc(self):
        return len(self.coeffs) - 1

    def coeff(self, n):
        return self.coeffs[n]

    def slice_t(self, t_trunc):
        if t_trunc > self.t_trunc:
            raise ValueError("cannot extend t-truncation")
        return TSeries(self.coeffs[: t_trunc + 1], self.qtrunc)

    def __add__(self, other):
        m = min(self.t_trunc, other.t_trunc)
        return TSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(m + 1)]
        )

    def __sub__(self, other):
        m = min(self.t_trunc, other.t_trunc)
        return TSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(m + 1)]
        )

    def __neg__(self):
        return TSeries([-c for c in self.coeffs], self.qtrunc)

    def scale(self, s):
        """Multiply every t-coefficient by a scalar or QSeries."""
        return TSeries([c * s for c in self.coeffs])

    def shift_t(self, m=1):
        """Multiply by t^m (t-truncation grows: the new coefficients are known)."""
        z = QSeries.zero(self.qtrunc)
        return TSeries([z] * m + self.coeffs, self.qtrunc)

    def shift_t_down(self):
        """Divide by t; requires a vanishing t^0 coefficient."""
        if not self.coeffs[0].is_zero():
            raise ValueError("t^0 coefficient must vanish to divide by t")
        return TSeries(self.coeffs[1:], self.qtrunc)

    def mul_one_minus_t_inv(self):
        """Multiply by 1/(1-t): running sums of the t-coefficients."""
        out = []
        acc = QSeries.zero(self.qtrunc)
        for c in self.coeffs:
            acc = acc + c
            out.append(acc)
        return TSeries(out, self.qtrunc)

    def mul_one_minus_t(self):
        """Multiply by (1-t)."""
        out = [self.coeffs[0]]
        for i in range(1, self.t_trunc + 1):
            out.append(self.coeffs[i] - self.coeffs[i - 1])
        return TSeries(out, self.qtrunc)

    def qdiff(self):
        """(f(t) - f(qt)) / ((1-q) t): coefficient n-1 becomes [n] * coefficient n."""
        n = self.qtrunc
        out = []
        for m in range(1, self.t_trunc + 1):
            out.append(self.coeffs[m] * q_bracket(m, n))
        if not out:
            raise ValueError("t-truncation too small to difference")
        return TSeries(out, n)

    def eval_at_q(self):
        """Substitute t = q; exact through the shared q-truncation."""
        n = self.qtrunc
        acc = [0] * (n + 1)
        for m, c in enumerate(self.coeffs):
            if m > n:
                break
            kernel.acc_scaled_shift(acc, c.coeffs, 1, m)
        return QSeries(acc, n)

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        m = min(self.t_trunc, other.t_trunc)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(m + 1))

    def __repr__(self):
        return f"TSeries(t-order {self.t_trunc}, q-order {self.qtrunc})"


def q_bracket(m, n):
    """The q-integer 1 + q + ... + q^(m-1) truncated to q^n."""
    return QSeries([1] * min(m, n + 1), n)


def _inv_bracket_pow(m, k, n):
    """(1-q)^k / (1-q^m)^k as an integer QSeries through q^n."""
    geom = QSeries(_mul_geom_pow([1], m, k, n), n)
    return geom * QSeries.one_minus_q_pow(k, n)


def polylog(parts, t_order, n, expander=None):
    """q-multiple polylogarithm as a TSeries, exact through (t^t_order, q^n).

    Admissibility is not required; the t^m coefficient is the finite sum over
    chains with top entry m.
    """
    parts = as_index(parts)
    r = len(parts)
    factors = {}

    def fac(v, k):
        key = (v, k)
        hit = factors.get(key)
        if hit is None:
            hit = _inv_bracket_pow(v, k, n).coeffs
            factors[key] = hit
        return hit

    prev = None
    for j in range(r, 1, -1):
        kj = parts[j - 1]
        cur = [None] * (t_order + 1)
        prefix = [0] * (n + 1)
        for v in range(1, t_order + 1):
            cur[v] = list(prefix)
            kernel.acc_mul(prefix, fac(v, kj), prev[v] if prev is not None else [1])
        prev = cur
    out = [QSeries.zero(n)]
    k1 = parts[0]
    for v in range(1, t_order + 1):
        inner = prev[v] if prev is not None else [1]
        out.append(QSeries(kernel.mul_trunc(fac(v, k1), inner, n), n))
    return TSeries(out, n)


def qdiff(f):
    """q-difference operator on a TSeries."""
    return f.qdiff()


def verify_qdiff_recurrences(parts, t_order, n, expander=None):
    """Check the applicable first-order recurrence for the polylog of parts."""
    parts = as_index(parts)
    li = polylog(parts, t_order, n)
    lhs = li.qdiff()
    if parts[0] >= 2:
        reduced = polylog((parts[0] - 1,) + parts[1:], t_order, n)
        rhs = reduced.shift_t_down()
    else:
        if len(parts) == 1:
            tail = TSeries.one(t_order, n)
        else:
            tail = polylog(parts[1:], t_order, n)
        rhs = tail.mul_one_minus_t_inv()
    return lhs == rhs


# ---------------------------------------------------------------------------
# Weighted-graded polynomials in three variables with QSeries coefficients
# ---------------------------------------------------------------------------


class WPoly:
    """Polynomial in three formal variables with QSeries coefficients,
    truncated at a weighted degree bound under the (1, 1, 2) grading."""

    __slots__ = ("terms", "wbound", "qtrunc")

    def __init__(self, terms, wbound, qtrunc):
        self.terms = {
            k: v for k, v in terms.items() if _wdeg(k) <= wbound and not v.is_zero()
        }
        self.wbound = wbound
        self.qtrunc = qtrunc

    @classmethod
    def zero(cls, wbound, qtrunc):
        return cls({}, wbound, qtrunc)

    @classmethod
    def const(cls, value, wbound, qtrunc):
        if isinstance(value, QSeries):
            series = value
        else:
            series = QSeries.one(qtrunc) * value
        return cls({(0, 0, 0): series}, wbound, qtrunc)

    @classmethod
    def monomial(cls, key, coeff, wbound, qtrunc):
        if not isinstance(coeff, QSeries):
            coeff = QSeries.one(qtrunc) * coeff
        return cls({key: coeff}, wbound, qtrunc)

    def coeff(self, key):
        c = self.terms.get(tuple(key))
        return c if c is not None else QSeries.zero(self.qtrunc)

    def min_wdeg(self):
        return min((_wdeg(k) for k in self.terms), default=None)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            cur = out.get(k)
            out[k] = v if cur is None else cur + v
        return WPoly(out, min(self.wbound, other.wbound), min(self.qtrunc, other.qtrunc))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return WPoly({k: -v for k, v in self.terms.items()}, self.wbound, self.qtrunc)

    def scale(self, s):
        if isinstance(s, QSeries) or s != 0:
            return WPoly({k: v * s for k, v in self.terms.items()}, self.wbound, self.qtrunc)
        return WPoly.zero(self.wbound, self.qtrunc)

    def __mul__(self, other):
        if not isinstance(other, WPoly):
            return self.scale(other)
        bound = min(self.wbound, other.wbound)
        out = {}
        for k1, c1 in self.terms.items():
            d1 = _wdeg(k1)
            for k2, c2 in other.terms.items():
                if d1 + _wdeg(k2) > bound:
                    continue
                key = (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2])
                prod = c1 * c2
                cur = out.get(key)
                out[key] = prod if cur is None else cur + prod
        return WPoly(out, bound, min(self.qtrunc, other.qtrunc))

    def __pow__(self, m):
        out = WPoly.const(1, self.wbound, self.qtrunc)
        for _ in range(m):
            out = out * self
        return out

    def exp(self):
        """exp of a polynomial whose every monomial has weighted degree >= 1."""
        if self.min_wdeg() is not None and self.min_wdeg() < 1:
            raise ValueError("exp needs min weighted degree >= 1")
        out = WPoly.const(1, self.wbound, self.qtrunc)
        term = WPoly.const(1, self.wbound, self.qtrunc)
        p = 0
        while term.terms:
            p += 1
            if p > self.wbound:
                break
            term = term * self
            out = out + term.scale(Fraction(1, factorial(p)))
        return out

    def __eq__(self, other):
        if not isinstance(other, WPoly):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(self.coeff(k) == other.coeff(k) for k in keys)

    def __repr__(self):
        return f"WPoly({len(self.terms)} monomials, wbound {self.wbound}, q-order {self.qtrunc})"


def index_key(k):
    """Grading exponents (weight-depth-height, depth-height, height-1)."""
    w, r, s = weight(k), depth(k), height(k)
    return (w - r - s, r - s, s - 1)


def power_sums(e1, e2, jmax):
    """p_j = alpha^j + beta^j with alpha+beta = e1, alpha*beta = e2, by Newton."""
    p = [WPoly.const(2, e1.wbound, e1.qtrunc), e1]
    for _ in range(2, jmax + 1):
        p.append(e1 * p[-1] - e2 * p[-2])
    return p


def power_sums_bruteforce(e1, e2, jmax):
    """Oracle twin of power_sums: reduce alpha^j in the quotient ring
    alpha^2 = e1*alpha - e2, writing alpha^j = A_j alpha + B_j; then
    alpha^j + beta^j = A_j e1 + 2 B_j."""
    wbound, qtrunc = e1.wbound, e1.qtrunc
    one = WPoly.const(1, wbound, qtrunc)
    zero = WPoly.zero(wbound, qtrunc)
    out = [WPoly.const(2, wbound, qtrunc)]
    a, b = one, zero  # alpha^1
    out.append(a * e1 + b.scale(2))
    for _ in range(2, jmax + 1):
        a, b = a * e1 + b, -(a * e2)
        out.append(a * e1 + b.scale(2))
    return out


def _phi0_wpoly(kmax, n, expander, modified):
    ex = expander or DEFAULT_EXPANDER
    terms = {}
    for w in range(2, kmax + 1):
        for idx in enumerate_admissible(w):
            series = ex.modified(idx, n) if modified else ex.raw(idx, n)
            key = index_key(idx)
            cur = terms.get(key)
            terms[key] = series if cur is None else cur + series
    return WPoly(terms, kmax, n)


def ohno_zagier_lhs(kmax, n, modified=False, expander=None):
    """1 + (z - xy) * Phi0 truncated at weighted degree kmax."""
    phi0 = _phi0_wpoly(kmax, n, expander, modified)
    zxy = WPoly(
        {(0, 0, 1): QSeries.one(n), (1, 1, 0): -QSeries.one(n)}, kmax, n
    )
    return WPoly.const(1, kmax, n) + zxy * phi0


def ohno_zagier_rhs(kmax, n, modified=False, expander=None):
    """Exponential side of the generating-function identity.

    Raw form: exp( sum_{n0=2..K} zeta_q(n0) sum_{m} (q-1)^m/(m+n0)
    (x^{m+n0} + y^{m+n0} - p_{m+n0}) ); modified form replaces zeta_q by the
    modified values and (q-1)^m by (-1)^m, with e1 = x+y-(z-xy).
    """
    ex = expander or DEFAULT_EXPANDER
    qm1 = QSeries([-1, 1], 1).pad(n) if n >= 1 else QSeries([-1], 0)
    if modified:
        e1 = WPoly(
            {
                (1, 0, 0): QSeries.one(n),
                (0, 1, 0): QSeries.one(n),
                (0, 0, 1): -QSeries.one(n),
                (1, 1, 0): QSeries.one(n),
            },
            kmax,
            n,
        )
    else:
        e1 = WPoly(
            {
                (1, 0, 0): QSeries.one(n),
                (0, 1, 0): QSeries.one(n),
                (0, 0, 1): qm1,
                (1, 1, 0): -qm1,
            },
            kmax,
            n,
        )
    e2 = WPoly.monomial((0, 0, 1), 1, kmax, n)
    p = power_sums(e1, e2, kmax)
    zetas = {
        n0: (ex.modified((n0,), n) if modified else ex.raw((n0,), n))
        for n0 in range(2, kmax + 1)
    }
    arg = WPoly.zero(kmax, n)
    for j in range(2, kmax + 1):
        s_j = QSeries.zero(n)
        for n0 in range(2, j + 1):
            m = j - n0
            coef = ((-1) ** m) if modified else (qm1 ** m)
            s_j = s_j + zetas[n0] * coef
        s_j = s_j * Fraction(1, j)
        block = (
            WPoly.monomial((j, 0, 0), 1, kmax, n)
            + WPoly.monomial((0, j, 0), 1, kmax, n)
            - p[j]
        )
        arg = arg + block.scale(s_j)
    return arg.exp()


def verify_ohno_zagier(kmax, n, modified=False, expander=None):
    """Coefficientwise equality of the two sides through weighted degree kmax."""
    lhs = ohno_zagier_lhs(kmax, n, modified=modified, expander=expander)
    rhs = ohno_zagier_rhs(kmax, n, modified=modified, expander=expander)
    return lhs == rhs


# ---------------------------------------------------------------------------
# The q-difference equation for the polylog generating function
# ---------------------------------------------------------------------------


def polylog_genfun(kmax, t_order, n, expander=None):
    """dict key -> TSeries: generating function of polylogs over admissible
    indices of weight <= kmax, graded by (weight, depth, height)."""
    out = {}
    for w in range(2, kmax + 1):
        for idx in enumerate_admissible(w):
            li = polylog(idx, t_order, n)
            key = index_key(idx)
            cur = out.get(key)
            out[key] = li if cur is None else cur + li
    return out


def _gmap(phi, fn):
    return {k: fn(v) for k, v in phi.items()}


def _gadd(a, b):
    out = dict(a)
    for k, v in b.items():
        cur = out.get(k)
        out[k] = v if cur is None else cur + v
    return out


def _gshift(phi, delta, bound):
    out = {}
    for k, v in phi.items():
        key = (k[0] + delta[0], k[1] + delta[1], k[2] + delta[2])
        if _wdeg(key) <= bound:
            out[key] = v
    return out


def verify_log_product(s_bound, n, expander=None):
    """Identity in a formal variable s with QSeries coefficients:

    log prod_{m=1..} (1 - (q^m/[m]) s)
      = (1/(q-1)) log(1 - s(q-1)) * sum_m q^m/[m]
        - sum_{n0>=2} zeta_q(n0) sum_{j>=0} (q-1)^j/(j+n0) s^{j+n0}.

    Both sides are expanded through s^s_bound and q^n; the product may stop
    at m <= n because the m-th factor is 1 + O(q^m s).
    """
    ex = expander or DEFAULT_EXPANDER
    qm1 = QSeries([-1, 1], 1).pad(n) if n >= 1 else QSeries([-1], 0)
    cs = [_q_over_bracket(m, n) for m in range(1, n + 1)]
    c_sum = QSeries.zero(n)
    for c in cs:
        c_sum = c_sum + c
    lhs = [QSeries.zero(n)]
    rhs = [QSeries.zero(n)]
    for p in range(1, s_bound + 1):
        acc = QSeries.zero(n)
        for c in cs:
            acc = acc + c**p
        lhs.append(acc * Fraction(-1, p))
        r = (qm1 ** (p - 1)) * c_sum * Fraction(-1, p)
        for n0 in range(2, p + 1):
            r = r - ex.raw((n0,), n) * (qm1 ** (p - n0)) * Fraction(1, p)
        rhs.append(r)
    return all(lhs[p] == rhs[p] for p in range(s_bound + 1))


def _q_over_bracket(m, n):
    """q^m / [m] = q^m (1-q) / (1-q^m) as an integer QSeries."""
    return _inv_bracket_pow(m, 1, n).shift(m)


def verify_genfun_change_of_vars(wbound, t_order, n, expander=None):
    """The substitution identity linking the polylog generating function at
    t=q (variables u, v, w) to the qMZV generating function (variables
    x, y, z) through the rational change of variables

      x = u/(1-(1-q)u),  y = (v+(1-q)(w-uv))/(1-(1-q)u),  z = w/(1-(1-q)u)^2,

    with overall prefactor 1/(1-(1-q)u), checked through weighted degree
    wbound (indices of weight <= wbound+2 on both sides).
    """
    ex = expander or DEFAULT_EXPANDER
    if t_order < n:
        raise ValueError("need t_order >= n for an exact t=q evaluation")
    kmax = wbound + 2
    # left: polylogs at t = q, graded in (u, v, w)
    left = WPoly.zero(wbound, n)
    for w in range(2, kmax + 1):
        for idx in enumerate_admissible(w):
            li_q = polylog(idx, t_order, n).eval_at_q()
            left = left + WPoly.monomial(index_key(idx), li_q, wbound, n)

    one_minus = QSeries([1, -1], 1).pad(n) if n >= 1 else QSeries([1], 0)  # 1-q
    pref = WPoly(
        {(p, 0, 0): one_minus**p for p in range(wbound + 1)}, wbound, n
    )  # 1/(1-(1-q)u) as a geometric series in u
    x_sub = WPoly.monomial((1, 0, 0), 1, wbound, n) * pref
    y_sub = (
        WPoly.monomial((0, 1, 0), 1, wbound, n)
        + WPoly.monomial((0, 0, 1), one_minus, wbound, n)
        - WPoly.monomial((1, 1, 0), one_minus, wbound, n)
    ) * pref
    z_sub = WPoly.monomial((0, 0, 1), 1, wbound, n) * pref * pref

    pows = {"x": {0: WPoly.const(1, wbound, n)}, "y": {0: WPoly.const(1, wbound, n)}, "z": {0: WPoly.const(1, wbound, n)}}

    def power(var, base, e):
        table = pows[var]
        while e not in table:
            top = max(table)
            table[top + 1] = table[top] * base
        return table[e]

    right = WPoly.zero(wbound, n)
    for w in range(2, kmax + 1):
        for idx in enumerate_admissible(w):
            i, j, m = index_key(idx)
            term = power("x", x_sub, i) * power("y", y_sub, j) * power("z", z_sub, m)
            right = right + term.scale(ex.raw(idx, n))
    right = pref * right
    return left == right


def verify_qhyp_equation(kmax, t_order, n, expander=None, perturb=None):
    """Check qt(1-t) D^2 Phi0 + ((1-u)(1-t) - vt) D Phi0 + (uv-w) Phi0 = 1
    through weighted degree kmax-2, t-order t_order-2 and q-order n.

    `perturb` (test hook) maps a grading key to a TSeries added to Phi0.
    """
    bound = kmax - 2
    phi0 = polylog_genfun(kmax, t_order, n, expander)
    if perturb:
        phi0 = _gadd(phi0, perturb)
    d1 = _gmap(phi0, lambda f: f.qdiff())
    d2 = _gmap(d1, lambda f: f.qdiff())
    q_mono = QSeries.monomial(1, 1, n)

    # qt(1-t) D^2
    term1 = _gmap(d2, lambda f: f.mul_one_minus_t().shift_t(1).scale(q_mono))
    # (1-t) D
    term2 = _gmap(d1, lambda f: f.mul_one_minus_t())
    # -u (1-t) D
    term2 = _gadd(term2, _gshift(_gmap(d1, lambda f: -f.mul_one_minus_t()), (1, 0, 0), bound))
    # -v t D
    term2 = _gadd(term2, _gshift(_gmap(d1, lambda f: -f.shift_t(1)), (0, 1, 0), bound))
    # (uv - w) Phi0
    term3 = _gadd(
        _gshift(phi0, (1, 1, 0), bound),
        _gshift(_gmap(phi0, lambda f: -f), (0, 0, 1), bound),
    )

    total = _gadd(_gadd(term1, term2), term3)
    t_cut = t_order - 2
    one = TSeries.one(t_cut, n)
    zero = TSeries.zero(t_cut, n)
    for key, f in total.items():
        want = one if key == (0, 0, 0) else zero
        if f.slice_t(min(t_cut, f.t_trunc)) != want:
            return False
    return (0, 0, 0) in total
