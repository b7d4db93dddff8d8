"""Truncated formal power series in q with exact rational coefficients.

A QSeries holds coefficients of q^0 .. q^trunc.  Every binary operation
truncates to the smaller of the two truncation orders, so a coefficient is
never reported unless both operands determine it.  Coefficients are Python
ints or fractions.Fraction; nothing here ever touches floating point.
"""

from fractions import Fraction

from qzeta import kernel
from qzeta.errors import BadConstantTerm, ZeroConstantTerm

_SCALARS = (int, Fraction)


def _exact_div(s, m):
    """s/m as int when exact, Fraction otherwise."""
    val = s / m if isinstance(s, Fraction) else Fraction(s, m)
    return int(val) if val.denominator == 1 else val


class QSeries:
    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs, trunc=None):
        coeffs = list(coeffs)
        if trunc is None:
            trunc = len(coeffs) - 1
        if trunc < 0:
            raise ValueError("truncation order must be >= 0")
        if len(coeffs) < trunc + 1:
            coeffs.extend([0] * (trunc + 1 - len(coeffs)))
        elif len(coeffs) > trunc + 1:
            coeffs = coeffs[: trunc + 1]
        self.coeffs = coeffs
        self.trunc = trunc

    @classmethod
    def zero(cls, trunc):
        return cls([0] * (trunc + 1), trunc)

    @classmethod
    def one(cls, trunc):
        c = [0] * (trunc + 1)
        c[0] = 1
        return cls(c, trunc)

    @classmethod
    def monomial(cls, coeff, exponent, trunc):
        c = [0] * (trunc + 1)
        if exponent <= trunc:
            c[exponent] = coeff
        return cls(c, trunc)

    @classmethod
    def q_minus_1_pow(cls, m, trunc):
        """(q-1)^m as an exact series."""
        return cls.one_minus_q_pow(m, trunc) * ((-1) ** m)

    @classmethod
    def one_minus_q_pow(cls, m, trunc):
        """(1-q)^m (m may be negative) as an exact series."""
        if m >= 0:
            out = cls.one(trunc)
            base = cls([1, -1], 1).pad(trunc) if trunc >= 1 else cls([1], 0)
            for _ in range(m):
                out = out * base
            return out
        out = cls.one(trunc)
        geo = cls([1] * (trunc + 1), trunc)  # 1/(1-q)
        for _ in range(-m):
            out = out * geo
        return out

    def pad(self, trunc):
        """Same series viewed at a truncation order >= current (zero-extended).

        Only valid when the extra coefficients are genuinely known to be
        produced later; used internally for fixed polynomials like (1-q)^m.
        """
        if trunc < self.trunc:
            return self.slice_to(trunc)
        return QSeries(self.coeffs + [0] * (trunc - self.trunc), trunc)

    def slice_to(self, trunc):
        if trunc > self.trunc:
            raise ValueError("cannot extend truncation by slicing")
        return QSeries(self.coeffs[: trunc + 1], trunc)

    def coeff(self, n):
        if n > self.trunc:
            raise IndexError(f"coefficient of q^{n} beyond truncation {self.trunc}")
        return self.coeffs[n]

    def __getitem__(self, n):
        return self.coeff(n)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_integral(self):
        return all(isinstance(c, int) or c.denominator == 1 for c in self.coeffs)

    def first_nonzero(self):
        """(exponent, coefficient) of the lowest retained nonzero term, or None."""
        for n, c in enumerate(self.coeffs):
            if c != 0:
                return (n, c)
        return None

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            c = list(self.coeffs)
            c[0] = c[0] + other
            return QSeries(c, self.trunc)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.trunc, other.trunc)
        return QSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n
        )

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, _SCALARS):
            c = list(self.coeffs)
            c[0] = c[0] - other
            return QSeries(c, self.trunc)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.trunc, other.trunc)
        return QSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(n + 1)], n
        )

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QSeries([-c for c in self.coeffs], self.trunc)

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if other == 0:
                return QSeries.zero(self.trunc)
            return QSeries([c * other for c in self.coeffs], self.trunc)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.trunc, other.trunc)
        return QSeries(kernel.mul_trunc(self.coeffs, other.coeffs, n), n)

    __rmul__ = __mul__

    def __pow__(self, m):
        if m < 0:
            return self.inv() ** (-m)
        out = QSeries.one(self.trunc)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base if m > 1 else base
            m >>= 1
        return out

    def shift(self, m):
        """Multiply by q^m, m >= 0 (coefficients beyond trunc are dropped)."""
        if m < 0:
            raise ValueError("shift exponent must be >= 0")
        if m == 0:
            return self
        out = [0] * (self.trunc + 1)
        for i in range(self.trunc + 1 - m):
            out[i + m] = self.coeffs[i]
        return QSeries(out, self.trunc)

    def inv(self):
        if self.coeffs[0] == 0:
            raise ZeroConstantTerm("cannot invert a series with constant term 0")
        return QSeries(kernel.inv_trunc(self.coeffs, self.trunc), self.trunc)

    def exp(self):
        """exp of a series with constant term 0 (from E' = E * a')."""
        if self.coeffs[0] != 0:
            raise BadConstantTerm("exp needs constant term 0")
        n = self.trunc
        a = self.coeffs
        e = [0] * (n + 1)
        e[0] = 1
        for m in range(n):
            # (m+1) e_{m+1} = sum_{i=0..m} (i+1) a_{i+1} e_{m-i}
            s = 0
            for i in range(m + 1):
                c = a[i + 1]
                if c:
                    s += (i + 1) * c * e[m - i]
            e[m + 1] = _exact_div(s, m + 1)
        return QSeries(e, n)

    def log(self):
        """log of a series with constant term 1 (L' = a'/a)."""
        if self.coeffs[0] != 1:
            raise BadConstantTerm("log needs constant term 1")
        n = self.trunc
        deriv = [(i + 1) * self.coeffs[i + 1] for i in range(n)]  # a'
        if n == 0:
            return QSeries.zero(0)
        d = kernel.mul_trunc(deriv, kernel.inv_trunc(self.coeffs, n - 1), n - 1)
        out = [0] * (n + 1)
        for m in range(1, n + 1):
            c = d[m - 1]
            if c:
                out[m] = _exact_div(c, m)
        return QSeries(out, n)

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            return self.coeffs[0] == other and all(c == 0 for c in self.coeffs[1:])
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.trunc == other.trunc and all(
            x == y for x, y in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.trunc, tuple(self.coeffs)))

    def __repr__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if n == 0:
                terms.append(f"{c}")
            elif n == 1:
                terms.append(f"{c}*q" if c != 1 else "q")
            else:
                terms.append(f"{c}*q^{n}" if c != 1 else f"q^{n}")
            if len(terms) > 7:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"QSeries({body}; O(q^{self.trunc + 1}))"
