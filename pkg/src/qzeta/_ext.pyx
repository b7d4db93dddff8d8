# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled hot kernels; behavioural twin of ``qzeta._pure``.

Coefficients stay arbitrary-precision Python objects (int / Fraction); the
win over the pure kernel is loop and indexing overhead, not limb arithmetic.
"""

IMPLEMENTATION = "ext"


def mul_trunc(a, b, Py_ssize_t n):
    """Cauchy product of coefficient lists, truncated to exponent n."""
    cdef list out = [0] * (n + 1)
    cdef list la, lb
    if len(b) < len(a):
        la, lb = b, a
    else:
        la, lb = a, b
    cdef Py_ssize_t top_b = min(len(lb) - 1, n)
    cdef Py_ssize_t i, j, jmax
    cdef object c, v
    for i in range(len(la)):
        if i > n:
            break
        c = la[i]
        if c == 0:
            continue
        jmax = min(top_b, n - i)
        for j in range(jmax + 1):
            v = lb[j]
            if v != 0:
                out[i + j] = out[i + j] + c * v
    return out


def acc_mul(list out, a, b):
    """out += a*b, truncated to len(out)-1.  Mutates and returns out."""
    cdef Py_ssize_t n = len(out) - 1
    cdef list la, lb
    if len(b) < len(a):
        la, lb = b, a
    else:
        la, lb = a, b
    cdef Py_ssize_t top_b = min(len(lb) - 1, n)
    cdef Py_ssize_t i, j, jmax
    cdef object c, v
    for i in range(len(la)):
        if i > n:
            break
        c = la[i]
        if c == 0:
            continue
        jmax = min(top_b, n - i)
        for j in range(jmax + 1):
            v = lb[j]
            if v != 0:
                out[i + j] = out[i + j] + c * v
    return out


def acc_scaled_shift(list out, list src, c, Py_ssize_t s):
    """out[s+i] += c*src[i] for all i with s+i < len(out)."""
    cdef Py_ssize_t n = len(out)
    cdef Py_ssize_t top = min(len(src), n - s)
    cdef Py_ssize_t i
    cdef object v
    if c == 1:
        for i in range(top):
            v = src[i]
            if v != 0:
                out[s + i] = out[s + i] + v
    else:
        for i in range(top):
            v = src[i]
            if v != 0:
                out[s + i] = out[s + i] + c * v
    return out


def inv_trunc(a, Py_ssize_t n):
    """Multiplicative inverse of a coefficient list, truncated to exponent n."""
    cdef object a0 = a[0]
    cdef object r0
    if a0 == 1:
        r0 = 1
    elif a0 == -1:
        r0 = -1
    else:
        from fractions import Fraction
        r0 = Fraction(1) / a0
    cdef list out = [0] * (n + 1)
    out[0] = r0
    cdef Py_ssize_t top_a = len(a) - 1
    cdef Py_ssize_t m, i, imax
    cdef object s, c
    for m in range(1, n + 1):
        s = 0
        imax = min(m, top_a)
        for i in range(1, imax + 1):
            c = a[i]
            if c != 0:
                s = s + c * out[m - i]
        if s != 0:
            out[m] = -r0 * s
    return out


def echelon_ff(list m):
    """In-place fraction-free (Bareiss) row echelon; returns pivot columns."""
    cdef Py_ssize_t rows = len(m)
    cdef Py_ssize_t cols = len(m[0]) if rows else 0
    cdef list piv_cols = []
    cdef object prev = 1
    cdef Py_ssize_t r = 0
    cdef Py_ssize_t c, i, j, best
    cdef object bestv, pv, vi, v
    cdef list row_r, row_i
    for c in range(cols):
        if r == rows:
            break
        best = -1
        bestv = 0
        for i in range(r, rows):
            v = (<list>m[i])[c]
            if v != 0 and (best < 0 or abs(v) < abs(bestv)):
                best = i
                bestv = v
        if best < 0:
            continue
        if best != r:
            m[r], m[best] = m[best], m[r]
        row_r = <list>m[r]
        pv = row_r[c]
        for i in range(r + 1, rows):
            row_i = <list>m[i]
            vi = row_i[c]
            if vi == 0:
                if pv != prev:
                    for j in range(c + 1, cols):
                        row_i[j] = pv * row_i[j] // prev
            else:
                for j in range(c + 1, cols):
                    row_i[j] = (pv * row_i[j] - vi * row_r[j]) // prev
                row_i[c] = 0
        prev = pv
        piv_cols.append(c)
        r += 1
    return piv_cols
