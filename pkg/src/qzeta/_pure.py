"""Pure-Python hot kernels.

Same contract as the compiled twin in ``_ext.pyx``: dense series are plain
lists indexed by exponent, coefficients are exact Python numbers (int or
Fraction), matrices are lists of lists of int.  ``qzeta.kernel`` picks one
implementation at import time.
"""

IMPLEMENTATION = "pure"


def mul_trunc(a, b, n):
    """Cauchy product of coefficient lists, truncated to exponent n."""
    out = [0] * (n + 1)
    if len(b) < len(a):
        a, b = b, a
    top_b = min(len(b) - 1, n)
    for i, c in enumerate(a):
        if i > n:
            break
        if c == 0:
            continue
        jmax = min(top_b, n - i)
        for j in range(jmax + 1):
            v = b[j]
            if v:
                out[i + j] += c * v
    return out


def acc_mul(out, a, b):
    """out += a*b, truncated to len(out)-1.  Mutates and returns out."""
    n = len(out) - 1
    if len(b) < len(a):
        a, b = b, a
    top_b = min(len(b) - 1, n)
    for i, c in enumerate(a):
        if i > n:
            break
        if c == 0:
            continue
        jmax = min(top_b, n - i)
        for j in range(jmax + 1):
            v = b[j]
            if v:
                out[i + j] += c * v
    return out


def acc_scaled_shift(out, src, c, s):
    """out[s+i] += c*src[i] for all i with s+i < len(out)."""
    n = len(out)
    top = min(len(src), n - s)
    if c == 1:
        for i in range(top):
            v = src[i]
            if v:
                out[s + i] += v
    else:
        for i in range(top):
            v = src[i]
            if v:
                out[s + i] += c * v
    return out


def inv_trunc(a, n):
    """Multiplicative inverse of a coefficient list, truncated to exponent n.

    Requires a[0] != 0 (checked by the caller).  Exact: uses Fractions when
    the constant term is not a unit.
    """
    a0 = a[0]
    if a0 == 1:
        r0 = 1
    elif a0 == -1:
        r0 = -1
    else:
        from fractions import Fraction

        r0 = Fraction(1) / a0
    out = [0] * (n + 1)
    out[0] = r0
    top_a = len(a) - 1
    for m in range(1, n + 1):
        s = 0
        for i in range(1, min(m, top_a) + 1):
            c = a[i]
            if c:
                s += c * out[m - i]
        if s:
            out[m] = -r0 * s
    return out


def echelon_ff(m):
    """In-place fraction-free (Bareiss) row echelon over exact integers.

    Returns the list of pivot column indices; len() of it is the rank.
    Pivot choice: smallest nonzero absolute value in the column, which keeps
    the minor growth down.  Entries after step k are k+1-minors, so the
    division by the previous pivot is exact.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    piv_cols = []
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        best = -1
        bestv = 0
        for i in range(r, rows):
            v = m[i][c]
            if v != 0 and (best < 0 or abs(v) < abs(bestv)):
                best = i
                bestv = v
        if best < 0:
            continue
        if best != r:
            m[r], m[best] = m[best], m[r]
        row_r = m[r]
        pv = row_r[c]
        for i in range(r + 1, rows):
            row_i = m[i]
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
