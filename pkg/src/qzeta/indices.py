"""Index combinatorics: weight/depth/height, block codes, duals, enumerations.

An index is a plain tuple of positive ints (k_1, ..., k_r); it is admissible
when k_1 >= 2.  The block code of an admissible index is the tuple of pairs
((a_1, b_1), ..., (a_s, b_s)) with the index equal to the concatenation of
blocks (a_i + 1, 1, ..., 1) of length b_i; s equals the height.
"""

from math import comb

from qzeta.errors import NotAdmissible, WeightTooSmall

Index = tuple


def as_index(parts):
    k = tuple(int(p) for p in parts)
    if not k or any(p < 1 for p in k):
        raise ValueError(f"index parts must be positive integers, got {parts!r}")
    return k


def weight(k):
    return sum(k)


def depth(k):
    return len(k)


def height(k):
    return sum(1 for p in k if p >= 2)


def is_admissible(k):
    return bool(k) and k[0] >= 2


def require_admissible(k):
    if not is_admissible(k):
        raise NotAdmissible(f"index {format_index(k)} is not admissible (first part must be >= 2)")


def parse_index(text):
    """Parse the CLI syntax '(3,2,1)' (parentheses optional) into a tuple."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    parts = [p.strip() for p in s.split(",") if p.strip()]
    if not parts:
        raise ValueError(f"cannot parse index from {text!r}")
    try:
        return as_index(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"cannot parse index from {text!r}: {exc}") from exc


def format_index(k):
    return "(" + ",".join(str(p) for p in k) + ")"


def code_of(k):
    """Block code of an admissible index."""
    require_admissible(k)
    pairs = []
    for p in k:
        if p >= 2:
            pairs.append([p - 1, 1])
        else:
            pairs[-1][1] += 1
    return tuple((a, b) for a, b in pairs)


def decode(code):
    """Index whose block code is the given pair sequence."""
    parts = []
    for a, b in code:
        if a < 1 or b < 1:
            raise ValueError(f"code entries must be positive, got {(a, b)}")
        parts.append(a + 1)
        parts.extend([1] * (b - 1))
    return tuple(parts)


def dual(k):
    """Dual index: reverse the code and swap each (a_i, b_i)."""
    code = code_of(k)
    return decode(tuple((b, a) for a, b in reversed(code)))


def canonical_sort(indices):
    """Deterministic column/cache order: lexicographic on the part tuples."""
    return sorted(indices)


def enumerate_admissible(k):
    """All admissible indices of weight k, canonically ordered (2^(k-2) many)."""
    if k < 2:
        raise WeightTooSmall(f"no admissible index has weight {k}")
    out = []

    def rec(remaining, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        lo = 2 if not prefix else 1
        for p in range(lo, remaining + 1):
            prefix.append(p)
            rec(remaining - p, prefix)
            prefix.pop()

    rec(k, [])
    return canonical_sort(out)


def enumerate_all(k):
    """All indices (compositions) of weight k, canonically ordered."""
    out = []

    def rec(remaining, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(1, remaining + 1):
            prefix.append(p)
            rec(remaining - p, prefix)
            prefix.pop()

    rec(k, [])
    return canonical_sort(out)


def enumerate_by(k, r, s):
    """Indices of weight k, depth r and height s (empty unless k >= r+s, r >= s >= 0)."""
    if k < r + s or r < s or s < 0 or r < 1:
        return []
    return [idx for idx in enumerate_all(k) if len(idx) == r and height(idx) == s]


def enumerate_by_admissible(k, r, s):
    """The admissible members of enumerate_by(k, r, s)."""
    return [idx for idx in enumerate_by(k, r, s) if is_admissible(idx)]


def compositions(l, r):
    """All length-r tuples of non-negative ints summing to l (C(l+r-1, r-1) many)."""
    if l < 0 or r < 1:
        raise ValueError("need l >= 0 and r >= 1")
    out = []

    def rec(remaining, slots, prefix):
        if slots == 1:
            out.append(tuple(prefix) + (remaining,))
            return
        for c in range(remaining, -1, -1):
            prefix.append(c)
            rec(remaining - c, slots - 1, prefix)
            prefix.pop()

    rec(l, r, [])
    assert len(out) == comb(l + r - 1, r - 1)
    return out


def rotations(k):
    """All cyclic rotations of k, starting with k itself."""
    r = len(k)
    return [k[i:] + k[:i] for i in range(r)]


def min_order(k):
    """Lowest q-exponent with a nonzero coefficient in the modified expansion.

    The chain n_i = r-i+1 is the pointwise-minimal one, and all chain
    contributions are non-negative, so the bound is attained.
    """
    r = len(k)
    return sum((r - i) * (k[i] - 1) for i in range(r))
