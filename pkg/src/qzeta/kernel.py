"""Kernel selection: compiled extension if present, pure Python otherwise.

Set QZETA_PURE_PYTHON=1 to force the pure kernel (used by the benchmark and
by tests that exercise both implementations).
"""

import os

if os.environ.get("QZETA_PURE_PYTHON"):
    from qzeta import _pure as _impl
else:
    try:
        from qzeta import _ext as _impl  # type: ignore[attr-defined]
    except ImportError:
        from qzeta import _pure as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION

mul_trunc = _impl.mul_trunc
acc_mul = _impl.acc_mul
acc_scaled_shift = _impl.acc_scaled_shift
inv_trunc = _impl.inv_trunc
echelon_ff = _impl.echelon_ff
