"""Exception types shared across the package."""


class QZetaError(Exception):
    """Base class for all qzeta errors."""


class ZeroConstantTerm(QZetaError):
    """Series inversion needs a nonzero constant term."""


class BadConstantTerm(QZetaError):
    """exp needs constant term 0; log needs constant term 1."""


class NotAdmissible(QZetaError):
    """Operation requires an admissible index (first part >= 2)."""


class WeightTooSmall(QZetaError):
    """Admissible indices exist only for weight >= 2."""


class NoPartAtLeastTwo(QZetaError):
    """Cyclic-sum statements need some part >= 2."""


class DivergentSum(QZetaError):
    """The requested auxiliary sum diverges as a formal q-series."""


class BadQ(QZetaError):
    """Numeric evaluation requires 0 < q < 1."""


class DivergenceDetected(QZetaError):
    """A numeric tail envelope failed to contract."""


class MiningVerificationError(QZetaError):
    """A mined kernel vector failed independent re-verification."""


class CacheIOError(QZetaError):
    """Fatal cache read/write failure."""
