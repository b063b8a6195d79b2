class CompareError(Exception):
    """Base for everything this package raises on purpose."""


class BaselineUnavailable(CompareError):
    """The reference library is not importable. Callers downgrade this
    to a recorded skip; it must never fail a run outright."""


class PrimaryCliMissing(CompareError):
    """The bench executable is not on PATH."""


class PrimaryRunFailed(CompareError):
    pass


class KeyMismatch(CompareError):
    pass


class BadReport(CompareError):
    pass
