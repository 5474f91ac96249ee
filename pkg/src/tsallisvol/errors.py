"""Exception hierarchy shared by the loaders and the estimators."""


class TsallisVolError(Exception):
    """Base class for every error raised by this package."""


class DataError(TsallisVolError, ValueError):
    """A problem with an input file, located by path and line number."""

    def __init__(self, message, path=None, row=None):
        self.path = path
        self.row = row
        where = []
        if path is not None:
            where.append(str(path))
        if row is not None:
            where.append(f"row {row}")
        prefix = ":".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class MissingColumn(DataError):
    pass


class MissingValue(DataError):
    pass


class UnparsableDate(DataError):
    pass


class UnparsablePrice(DataError):
    pass


class NonPositivePrice(DataError):
    pass


class DuplicateDate(DataError):
    pass


class TooFewRows(DataError):
    pass


class SeriesTooShort(TsallisVolError, ValueError):
    pass


class ZeroVariance(TsallisVolError, ValueError):
    pass


class ZeroMean(TsallisVolError, ValueError):
    """Relative standard deviation is undefined for a (near) zero mean."""


class EmptySeries(TsallisVolError, ValueError):
    pass


class OutOfRange(TsallisVolError, ValueError):
    pass


class InvalidDistribution(TsallisVolError, ValueError):
    pass


class SupportMismatch(TsallisVolError, ValueError):
    pass


class DomainError(TsallisVolError, ValueError):
    """Argument outside the domain of a q-deformed function or entropic index."""
