class FrolicherError(Exception):
    """Base class for all library errors."""


class AmbientMismatchError(FrolicherError, ValueError):
    pass


class NotSubquotientError(FrolicherError, ValueError):
    pass


class MalformedComplexError(FrolicherError, ValueError):
    """Matrix shapes or bidegrees do not fit the declared spaces."""


class ValidationError(FrolicherError):
    """A double complex fails d1^2 = 0, d2^2 = 0 or anticommutativity."""

    def __init__(self, report):
        self.report = report
        super().__init__(report.summary())


class InconsistentEquationsError(FrolicherError, ValueError):
    def __init__(self, generator, message=None):
        self.generator = generator
        super().__init__(message or f"d^2 != 0 on generator {generator}")


class CatalogError(FrolicherError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class UnclassifiableError(FrolicherError, ValueError):
    pass


class ParseError(FrolicherError, ValueError):
    def __init__(self, message, line=None, column=None, source=None):
        self.line = line
        self.column = column
        self.source = source
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            if source:
                where = f"{source}:{where}"
            where += ": "
        super().__init__(where + message)
