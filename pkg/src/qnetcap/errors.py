"""Exception types shared across the package."""


class QNetCapError(Exception):
    """Base class for all errors raised by qnetcap."""


class DomainError(QNetCapError, ValueError):
    """A channel parameter lies outside the domain of its kind."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class StructuralError(QNetCapError, ValueError):
    """Malformed network, cut or endpoint set."""


class ConstraintError(QNetCapError, ValueError):
    """Unsatisfiable or degenerate cut / commodity constraint."""


class CapacityError(QNetCapError):
    """A brute-force or enumeration limit was exceeded."""


class SolverError(QNetCapError):
    """The LP solver failed to certify optimality."""


class ParseError(QNetCapError):
    """Syntax, schema or validation failure in a network document.

    ``location`` is a JSON-path-like string (``edges[2].channel.param``)
    and, for syntax errors, ``line``/``column`` are set as well.
    """

    def __init__(self, message, location=None, line=None, column=None):
        self.message = message
        self.location = location
        self.line = line
        self.column = column
        super().__init__(self._format())

    def _format(self):
        where = []
        if self.line is not None:
            where.append(f"line {self.line}, column {self.column}")
        if self.location:
            where.append(self.location)
        if where:
            return f"{'; '.join(where)}: {self.message}"
        return self.message
