class TransducerError(Exception):
    """
    base class for everything eotransducer raises on purpose. field and line
    are optional hints used by the CLI error line.
    """

    def __init__(self, message, **kwargs):
        super().__init__(message)
        self.message = message
        self.field = kwargs.get("field", None)
        self.line = kwargs.get("line", None)

    @property
    def kind(self):
        return type(self).__name__

    def one_line(self):
        """
        single machine-parseable line, used by the CLI on stderr
        """
        field = self.field or "-"
        line = self.line or "-"
        message = str(self.message).replace('"', "'").replace("\n", " ")
        return f'error kind={self.kind} field={field} line={line} message="{message}"'


class ValidationError(TransducerError, ValueError):
    pass


class OrderingError(ValidationError):
    pass


class DomainError(TransducerError, ValueError):
    pass


class UsageError(TransducerError):
    pass


class SolverError(TransducerError):
    def __init__(self, message, residual=None, **kwargs):
        super().__init__(message, **kwargs)
        self.residual = residual


class ScenarioError(TransducerError):
    pass


def error_line(e):
    """
    the one-line rendering of anything the CLI reports: TransducerError or
    an OSError from reading or writing files
    """
    if isinstance(e, TransducerError):
        return e.one_line()
    field = getattr(e, "filename", None) or "-"
    message = (getattr(e, "strerror", None) or str(e)).replace('"', "'")
    return f'error kind={type(e).__name__} field={field} line=- message="{message}"'
