class BergmanError(Exception):
    """Base class for every error raised by bergman_spaces."""


class DimensionError(BergmanError, ValueError):
    """Arguments of one operation live in different dimensions."""


class DomainError(BergmanError, ValueError):
    """A point lies outside the region where the operation is defined."""


class ParameterError(BergmanError, ValueError):
    """An exponent, radius or sample count is out of its valid range."""


class SingularityError(BergmanError, ArithmeticError):
    """A kernel base vanished where the function has a pole."""


class NumericError(BergmanError, RuntimeError):
    """Quadrature or differentiation could not produce a finite answer."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class ConfigError(BergmanError, ValueError):
    """Malformed experiment configuration, located by line and column."""

    def __init__(self, message, line=None, column=None):
        location = ""
        if line is not None:
            location = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + location)
        self.line = line
        self.column = column


class DescriptorError(ConfigError):
    """A function descriptor could not be parsed."""

    def __init__(self, message, text, position):
        pointer = f"{text}\n{' ' * position}^"
        super().__init__(f"{message} at position {position}:\n{pointer}")
        self.text = text
        self.position = position
