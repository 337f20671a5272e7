"""Exception hierarchy shared by every chromix module."""


class ChromixError(Exception):
    """Base class for all library errors."""


class GraphError(ChromixError, ValueError):
    """Structural misuse of a mixed graph (missing element, bad subgraph, ...)."""


class MissingElementError(GraphError, KeyError):
    def __str__(self):
        # KeyError quotes its argument; keep the plain message
        return str(self.args[0]) if self.args else ""


class BoundExceededError(ChromixError):
    """An input is larger than the brute-force oracles are allowed to handle."""


class PolynomialityError(ChromixError):
    """Interpolated counts disagree with a fresh sample: the count is not a
    polynomial of the assumed degree."""


class PreconditionError(ChromixError):
    """A verifier was called on an input outside the hypothesis it checks."""


class PosetAxiomError(ChromixError, ValueError):
    pass


class ParseError(ChromixError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class UnsupportedFeatureError(ParseError):
    """Valid DOT that lies outside the accepted subset."""
