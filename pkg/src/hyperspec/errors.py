"""Error taxonomy shared by the library and the command line.

Every exception carries a machine-readable ``code`` that the CLI copies
verbatim into its JSON ``error`` object.
"""


class HyperspecError(Exception):
    code = "ERROR"

    def __init__(self, message="", code=None, **details):
        super().__init__(message)
        if code is not None:
            self.code = code
        self.details = details


# hypergraph construction / parsing
class EdgeArityError(HyperspecError, ValueError):
    code = "EDGE_ARITY"


class VertexRangeError(HyperspecError, ValueError):
    code = "VERTEX_RANGE"


class DuplicateEdgeError(HyperspecError, ValueError):
    code = "DUPLICATE_EDGE"


class ParseError(HyperspecError, ValueError):
    code = "PARSE_ERROR"

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}", line=line)
        self.line = line


# odd-bipartitions
class OddUniformityError(HyperspecError, ValueError):
    code = "ODD_UNIFORMITY"


class EmptySideError(HyperspecError, ValueError):
    code = "EMPTY_SIDE"


class CapExceededError(HyperspecError):
    code = "CAP_EXCEEDED"


class NotOddBipartiteError(HyperspecError):
    code = "NOT_ODD_BIPARTITE"


class InvalidPartitionError(HyperspecError, ValueError):
    code = "INVALID_PARTITION"


# families
class BadParamsError(HyperspecError, ValueError):
    code = "BAD_PARAMS"


class TooShortError(BadParamsError):
    code = "TOO_SHORT"


# tensors and solvers
class LengthMismatchError(HyperspecError, ValueError):
    code = "LENGTH_MISMATCH"


class ZeroVectorError(HyperspecError, ValueError):
    code = "ZERO_VECTOR"


class NotConnectedError(HyperspecError):
    code = "NOT_CONNECTED"


class NoConvergenceError(HyperspecError):
    code = "NO_CONVERGENCE"


class TooLargeError(HyperspecError):
    code = "TOO_LARGE"


class UncertifiedInputError(HyperspecError, ValueError):
    code = "UNCERTIFIED_INPUT"


class BadShapeError(HyperspecError, ValueError):
    code = "BAD_SHAPE"
