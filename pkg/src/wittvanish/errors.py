"""Exception types raised by the library.

Every error is a ``ValueError`` subclass so callers that only care about
"bad input" can catch one thing; the CLI maps all of them to exit code 2.
"""


class WittError(ValueError):
    """Base class for all validation errors in this package."""


class InvalidRank(WittError):
    def __init__(self, letter, rank):
        self.letter = letter
        self.rank = rank
        super().__init__(f"InvalidRank: {letter}{rank} is not an admissible simple type")


class VertexOutOfRange(WittError):
    def __init__(self, vertex, rank):
        self.vertex = vertex
        self.rank = rank
        super().__init__(f"VertexOutOfRange: vertex {vertex} not in 1..{rank}")


class DiagramMismatch(WittError):
    def __init__(self, left, right):
        super().__init__(f"DiagramMismatch: {left} vs {right}")


class AlphaInTheta(WittError):
    def __init__(self, alpha):
        self.alpha = alpha
        super().__init__(f"AlphaInTheta: vertex {alpha} belongs to theta")


class NotInPicard(WittError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(
            f"NotInPicard({vertex}): weight has nonzero coefficient at theta vertex {vertex}"
        )


class LambdaMeetsTheta(WittError):
    def __init__(self, vertices):
        self.vertices = tuple(sorted(vertices))
        super().__init__(f"LambdaMeetsTheta: {list(self.vertices)} lie in theta")


class ThetaLambdaOverlap(WittError):
    def __init__(self, vertices):
        self.vertices = tuple(sorted(vertices))
        super().__init__(f"ThetaLambdaOverlap: {list(self.vertices)} in both theta and lambda")


class NotOrthogonal(WittError):
    def __init__(self, alpha, beta):
        self.alpha = alpha
        self.beta = beta
        super().__init__(f"NotOrthogonal: vertex {alpha} is adjacent to theta vertex {beta}")


class NotBorel(WittError):
    def __init__(self, theta):
        super().__init__(f"NotBorel: theta must be empty, got {sorted(theta)}")


class RankLimitExceeded(WittError):
    def __init__(self, rank, limit):
        self.rank = rank
        self.limit = limit
        super().__init__(f"RankLimitExceeded: rank {rank} exceeds limit {limit}")


class SpecParseError(WittError):
    def __init__(self, token, reason):
        self.token = token
        super().__init__(f"parse error at {token!r}: {reason}")


class WeightOverflow(WittError, OverflowError):
    def __init__(self, value):
        super().__init__(f"WeightOverflow: coefficient {value} exceeds 64-bit range")
