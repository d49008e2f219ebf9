"""
Exception hierarchy shared by every package.
Each error carries the exit code the CLI reports for it.
"""
from typing import Optional


class VotingError(Exception):
    """Base class for all domain errors"""

    exit_code = 2


# Profile parsing

class MalformedLine(VotingError):
    def __init__(self, line_no: int, reason: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {reason}")


class DuplicateAlternativeInRanking(VotingError):
    def __init__(self, name: str, line_no: Optional[int] = None):
        self.name = name
        where = f"line {line_no}: " if line_no is not None else ""
        super().__init__(f"{where}alternative '{name}' ranked twice")


class UnknownAlternative(VotingError):
    def __init__(self, name: str, line_no: Optional[int] = None):
        self.name = name
        where = f"line {line_no}: " if line_no is not None else ""
        super().__init__(f"{where}unknown alternative '{name}'")


class EmptyProfile(VotingError):
    def __init__(self):
        super().__init__("profile contains no ballots")


# Margin graphs

class ConflictingEdge(VotingError):
    def __init__(self, x: int, y: int):
        super().__init__(f"both ({x},{y}) and ({y},{x}) listed")


class SelfLoop(VotingError):
    def __init__(self, x: int):
        super().__init__(f"self loop on {x}")


class NonStrictMarginGraph(VotingError):
    """A pairwise margin of zero where the rule needs a strict graph"""

    exit_code = 3

    def __init__(self, zero_pairs: int = 0):
        self.zero_pairs = zero_pairs
        super().__init__(f"margin graph is not strict ({zero_pairs} zero-margin pairs)")


# Tiebreakers

class MissingEdge(VotingError):
    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"tiebreaker misses positive edge {edge}")


class DuplicateEdge(VotingError):
    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"tiebreaker lists edge {edge} more than once")


class NotDescending(VotingError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"tiebreaker margin increases at index {index}")


class EdgeNotInGraph(VotingError):
    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"edge {edge} is not a positive-margin edge of the graph")


class BadEdgeOrder(VotingError):
    def __init__(self, reason: str):
        super().__init__(f"invalid edge order: {reason}")


# Oracle and benchmark

class UniverseLimitExceeded(VotingError):
    exit_code = 4

    def __init__(self, count: int, limit: int):
        self.count = count
        self.limit = limit
        super().__init__(f"{count} tiebreaker universes exceed the limit of {limit}")


class AttemptsExhausted(VotingError):
    def __init__(self, attempts: int):
        self.attempts = attempts
        super().__init__(f"no profile without a Condorcet winner after {attempts} attempts")


class RuleTimeout(VotingError):
    exit_code = 1

    def __init__(self, seconds: float):
        self.seconds = seconds
        super().__init__(f"rule exceeded {seconds:.1f}s")


class ConfigError(VotingError):
    pass


class InternalInvariantViolation(VotingError):
    exit_code = 70
