"""Exception hierarchy shared by the whole package.

Everything raised on purpose derives from RankingError, so callers can
catch one base class at the boundary. The finer split mirrors where the
problem was detected: malformed input data, a kernel that cannot deliver
(singular system, wrong nullspace dimension), a rating method whose
precondition fails on an otherwise valid problem, or an audit witness
that does not have the shape the axiom needs.
"""


class RankingError(Exception):
    """Base class for all errors raised by this package."""


# --- problem construction ------------------------------------------------

class NegativeEntry(RankingError):
    """A tournament entry is negative."""


class NonIntegerPairSum(RankingError):
    """t_ij + t_ji is not a nonnegative integer."""


class DiagonalNonZero(RankingError):
    """An object was scored against itself."""


class FewerThanTwoObjects(RankingError):
    """A ranking problem needs at least two objects."""


class LabelMismatch(RankingError):
    """Two problems that must share an object set do not."""


class UnknownLabel(RankingError):
    """An entry references a label that is not in the object set."""


class DuplicateLabel(RankingError):
    """Object labels must be distinct."""


# --- exact linear algebra -------------------------------------------------

class SingularMatrix(RankingError):
    """The coefficient matrix of a square system is singular."""


class RankTooLow(RankingError):
    """The nullspace has dimension greater than one."""


class FullRank(RankingError):
    """The matrix has a trivial nullspace."""


# --- rating methods -------------------------------------------------------

class MethodPreconditionError(RankingError):
    """A rating method cannot be applied to this problem."""


class UndefinedForSmallN(MethodPreconditionError):
    """The reasonable parameter bound needs at least three objects."""


class NoComparisons(MethodPreconditionError):
    """The reasonable parameter bound needs at least one comparison."""


class DisconnectedProblem(MethodPreconditionError):
    """Least squares needs a connected comparison multigraph."""


class ReducibleProblem(MethodPreconditionError):
    """Fair bets needs a strongly connected results digraph."""


class InvalidEpsilon(MethodPreconditionError):
    """The row-sum parameter must be a positive rational."""


# --- axiom audits ---------------------------------------------------------

class WitnessError(RankingError):
    """The supplied witness does not have the shape the axiom tests."""


class NotFlat(WitnessError):
    """A flatness-conditioned check was given a non-flat problem."""


class MatchesMismatch(WitnessError):
    """The two problems do not play the same match schedule."""


class NotSingleDifference(WitnessError):
    """The two problems must differ in exactly one unordered pair."""


class MatchesChanged(WitnessError):
    """The edited pair must keep its number of matches."""


class MissingPermutation(WitnessError):
    """The relabelling check needs a permutation."""


class TooFewObjects(WitnessError):
    """Independence checks need a pair disjoint from the edited one."""


class PreconditionUnmet(RankingError):
    """The audited method is undefined on one of the witness problems."""


# --- input/output ---------------------------------------------------------

class ParseError(RankingError):
    """A problem file could not be parsed."""


class UnknownExample(RankingError):
    """No built-in worked example has that number."""
