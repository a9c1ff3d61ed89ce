"""Rating methods for ranking problems.

Six procedures, all exact:

* ``score``: net results, row sums of A.
* ``generalized_row_sum``: the parametric correction x(eps) solving
  (I + eps L) x = (1 + eps m n) s, which interpolates between the score
  (eps -> 0) and, after scaling by 1/(m n), least squares (eps -> inf).
* ``least_squares``: potential q with L q = s centred by e^T q = 0.
* ``fair_bets``: the positive fixed point of redistributing wins
  against losses, defined on strongly connected problems.
* ``dual_fair_bets``: the same construction applied to the reversed
  problem, negated, so it punishes losses the way fair bets rewards
  wins.
* ``copeland_fair_bets``: the sum of the two, a compromise rating.

Every function returns a :class:`RatingVector`; ties in it are real
ties, since nothing is rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import (
    DisconnectedProblem,
    InvalidEpsilon,
    NoComparisons,
    ReducibleProblem,
    UndefinedForSmallN,
)
from .model import (
    RankingProblem,
    as_rational,
    derive,
    is_connected,
    is_irreducible,
    negate,
)

ZERO = Fraction(0)
ONE = Fraction(1)

METHOD_KEYS = ("score", "grs", "ls", "fb", "dfb", "cfb")

REASONABLE = "reasonable"


@dataclass(frozen=True)
class RatingVector:
    """Exact ratings for the objects of one problem, best is largest."""

    method: str
    labels: tuple[str, ...]
    values: tuple[Fraction, ...]
    epsilon: Fraction | None = None

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]


@dataclass(frozen=True)
class WeakOrder:
    """Objects grouped into tiers, best tier first, ties inside a tier."""

    tiers: tuple[tuple[int, ...], ...]

    def describe(self, labels: tuple[str, ...]) -> str:
        return " > ".join(" = ".join(labels[i] for i in tier) for tier in self.tiers)


def ranking(rating: RatingVector) -> WeakOrder:
    """Collapse a rating vector into its weak order."""
    order = sorted(range(len(rating.values)), key=lambda i: (rating.values[i], -i), reverse=True)
    tiers: list[list[int]] = []
    for i in order:
        if tiers and rating.values[tiers[-1][0]] == rating.values[i]:
            tiers[-1].append(i)
        else:
            tiers.append([i])
    return WeakOrder(tuple(tuple(sorted(tier)) for tier in tiers))


def score(problem: RankingProblem) -> RatingVector:
    """Net result of each object: wins minus losses, summed over all pairs."""
    t = problem.tournament
    n = problem.size
    values = tuple(sum((t[i][j] - t[j][i] for j in range(n)), ZERO) for i in range(n))
    return RatingVector("score", problem.labels, values)


def reasonable_epsilon(problem: RankingProblem) -> Fraction:
    """Upper bound 1 / (m (n - 2)) below which the row-sum correction stays mild.

    Undefined with two objects (the bound would divide by zero) and
    meaningless without comparisons.
    """
    n = problem.size
    if n < 3:
        raise UndefinedForSmallN("the reasonable bound needs at least three objects")
    m = derive(problem).max_matches
    if m == 0:
        raise NoComparisons("no pair has played, the bound is undefined")
    return Fraction(1, m * (n - 2))


def _checked_epsilon(epsilon) -> Fraction:
    try:
        value = as_rational(epsilon)
    except (TypeError, ValueError) as exc:
        raise InvalidEpsilon(str(exc)) from None
    if value <= 0:
        raise InvalidEpsilon(f"epsilon must be positive, got {value}")
    return value


def generalized_row_sum(problem: RankingProblem, epsilon) -> RatingVector:
    """Solve (I + eps L) x = (1 + eps m n) s exactly.

    The parameter must be a positive rational; the coefficient matrix
    is then strictly diagonally dominant, hence nonsingular, so the
    system always has a unique solution.
    """
    eps = _checked_epsilon(epsilon)
    d = derive(problem)
    n = problem.size
    s = score(problem)
    a = [
        [ONE + eps * d.laplacian[i][j] if i == j else eps * d.laplacian[i][j] for j in range(n)]
        for i in range(n)
    ]
    multiplier = ONE + eps * d.max_matches * n
    b = [multiplier * v for v in s.values]
    x = linalg.solve(a, b)
    return RatingVector("grs", problem.labels, tuple(x), epsilon=eps)


def least_squares(problem: RankingProblem) -> RatingVector:
    """Potential ratings q with L q = s, centred so the total is zero.

    Needs a connected comparison multigraph; otherwise components could
    drift against each other and the system has no meaning (and no
    unique centred solution).
    """
    if not is_connected(problem):
        raise DisconnectedProblem("comparison multigraph is not connected")
    d = derive(problem)
    n = problem.size
    s = score(problem)
    a = [[Fraction(v) for v in row] for row in d.laplacian]
    b = [Fraction(v) for v in s.values]
    a[n - 1] = [ONE] * n
    b[n - 1] = ZERO
    q = linalg.solve(a, b)
    residual = linalg.mat_vec(d.laplacian, q)
    if any(r != v for r, v in zip(residual, s.values)) or sum(q, ZERO) != 0:
        raise RuntimeError("internal: constrained solve left a nonzero residual")
    return RatingVector("ls", problem.labels, tuple(q))


def _fair_bets_values(problem: RankingProblem) -> tuple[Fraction, ...]:
    if not is_irreducible(problem):
        raise ReducibleProblem("results digraph is not strongly connected")
    t = problem.tournament
    n = problem.size
    losses = [sum((t[j][i] for j in range(n)), ZERO) for i in range(n)]
    a = [
        [t[i][j] - losses[i] if i == j else t[i][j] for j in range(n)]
        for i in range(n)
    ]
    v = linalg.nullspace_1d(a)
    positive = all(x > 0 for x in v)
    negative = all(x < 0 for x in v)
    if not (positive or negative):
        raise RuntimeError("internal: fixed-point vector changes sign")
    total = sum(v, ZERO)
    values = tuple(x / total for x in v)
    if sum(values, ZERO) != 1 or any(x <= 0 for x in values):
        raise RuntimeError("internal: fixed-point normalization failed")
    return values


def fair_bets(problem: RankingProblem) -> RatingVector:
    """The positive unit-sum fixed point of T v = diag(losses) v.

    Each object's rating is the share of a stake that flows to it when
    every object keeps redistributing its stake to the objects it lost
    points to, in proportion to those losses. Strong connectivity of
    the results digraph makes the fixed point unique and positive.
    """
    return RatingVector("fb", problem.labels, _fair_bets_values(problem))


def dual_fair_bets(problem: RankingProblem) -> RatingVector:
    """Fair bets of the reversed problem, negated.

    Reversing every result turns wins into losses; rating the reversed
    problem and flipping the sign yields a method that blames losses
    instead of crediting wins. Entries are negative and sum to -1.
    """
    values = _fair_bets_values(negate(problem))
    return RatingVector("dfb", problem.labels, tuple(-x for x in values))


def copeland_fair_bets(problem: RankingProblem) -> RatingVector:
    """Sum of fair bets and dual fair bets, rewarding wins and punishing losses."""
    win_side = _fair_bets_values(problem)
    loss_side = _fair_bets_values(negate(problem))
    values = tuple(w - l for w, l in zip(win_side, loss_side))
    return RatingVector("cfb", problem.labels, values)


@dataclass(frozen=True)
class Method:
    """A rating method plus, for the row sum, its parameter.

    ``epsilon`` may be a rational, the string ``"reasonable"`` to use
    each problem's own bound 1/(m (n-2)), or None for methods that take
    no parameter.
    """

    key: str
    epsilon: Fraction | str | None = None

    def __post_init__(self):
        if self.key not in METHOD_KEYS:
            raise ValueError(f"unknown method {self.key!r}, expected one of {METHOD_KEYS}")
        if self.key == "grs":
            if self.epsilon is None:
                raise ValueError("the generalized row sum needs an epsilon")
            if self.epsilon != REASONABLE:
                object.__setattr__(self, "epsilon", _checked_epsilon(self.epsilon))
        elif self.epsilon is not None:
            raise ValueError(f"method {self.key!r} takes no epsilon")

    @property
    def label(self) -> str:
        if self.key == "grs":
            return f"grs[eps={self.epsilon}]"
        return self.key

    def rate(self, problem: RankingProblem) -> RatingVector:
        if self.key == "grs":
            eps = self.epsilon
            if eps == REASONABLE:
                eps = reasonable_epsilon(problem)
            return generalized_row_sum(problem, eps)
        return _PLAIN[self.key](problem)


_PLAIN = {
    "score": score,
    "ls": least_squares,
    "fb": fair_bets,
    "dfb": dual_fair_bets,
    "cfb": copeland_fair_bets,
}
