"""Ranking problems built from generalized paired comparisons.

A ranking problem is an ordered set of labelled objects together with a
square tournament matrix of exact rationals. Entry ``t[i][j]`` is the
total score object ``i`` collected against object ``j`` over all of
their encounters, so a pair may meet any number of times (including
zero) and a single encounter may end in a draw, splitting one point
half and half. The only structural requirements are that scores are
nonnegative, nobody plays themselves, and ``t[i][j] + t[j][i]`` counts
a whole number of encounters.

All arithmetic is done with :class:`fractions.Fraction`. Floats are
rejected at construction time so no rounding error can enter a problem.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DiagonalNonZero,
    DuplicateLabel,
    FewerThanTwoObjects,
    LabelMismatch,
    NegativeEntry,
    NonIntegerPairSum,
    UnknownLabel,
)

Rational = Fraction

ZERO = Fraction(0)


def as_rational(value) -> Fraction:
    """Coerce ``value`` to an exact Fraction.

    Accepts Fraction, int, and strings such as ``"3"``, ``"-1/2"`` or
    ``"0.75"``. Floats are refused: they carry binary rounding error and
    every quantity in this package is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}; pass a Fraction, int or string")
    return Fraction(value)


@dataclass(frozen=True)
class RankingProblem:
    """Labelled objects plus their tournament matrix.

    The constructor normalizes rows to tuples of Fractions and checks
    every structural invariant, so an instance that exists is valid.
    """

    labels: tuple[str, ...]
    tournament: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        labels = tuple(str(label) for label in self.labels)
        if len(labels) < 2:
            raise FewerThanTwoObjects(f"need at least two objects, got {len(labels)}")
        if len(set(labels)) != len(labels):
            raise DuplicateLabel(f"labels are not distinct: {labels}")
        n = len(labels)
        rows = []
        for i, row in enumerate(self.tournament):
            row = tuple(as_rational(v) for v in row)
            if len(row) != n:
                raise ValueError(f"tournament row {i} has {len(row)} entries, expected {n}")
            rows.append(row)
        if len(rows) != n:
            raise ValueError(f"tournament has {len(rows)} rows, expected {n}")
        for i in range(n):
            if rows[i][i] != 0:
                raise DiagonalNonZero(f"object {labels[i]} is scored against itself")
            for j in range(n):
                if rows[i][j] < 0:
                    raise NegativeEntry(
                        f"negative score {rows[i][j]} for {labels[i]} against {labels[j]}"
                    )
                if j > i:
                    total = rows[i][j] + rows[j][i]
                    if total.denominator != 1:
                        raise NonIntegerPairSum(
                            f"{labels[i]} and {labels[j]} played {total} matches,"
                            " which is not a whole number"
                        )
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "tournament", tuple(rows))

    @property
    def size(self) -> int:
        return len(self.labels)

    def entry(self, i: int, j: int) -> Fraction:
        return self.tournament[i][j]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabel(f"no object labelled {label!r}") from None


@dataclass(frozen=True)
class DerivedStructure:
    """Matrices derived from a tournament: results, matches, Laplacian."""

    results: tuple[tuple[Fraction, ...], ...]
    matches: tuple[tuple[int, ...], ...]
    laplacian: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]
    max_matches: int


def build_problem(labels: Iterable, entries: Iterable[tuple]) -> RankingProblem:
    """Assemble a problem from (label_i, label_j, score) contributions.

    ``labels`` fixes the object order. Each entry adds ``score`` to the
    running total of the first label against the second, so repeated
    mentions of a pair accumulate. Pairs never mentioned stay at zero.
    """
    labels = tuple(str(label) for label in labels)
    index = {label: k for k, label in enumerate(labels)}
    n = len(labels)
    totals = [[ZERO] * n for _ in range(n)]
    for entry in entries:
        try:
            ref_i, ref_j, value = entry
        except (TypeError, ValueError):
            raise ValueError(f"entry {entry!r} is not a (label, label, score) triple") from None
        try:
            i = index[str(ref_i)]
            j = index[str(ref_j)]
        except KeyError as exc:
            raise UnknownLabel(f"entry references unknown label {exc.args[0]!r}") from None
        totals[i][j] += as_rational(value)
    return RankingProblem(labels, tuple(tuple(row) for row in totals))


def derive(problem: RankingProblem) -> DerivedStructure:
    """Compute results A = T - T^t, matches M = T + T^t and the Laplacian.

    Match counts are integers by the pair-sum invariant, and the
    Laplacian is L = diag(degrees) - M where a degree is the total
    number of matches an object played.
    """
    t = problem.tournament
    n = problem.size
    results = tuple(tuple(t[i][j] - t[j][i] for j in range(n)) for i in range(n))
    matches = tuple(tuple(int(t[i][j] + t[j][i]) for j in range(n)) for i in range(n))
    degrees = tuple(sum(row) for row in matches)
    laplacian = tuple(
        tuple(degrees[i] - matches[i][i] if i == j else -matches[i][j] for j in range(n))
        for i in range(n)
    )
    max_matches = max(max(row) for row in matches)
    return DerivedStructure(results, matches, laplacian, degrees, max_matches)


def negate(problem: RankingProblem) -> RankingProblem:
    """Swap every result: the transposed tournament on the same objects."""
    n = problem.size
    t = problem.tournament
    return RankingProblem(problem.labels, tuple(tuple(t[j][i] for j in range(n)) for i in range(n)))


def sum_problems(first: RankingProblem, second: RankingProblem) -> RankingProblem:
    """Entrywise sum of two tournaments over the same labelled objects."""
    if first.labels != second.labels:
        raise LabelMismatch(f"label sets differ: {first.labels} vs {second.labels}")
    rows = tuple(
        tuple(a + b for a, b in zip(ra, rb))
        for ra, rb in zip(first.tournament, second.tournament)
    )
    return RankingProblem(first.labels, rows)


@dataclass(frozen=True)
class Permutation:
    """A relabelling of n objects; ``image[i]`` is where object i moves."""

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"{image} is not a permutation of 0..{len(image) - 1}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_one_based(cls, images: Iterable[int]) -> "Permutation":
        return cls(tuple(int(v) - 1 for v in images))

    def __call__(self, i: int) -> int:
        return self.image[i]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for i, v in enumerate(self.image):
            inv[v] = i
        return Permutation(tuple(inv))

    @property
    def size(self) -> int:
        return len(self.image)


def permute(problem: RankingProblem, sigma: Permutation) -> RankingProblem:
    """Relabel objects by sigma, moving scores with them.

    The returned problem satisfies new_t[sigma(i)][sigma(j)] = t[i][j]
    and carries label i to position sigma(i).
    """
    n = problem.size
    if sigma.size != n:
        raise ValueError(f"permutation acts on {sigma.size} objects, problem has {n}")
    labels = [""] * n
    rows = [[ZERO] * n for _ in range(n)]
    t = problem.tournament
    for i in range(n):
        labels[sigma(i)] = problem.labels[i]
        for j in range(n):
            rows[sigma(i)][sigma(j)] = t[i][j]
    return RankingProblem(tuple(labels), tuple(tuple(row) for row in rows))


def _bfs(n: int, neighbours) -> set[int]:
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in neighbours(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def is_connected(problem: RankingProblem) -> bool:
    """True when the undirected matches multigraph has a single component."""
    t = problem.tournament
    n = problem.size

    def neighbours(v):
        return [w for w in range(n) if w != v and (t[v][w] > 0 or t[w][v] > 0)]

    return len(_bfs(n, neighbours)) == n


def is_irreducible(problem: RankingProblem) -> bool:
    """True when the directed "scored against" graph is strongly connected.

    There is an arc i -> j whenever t[i][j] > 0. Strong connectivity is
    checked by reaching every vertex from vertex 0 along arcs and again
    along reversed arcs.
    """
    t = problem.tournament
    n = problem.size

    def forward(v):
        return [w for w in range(n) if t[v][w] > 0]

    def backward(v):
        return [w for w in range(n) if t[w][v] > 0]

    return len(_bfs(n, forward)) == n and len(_bfs(n, backward)) == n


def is_round_robin(problem: RankingProblem) -> bool:
    """True when every pair met the same positive number of times."""
    t = problem.tournament
    n = problem.size
    count = t[0][1] + t[1][0]
    if count <= 0:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            if t[i][j] + t[j][i] != count:
                return False
    return True


def flat_results(problem: RankingProblem) -> bool:
    """True when every comparison ended balanced, t[i][j] == t[j][i]."""
    t = problem.tournament
    n = problem.size
    return all(t[i][j] == t[j][i] for i in range(n) for j in range(i + 1, n))
