"""Axiom checks for rating methods, run against explicit witnesses.

Nine properties are supported, in three families:

* invariance of a single problem: relabelling equivariance (NEU), flat
  ratings on flat problems (SYM), order reversal under result reversal
  (INV);
* additivity over a pair of problems on the same objects: consistency
  of the order under summation (CS), flatness preservation (FP),
  preservation of pairwise rating ties (EP), and consistency restricted
  to pairs playing the same schedule (RCS);
* independence over a pair of problems differing in one edited pair:
  the relative order of two untouched objects must not move, whether
  the edit changes the number of matches (IIM) or only the result of a
  fixed number of matches (IIR).

A check never samples anything. It takes a concrete witness, rates the
problems involved, and reports every object pair on which the required
implication fails, with exact ratings attached.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    LabelMismatch,
    MatchesChanged,
    MatchesMismatch,
    MethodPreconditionError,
    MissingPermutation,
    NotFlat,
    NotSingleDifference,
    PreconditionUnmet,
    TooFewObjects,
)
from .methods import Method, RatingVector
from .model import (
    Permutation,
    RankingProblem,
    derive,
    flat_results,
    negate,
    permute,
    sum_problems,
)


class AxiomKind(Enum):
    INVARIANCE = "invariance"
    ADDITIVITY = "additivity"
    INDEPENDENCE = "independence"


class Axiom(Enum):
    NEU = ("NEU", AxiomKind.INVARIANCE, "relabelling invariance")
    SYM = ("SYM", AxiomKind.INVARIANCE, "flat problems rated flat")
    INV = ("INV", AxiomKind.INVARIANCE, "reversal of results reverses the order")
    CS = ("CS", AxiomKind.ADDITIVITY, "order consistency under summation")
    FP = ("FP", AxiomKind.ADDITIVITY, "flatness preserved by summation")
    EP = ("EP", AxiomKind.ADDITIVITY, "pairwise ties preserved by summation")
    RCS = ("RCS", AxiomKind.ADDITIVITY, "order consistency under same-schedule summation")
    IIM = ("IIM", AxiomKind.INDEPENDENCE, "matches of an outside pair do not matter")
    IIR = ("IIR", AxiomKind.INDEPENDENCE, "results of an outside pair do not matter")

    def __init__(self, ident: str, kind: AxiomKind, title: str):
        self.ident = ident
        self.kind = kind
        self.title = title

    @classmethod
    def from_id(cls, ident: str) -> "Axiom":
        try:
            return cls[ident.upper()]
        except KeyError:
            raise ValueError(f"unknown axiom {ident!r}") from None


@dataclass(frozen=True)
class SingleWitness:
    problem: RankingProblem
    permutation: Permutation | None = None


@dataclass(frozen=True)
class PairWitness:
    first: RankingProblem
    second: RankingProblem


@dataclass(frozen=True)
class ChangedPairWitness:
    first: RankingProblem
    second: RankingProblem
    pair: tuple[int, int]


Witness = SingleWitness | PairWitness | ChangedPairWitness


@dataclass(frozen=True)
class Violation:
    """One object pair on which the axiom's implication fails."""

    objects: tuple[int, int]
    labels: tuple[str, str]
    premise: str
    outcome: str

    def describe(self) -> str:
        return f"{self.labels[0]} vs {self.labels[1]}: {self.premise}, but {self.outcome}"


@dataclass(frozen=True)
class AuditReport:
    axiom: Axiom
    method: str
    context: str
    violations: tuple[Violation, ...]
    ratings: tuple[RatingVector, ...]

    @property
    def satisfied(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "satisfied" if self.satisfied else "violated"


def _sign(value) -> int:
    return (value > 0) - (value < 0)


def _is_flat(values) -> bool:
    return all(v == values[0] for v in values)


def _compare(values, i: int, j: int) -> int:
    return _sign(values[i] - values[j])


_REL = {-1: "<", 0: "=", 1: ">"}


def _rate(method: Method, problem: RankingProblem, role: str) -> RatingVector:
    try:
        return method.rate(problem)
    except MethodPreconditionError as exc:
        raise PreconditionUnmet(f"{method.label} is undefined on {role}: {exc}") from exc


# --- shared comparison cores ----------------------------------------------
#
# The counterexample search evaluates the same logic on cheap value
# tuples, so the pairwise cores work on any indexable values that
# support exact comparison and live here as plain functions.

def invariance_failures(axiom: Axiom, before, after, sigma: Permutation | None = None):
    """Pairs (i, j) with i < j on which an invariance axiom fails."""
    n = len(before)
    bad = []
    for i in range(n):
        for j in range(i + 1, n):
            c = _compare(before, i, j)
            if axiom is Axiom.NEU:
                moved = _compare(after, sigma(i), sigma(j))
                if c != moved:
                    bad.append((i, j))
            elif axiom is Axiom.SYM:
                if c != 0:
                    bad.append((i, j))
            elif axiom is Axiom.INV:
                if c != -_compare(after, i, j):
                    bad.append((i, j))
            else:
                raise ValueError(f"{axiom.ident} is not an invariance axiom")
    return bad


def _direction_holds(c1: int, c2: int, ct: int) -> bool:
    # Premise "at least as good in both inputs"; conclusion must hold in
    # the sum, strictly when either input comparison is strict.
    if c1 < 0 or c2 < 0:
        return True
    if c1 > 0 or c2 > 0:
        return ct > 0
    return ct >= 0


def additivity_failures(axiom: Axiom, first, second, total):
    """Pairs (i, j) with i < j on which an additivity axiom fails."""
    n = len(total)
    bad = []
    for i in range(n):
        for j in range(i + 1, n):
            c1 = _compare(first, i, j)
            c2 = _compare(second, i, j)
            ct = _compare(total, i, j)
            if axiom in (Axiom.CS, Axiom.RCS):
                ok = _direction_holds(c1, c2, ct) and _direction_holds(-c1, -c2, -ct)
            elif axiom in (Axiom.EP, Axiom.FP):
                ok = ct == 0 if (c1 == 0 and c2 == 0) else True
            else:
                raise ValueError(f"{axiom.ident} is not an additivity axiom")
            if not ok:
                bad.append((i, j))
    return bad


def independence_failures(first, second, pair):
    """Pairs disjoint from the edited one whose relative order moved."""
    n = len(first)
    k, l = pair
    bad = []
    for i in range(n):
        if i in (k, l):
            continue
        for j in range(i + 1, n):
            if j in (k, l):
                continue
            if _compare(first, i, j) != _compare(second, i, j):
                bad.append((i, j))
    return bad


# --- the three checkers ----------------------------------------------------

def check_invariance(axiom: Axiom, method: Method, witness: SingleWitness) -> AuditReport:
    """Audit NEU, SYM or INV on one problem.

    NEU needs the witness to carry a permutation; SYM rejects problems
    whose results are not flat, since the axiom says nothing there.
    """
    if axiom.kind is not AxiomKind.INVARIANCE:
        raise ValueError(f"{axiom.ident} takes a different witness shape")
    problem = witness.problem
    labels = problem.labels
    if axiom is Axiom.NEU:
        sigma = witness.permutation
        if sigma is None:
            raise MissingPermutation("relabelling invariance needs a permutation")
        moved = permute(problem, sigma)
        before = _rate(method, problem, "the problem")
        after = _rate(method, moved, "the relabelled problem")
        bad = invariance_failures(axiom, before.values, after.values, sigma)
        context = f"relabelling {tuple(v + 1 for v in sigma.image)}"
        violations = tuple(
            Violation(
                (i, j),
                (labels[i], labels[j]),
                f"{labels[i]} {_REL[_compare(before.values, i, j)]} {labels[j]} originally",
                f"{labels[i]} {_REL[_compare(after.values, sigma(i), sigma(j))]} {labels[j]}"
                " after relabelling",
            )
            for i, j in bad
        )
        return AuditReport(axiom, method.label, context, violations, (before, after))
    if axiom is Axiom.SYM:
        if not flat_results(problem):
            raise NotFlat("symmetry is only about problems with flat results")
        rating = _rate(method, problem, "the problem")
        bad = invariance_failures(axiom, rating.values, rating.values)
        violations = tuple(
            Violation(
                (i, j),
                (labels[i], labels[j]),
                "all results are flat",
                f"{labels[i]} {_REL[_compare(rating.values, i, j)]} {labels[j]}",
            )
            for i, j in bad
        )
        return AuditReport(axiom, method.label, "flat problem", violations, (rating,))
    if axiom is Axiom.INV:
        before = _rate(method, problem, "the problem")
        after = _rate(method, negate(problem), "the reversed problem")
        bad = invariance_failures(axiom, before.values, after.values)
        violations = tuple(
            Violation(
                (i, j),
                (labels[i], labels[j]),
                f"{labels[i]} {_REL[_compare(before.values, i, j)]} {labels[j]} originally",
                f"{labels[i]} {_REL[_compare(after.values, i, j)]} {labels[j]}"
                " after reversing every result",
            )
            for i, j in bad
        )
        return AuditReport(axiom, method.label, "reversed results", violations, (before, after))
    raise ValueError(f"unhandled invariance axiom {axiom.ident}")


def check_additivity(axiom: Axiom, method: Method, witness: PairWitness) -> AuditReport:
    """Audit CS, FP, EP or RCS on a pair of problems and their sum."""
    if axiom.kind is not AxiomKind.ADDITIVITY:
        raise ValueError(f"{axiom.ident} takes a different witness shape")
    first, second = witness.first, witness.second
    if first.labels != second.labels:
        raise LabelMismatch("the two problems must rank the same objects")
    if axiom is Axiom.RCS and derive(first).matches != derive(second).matches:
        raise MatchesMismatch("restricted consistency needs identical match schedules")
    labels = first.labels
    f = _rate(method, first, "the first problem")
    g = _rate(method, second, "the second problem")
    if axiom is Axiom.FP and not (_is_flat(f.values) and _is_flat(g.values)):
        raise NotFlat("flatness preservation is only about inputs rated flat")
    total = _rate(method, sum_problems(first, second), "the summed problem")
    bad = additivity_failures(axiom, f.values, g.values, total.values)
    violations = tuple(
        Violation(
            (i, j),
            (labels[i], labels[j]),
            f"{labels[i]} {_REL[_compare(f.values, i, j)]} {labels[j]} and"
            f" {labels[i]} {_REL[_compare(g.values, i, j)]} {labels[j]} in the inputs",
            f"{labels[i]} {_REL[_compare(total.values, i, j)]} {labels[j]} in the sum",
        )
        for i, j in bad
    )
    return AuditReport(axiom, method.label, "pair of problems and their sum", violations, (f, g, total))


def check_independence(axiom: Axiom, method: Method, witness: ChangedPairWitness) -> AuditReport:
    """Audit IIM or IIR on two problems differing in one edited pair."""
    if axiom.kind is not AxiomKind.INDEPENDENCE:
        raise ValueError(f"{axiom.ident} takes a different witness shape")
    first, second = witness.first, witness.second
    if first.labels != second.labels:
        raise LabelMismatch("the two problems must rank the same objects")
    n = first.size
    if n < 4:
        raise TooFewObjects("independence needs a pair disjoint from the edited one")
    k, l = witness.pair
    if not (0 <= k < n and 0 <= l < n) or k == l:
        raise ValueError(f"edited pair {witness.pair} is not a pair of distinct objects")
    k, l = min(k, l), max(k, l)
    t1, t2 = first.tournament, second.tournament
    for i in range(n):
        for j in range(i + 1, n):
            same = t1[i][j] == t2[i][j] and t1[j][i] == t2[j][i]
            if (i, j) == (k, l):
                if same:
                    raise NotSingleDifference("the edited pair's comparisons are identical")
            elif not same:
                raise NotSingleDifference(
                    f"problems also differ on {first.labels[i]} vs {first.labels[j]}"
                )
    if axiom is Axiom.IIR and t1[k][l] + t1[l][k] != t2[k][l] + t2[l][k]:
        raise MatchesChanged("the edit must keep the pair's number of matches")
    labels = first.labels
    f = _rate(method, first, "the original problem")
    g = _rate(method, second, "the edited problem")
    bad = independence_failures(f.values, g.values, (k, l))
    violations = tuple(
        Violation(
            (i, j),
            (labels[i], labels[j]),
            f"{labels[i]} {_REL[_compare(f.values, i, j)]} {labels[j]} before editing"
            f" {labels[k]} vs {labels[l]}",
            f"{labels[i]} {_REL[_compare(g.values, i, j)]} {labels[j]} after",
        )
        for i, j in bad
    )
    context = f"edited pair {labels[k]} vs {labels[l]}"
    return AuditReport(axiom, method.label, context, violations, (f, g))


def run_check(axiom: Axiom, method: Method, witness: Witness) -> AuditReport:
    """Dispatch a witness to the checker its axiom family requires."""
    if axiom.kind is AxiomKind.INVARIANCE:
        if not isinstance(witness, SingleWitness):
            raise TypeError(f"{axiom.ident} needs a SingleWitness")
        return check_invariance(axiom, method, witness)
    if axiom.kind is AxiomKind.ADDITIVITY:
        if not isinstance(witness, PairWitness):
            raise TypeError(f"{axiom.ident} needs a PairWitness")
        return check_additivity(axiom, method, witness)
    if not isinstance(witness, ChangedPairWitness):
        raise TypeError(f"{axiom.ident} needs a ChangedPairWitness")
    return check_independence(axiom, method, witness)
