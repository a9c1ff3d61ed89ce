"""Reading and writing problems and ratings.

Two text formats are supported.

Match-list format: one comparison record per line, fields separated by
commas, ``label_i,label_j,t_ij,t_ji``. Lines may carry ``#`` comments,
an optional header ``i,j,tij,tji`` is ignored, repeated mentions of a
pair accumulate, and a line with two zero scores merely introduces its
objects. Objects are ordered by first appearance.

Matrix format: an optional ``labels:`` line, the object count on its
own line, then the tournament rows, entries separated by whitespace.

Rational literals are written as ``p/q``, an integer, or a decimal with
at most six fractional digits. Floats never appear: rendering uses
exact fractions plus a fixed four-decimal column rounded half to even.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import (
    DiagonalNonZero,
    NegativeEntry,
    NonIntegerPairSum,
    ParseError,
)
from .methods import RatingVector, WeakOrder, ranking
from .model import RankingProblem

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+|\.\d{1,6})?$")

_HEADER = ("i", "j", "tij", "tji")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q``, integer or short-decimal notation into a Fraction."""
    token = text.strip()
    if not _RATIONAL.match(token):
        raise ParseError(f"not a rational literal: {text!r}")
    if "/" in token and int(token.split("/", 1)[1]) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(token)


def _strip_comment(line: str) -> str:
    head, _, _ = line.partition("#")
    return head.strip()


def parse_match_list(text: str) -> RankingProblem:
    """Parse the match-list format into a problem.

    Errors carry the 1-based line number they were detected on, and the
    structural checks that can be pinned to a single record (negative
    score, self-play, fractional match count) are raised against it.
    """
    totals: dict[tuple[str, str], Fraction] = {}
    order: list[str] = []
    seen_record = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        fields = [f.strip() for f in line.split(",")]
        if not seen_record and tuple(f.lower() for f in fields) == _HEADER:
            continue
        if len(fields) != 4:
            raise ParseError(f"line {lineno}: expected 4 comma-separated fields, got {len(fields)}")
        label_i, label_j, raw_ij, raw_ji = fields
        if not label_i or not label_j:
            raise ParseError(f"line {lineno}: empty object label")
        try:
            t_ij = parse_rational(raw_ij)
            t_ji = parse_rational(raw_ji)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        seen_record = True
        if t_ij < 0 or t_ji < 0:
            raise NegativeEntry(f"line {lineno}: negative score")
        if label_i == label_j:
            if t_ij != 0 or t_ji != 0:
                raise DiagonalNonZero(f"line {lineno}: {label_i} scored against itself")
        else:
            total = t_ij + t_ji
            if total.denominator != 1:
                raise NonIntegerPairSum(
                    f"line {lineno}: {label_i} and {label_j} total {total} matches"
                )
        for label in (label_i, label_j):
            if label not in order:
                order.append(label)
        if label_i != label_j:
            totals[(label_i, label_j)] = totals.get((label_i, label_j), Fraction(0)) + t_ij
            totals[(label_j, label_i)] = totals.get((label_j, label_i), Fraction(0)) + t_ji
    if len(order) < 2:
        raise ParseError(f"found {len(order)} objects, a problem needs at least 2")
    index = {label: k for k, label in enumerate(order)}
    n = len(order)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (a, b), value in totals.items():
        rows[index[a]][index[b]] = value
    return RankingProblem(tuple(order), tuple(tuple(row) for row in rows))


def parse_matrix(text: str) -> RankingProblem:
    """Parse the matrix format into a problem."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if line:
            lines.append((lineno, line))
    if not lines:
        raise ParseError("empty matrix file")
    labels: tuple[str, ...] | None = None
    if lines[0][1].startswith("labels:"):
        labels = tuple(lines[0][1][len("labels:"):].split())
        lines = lines[1:]
        if not lines:
            raise ParseError("matrix file ends after the labels line")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"line {lineno}: expected the object count, got {head!r}") from None
    if labels is None:
        labels = tuple(f"X{i + 1}" for i in range(n))
    if len(labels) != n:
        raise ParseError(f"{len(labels)} labels for {n} objects")
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} matrix rows, found {len(body)}")
    rows = []
    for row_index, (lineno, line) in enumerate(body):
        entries = line.split()
        if len(entries) != n:
            raise ParseError(f"line {lineno}: expected {n} entries, got {len(entries)}")
        try:
            rows.append(tuple(parse_rational(e) for e in entries))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return RankingProblem(labels, tuple(rows))


def parse_problem(text: str, form: str = "matrix") -> RankingProblem:
    if form == "matches":
        return parse_match_list(text)
    if form == "matrix":
        return parse_matrix(text)
    raise ValueError(f"unknown format {form!r}, expected 'matches' or 'matrix'")


def format_exact(value: Fraction) -> str:
    return str(value)


def format_decimal4(value: Fraction) -> str:
    """Render with exactly four decimals, rounding half to even."""
    units = round(value * 10_000)
    sign = "-" if units < 0 else ""
    units = abs(units)
    return f"{sign}{units // 10_000}.{units % 10_000:04d}"


def render_matrix(problem: RankingProblem) -> str:
    """Write a problem in matrix format; parse_matrix inverts this."""
    for label in problem.labels:
        if not label or "#" in label or any(ch.isspace() for ch in label):
            raise ValueError(f"label {label!r} cannot be written in matrix format")
    lines = ["labels: " + " ".join(problem.labels), str(problem.size)]
    for row in problem.tournament:
        lines.append(" ".join(format_exact(v) for v in row))
    return "\n".join(lines) + "\n"


def render_match_list(problem: RankingProblem) -> str:
    """Write a problem as one record per unordered pair."""
    for label in problem.labels:
        if not label or "," in label or "#" in label:
            raise ValueError(f"label {label!r} cannot be written in match-list format")
    lines = ["i,j,tij,tji"]
    t = problem.tournament
    n = problem.size
    for i in range(n):
        for j in range(i + 1, n):
            lines.append(
                f"{problem.labels[i]},{problem.labels[j]},{format_exact(t[i][j])},{format_exact(t[j][i])}"
            )
    return "\n".join(lines) + "\n"


def render_rating(
    rating: RatingVector, order: WeakOrder | None = None, exact_only: bool = False
) -> str:
    """One tab-separated line per object, best first (ties by index):
    label, exact value, four-decimal value. A final line prints the weak
    order. ``exact_only`` drops the decimal column."""
    if order is None:
        order = ranking(rating)
    labels = rating.labels
    lines = []
    for tier in order.tiers:
        for i in tier:
            cells = [labels[i], format_exact(rating.values[i])]
            if not exact_only:
                cells.append(format_decimal4(rating.values[i]))
            lines.append("\t".join(cells))
    lines.append(order.describe(labels))
    return "\n".join(lines) + "\n"
