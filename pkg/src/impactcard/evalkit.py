"""Instruments for studying how well cards and reports work with readers.

Covers the System Usability Scale, a five-criterion reading rubric with
exact-match inter-rater agreement, a word-count screen for recruitment
emails, and a Mann-Whitney U test that is exact for small samples.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .lint import split_words

__all__ = [
    "SusResponse",
    "RubricAssessment",
    "LengthFinding",
    "sus_score",
    "rubric_overall",
    "inter_rater_agreement",
    "email_length_check",
    "mann_whitney_exact",
    "read_sus_csv",
    "read_rubric_csv",
    "read_values_csv",
]

EMAIL_WORDS_MIN = 50
EMAIL_WORDS_MAX = 250

# beyond this total sample size the exact null distribution gives way to the
# normal approximation
EXACT_LIMIT = 20

RUBRIC_CRITERIA = ("context", "recommendation", "risks", "mitigations", "clarity")


def _check_answer(value: object, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{what} must be an integer in 1..5; got {value!r}")
    if not 1 <= value <= 5:
        raise ValueError(f"{what} must be an integer in 1..5; got {value!r}")
    return value


@dataclass(frozen=True, slots=True)
class SusResponse:
    """One filled questionnaire: ten answers on the 1..5 agreement scale."""

    items: tuple[int, ...]

    def __post_init__(self) -> None:
        items = tuple(self.items)
        if len(items) != 10:
            raise ValueError(f"a response has 10 items; got {len(items)}")
        for position, value in enumerate(items, start=1):
            _check_answer(value, f"item {position}")
        object.__setattr__(self, "items", items)


def sus_score(response: SusResponse | Sequence[int]) -> float:
    """Score one response on the 0..100 scale.

    Odd-numbered items state something positive, so they contribute
    (answer - 1); even-numbered items are negative statements and
    contribute (5 - answer). The contribution sum is stretched by 2.5.
    """
    if not isinstance(response, SusResponse):
        response = SusResponse(items=tuple(response))
    total = 0
    for position, value in enumerate(response.items, start=1):
        total += value - 1 if position % 2 == 1 else 5 - value
    return 2.5 * total


@dataclass(frozen=True, slots=True)
class RubricAssessment:
    """One rater's 1..5 judgement of a card reading, per criterion."""

    context: int
    recommendation: int
    risks: int
    mitigations: int
    clarity: int

    def __post_init__(self) -> None:
        for criterion in RUBRIC_CRITERIA:
            _check_answer(getattr(self, criterion), criterion)

    def scores(self) -> tuple[int, int, int, int, int]:
        return (self.context, self.recommendation, self.risks, self.mitigations, self.clarity)


def rubric_overall(assessment: RubricAssessment) -> int:
    """Overall score is the weakest criterion, not the average."""
    return min(assessment.scores())


def inter_rater_agreement(first: Sequence[int], second: Sequence[int]) -> float:
    """Fraction of positions where two raters gave the same score."""
    if len(first) != len(second):
        raise ValueError(f"length mismatch: {len(first)} vs {len(second)}")
    if not first:
        raise ValueError("agreement needs at least one pair of ratings")
    matches = sum(1 for a, b in zip(first, second) if a == b)
    return matches / len(first)


@dataclass(frozen=True, slots=True)
class LengthFinding:
    """Why an email text fell outside the recruiting length window."""

    measured: int
    low: int
    high: int
    message: str


def email_length_check(text: str) -> LengthFinding | None:
    """None when the text is 50..250 words long, else a finding."""
    count = len(split_words(text))
    if count < EMAIL_WORDS_MIN:
        return LengthFinding(
            measured=count, low=EMAIL_WORDS_MIN, high=EMAIL_WORDS_MAX,
            message=f"email is {count} words; at least {EMAIL_WORDS_MIN} are needed",
        )
    if count > EMAIL_WORDS_MAX:
        return LengthFinding(
            measured=count, low=EMAIL_WORDS_MIN, high=EMAIL_WORDS_MAX,
            message=f"email is {count} words; at most {EMAIL_WORDS_MAX} are allowed",
        )
    return None


# --- Mann-Whitney U ---------------------------------------------------------------


def _doubled_midranks(values: list[float]) -> list[int]:
    # midranks of a sorted merge can be half-integers; doubling keeps the
    # arithmetic in exact integers
    order = sorted(range(len(values)), key=lambda i: values[i])
    doubled = [0] * len(values)
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and values[order[j + 1]] == values[order[i]]:
            j += 1
        # ranks i+1 .. j+1 share the midrank; doubled midrank = (i+1) + (j+1)
        for k in range(i, j + 1):
            doubled[order[k]] = i + j + 2
        i = j + 1
    return doubled


def _exact_p(doubled: list[int], n1: int, observed_sum: int) -> Fraction:
    # distribution of the doubled rank sum over all ways to pick n1 of the
    # N pooled ranks, by dynamic programming
    total = sum(doubled)
    table = [[0] * (total + 1) for _ in range(n1 + 1)]
    table[0][0] = 1
    for rank in doubled:
        for picked in range(n1, 0, -1):
            row = table[picked]
            prev = table[picked - 1]
            for value in range(total, rank - 1, -1):
                if prev[value - rank]:
                    row[value] += prev[value - rank]
    counts = table[n1]
    at_most = sum(counts[: observed_sum + 1])
    at_least = sum(counts[observed_sum:])
    combinations = math.comb(len(doubled), n1)
    p = 2 * Fraction(min(at_most, at_least), combinations)
    return min(p, Fraction(1))


def mann_whitney_exact(first: Sequence[float], second: Sequence[float]) -> tuple[float, float]:
    """Two-sided Mann-Whitney U test.

    Returns (U, p) where U is the smaller of the two U statistics. With 20
    or fewer values in total the p-value comes from the exact permutation
    distribution of the rank sum (ties handled by midranks); larger samples
    use the normal approximation with tie correction and a continuity
    correction of one half.
    """
    xs = [float(v) for v in first]
    ys = [float(v) for v in second]
    if not xs or not ys:
        raise ValueError("each sample needs at least one value")
    for value in xs + ys:
        if math.isnan(value) or math.isinf(value):
            raise ValueError(f"values must be finite; got {value!r}")

    n1, n2 = len(xs), len(ys)
    total = n1 + n2
    doubled = _doubled_midranks(xs + ys)
    doubled_sum_first = sum(doubled[:n1])

    # doubled rank sum 2*R1 relates to U1 by 2*U1 = 2*R1 - n1*(n1+1)
    u1_doubled = doubled_sum_first - n1 * (n1 + 1)
    u1 = u1_doubled / 2
    u2 = n1 * n2 - u1
    u = min(u1, u2)

    if total <= EXACT_LIMIT:
        p = float(_exact_p(doubled, n1, doubled_sum_first))
        return (u, p)

    tie_sizes: dict[int, int] = {}
    for rank in doubled:
        tie_sizes[rank] = tie_sizes.get(rank, 0) + 1
    tie_term = sum(size**3 - size for size in tie_sizes.values())
    mean = n1 * n2 / 2
    variance = n1 * n2 / 12 * ((total + 1) - tie_term / (total * (total - 1)))
    if variance <= 0:
        return (u, 1.0)
    z = (abs(u1 - mean) - 0.5) / math.sqrt(variance)
    if z < 0:
        z = 0.0
    p = math.erfc(z / math.sqrt(2))
    return (u, min(1.0, max(p, 5e-324)))


# --- CSV input --------------------------------------------------------------------

SUS_HEADER = ("id", *(f"item{i}" for i in range(1, 11)))
RUBRIC_HEADER = ("id", *RUBRIC_CRITERIA)
VALUES_HEADER = ("id", "value")


def _open_rows(path: str | Path, expected_header: tuple[str, ...]):
    path = Path(path)
    with path.open("r", encoding="utf-8", newline="") as handle:
        rows = list(csv.reader(handle))
    if not rows:
        raise ValueError(f"{path}: empty file, expected header {','.join(expected_header)}")
    header = tuple(cell.strip() for cell in rows[0])
    if header != expected_header:
        raise ValueError(
            f"{path}: bad header {','.join(header)}; expected {','.join(expected_header)}"
        )
    body = []
    for number, row in enumerate(rows[1:], start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(expected_header):
            raise ValueError(
                f"{path}, line {number}: expected {len(expected_header)} columns, got {len(row)}"
            )
        body.append((number, [cell.strip() for cell in row]))
    if not body:
        raise ValueError(f"{path}: no data rows")
    return path, body


def _int_cell(path: Path, number: int, column: str, cell: str) -> int:
    try:
        return int(cell)
    except ValueError:
        raise ValueError(f"{path}, line {number}: {column} must be an integer; got '{cell}'") from None


def read_sus_csv(path: str | Path) -> list[tuple[str, SusResponse]]:
    """Read questionnaire rows: id,item1..item10 with answers in 1..5."""
    path, body = _open_rows(path, SUS_HEADER)
    out = []
    for number, row in body:
        answers = tuple(
            _int_cell(path, number, f"item{i}", cell)
            for i, cell in enumerate(row[1:], start=1)
        )
        try:
            out.append((row[0], SusResponse(items=answers)))
        except ValueError as exc:
            raise ValueError(f"{path}, line {number}: {exc}") from None
    return out


def read_rubric_csv(path: str | Path) -> list[tuple[str, RubricAssessment]]:
    """Read rubric rows: id,context,recommendation,risks,mitigations,clarity."""
    path, body = _open_rows(path, RUBRIC_HEADER)
    out = []
    for number, row in body:
        scores = {
            criterion: _int_cell(path, number, criterion, cell)
            for criterion, cell in zip(RUBRIC_CRITERIA, row[1:])
        }
        try:
            out.append((row[0], RubricAssessment(**scores)))
        except ValueError as exc:
            raise ValueError(f"{path}, line {number}: {exc}") from None
    return out


def read_values_csv(path: str | Path) -> list[tuple[str, float]]:
    """Read measurement rows: id,value with finite numeric values."""
    path, body = _open_rows(path, VALUES_HEADER)
    out = []
    for number, row in body:
        try:
            value = float(row[1])
        except ValueError:
            raise ValueError(f"{path}, line {number}: value must be a number; got '{row[1]}'") from None
        if math.isnan(value) or math.isinf(value):
            raise ValueError(f"{path}, line {number}: value must be finite; got '{row[1]}'")
        out.append((row[0], value))
    return out
