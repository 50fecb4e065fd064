"""Readability and accessibility linting for impact assessment documents.

Five rules with stable identifiers:

  L-FK-GRADE              error    card prose reads above grade 11.0
  L-PHRASE-LEN            warning  a phrase runs past 65 characters or 11 words
  L-CONTRAST              error    a theme level color falls under 4.5:1
                                   against the text printed on it (WCAG AA)
  L-EMPTY-SECTION         warning  a present-but-empty optional list
  L-STAKEHOLDER-COVERAGE  warning  nothing on the card touches the Subject

Text measurement is deterministic and documented so findings are
reproducible:

  word      maximal run of alphanumerics and apostrophes containing at least
            one alphanumeric
  sentence  segment ended by ".", "!", "?" or end of text that contains at
            least one word
  syllable  maximal vowel groups (a, e, i, o, u, y) in the lowercased word,
            minus one for a terminal silent "e" (but not "le"), floored at
            one per word
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .model import ImpactAssessment, RiskLevel, StakeholderKind, compose_header
from .theme import Theme

__all__ = [
    "FK_GRADE_LIMIT",
    "PHRASE_CHAR_LIMIT",
    "PHRASE_WORD_LIMIT",
    "CONTRAST_MINIMUM",
    "RULE_IDS",
    "LintFinding",
    "LintReport",
    "split_words",
    "count_syllables",
    "flesch_kincaid_grade",
    "phrase_length_check",
    "contrast_ratio",
    "lint_document",
]

FK_GRADE_LIMIT = 11.0
PHRASE_CHAR_LIMIT = 65
PHRASE_WORD_LIMIT = 11
CONTRAST_MINIMUM = 4.5

RULE_IDS = (
    "L-FK-GRADE",
    "L-PHRASE-LEN",
    "L-CONTRAST",
    "L-EMPTY-SECTION",
    "L-STAKEHOLDER-COVERAGE",
)


@dataclass(frozen=True, slots=True)
class LintFinding:
    rule_id: str
    severity: str  # "warning" | "error"
    path: str
    message: str
    measured: float | None = None
    threshold: float | None = None


@dataclass(frozen=True, slots=True)
class LintReport:
    findings: tuple[LintFinding, ...]
    passed: bool

    @classmethod
    def from_findings(cls, findings) -> "LintReport":
        findings = tuple(findings)
        return cls(findings=findings, passed=not any(f.severity == "error" for f in findings))


# --- text measurement ----------------------------------------------------------

_APOSTROPHES = ("'", "’")
_VOWELS = frozenset("aeiouy")
_TERMINATORS = frozenset(".!?")


def _is_word_char(ch: str) -> bool:
    return ch.isalnum() or ch in _APOSTROPHES


def split_words(text: str) -> list[str]:
    words: list[str] = []
    current: list[str] = []
    has_alnum = False
    for ch in text:
        if _is_word_char(ch):
            current.append(ch)
            has_alnum = has_alnum or ch.isalnum()
        else:
            if current and has_alnum:
                words.append("".join(current))
            current = []
            has_alnum = False
    if current and has_alnum:
        words.append("".join(current))
    return words


def count_syllables(word: str) -> int:
    bare = word.lower()
    for mark in _APOSTROPHES:
        bare = bare.replace(mark, "")
    groups = 0
    in_group = False
    for ch in bare:
        if ch in _VOWELS:
            if not in_group:
                groups += 1
            in_group = True
        else:
            in_group = False
    if groups and bare.endswith("e") and not bare.endswith("le"):
        groups -= 1
    return max(1, groups)


def _count_sentences(text: str) -> int:
    sentences = 0
    segment: list[str] = []
    for ch in text:
        if ch in _TERMINATORS:
            if split_words("".join(segment)):
                sentences += 1
            segment = []
        else:
            segment.append(ch)
    if split_words("".join(segment)):
        sentences += 1
    return sentences


def flesch_kincaid_grade(text: str) -> float:
    """Grade = max(0, 0.39·(words/sentences) + 11.8·(syllables/words) − 15.59).

    Raises ValueError("no words") for empty or wordless text.
    """
    words = split_words(text)
    if not words:
        raise ValueError("no words")
    sentences = _count_sentences(text)
    syllables = sum(count_syllables(w) for w in words)
    raw = 0.39 * (len(words) / sentences) + 11.8 * (syllables / len(words)) - 15.59
    return max(0.0, raw)


def phrase_length_check(phrase: str) -> LintFinding | None:
    """L-PHRASE-LEN warning when a phrase exceeds 65 characters or 11 words;
    the character limit is reported first when both are crossed."""
    chars = len(phrase)
    if chars > PHRASE_CHAR_LIMIT:
        return LintFinding(
            rule_id="L-PHRASE-LEN",
            severity="warning",
            path="",
            message=f"phrase runs {chars} characters; keep it at {PHRASE_CHAR_LIMIT} or fewer",
            measured=chars,
            threshold=PHRASE_CHAR_LIMIT,
        )
    words = len(split_words(phrase))
    if words > PHRASE_WORD_LIMIT:
        return LintFinding(
            rule_id="L-PHRASE-LEN",
            severity="warning",
            path="",
            message=f"phrase runs {words} words; keep it at {PHRASE_WORD_LIMIT} or fewer",
            measured=words,
            threshold=PHRASE_WORD_LIMIT,
        )
    return None


# --- contrast -------------------------------------------------------------------


def _linear_channel(value: int) -> float:
    scaled = value / 255.0
    if scaled <= 0.04045:
        return scaled / 12.92
    return ((scaled + 0.055) / 1.055) ** 2.4


def _luminance(color: str) -> float:
    raw = color.strip()
    digits = set("0123456789abcdefABCDEF")
    if not raw.startswith("#") or len(raw) != 7 or any(ch not in digits for ch in raw[1:]):
        raise ValueError(f"expected a #RRGGBB color, got {color!r}")
    r, g, b = (int(raw[i : i + 2], 16) for i in (1, 3, 5))
    return 0.2126 * _linear_channel(r) + 0.7152 * _linear_channel(g) + 0.0722 * _linear_channel(b)


def contrast_ratio(fg: str, bg: str) -> float:
    """WCAG 2.1 contrast ratio, in [1, 21] and symmetric in its arguments."""
    first = _luminance(fg)
    second = _luminance(bg)
    lighter, darker = max(first, second), min(first, second)
    return (lighter + 0.05) / (darker + 0.05)


# --- document lint ----------------------------------------------------------------


def card_prose(doc: ImpactAssessment) -> str:
    """The prose a reader works through on the card: the header sentence,
    every benefit and risk description, and every mitigation. Phrases are
    closed with a period when the author left off the terminator."""
    pieces = [compose_header(doc.profile)]
    pieces.extend(b.description for b in doc.benefits)
    for risk in doc.risks:
        pieces.append(risk.description)
        pieces.extend(risk.mitigations)
    closed = []
    for piece in pieces:
        piece = piece.strip()
        if piece and piece[-1] not in _TERMINATORS:
            piece += "."
        closed.append(piece)
    return " ".join(closed)


def _phrase_findings(doc: ImpactAssessment) -> list[LintFinding]:
    located: list[tuple[str, str]] = []
    for i, benefit in enumerate(doc.benefits):
        located.append((f"/benefits/{i}/description", benefit.description))
    for i, risk in enumerate(doc.risks):
        located.append((f"/risks/{i}/description", risk.description))
        for j, mitigation in enumerate(risk.mitigations):
            located.append((f"/risks/{i}/mitigations/{j}", mitigation))
    findings = []
    for path, phrase in located:
        finding = phrase_length_check(phrase)
        if finding is not None:
            findings.append(replace(finding, path=path))
    return findings


def lint_document(doc: ImpactAssessment, theme: Theme) -> LintReport:
    """Run every rule against a structurally valid document and a theme.

    Pure and deterministic: identical inputs yield the identical report.
    """
    findings: list[LintFinding] = []

    grade = flesch_kincaid_grade(card_prose(doc))
    if grade > FK_GRADE_LIMIT:
        findings.append(
            LintFinding(
                rule_id="L-FK-GRADE",
                severity="error",
                path="/",
                message=f"card prose reads at grade {grade:.1f}; the ceiling is {FK_GRADE_LIMIT}",
                measured=grade,
                threshold=FK_GRADE_LIMIT,
            )
        )

    findings.extend(_phrase_findings(doc))

    for level in RiskLevel:
        ratio = contrast_ratio(theme.level_colors[level], theme.text_color_on_level)
        if ratio < CONTRAST_MINIMUM:
            findings.append(
                LintFinding(
                    rule_id="L-CONTRAST",
                    severity="error",
                    path=f"/theme/level_colors/{level.value}",
                    message=(
                        f"{theme.level_colors[level]} on {theme.text_color_on_level} text "
                        f"reaches only {ratio:.2f}:1; {CONTRAST_MINIMUM}:1 is required"
                    ),
                    measured=ratio,
                    threshold=CONTRAST_MINIMUM,
                )
            )

    touches_subject = any(
        s.kind is StakeholderKind.SUBJECT for b in doc.benefits for s in b.applies_to
    ) or any(s.kind is StakeholderKind.SUBJECT for r in doc.risks for s in r.residual_relevance)
    if not touches_subject:
        findings.append(
            LintFinding(
                rule_id="L-STAKEHOLDER-COVERAGE",
                severity="warning",
                path="/",
                message="no benefit or risk touches the people the system affects",
            )
        )

    if not doc.governance.certifications:
        findings.append(
            LintFinding(
                rule_id="L-EMPTY-SECTION",
                severity="warning",
                path="/governance/certifications",
                message="certifications section is present but empty",
            )
        )
    if not doc.risk.article_refs:
        findings.append(
            LintFinding(
                rule_id="L-EMPTY-SECTION",
                severity="warning",
                path="/risk/article_refs",
                message="no legal article backs the risk level",
            )
        )

    return LintReport.from_findings(findings)
