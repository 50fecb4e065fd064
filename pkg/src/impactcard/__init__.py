"""Impact assessment cards for AI uses.

Turn a machine-readable impact assessment document into a validated,
linted, one-page card (SVG or HTML) and a long-form report, and score the
study instruments used to evaluate them.
"""

from .model import (
    Benefit,
    ChannelKind,
    DataItem,
    DEFAULT_LEVEL_COLORS,
    Governance,
    ImpactAssessment,
    ModelInfo,
    ReportingChannel,
    RiskCategory,
    RiskClassification,
    RiskEntry,
    RiskLevel,
    Severity,
    Stakeholder,
    StakeholderKind,
    SystemProfile,
    canonical_stakeholders,
    compose_header,
    risk_abbreviation,
    risk_color,
)
from .docio import (
    DocumentError,
    SCHEMA_VERSION,
    ValidationFinding,
    ValidationReport,
    parse_document,
    serialize_document,
    validate,
)
from .lint import (
    LintFinding,
    LintReport,
    RULE_IDS,
    contrast_ratio,
    count_syllables,
    flesch_kincaid_grade,
    lint_document,
    split_words,
)
from .theme import DEFAULT_THEME, Theme, load_theme
from .qr import QrMatrix, encode_qr
from .render import (
    InvalidDocumentError,
    LEVEL_EXPLANATIONS,
    format_accuracy,
    mirror_strings,
    render_card_html,
    render_card_svg,
    render_report_html,
)
from .evalkit import (
    EMAIL_WORDS_MAX,
    EMAIL_WORDS_MIN,
    EXACT_LIMIT,
    LengthFinding,
    RUBRIC_CRITERIA,
    RubricAssessment,
    SusResponse,
    email_length_check,
    inter_rater_agreement,
    mann_whitney_exact,
    read_rubric_csv,
    read_sus_csv,
    read_values_csv,
    rubric_overall,
    sus_score,
)

__version__ = "0.1.0"

__all__ = [
    "Benefit",
    "ChannelKind",
    "DataItem",
    "DEFAULT_LEVEL_COLORS",
    "DEFAULT_THEME",
    "DocumentError",
    "EMAIL_WORDS_MAX",
    "EMAIL_WORDS_MIN",
    "EXACT_LIMIT",
    "Governance",
    "ImpactAssessment",
    "InvalidDocumentError",
    "LengthFinding",
    "LEVEL_EXPLANATIONS",
    "LintFinding",
    "LintReport",
    "ModelInfo",
    "QrMatrix",
    "ReportingChannel",
    "RiskCategory",
    "RiskClassification",
    "RiskEntry",
    "RiskLevel",
    "RUBRIC_CRITERIA",
    "RubricAssessment",
    "RULE_IDS",
    "SCHEMA_VERSION",
    "Severity",
    "Stakeholder",
    "StakeholderKind",
    "SusResponse",
    "SystemProfile",
    "Theme",
    "ValidationFinding",
    "ValidationReport",
    "canonical_stakeholders",
    "compose_header",
    "contrast_ratio",
    "count_syllables",
    "email_length_check",
    "encode_qr",
    "flesch_kincaid_grade",
    "format_accuracy",
    "inter_rater_agreement",
    "lint_document",
    "load_theme",
    "mann_whitney_exact",
    "mirror_strings",
    "parse_document",
    "read_rubric_csv",
    "read_sus_csv",
    "read_values_csv",
    "render_card_html",
    "render_card_svg",
    "render_report_html",
    "risk_abbreviation",
    "risk_color",
    "rubric_overall",
    "serialize_document",
    "split_words",
    "sus_score",
    "validate",
]
