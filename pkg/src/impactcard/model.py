"""Data model for AI-use impact assessment documents.

Every type is an immutable value object: construction coerces sequence fields
to tuples, and stakeholder sets to a canonical order, so equal documents
compare equal field by field. Content rules (non-empty text, resolvable
references, date sanity) are deliberately not enforced here; they are reported
by `docio.validate` so that authoring tools can show all problems at once.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass, field
from enum import Enum

__all__ = [
    "RiskLevel",
    "RiskClassification",
    "StakeholderKind",
    "Stakeholder",
    "DataItem",
    "ModelInfo",
    "Benefit",
    "RiskCategory",
    "Severity",
    "RiskEntry",
    "ChannelKind",
    "ReportingChannel",
    "Governance",
    "SystemProfile",
    "ImpactAssessment",
    "DEFAULT_LEVEL_COLORS",
    "risk_abbreviation",
    "risk_color",
    "compose_header",
    "canonical_stakeholders",
]


class RiskLevel(str, Enum):
    """EU AI Act risk classification, ordered Minimal < Limited < High < Unacceptable."""

    MINIMAL = "Minimal"
    LIMITED = "Limited"
    HIGH = "High"
    UNACCEPTABLE = "Unacceptable"

    @property
    def rank(self) -> int:
        return _LEVEL_RANK[self]

    # str comparison would order levels alphabetically; compare by rank instead.
    def __lt__(self, other: object) -> bool:
        if not isinstance(other, RiskLevel):
            return NotImplemented
        return self.rank < other.rank

    def __le__(self, other: object) -> bool:
        if not isinstance(other, RiskLevel):
            return NotImplemented
        return self.rank <= other.rank

    def __gt__(self, other: object) -> bool:
        if not isinstance(other, RiskLevel):
            return NotImplemented
        return self.rank > other.rank

    def __ge__(self, other: object) -> bool:
        if not isinstance(other, RiskLevel):
            return NotImplemented
        return self.rank >= other.rank


_LEVEL_RANK = {
    RiskLevel.MINIMAL: 0,
    RiskLevel.LIMITED: 1,
    RiskLevel.HIGH: 2,
    RiskLevel.UNACCEPTABLE: 3,
}

_ABBREVIATIONS = {
    RiskLevel.MINIMAL: "MIN",
    RiskLevel.LIMITED: "LIM",
    RiskLevel.HIGH: "HIGH",
    RiskLevel.UNACCEPTABLE: "UNACC",
}

# Default palette. One color family per level (blue, yellow, dark orange, red);
# every entry must keep a contrast ratio of at least 4.5:1 against white text,
# which the lint module enforces for any theme built on top of these.
DEFAULT_LEVEL_COLORS = {
    RiskLevel.MINIMAL: "#1E5AA8",
    RiskLevel.LIMITED: "#806600",
    RiskLevel.HIGH: "#B35200",
    RiskLevel.UNACCEPTABLE: "#B71C1C",
}


class StakeholderKind(str, Enum):
    DEPLOYER = "Deployer"
    SUBJECT = "Subject"
    INDIRECT = "Indirect"


_KIND_RANK = {
    StakeholderKind.DEPLOYER: 0,
    StakeholderKind.SUBJECT: 1,
    StakeholderKind.INDIRECT: 2,
}


@dataclass(frozen=True, slots=True)
class Stakeholder:
    """A party the system touches: the deployer, the affected subject, or an
    indirect party named by `label` (an institution, a community, the
    environment). Deployer and Subject carry no label."""

    kind: StakeholderKind
    label: str = ""

    def sort_key(self) -> tuple[int, str]:
        return (_KIND_RANK[self.kind], self.label)

    def display_name(self) -> str:
        if self.kind is StakeholderKind.INDIRECT:
            return self.label
        return self.kind.value


def canonical_stakeholders(items) -> tuple[Stakeholder, ...]:
    """Deduplicate and order stakeholders: Deployer, Subject, then indirect
    parties sorted by label."""
    unique = {(s.kind, s.label): s for s in items}
    return tuple(sorted(unique.values(), key=Stakeholder.sort_key))


@dataclass(frozen=True, slots=True)
class RiskClassification:
    """The document's risk level plus the legal articles backing it."""

    level: RiskLevel
    article_refs: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "article_refs", tuple(self.article_refs))


@dataclass(frozen=True, slots=True)
class DataItem:
    id: str
    name: str
    essential: bool
    pii: bool
    reusable: bool
    model_refs: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "model_refs", tuple(self.model_refs))


@dataclass(frozen=True, slots=True)
class ModelInfo:
    id: str
    name: str
    version: str
    accuracy: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "accuracy", float(self.accuracy))


@dataclass(frozen=True, slots=True)
class Benefit:
    description: str
    applies_to: tuple[Stakeholder, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "applies_to", canonical_stakeholders(self.applies_to))


class RiskCategory(str, Enum):
    CAPABILITY = "Capability"
    HUMAN_INTERACTION = "HumanInteraction"
    SYSTEMIC = "Systemic"


class Severity(str, Enum):
    LOW = "Low"
    MEDIUM = "Medium"
    HIGH = "High"


@dataclass(frozen=True, slots=True)
class RiskEntry:
    """One identified risk with its mitigation strategies. An empty
    `residual_relevance` means the mitigations fully cover the risk."""

    category: RiskCategory
    description: str
    mitigations: tuple[str, ...] = ()
    residual_relevance: tuple[Stakeholder, ...] = ()
    severity: Severity | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "mitigations", tuple(self.mitigations))
        object.__setattr__(
            self, "residual_relevance", canonical_stakeholders(self.residual_relevance)
        )


class ChannelKind(str, Enum):
    EMAIL = "email"
    PHONE = "phone"
    URL = "url"


@dataclass(frozen=True, slots=True)
class ReportingChannel:
    kind: ChannelKind
    value: str


@dataclass(frozen=True, slots=True)
class Governance:
    reporting_channels: tuple[ReportingChannel, ...] = ()
    registered_office: str = ""
    certifications: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "reporting_channels", tuple(self.reporting_channels))
        object.__setattr__(self, "certifications", tuple(self.certifications))


@dataclass(frozen=True, slots=True)
class SystemProfile:
    """Who runs what, on whom, where, and how; plus the audit trail fields
    (last edit date and the link to the long-form report)."""

    name: str
    purpose: str
    deployer: str
    subject: str
    application_domain: str
    capability: str
    last_edited: dt.date
    report_url: str


@dataclass(frozen=True, slots=True)
class ImpactAssessment:
    """Root document: one assessed AI use."""

    profile: SystemProfile
    risk: RiskClassification
    data: tuple[DataItem, ...] = ()
    models: tuple[ModelInfo, ...] = ()
    benefits: tuple[Benefit, ...] = ()
    risks: tuple[RiskEntry, ...] = ()
    governance: Governance = field(default_factory=Governance)

    def __post_init__(self) -> None:
        object.__setattr__(self, "data", tuple(self.data))
        object.__setattr__(self, "models", tuple(self.models))
        object.__setattr__(self, "benefits", tuple(self.benefits))
        object.__setattr__(self, "risks", tuple(self.risks))

    def stakeholders(self) -> tuple[Stakeholder, ...]:
        """All stakeholders referenced by benefits or residual risks, in
        canonical order. Renderers use this as the heatmap column set."""
        seen: list[Stakeholder] = []
        for benefit in self.benefits:
            seen.extend(benefit.applies_to)
        for risk in self.risks:
            seen.extend(risk.residual_relevance)
        return canonical_stakeholders(seen)


def _coerce_level(level: RiskLevel | RiskClassification) -> RiskLevel:
    if isinstance(level, RiskClassification):
        return level.level
    if isinstance(level, RiskLevel):
        return level
    raise TypeError(f"expected a risk level, got {type(level).__name__}")


def risk_abbreviation(level: RiskLevel | RiskClassification) -> str:
    """Short label shown in the card's summary bar: MIN, LIM, HIGH, or UNACC."""
    return _ABBREVIATIONS[_coerce_level(level)]


def risk_color(level: RiskLevel | RiskClassification) -> str:
    """Default palette hex for a level (blue, yellow, dark orange, red)."""
    return DEFAULT_LEVEL_COLORS[_coerce_level(level)]


def compose_header(profile: SystemProfile) -> str:
    """The card's one-sentence header: purpose, deployer, subject, domain,
    and technical capability, in that order.

    Raises ValueError naming the first component that is empty after trimming.
    """
    parts = {
        "purpose": profile.purpose.strip(),
        "deployer": profile.deployer.strip(),
        "subject": profile.subject.strip(),
        "application_domain": profile.application_domain.strip(),
        "capability": profile.capability.strip(),
    }
    for component, value in parts.items():
        if not value:
            raise ValueError(f"{component} missing")
    return (
        f"{parts['purpose']}, operated by {parts['deployer']}, "
        f"affecting {parts['subject']}, in {parts['application_domain']}, "
        f"using {parts['capability']}."
    )
