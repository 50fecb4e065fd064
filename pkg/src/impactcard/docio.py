"""Reading, writing, and validating impact assessment documents.

The on-disk format is UTF-8 JSON (extension `.ia.json`) with a required
`schema_version: 1` at the root. Parsing is strict: unknown keys, wrong JSON
types, out-of-range accuracies, and malformed dates are rejected with the
document path of the offending value. Serialization is canonical: fixed key
order, two-space indentation, LF line endings, a trailing newline, and no
ASCII escaping, so equal documents always produce identical bytes.

`validate` never raises; it reports every violated content rule as a finding
with a stable code, so `parse -> validate` shows an author all problems in one
pass.
"""

from __future__ import annotations

import datetime as dt
import json
import re
from dataclasses import dataclass
from typing import Any
from urllib.parse import urlparse

from .model import (
    Benefit,
    ChannelKind,
    DataItem,
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
)

__all__ = [
    "SCHEMA_VERSION",
    "DocumentError",
    "ValidationFinding",
    "ValidationReport",
    "parse_document",
    "serialize_document",
    "validate",
]

SCHEMA_VERSION = 1

_DATE_RE = re.compile(r"^\d{4}-\d{2}-\d{2}$")


class DocumentError(ValueError):
    """A document cannot be read into the model.

    `path` locates the offending value ("/models/0/accuracy"); `line` and
    `column` are set for JSON syntax errors.
    """

    def __init__(
        self,
        message: str,
        *,
        path: str | None = None,
        line: int | None = None,
        column: int | None = None,
    ) -> None:
        self.path = path
        self.line = line
        self.column = column
        if path:
            message = f"{path}: {message}"
        elif line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


@dataclass(frozen=True, slots=True)
class ValidationFinding:
    """One violated content rule. `code` is stable across releases."""

    code: str
    path: str
    message: str
    severity: str = "error"


@dataclass(frozen=True, slots=True)
class ValidationReport:
    findings: tuple[ValidationFinding, ...]
    ok: bool

    @classmethod
    def from_findings(cls, findings) -> "ValidationReport":
        findings = tuple(findings)
        return cls(findings=findings, ok=not any(f.severity == "error" for f in findings))


# --- strict JSON tree walking -------------------------------------------------


def _fail(path: str, message: str) -> DocumentError:
    return DocumentError(message, path=path)


def _expect_object(value: Any, path: str, required: tuple[str, ...], optional: tuple[str, ...] = ()) -> dict:
    if not isinstance(value, dict):
        raise _fail(path, f"expected an object, got {type(value).__name__}")
    for key in required:
        if key not in value:
            raise _fail(path, f"missing required key '{key}'")
    allowed = set(required) | set(optional)
    for key in value:
        if key not in allowed:
            raise _fail(path, f"unknown key '{key}'")
    return value


def _expect_list(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise _fail(path, f"expected a list, got {type(value).__name__}")
    return value


def _as_str(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise _fail(path, f"expected a string, got {type(value).__name__}")
    return value


def _as_bool(value: Any, path: str) -> bool:
    if not isinstance(value, bool):
        raise _fail(path, f"expected a boolean, got {type(value).__name__}")
    return value


def _as_fraction(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise _fail(path, f"expected a number, got {type(value).__name__}")
    number = float(value)
    if not 0.0 <= number <= 1.0:
        raise _fail(path, f"must be within [0, 1], got {value}")
    return number


def _as_enum(value: Any, path: str, enum_type) -> Any:
    text = _as_str(value, path)
    try:
        return enum_type(text)
    except ValueError:
        allowed = ", ".join(member.value for member in enum_type)
        raise _fail(path, f"must be one of: {allowed}; got '{text}'") from None


def _as_date(value: Any, path: str) -> dt.date:
    text = _as_str(value, path)
    if not _DATE_RE.match(text):
        raise _fail(path, f"expected a YYYY-MM-DD date, got '{text}'")
    try:
        return dt.date.fromisoformat(text)
    except ValueError:
        raise _fail(path, f"not a real calendar date: '{text}'") from None


def _str_list(value: Any, path: str) -> tuple[str, ...]:
    return tuple(_as_str(item, f"{path}/{i}") for i, item in enumerate(_expect_list(value, path)))


def _parse_stakeholder(value: Any, path: str) -> Stakeholder:
    obj = _expect_object(value, path, required=("kind",), optional=("label",))
    kind = _as_enum(obj["kind"], f"{path}/kind", StakeholderKind)
    if kind is StakeholderKind.INDIRECT:
        if "label" not in obj:
            raise _fail(path, "missing required key 'label' (indirect parties are named)")
        label = _as_str(obj["label"], f"{path}/label")
        return Stakeholder(kind=kind, label=label)
    if "label" in obj:
        raise _fail(f"{path}/label", f"label not allowed for kind '{kind.value}'")
    return Stakeholder(kind=kind)


def _parse_stakeholder_set(value: Any, path: str) -> tuple[Stakeholder, ...]:
    raw = _expect_list(value, path)
    seen: set[tuple[StakeholderKind, str]] = set()
    parsed: list[Stakeholder] = []
    for i, item in enumerate(raw):
        stakeholder = _parse_stakeholder(item, f"{path}/{i}")
        key = (stakeholder.kind, stakeholder.label)
        if key in seen:
            raise _fail(f"{path}/{i}", "duplicate stakeholder")
        seen.add(key)
        parsed.append(stakeholder)
    return tuple(parsed)


def _parse_profile(value: Any, path: str) -> SystemProfile:
    keys = (
        "name",
        "purpose",
        "deployer",
        "subject",
        "application_domain",
        "capability",
        "last_edited",
        "report_url",
    )
    obj = _expect_object(value, path, required=keys)
    return SystemProfile(
        name=_as_str(obj["name"], f"{path}/name"),
        purpose=_as_str(obj["purpose"], f"{path}/purpose"),
        deployer=_as_str(obj["deployer"], f"{path}/deployer"),
        subject=_as_str(obj["subject"], f"{path}/subject"),
        application_domain=_as_str(obj["application_domain"], f"{path}/application_domain"),
        capability=_as_str(obj["capability"], f"{path}/capability"),
        last_edited=_as_date(obj["last_edited"], f"{path}/last_edited"),
        report_url=_as_str(obj["report_url"], f"{path}/report_url"),
    )


def _parse_risk(value: Any, path: str) -> RiskClassification:
    obj = _expect_object(value, path, required=("level", "article_refs"))
    return RiskClassification(
        level=_as_enum(obj["level"], f"{path}/level", RiskLevel),
        article_refs=_str_list(obj["article_refs"], f"{path}/article_refs"),
    )


def _parse_data_item(value: Any, path: str) -> DataItem:
    obj = _expect_object(value, path, required=("id", "name", "essential", "pii", "reusable", "model_refs"))
    return DataItem(
        id=_as_str(obj["id"], f"{path}/id"),
        name=_as_str(obj["name"], f"{path}/name"),
        essential=_as_bool(obj["essential"], f"{path}/essential"),
        pii=_as_bool(obj["pii"], f"{path}/pii"),
        reusable=_as_bool(obj["reusable"], f"{path}/reusable"),
        model_refs=_str_list(obj["model_refs"], f"{path}/model_refs"),
    )


def _parse_model(value: Any, path: str) -> ModelInfo:
    obj = _expect_object(value, path, required=("id", "name", "version", "accuracy"))
    return ModelInfo(
        id=_as_str(obj["id"], f"{path}/id"),
        name=_as_str(obj["name"], f"{path}/name"),
        version=_as_str(obj["version"], f"{path}/version"),
        accuracy=_as_fraction(obj["accuracy"], f"{path}/accuracy"),
    )


def _parse_benefit(value: Any, path: str) -> Benefit:
    obj = _expect_object(value, path, required=("description", "applies_to"))
    return Benefit(
        description=_as_str(obj["description"], f"{path}/description"),
        applies_to=_parse_stakeholder_set(obj["applies_to"], f"{path}/applies_to"),
    )


def _parse_risk_entry(value: Any, path: str) -> RiskEntry:
    obj = _expect_object(
        value,
        path,
        required=("category", "description", "mitigations", "residual_relevance"),
        optional=("severity",),
    )
    severity = None
    if "severity" in obj:
        severity = _as_enum(obj["severity"], f"{path}/severity", Severity)
    return RiskEntry(
        category=_as_enum(obj["category"], f"{path}/category", RiskCategory),
        description=_as_str(obj["description"], f"{path}/description"),
        mitigations=_str_list(obj["mitigations"], f"{path}/mitigations"),
        residual_relevance=_parse_stakeholder_set(obj["residual_relevance"], f"{path}/residual_relevance"),
        severity=severity,
    )


def _parse_channel(value: Any, path: str) -> ReportingChannel:
    obj = _expect_object(value, path, required=("kind", "value"))
    return ReportingChannel(
        kind=_as_enum(obj["kind"], f"{path}/kind", ChannelKind),
        value=_as_str(obj["value"], f"{path}/value"),
    )


def _parse_governance(value: Any, path: str) -> Governance:
    obj = _expect_object(value, path, required=("reporting_channels", "registered_office", "certifications"))
    channels = _expect_list(obj["reporting_channels"], f"{path}/reporting_channels")
    return Governance(
        reporting_channels=tuple(
            _parse_channel(item, f"{path}/reporting_channels/{i}") for i, item in enumerate(channels)
        ),
        registered_office=_as_str(obj["registered_office"], f"{path}/registered_office"),
        certifications=_str_list(obj["certifications"], f"{path}/certifications"),
    )


def parse_document(raw: bytes | str) -> ImpactAssessment:
    """Read a document from UTF-8 JSON text, strictly.

    Raises DocumentError with line/column for malformed JSON and with a
    document path for every structural problem (unknown key, wrong type,
    out-of-range accuracy, malformed date, unsupported schema version).
    """
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"not valid UTF-8: {exc.reason} at byte {exc.start}") from None
    try:
        tree = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, line=exc.lineno, column=exc.colno) from None

    root_keys = ("schema_version", "profile", "risk", "data", "models", "benefits", "risks", "governance")
    obj = _expect_object(tree, "/", required=root_keys)
    version = obj["schema_version"]
    if isinstance(version, bool) or not isinstance(version, int) or version != SCHEMA_VERSION:
        raise _fail("/schema_version", f"unsupported schema_version {version!r}; expected {SCHEMA_VERSION}")

    return ImpactAssessment(
        profile=_parse_profile(obj["profile"], "/profile"),
        risk=_parse_risk(obj["risk"], "/risk"),
        data=tuple(_parse_data_item(item, f"/data/{i}") for i, item in enumerate(_expect_list(obj["data"], "/data"))),
        models=tuple(
            _parse_model(item, f"/models/{i}") for i, item in enumerate(_expect_list(obj["models"], "/models"))
        ),
        benefits=tuple(
            _parse_benefit(item, f"/benefits/{i}") for i, item in enumerate(_expect_list(obj["benefits"], "/benefits"))
        ),
        risks=tuple(
            _parse_risk_entry(item, f"/risks/{i}") for i, item in enumerate(_expect_list(obj["risks"], "/risks"))
        ),
        governance=_parse_governance(obj["governance"], "/governance"),
    )


# --- canonical serialization --------------------------------------------------


def _stakeholder_tree(stakeholder: Stakeholder) -> dict:
    if stakeholder.kind is StakeholderKind.INDIRECT:
        return {"kind": stakeholder.kind.value, "label": stakeholder.label}
    return {"kind": stakeholder.kind.value}


def _document_tree(doc: ImpactAssessment) -> dict:
    risks = []
    for risk in doc.risks:
        entry: dict[str, Any] = {
            "category": risk.category.value,
            "description": risk.description,
            "mitigations": list(risk.mitigations),
            "residual_relevance": [_stakeholder_tree(s) for s in risk.residual_relevance],
        }
        if risk.severity is not None:
            entry["severity"] = risk.severity.value
        risks.append(entry)
    return {
        "schema_version": SCHEMA_VERSION,
        "profile": {
            "name": doc.profile.name,
            "purpose": doc.profile.purpose,
            "deployer": doc.profile.deployer,
            "subject": doc.profile.subject,
            "application_domain": doc.profile.application_domain,
            "capability": doc.profile.capability,
            "last_edited": doc.profile.last_edited.isoformat(),
            "report_url": doc.profile.report_url,
        },
        "risk": {
            "level": doc.risk.level.value,
            "article_refs": list(doc.risk.article_refs),
        },
        "data": [
            {
                "id": item.id,
                "name": item.name,
                "essential": item.essential,
                "pii": item.pii,
                "reusable": item.reusable,
                "model_refs": list(item.model_refs),
            }
            for item in doc.data
        ],
        "models": [
            {"id": m.id, "name": m.name, "version": m.version, "accuracy": m.accuracy}
            for m in doc.models
        ],
        "benefits": [
            {"description": b.description, "applies_to": [_stakeholder_tree(s) for s in b.applies_to]}
            for b in doc.benefits
        ],
        "risks": risks,
        "governance": {
            "reporting_channels": [
                {"kind": c.kind.value, "value": c.value} for c in doc.governance.reporting_channels
            ],
            "registered_office": doc.governance.registered_office,
            "certifications": list(doc.governance.certifications),
        },
    }


def serialize_document(doc: ImpactAssessment) -> str:
    """Canonical UTF-8 JSON text: fixed key order, 2-space indent, LF endings,
    one trailing newline. parse_document(serialize_document(doc)) == doc."""
    return json.dumps(_document_tree(doc), ensure_ascii=False, indent=2) + "\n"


# --- validation ----------------------------------------------------------------


def _is_http_url(value: str) -> bool:
    parts = urlparse(value)
    return parts.scheme in ("http", "https") and bool(parts.netloc)


class _Collector:
    def __init__(self) -> None:
        self.findings: list[ValidationFinding] = []

    def add(self, code: str, path: str, message: str) -> None:
        self.findings.append(ValidationFinding(code=code, path=path, message=message))

    def require_text(self, value: str, path: str, what: str) -> None:
        if not value.strip():
            self.add("V-EMPTY-FIELD", path, f"{what} must not be empty")


def _check_stakeholders(out: _Collector, items, path: str) -> None:
    for i, stakeholder in enumerate(items):
        if stakeholder.kind is StakeholderKind.INDIRECT:
            if not stakeholder.label.strip():
                out.add("V-STAKEHOLDER-LABEL", f"{path}/{i}/label", "indirect stakeholder needs a label")
        elif stakeholder.label:
            out.add(
                "V-STAKEHOLDER-LABEL",
                f"{path}/{i}/label",
                f"{stakeholder.kind.value} carries no label",
            )


def validate(doc: ImpactAssessment, *, now: dt.date | None = None) -> ValidationReport:
    """Check every content rule and report the violations.

    Rules cover the required sections (data, models, benefits, risks,
    reporting channels), non-empty text fields, URL and email shape, id
    uniqueness, reference resolution in both directions (no dangling
    model_refs, no orphan models), accuracy range, and that last_edited is
    not in the future relative to `now` (default: today). Findings all carry
    severity "error"; `ok` is true exactly when there are none.

    Re-validating an unchanged document yields the identical finding list.
    """
    out = _Collector()
    today = now or dt.date.today()

    profile = doc.profile
    out.require_text(profile.name, "/profile/name", "system name")
    out.require_text(profile.purpose, "/profile/purpose", "purpose")
    out.require_text(profile.deployer, "/profile/deployer", "deployer")
    out.require_text(profile.subject, "/profile/subject", "subject")
    out.require_text(profile.application_domain, "/profile/application_domain", "application domain")
    out.require_text(profile.capability, "/profile/capability", "capability")
    if not _is_http_url(profile.report_url):
        out.add("V-BAD-URL", "/profile/report_url", f"not an absolute http(s) URL: '{profile.report_url}'")
    if profile.last_edited > today:
        out.add(
            "V-DATE-FUTURE",
            "/profile/last_edited",
            f"last edited {profile.last_edited.isoformat()} is after {today.isoformat()}",
        )

    for i, ref in enumerate(doc.risk.article_refs):
        if not ref.strip():
            out.add("V-EMPTY-FIELD", f"/risk/article_refs/{i}", "article reference must not be empty")

    for section, path in (
        (doc.data, "/data"),
        (doc.models, "/models"),
        (doc.benefits, "/benefits"),
        (doc.risks, "/risks"),
        (doc.governance.reporting_channels, "/governance/reporting_channels"),
    ):
        if not section:
            out.add("V-EMPTY-SECTION", path, "required section is empty")

    model_ids = [m.id for m in doc.models]
    declared = set(model_ids)
    seen_data_ids: set[str] = set()
    referenced: set[str] = set()
    for i, item in enumerate(doc.data):
        out.require_text(item.id, f"/data/{i}/id", "data item id")
        out.require_text(item.name, f"/data/{i}/name", "data item name")
        if item.id in seen_data_ids:
            out.add("V-DUP-ID", f"/data/{i}/id", f"duplicate data item id '{item.id}'")
        seen_data_ids.add(item.id)
        if not item.model_refs:
            out.add("V-NO-MODEL-REF", f"/data/{i}/model_refs", "data item is not linked to any model")
        for j, ref in enumerate(item.model_refs):
            if ref not in declared:
                out.add("V-DANGLING-MODEL-REF", f"/data/{i}/model_refs/{j}", f"no model with id '{ref}'")
            referenced.add(ref)

    seen_model_ids: set[str] = set()
    for i, m in enumerate(doc.models):
        out.require_text(m.id, f"/models/{i}/id", "model id")
        out.require_text(m.name, f"/models/{i}/name", "model name")
        out.require_text(m.version, f"/models/{i}/version", "model version")
        if m.id in seen_model_ids:
            out.add("V-DUP-ID", f"/models/{i}/id", f"duplicate model id '{m.id}'")
        seen_model_ids.add(m.id)
        if not 0.0 <= m.accuracy <= 1.0:
            out.add("V-ACCURACY-RANGE", f"/models/{i}/accuracy", f"accuracy must be within [0, 1], got {m.accuracy}")
        if m.id not in referenced:
            out.add("V-ORPHAN-MODEL", f"/models/{i}", f"model '{m.id}' is not referenced by any data item")

    for i, benefit in enumerate(doc.benefits):
        out.require_text(benefit.description, f"/benefits/{i}/description", "benefit description")
        if not benefit.applies_to:
            out.add("V-NO-STAKEHOLDER", f"/benefits/{i}/applies_to", "benefit applies to no stakeholder")
        _check_stakeholders(out, benefit.applies_to, f"/benefits/{i}/applies_to")

    for i, risk in enumerate(doc.risks):
        out.require_text(risk.description, f"/risks/{i}/description", "risk description")
        if not risk.mitigations:
            out.add("V-RISK-NO-MITIGATION", f"/risks/{i}/mitigations", "risk declares no mitigation")
        for j, mitigation in enumerate(risk.mitigations):
            if not mitigation.strip():
                out.add("V-EMPTY-FIELD", f"/risks/{i}/mitigations/{j}", "mitigation must not be empty")
        _check_stakeholders(out, risk.residual_relevance, f"/risks/{i}/residual_relevance")

    governance = doc.governance
    out.require_text(governance.registered_office, "/governance/registered_office", "registered office")
    for i, channel in enumerate(governance.reporting_channels):
        path = f"/governance/reporting_channels/{i}/value"
        if not channel.value.strip():
            out.add("V-EMPTY-FIELD", path, "reporting channel value must not be empty")
        elif channel.kind is ChannelKind.EMAIL and "@" not in channel.value:
            out.add("V-BAD-EMAIL", path, f"email channel needs an '@': '{channel.value}'")
        elif channel.kind is ChannelKind.URL and not _is_http_url(channel.value):
            out.add("V-BAD-URL", path, f"not an absolute http(s) URL: '{channel.value}'")
    for i, certification in enumerate(governance.certifications):
        if not certification.strip():
            out.add("V-EMPTY-FIELD", f"/governance/certifications/{i}", "certification name must not be empty")

    return ValidationReport.from_findings(out.findings)
