"""Deterministic random generator for valid documents.

Driven by a caller-supplied random.Random so test runs are reproducible.
Every generated document passes validation: all sections populated, every
data item references a declared model, every model is referenced, every
risk carries a mitigation.
"""

from __future__ import annotations

import datetime as dt
import random

from impactcard.model import (
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

# small lexicon with deliberate escaping hazards: quotes, backslash,
# accents, CJK, an emoji
_WORDS = [
    "care", "match", "score", "route", "plan", "check", "review", "signal",
    "ledger", "queue", "notice", "triage", "rank", "survey", "intake",
    "café", "naïve", "東京", "Zürich", 'say "stop"',
    "back\\slash", "it's", "✅",
]
_DOMAINS = ["health", "retail", "transit", "energy", "schooling", "housing"]


def _words(rng: random.Random, low: int, high: int) -> str:
    return " ".join(rng.choice(_WORDS) for _ in range(rng.randint(low, high)))


def _slug(rng: random.Random, prefix: str, index: int) -> str:
    return f"{prefix}-{index}-{rng.randint(0, 999)}"


def _parties(rng: random.Random) -> tuple[Stakeholder, ...]:
    picks = []
    if rng.random() < 0.6:
        picks.append(Stakeholder(kind=StakeholderKind.SUBJECT))
    if rng.random() < 0.4:
        picks.append(Stakeholder(kind=StakeholderKind.DEPLOYER))
    if rng.random() < 0.3:
        picks.append(Stakeholder(kind=StakeholderKind.INDIRECT, label=_words(rng, 1, 2)))
    if not picks:
        picks.append(Stakeholder(kind=StakeholderKind.SUBJECT))
    return tuple(picks)


def random_document(rng: random.Random) -> ImpactAssessment:
    domain = rng.choice(_DOMAINS)
    profile = SystemProfile(
        name=_words(rng, 2, 3).title(),
        purpose=_words(rng, 3, 8),
        deployer=_words(rng, 1, 3).title(),
        subject=_words(rng, 1, 2),
        application_domain=domain,
        capability=_words(rng, 1, 3),
        last_edited=dt.date(rng.randint(2019, 2025), rng.randint(1, 12), rng.randint(1, 28)),
        report_url=f"https://{domain}.example/reports/{rng.randint(1, 9999)}",
    )
    risk = RiskClassification(
        level=rng.choice(list(RiskLevel)),
        article_refs=tuple(f"Article {rng.randint(1, 99)}" for _ in range(rng.randint(0, 3))),
    )
    models = tuple(
        ModelInfo(
            id=_slug(rng, "model", i),
            name=_words(rng, 1, 2).title(),
            version=f"v{rng.randint(0, 9)}.{rng.randint(0, 9)}",
            accuracy=round(rng.random(), 3),
        )
        for i in range(rng.randint(1, 4))
    )
    # one data item per model keeps every model referenced; extras pick
    # their targets at random
    data = [
        DataItem(
            id=_slug(rng, "data", i),
            name=_words(rng, 1, 3).title(),
            essential=rng.random() < 0.7,
            pii=rng.random() < 0.5,
            reusable=rng.random() < 0.4,
            model_refs=(model.id,),
        )
        for i, model in enumerate(models)
    ]
    for extra in range(rng.randint(0, 2)):
        refs = tuple(m.id for m in rng.sample(models, rng.randint(1, len(models))))
        data.append(
            DataItem(
                id=_slug(rng, "data", len(models) + extra),
                name=_words(rng, 1, 3).title(),
                essential=rng.random() < 0.7,
                pii=rng.random() < 0.5,
                reusable=rng.random() < 0.4,
                model_refs=refs,
            )
        )
    benefits = tuple(
        Benefit(description=_words(rng, 3, 9), applies_to=_parties(rng))
        for _ in range(rng.randint(1, 4))
    )
    risks = tuple(
        RiskEntry(
            category=rng.choice(list(RiskCategory)),
            description=_words(rng, 3, 9),
            mitigations=tuple(_words(rng, 3, 8) for _ in range(rng.randint(1, 3))),
            residual_relevance=_parties(rng),
            severity=rng.choice([None, *Severity]),
        )
        for _ in range(rng.randint(1, 4))
    )
    channels = [ReportingChannel(kind=ChannelKind.EMAIL, value=f"contact@{domain}.example")]
    if rng.random() < 0.5:
        channels.append(ReportingChannel(kind=ChannelKind.PHONE, value=f"+44 20 {rng.randint(1000, 9999)} {rng.randint(1000, 9999)}"))
    if rng.random() < 0.5:
        channels.append(ReportingChannel(kind=ChannelKind.URL, value=f"https://{domain}.example/ai"))
    governance = Governance(
        reporting_channels=tuple(channels),
        registered_office=_words(rng, 3, 6).title(),
        certifications=tuple(f"ISO/IEC {rng.randint(10000, 50000)}" for _ in range(rng.randint(0, 3))),
    )
    return ImpactAssessment(
        profile=profile, risk=risk, data=tuple(data), models=models,
        benefits=benefits, risks=risks, governance=governance,
    )
