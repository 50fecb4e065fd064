"""Card and report rendering.

The card is a single self-contained SVG sized for A5 landscape; when the
content cannot fit the base page, the height grows in fixed steps so the
result is still a printable page. The report is a self-contained HTML
document with a fixed set of nine sections. Both renderers are pure
functions of (document, theme): the same inputs always produce the same
bytes.

Card and report carry the same prose. Every string that must appear in
both is wrapped in an element whose class list contains "mirror", which is
what the consistency checks key on.
"""

from __future__ import annotations

import html

from .docio import ValidationReport, validate
from .model import (
    ChannelKind,
    ImpactAssessment,
    RiskCategory,
    RiskLevel,
    compose_header,
    risk_abbreviation,
)
from .theme import Theme, DEFAULT_THEME

__all__ = [
    "InvalidDocumentError",
    "LEVEL_EXPLANATIONS",
    "format_accuracy",
    "mirror_strings",
    "render_card_svg",
    "render_card_html",
    "render_report_html",
]

PT_TO_MM = 25.4 / 72

# One fixed sentence per risk level, shown under the summary bar and in the
# report's use section.
LEVEL_EXPLANATIONS = {
    RiskLevel.MINIMAL: "Minimal risk: this use is allowed with no extra conditions.",
    RiskLevel.LIMITED: "Limited risk: this use must tell people that AI is used.",
    RiskLevel.HIGH: "High risk: this use is allowed only with strict safeguards.",
    RiskLevel.UNACCEPTABLE: "Unacceptable risk: this use is banned in the European Union.",
}

_CATEGORY_LABELS = {
    RiskCategory.CAPABILITY: "Capability",
    RiskCategory.HUMAN_INTERACTION: "Human interaction",
    RiskCategory.SYSTEMIC: "Systemic",
}

_CHANNEL_LABELS = {
    ChannelKind.EMAIL: "Email",
    ChannelKind.PHONE: "Phone",
    ChannelKind.URL: "Web",
}

_INK = "#1A1A1A"
_MUTED = "#555555"
_HAIRLINE = "#C8C8C8"
_DOT = "·"


class InvalidDocumentError(ValueError):
    """Raised when a document with validation errors is rendered."""

    def __init__(self, report: ValidationReport):
        codes = sorted({finding.code for finding in report.findings})
        super().__init__(f"document has validation errors: {', '.join(codes)}")
        self.report = report


def _checked(doc: ImpactAssessment) -> None:
    report = validate(doc)
    if not report.ok:
        raise InvalidDocumentError(report)


def format_accuracy(accuracy: float) -> str:
    """Accuracy in [0, 1] as a percentage with one decimal place."""
    return f"{round(accuracy * 1000) / 10:.1f}%"


def mirror_strings(doc: ImpactAssessment) -> tuple[str, ...]:
    """The prose that must appear verbatim on both the card and the report."""
    strings = [compose_header(doc.profile), LEVEL_EXPLANATIONS[doc.risk.level]]
    strings.extend(benefit.description for benefit in doc.benefits)
    for risk in doc.risks:
        strings.append(risk.description)
        strings.extend(risk.mitigations)
    return tuple(strings)


# --- shared text helpers ---------------------------------------------------------


def _esc(text: str) -> str:
    return html.escape(text, quote=True)


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _char_width_mm(size_pt: float) -> float:
    # average glyph advance estimate for a sans-serif face at the given size
    return 0.5 * size_pt * PT_TO_MM


def _wrap(text: str, width_mm: float, size_pt: float) -> list[str]:
    budget = max(1, int(width_mm / _char_width_mm(size_pt)))
    lines: list[str] = []
    current = ""
    for word in text.split():
        candidate = f"{current} {word}" if current else word
        if current and len(candidate) > budget:
            lines.append(current)
            current = word
        else:
            current = candidate
    if current:
        lines.append(current)
    return lines or [""]


def _ellipsize(text: str, width_mm: float, size_pt: float) -> str:
    budget = max(1, int(width_mm / _char_width_mm(size_pt)))
    if len(text) <= budget:
        return text
    return text[: max(1, budget - 1)].rstrip() + "…"


# --- card ------------------------------------------------------------------------


class _Svg:
    """Accumulates SVG fragments while a y cursor walks down the page."""

    def __init__(self, theme: Theme):
        self.theme = theme
        self.parts: list[str] = []

    def text(
        self,
        x: float,
        y: float,
        content: str,
        *,
        size: float,
        fill: str = _INK,
        cls: str = "",
        weight: str = "",
        anchor: str = "",
        spacing: float = 0.0,
    ) -> None:
        attrs = [
            f'x="{_fmt(x)}"',
            f'y="{_fmt(y)}"',
            f'font-size="{_fmt(size * PT_TO_MM)}"',
            f'fill="{fill}"',
        ]
        if cls:
            attrs.insert(0, f'class="{cls}"')
        if weight:
            attrs.append(f'font-weight="{weight}"')
        if anchor:
            attrs.append(f'text-anchor="{anchor}"')
        if spacing:
            attrs.append(f'letter-spacing="{_fmt(spacing)}"')
        self.parts.append(f"  <text {' '.join(attrs)}>{_esc(content)}</text>")

    def wrapped_text(
        self,
        x: float,
        y: float,
        content: str,
        *,
        size: float,
        width: float,
        fill: str = _INK,
        cls: str = "",
        weight: str = "",
    ) -> float:
        """Render a word-wrapped block, one tspan per line. Returns the y
        cursor after the last line."""
        line_height = size * PT_TO_MM * self.theme.line_spacing
        lines = _wrap(content, width, size)
        attrs = [
            f'x="{_fmt(x)}"',
            f'y="{_fmt(y)}"',
            f'font-size="{_fmt(size * PT_TO_MM)}"',
            f'fill="{fill}"',
        ]
        if cls:
            attrs.insert(0, f'class="{cls}"')
        if weight:
            attrs.append(f'font-weight="{weight}"')
        spans = "".join(
            f'<tspan x="{_fmt(x)}" dy="{_fmt(0.0 if i == 0 else line_height)}">{_esc(line)}</tspan>'
            for i, line in enumerate(lines)
        )
        self.parts.append(f"  <text {' '.join(attrs)}>{spans}</text>")
        return y + line_height * len(lines)

    def rect(
        self,
        x: float,
        y: float,
        w: float,
        h: float,
        *,
        fill: str,
        stroke: str = "",
        stroke_width: float = 0.0,
        rx: float = 0.0,
        cls: str = "",
    ) -> None:
        attrs = [
            f'x="{_fmt(x)}"',
            f'y="{_fmt(y)}"',
            f'width="{_fmt(w)}"',
            f'height="{_fmt(h)}"',
            f'fill="{fill}"',
        ]
        if cls:
            attrs.insert(0, f'class="{cls}"')
        if rx:
            attrs.append(f'rx="{_fmt(rx)}"')
        if stroke:
            attrs.append(f'stroke="{stroke}" stroke-width="{_fmt(stroke_width)}"')
        self.parts.append(f"  <rect {' '.join(attrs)}/>")

    def line(self, x1: float, y1: float, x2: float, y2: float) -> None:
        self.parts.append(
            f'  <line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"'
            f' stroke="{_HAIRLINE}" stroke-width="0.20"/>'
        )


def _section_title(svg: _Svg, x: float, y: float, width: float, title: str) -> float:
    size = svg.theme.base_font_size * 0.62
    svg.text(x, y, title.upper(), size=size, fill=_MUTED, weight="bold", spacing=0.4)
    svg.line(x, y + 1.2, x + width, y + 1.2)
    return y + 4.2


def _qr_group(doc: ImpactAssessment, x: float, y: float, box_mm: float) -> tuple[list[str], int]:
    # imported here so the model/docio layers stay usable without the encoder
    from .qr import encode_qr

    matrix = encode_qr(doc.profile.report_url)
    quiet = 4
    scale = box_mm / (matrix.size + 2 * quiet)
    parts = [
        f'  <g class="qr" transform="translate({_fmt(x)} {_fmt(y)}) scale({scale:.4f})">',
        f'    <rect x="0" y="0" width="{matrix.size + 2 * quiet}" height="{matrix.size + 2 * quiet}" fill="#FFFFFF"/>',
    ]
    for row in range(matrix.size):
        for col in range(matrix.size):
            if matrix.modules[row][col]:
                parts.append(
                    f'    <rect x="{col + quiet}" y="{row + quiet}" width="1" height="1"'
                    f' fill="#000000" shape-rendering="crispEdges"/>'
                )
    parts.append("  </g>")
    return parts, matrix.size


def render_card_svg(doc: ImpactAssessment, theme: Theme = DEFAULT_THEME) -> str:
    """Render the one-page card as an SVG 1.1 document.

    Coordinates are millimetres (the viewBox maps one user unit to 1 mm).
    The page starts at the theme's page size and the height grows in
    quarter-page steps when the content runs past the bottom margin.
    """
    _checked(doc)
    svg = _Svg(theme)
    base = theme.base_font_size
    margin = 10.0
    page_w = theme.page_width_mm
    width = page_w - 2 * margin
    level = doc.risk.level

    y = margin + base * PT_TO_MM

    # masthead: system name left, document kind right
    svg.text(margin, y, doc.profile.name, size=base * 1.2, weight="bold", cls="card-title")
    svg.text(page_w - margin, y, "AI use impact card", size=base * 0.62, fill=_MUTED, anchor="end")
    y += base * 1.2 * PT_TO_MM * 0.9

    y = svg.wrapped_text(
        margin, y, compose_header(doc.profile),
        size=base * 0.8, width=width, cls="mirror header-sentence",
    ) + 1.5

    # risk summary bar: one cell per level, lowest to highest, the document's
    # level filled with its color
    gap = 2.0
    cell_w = (width - 3 * gap) / 4
    cell_h = 8.5
    label_size = base * 0.8
    for i, cell_level in enumerate(RiskLevel):
        x = margin + i * (cell_w + gap)
        color = theme.level_colors[cell_level]
        active = cell_level is level
        cls = f"summary-cell level-{cell_level.value}"
        if active:
            cls += " summary-cell-active"
        svg.parts.append(f'  <g class="{cls}">')
        if active:
            svg.rect(x, y, cell_w, cell_h, fill=color, rx=1.0)
            label_fill = theme.text_color_on_level
        else:
            svg.rect(x, y, cell_w, cell_h, fill="none", stroke=color, stroke_width=0.35, rx=1.0)
            label_fill = color
        svg.text(
            x + cell_w / 2, y + cell_h / 2 + label_size * PT_TO_MM * 0.35,
            risk_abbreviation(cell_level),
            size=label_size, fill=label_fill, weight="bold", anchor="middle",
        )
        svg.parts.append("  </g>")
    y += cell_h + base * 0.75 * PT_TO_MM * theme.line_spacing
    y = svg.wrapped_text(
        margin, y, LEVEL_EXPLANATIONS[level],
        size=base * 0.75, width=width, fill=_MUTED, cls="mirror level-explanation",
    ) + 2.0

    body = base * 0.72
    body_lh = body * PT_TO_MM * theme.line_spacing

    # benefits
    y = _section_title(svg, margin, y, width, "Benefits")
    for i, benefit in enumerate(doc.benefits):
        svg.text(margin, y, "•", size=body, fill=_MUTED)
        y = svg.wrapped_text(
            margin + 4, y, benefit.description,
            size=body, width=width - 4, cls=f"mirror benefit-desc benefit-{i}",
        )
    y += 2.0

    # risks, each with its safeguards
    y = _section_title(svg, margin, y, width, "Risks and safeguards")
    for i, risk in enumerate(doc.risks):
        tag = _CATEGORY_LABELS[risk.category]
        if risk.severity is not None:
            tag += f" · {risk.severity.value} severity"
        svg.text(page_w - margin, y, tag, size=body * 0.85, fill=_MUTED, anchor="end")
        y = svg.wrapped_text(
            margin, y, risk.description,
            size=body, width=width - 40, weight="bold", cls=f"mirror risk-desc risk-{i}",
        )
        for j, mitigation in enumerate(risk.mitigations):
            svg.text(margin + 4, y, "·", size=body, fill=_MUTED)
            y = svg.wrapped_text(
                margin + 8, y, mitigation,
                size=body, width=width - 8, cls=f"mirror mitigation mitigation-{i}-{j}",
            )
        y += 0.8
    y += 1.2

    # two columns: data and models left, affected parties right
    col_gap = 6.0
    left_w = (width - col_gap) * 0.58
    right_x = margin + left_w + col_gap
    right_w = width - left_w - col_gap
    y_left = _section_title(svg, margin, y, left_w, "Data and models")
    for item in doc.data:
        flags = [
            label
            for flag, label in (
                (item.essential, "essential"),
                (item.pii, "personal data"),
                (item.reusable, "reused"),
            )
            if flag
        ]
        joined = f" {_DOT} ".join(flags)
        line = item.name if not flags else f"{item.name}: {joined}"
        svg.text(margin, y_left, _ellipsize(line, left_w, body), size=body, cls="data-item")
        y_left += body_lh
    for model in doc.models:
        svg.text(
            margin, y_left,
            _ellipsize(f"{model.name} {model.version}", left_w - 24, body),
            size=body, cls="model-item",
        )
        svg.text(
            margin + left_w, y_left, f"accuracy {format_accuracy(model.accuracy)}",
            size=body, fill=_MUTED, anchor="end",
        )
        y_left += body_lh

    # affected-parties grid: one column per stakeholder, one row per benefit
    # and per risk
    y_right = _section_title(svg, right_x, y, right_w, "Who is affected")
    stakeholders = doc.stakeholders()
    if stakeholders:
        gutter = 9.0
        col_pitch = min(20.0, (right_w - gutter) / len(stakeholders))
        label_size = body * 0.78
        for i, party in enumerate(stakeholders):
            svg.text(
                right_x + gutter + i * col_pitch, y_right,
                _ellipsize(party.display_name(), col_pitch - 1.5, label_size),
                size=label_size, fill=_MUTED, cls="heat-col",
            )
        y_right += 2.2
        cell = 3.2
        row_pitch = 4.6
        rows = [(f"B{i + 1}", benefit.applies_to) for i, benefit in enumerate(doc.benefits)]
        rows += [(f"R{i + 1}", risk.residual_relevance) for i, risk in enumerate(doc.risks)]
        for row_label, touched in rows:
            svg.text(right_x, y_right + cell - 0.6, row_label, size=label_size, fill=_MUTED)
            targets = set(touched)
            for i, party in enumerate(stakeholders):
                cx = right_x + gutter + i * col_pitch
                if party in targets:
                    svg.rect(cx, y_right, cell, cell, fill=_INK, rx=0.4, cls="heat-on")
                else:
                    svg.rect(
                        cx, y_right, cell, cell,
                        fill="none", stroke=_HAIRLINE, stroke_width=0.3, rx=0.4, cls="heat-off",
                    )
            y_right += row_pitch
    y = max(y_left, y_right) + 2.0

    # governance footer with the report QR on the right
    qr_box = 26.0
    gov_w = width - qr_box - 4
    y_gov = _section_title(svg, margin, y, gov_w, "Contact and governance")
    qr_parts, _ = _qr_group(doc, page_w - margin - qr_box, y - 1.5, qr_box)
    svg.parts.extend(qr_parts)
    svg.text(
        page_w - margin - qr_box / 2, y - 1.5 + qr_box + 2.4, "Full report",
        size=base * 0.55, fill=_MUTED, anchor="middle", cls="qr-caption",
    )
    channels = f" {_DOT} ".join(
        f"{_CHANNEL_LABELS[channel.kind]} {channel.value}"
        for channel in doc.governance.reporting_channels
    )
    y_gov = svg.wrapped_text(margin, y_gov, f"Report a problem: {channels}", size=body, width=gov_w)
    y_gov = svg.wrapped_text(margin, y_gov, doc.governance.registered_office, size=body, width=gov_w, fill=_MUTED)
    if doc.governance.certifications:
        certs = f" {_DOT} ".join(doc.governance.certifications)
        y_gov = svg.wrapped_text(margin, y_gov, f"Certificates: {certs}", size=body, width=gov_w, cls="cert-line")
    footer = f"Last edited {doc.profile.last_edited.isoformat()}"
    if doc.risk.article_refs:
        footer += f" {_DOT} " + f" {_DOT} ".join(doc.risk.article_refs)
    y_gov = svg.wrapped_text(margin, y_gov, footer, size=body * 0.85, width=gov_w, fill=_MUTED, cls="footer-line")
    y = max(y_gov, y - 1.5 + qr_box + 4.0)

    # grow the page in quarter-height steps when the content needs more room
    base_h = theme.page_height_mm
    step = base_h / 4
    needed = y + margin - base_h
    page_h = base_h
    while needed > 0:
        page_h += step
        needed -= step

    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1"'
        f' width="{_fmt(page_w)}mm" height="{_fmt(page_h)}mm"'
        f' viewBox="0 0 {_fmt(page_w)} {_fmt(page_h)}"'
        f' font-family="{_esc(theme.base_font_family)}">'
    )
    background = (
        f'  <rect class="page" x="0" y="0" width="{_fmt(page_w)}" height="{_fmt(page_h)}"'
        f' fill="{theme.background}"/>'
    )
    return "\n".join([head, background, *svg.parts, "</svg>"]) + "\n"


def render_card_html(doc: ImpactAssessment, theme: Theme = DEFAULT_THEME) -> str:
    """The card SVG wrapped in a minimal self-contained HTML page."""
    svg = render_card_svg(doc, theme)
    name = _esc(doc.profile.name)
    return (
        "<!DOCTYPE html>\n"
        '<html lang="en">\n'
        "<head>\n"
        '<meta charset="utf-8"/>\n'
        '<meta name="viewport" content="width=device-width, initial-scale=1"/>\n'
        f"<title>{name} · impact card</title>\n"
        "<style>\n"
        "body { margin: 0; background: #4A4A4A; display: flex; justify-content: center; }\n"
        "main { padding: 24px; }\n"
        "svg { display: block; max-width: 100%; height: auto; box-shadow: 0 2px 12px rgba(0,0,0,0.4); }\n"
        "</style>\n"
        "</head>\n"
        "<body>\n"
        "<main>\n"
        f"{svg}"
        "</main>\n"
        "</body>\n"
        "</html>\n"
    )


# --- report ----------------------------------------------------------------------


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _party_names(stakeholders) -> str:
    return ", ".join(party.display_name() for party in stakeholders)


def render_report_html(doc: ImpactAssessment, theme: Theme = DEFAULT_THEME) -> str:
    """Render the long-form report as a self-contained HTML document.

    The report always carries the same nine sections in the same order:
    use, data, models, evaluation, risks, mitigations, benefits, contact
    information, certificates.
    """
    _checked(doc)
    profile = doc.profile
    level = doc.risk.level
    color = theme.level_colors[level]
    out: list[str] = []
    add = out.append

    add("<!DOCTYPE html>")
    add('<html lang="en">')
    add("<head>")
    add('<meta charset="utf-8"/>')
    add('<meta name="viewport" content="width=device-width, initial-scale=1"/>')
    add(f"<title>{_esc(profile.name)} · impact report</title>")
    add("<style>")
    add(
        f"body {{ font-family: {theme.base_font_family}; background: {theme.background};"
        f" color: {_INK}; line-height: {theme.line_spacing + 0.35:.2f};"
        " margin: 2rem auto; max-width: 46rem; padding: 0 1rem; }"
    )
    add("h1 { margin-bottom: 0.2rem; }")
    add(f"h2 {{ border-bottom: 1px solid {_HAIRLINE}; padding-bottom: 0.2rem; margin-top: 2rem; }}")
    add(
        ".risk-pill { display: inline-block; padding: 0.15rem 0.6rem; border-radius: 0.3rem;"
        f" color: {theme.text_color_on_level}; background: {color}; font-weight: bold; }}"
    )
    add("table { border-collapse: collapse; width: 100%; }")
    add(f"th, td {{ border: 1px solid {_HAIRLINE}; padding: 0.3rem 0.5rem; text-align: left; }}")
    add(f".muted {{ color: {_MUTED}; }}")
    add("</style>")
    add("</head>")
    add("<body>")

    add("<header>")
    add(f"<h1>{_esc(profile.name)}</h1>")
    add(f'<p class="mirror header-sentence">{_esc(compose_header(profile))}</p>')
    add(
        f'<p><span class="risk-pill">{risk_abbreviation(level)}</span> '
        f'<span class="mirror level-explanation">{_esc(LEVEL_EXPLANATIONS[level])}</span></p>'
    )
    add("</header>")

    # use
    add('<section id="use">')
    add("<h2>Use</h2>")
    add(f"<p>{_esc(profile.purpose)}, in {_esc(profile.application_domain)}, using {_esc(profile.capability)}.</p>")
    add(
        f"<p>The system is operated by {_esc(profile.deployer)} and affects"
        f" {_esc(profile.subject)}. It is classified as {level.value} risk"
        + (
            f" under {_esc(', '.join(doc.risk.article_refs))}."
            if doc.risk.article_refs
            else "."
        )
        + "</p>"
    )
    add("</section>")

    # data
    add('<section id="data">')
    add("<h2>Data</h2>")
    model_names = {model.id: model.name for model in doc.models}
    add("<table>")
    add("<tr><th>Data</th><th>Essential</th><th>Personal data</th><th>Reused</th><th>Feeds</th></tr>")
    for item in doc.data:
        feeds = ", ".join(model_names.get(ref, ref) for ref in item.model_refs)
        add(
            f"<tr><td>{_esc(item.name)}</td><td>{_yes_no(item.essential)}</td>"
            f"<td>{_yes_no(item.pii)}</td><td>{_yes_no(item.reusable)}</td>"
            f"<td>{_esc(feeds)}</td></tr>"
        )
    add("</table>")
    add("</section>")

    # models
    add('<section id="models">')
    add("<h2>Models</h2>")
    add("<table>")
    add("<tr><th>Model</th><th>Version</th><th>Accuracy</th></tr>")
    for model in doc.models:
        add(
            f"<tr><td>{_esc(model.name)}</td><td>{_esc(model.version)}</td>"
            f"<td>{format_accuracy(model.accuracy)}</td></tr>"
        )
    add("</table>")
    add("</section>")

    # evaluation
    add('<section id="evaluation">')
    add("<h2>Evaluation</h2>")
    add("<p>Reported accuracy for each model in this use:</p>")
    add("<ul>")
    for model in doc.models:
        add(f"<li>{_esc(model.name)} {_esc(model.version)}: {format_accuracy(model.accuracy)}</li>")
    add("</ul>")
    add("</section>")

    # risks
    add('<section id="risks">')
    add("<h2>Risks</h2>")
    add("<ul>")
    for i, risk in enumerate(doc.risks):
        severity = f", {risk.severity.value} severity" if risk.severity is not None else ""
        affected = _party_names(risk.residual_relevance)
        add(
            f'<li><span class="muted">{_CATEGORY_LABELS[risk.category]}{severity}:</span> '
            f'<span class="mirror risk-desc risk-{i}">{_esc(risk.description)}</span>'
            + (f' <span class="muted">Affects {_esc(affected)}.</span>' if affected else "")
            + "</li>"
        )
    add("</ul>")
    add("</section>")

    # mitigations
    add('<section id="mitigations">')
    add("<h2>Mitigations</h2>")
    for i, risk in enumerate(doc.risks):
        add(f'<p class="muted">For the risk “{_esc(risk.description)}”:</p>')
        add("<ul>")
        for j, mitigation in enumerate(risk.mitigations):
            add(f'<li class="mirror mitigation mitigation-{i}-{j}">{_esc(mitigation)}</li>')
        add("</ul>")
    add("</section>")

    # benefits
    add('<section id="benefits">')
    add("<h2>Benefits</h2>")
    add("<ul>")
    for i, benefit in enumerate(doc.benefits):
        parties = _party_names(benefit.applies_to)
        add(
            f'<li><span class="mirror benefit-desc benefit-{i}">{_esc(benefit.description)}</span>'
            + (f' <span class="muted">For {_esc(parties)}.</span>' if parties else "")
            + "</li>"
        )
    add("</ul>")
    add("</section>")

    # contact information
    add('<section id="contact-information">')
    add("<h2>Contact information</h2>")
    add("<ul>")
    for channel in doc.governance.reporting_channels:
        value = _esc(channel.value)
        if channel.kind is ChannelKind.EMAIL:
            value = f'<a href="mailto:{_esc(channel.value)}">{value}</a>'
        elif channel.kind is ChannelKind.URL:
            value = f'<a href="{_esc(channel.value)}">{value}</a>'
        add(f"<li>{_CHANNEL_LABELS[channel.kind]}: {value}</li>")
    add("</ul>")
    add(f"<p>Registered office: {_esc(doc.governance.registered_office)}</p>")
    add(
        f'<p class="muted">This report is published at'
        f' <a href="{_esc(profile.report_url)}">{_esc(profile.report_url)}</a>.'
        f" Last edited {profile.last_edited.isoformat()}.</p>"
    )
    add("</section>")

    # certificates
    add('<section id="certificates">')
    add("<h2>Certificates</h2>")
    if doc.governance.certifications:
        add("<ul>")
        for certificate in doc.governance.certifications:
            add(f"<li>{_esc(certificate)}</li>")
        add("</ul>")
    else:
        add('<p class="muted">No certificates are listed for this use.</p>')
    add("</section>")

    add("</body>")
    add("</html>")
    return "\n".join(out) + "\n"
