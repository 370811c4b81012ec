"""Rendering of verification reports as text tables and PDF documents."""

from __future__ import annotations

from io import BytesIO
from pathlib import Path
from typing import Any, List, Optional, Union

from services.presentations import FamilyReport, VerificationReport


class ReportDependencyError(RuntimeError):
    """Raised when ReportLab is not installed."""


def _status(family: FamilyReport) -> str:
    if family.vacuous:
        return "vacuous"
    return "ok" if family.passed else "FAILED"


def format_report_text(report: VerificationReport) -> str:
    header = f"{'family':<8} {'label':<16} {'relations':>9} {'instances':>9} {'skipped':>7}  status"
    lines = [f"Relations of B_{{{report.ctx.m},{report.ctx.n}}}", header, "-" * len(header)]
    for fam in report.families:
        lines.append(
            f"{fam.family.id:<8} {fam.family.label:<16} {fam.relation_count:>9} "
            f"{fam.instances:>9} {len(fam.skipped):>7}  {_status(fam)}"
        )
        for failure in fam.failures:
            lines.append(f"    failed: {failure.instance.describe()}")
    lines.append("-" * len(header))
    verdict = "all relations hold" if report.passed else f"{report.total_failures} failures"
    lines.append(
        f"{report.total_relations} relations, {report.total_instances} instances, "
        f"{report.total_skipped} skipped tuples: {verdict}"
    )
    return "\n".join(lines)


def render_report_pdf(
    report: VerificationReport,
    path: Optional[Union[str, Path]] = None,
) -> BytesIO:
    """Lay the per-family table out as a PDF; also written to ``path`` when given."""
    try:
        from reportlab.lib import colors
        from reportlab.lib.pagesizes import A4
        from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
        from reportlab.lib.units import mm
        from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle
    except ImportError as exc:  # pragma: no cover - dependency guard
        raise ReportDependencyError(
            "ReportLab is required to render PDF reports. Install it with `pip install reportlab`."
        ) from exc

    ctx = report.ctx
    pdf_buffer = BytesIO()
    doc = SimpleDocTemplate(
        pdf_buffer,
        pagesize=A4,
        leftMargin=18 * mm,
        rightMargin=18 * mm,
        topMargin=24 * mm,
        bottomMargin=20 * mm,
        title=f"Relations of B_{ctx.m},{ctx.n}",
    )
    available_width = doc.width

    styles = getSampleStyleSheet()
    title_style = styles["Title"].clone("ReportTitle")
    title_style.fontSize = 20
    title_style.leading = 24
    title_style.alignment = 0
    header_style = ParagraphStyle(
        "ReportHeader",
        parent=styles["Normal"],
        fontSize=10,
        leading=13,
        alignment=1,
        textColor=colors.whitesmoke,
    )
    cell_style = ParagraphStyle("ReportCell", parent=styles["Normal"], fontSize=9, leading=12)
    number_style = ParagraphStyle("ReportNumber", parent=cell_style, alignment=2)

    story: List[Any] = [
        Paragraph(f"Relations of B<sub>{ctx.m},{ctx.n}</sub>", title_style),
        Spacer(1, 6),
        Paragraph(
            f"{report.total_relations} relations, {report.total_instances} sign-expanded "
            f"instances, {report.total_failures} failures, {report.total_skipped} skipped tuples.",
            styles["Normal"],
        ),
        Spacer(1, 12),
    ]

    table_data = [
        [
            Paragraph("Family", header_style),
            Paragraph("Relations", header_style),
            Paragraph("Instances", header_style),
            Paragraph("Skipped", header_style),
            Paragraph("Status", header_style),
        ]
    ]
    for fam in report.families:
        table_data.append(
            [
                Paragraph(f"{fam.family.id} &nbsp; {fam.family.label}", cell_style),
                Paragraph(str(fam.relation_count), number_style),
                Paragraph(str(fam.instances), number_style),
                Paragraph(str(len(fam.skipped)), number_style),
                Paragraph(_status(fam), cell_style),
            ]
        )

    table = Table(
        table_data,
        colWidths=[
            available_width * 0.34,
            available_width * 0.16,
            available_width * 0.16,
            available_width * 0.16,
            available_width * 0.18,
        ],
        repeatRows=1,
    )
    table.setStyle(
        TableStyle(
            [
                ("BACKGROUND", (0, 0), (-1, 0), colors.HexColor("#1f2937")),
                ("LINEBELOW", (0, 0), (-1, 0), 1, colors.black),
                ("VALIGN", (0, 0), (-1, -1), "TOP"),
                ("INNERGRID", (0, 0), (-1, -1), 0.25, colors.lightgrey),
                ("BOX", (0, 0), (-1, -1), 0.5, colors.lightgrey),
                ("LEFTPADDING", (0, 0), (-1, -1), 4),
                ("RIGHTPADDING", (0, 0), (-1, -1), 4),
                ("TOPPADDING", (0, 0), (-1, -1), 3),
                ("BOTTOMPADDING", (0, 0), (-1, -1), 4),
            ]
        )
    )
    story.append(table)

    failures = [r for fam in report.families for r in fam.failures]
    if failures:
        story.append(Spacer(1, 12))
        story.append(Paragraph("<b>Failing instances</b>", styles["Normal"]))
        for failure in failures:
            story.append(Paragraph(failure.instance.describe(), cell_style))

    doc.build(story)
    pdf_buffer.seek(0)
    if path is not None:
        Path(path).write_bytes(pdf_buffer.getvalue())
    return pdf_buffer
