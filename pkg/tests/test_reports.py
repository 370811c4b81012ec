import pytest

from services.mixed_braid import MixedContext
from services.presentations import verify_all
from services.reports import format_report_text, render_report_pdf


@pytest.fixture(scope="module")
def report():
    return verify_all(MixedContext(1, 3), families=["S", "F"])


def test_text_report(report):
    text = format_report_text(report)
    assert text.splitlines()[0] == "Relations of B_{1,3}"
    assert "S2" in text and "F2" in text
    assert text.endswith("all relations hold")


def test_pdf_report(report, tmp_path):
    pytest.importorskip("reportlab")
    target = tmp_path / "report.pdf"
    buffer = render_report_pdf(report, target)
    assert buffer.getvalue().startswith(b"%PDF")
    assert target.read_bytes() == buffer.getvalue()
