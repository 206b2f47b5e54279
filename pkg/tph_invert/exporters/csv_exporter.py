"""
CSV Exporters

- CurveCSVExporter: points of a closed curve for plotting elsewhere
- SingularValueCSVExporter: singular value tails of oracle reports
"""

import csv
import io
from typing import Iterable, List, Optional, Sequence

from tph_invert.pc_fredholm.curves import ClosedCurve
from tph_invert.verify.oracle import OracleReport


def _write_rows(
    header: Sequence[str], rows: Iterable[Sequence], output_path: Optional[str]
) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    content = buffer.getvalue()
    if output_path:
        with open(output_path, "w", encoding="utf-8", newline="") as f:
            f.write(content)
    return content


class CurveCSVExporter:
    """Exports a ClosedCurve with columns re, im, segment_kind, cumulative_arg"""

    COLUMNS = ("re", "im", "segment_kind", "cumulative_arg")

    def export(self, curve: ClosedCurve, output_path: Optional[str] = None) -> str:
        """
        Export curve points to CSV.

        Args:
            curve: The curve to export
            output_path: Optional path to save the CSV file

        Returns:
            CSV content as string
        """
        rows = [(repr(re), repr(im), kind, repr(arg)) for re, im, kind, arg in curve.rows()]
        return _write_rows(self.COLUMNS, rows, output_path)


class SingularValueCSVExporter:
    """Exports the singular value tails of one or more oracle reports"""

    COLUMNS = ("N", "spectrum", "position", "singular_value")

    def export(self, reports: Sequence[OracleReport], output_path: Optional[str] = None) -> str:
        """Export one row per tail value, 'operator' and 'adjoint' spectra"""
        rows: List[tuple] = []
        for report in reports:
            for position, value in enumerate(report.singular_values_tail):
                rows.append((report.N, "operator", position, repr(value)))
            for position, value in enumerate(report.adjoint_singular_values_tail):
                rows.append((report.N, "adjoint", position, repr(value)))
        return _write_rows(self.COLUMNS, rows, output_path)
