"""
Exporters for tph_invert

Supports:
- JSONExporter: deterministic JSON reports
- CurveCSVExporter: closed curves as CSV
- SingularValueCSVExporter: oracle singular value tails as CSV
"""

from tph_invert.exporters.csv_exporter import CurveCSVExporter, SingularValueCSVExporter
from tph_invert.exporters.json_exporter import JSONExporter

__all__ = [
    "JSONExporter",
    "CurveCSVExporter",
    "SingularValueCSVExporter",
]
