"""
JSON Exporter

Writes reports as deterministic JSON: sorted keys, fixed indentation, so equal
inputs give byte-identical files.
"""

import json
from typing import Any, Mapping, Optional


class JSONExporter:
    """
    Exports report payloads as JSON.

    Payloads are plain dictionaries (the ``to_dict`` output of the report types)
    or objects that provide ``to_dict``.
    """

    def __init__(self, indent: int = 2):
        self.indent = indent

    def render(self, payload: Any) -> str:
        if hasattr(payload, "to_dict"):
            payload = payload.to_dict()
        if not isinstance(payload, Mapping):
            raise TypeError(f"Cannot export {type(payload).__name__} as a JSON report")
        return json.dumps(payload, sort_keys=True, indent=self.indent, ensure_ascii=False) + "\n"

    def export(self, payload: Any, output_path: Optional[str] = None) -> str:
        """
        Export payload to JSON.

        Args:
            payload: Report dictionary or object with ``to_dict``
            output_path: Optional path to save the JSON file

        Returns:
            JSON content as string
        """
        content = self.render(payload)
        if output_path:
            with open(output_path, "w", encoding="utf-8") as f:
                f.write(content)
        return content
