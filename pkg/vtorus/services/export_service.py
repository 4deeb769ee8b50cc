"""
File exporters for graphs and reports.

All writers are deterministic: the same input produces byte-identical files.
Relative paths are resolved against VT_OUTPUT_DIR.
"""

import csv
import json
import logging
import os
import re
from typing import Dict, List, Optional

from vtorus.models import VtGraph
from vtorus.utils.errors import ExportError
from vtorus.utils.settings import get_setting

logger = logging.getLogger(__name__)

DOT_EDGE = re.compile(r'^\s*"(-?\d+,-?\d+)"\s*--\s*"(-?\d+,-?\d+)"\s*\[kind=(acute|obtuse)\];\s*$')


class ExportService:
    """Writers for DOT, JSON and CSV outputs"""

    def __init__(self):
        self.csv_delimiter = get_setting('VT_CSV_DELIMITER')
        self.output_directory = get_setting('VT_OUTPUT_DIR')

    def resolve(self, path: str) -> str:
        if os.path.isabs(path):
            return path
        return os.path.join(self.output_directory, path)

    def _write_text(self, path: str, text: str) -> str:
        file_path = self.resolve(path)
        try:
            directory = os.path.dirname(file_path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(file_path, 'w', encoding='utf-8', newline='\n') as handle:
                handle.write(text)
        except OSError as e:
            raise ExportError(f"cannot write {os.path.basename(file_path)}: {e.strerror}", file_path)
        return file_path

    # Graphs

    def dot_text(self, g: VtGraph) -> str:
        lines = [f'graph "VT({g.params.r},{g.params.s})" {{']
        for vertex in g.vertices:
            lines.append(f'  "{vertex.label()}" [label="{vertex.label()}"];')
        for edge in g.edges():
            lines.append(f'  "{edge.u.label()}" -- "{edge.v.label()}" [kind={edge.kind.value}];')
        lines.append('}')
        return '\n'.join(lines) + '\n'

    def export_dot(self, g: VtGraph, path: str) -> str:
        """
        One node per vertex labeled "x,y"; edges carry kind=acute|obtuse.

        Returns:
            str: Path of the written file
        """
        file_path = self._write_text(path, self.dot_text(g))
        logger.info(f"DOT written: {file_path} ({g.order} nodes, {g.size} edges)")
        return file_path

    def read_dot_edges(self, path: str) -> List[tuple]:
        """Edges of a DOT file written by export_dot, as (u, v, kind) label triples"""
        file_path = self.resolve(path)
        try:
            with open(file_path, encoding='utf-8') as handle:
                lines = handle.readlines()
        except OSError as e:
            raise ExportError(f"cannot read {os.path.basename(file_path)}: {e.strerror}", file_path)
        return [match.groups() for match in map(DOT_EDGE.match, lines) if match]

    def graph_json(self, g: VtGraph) -> str:
        # vertices are row-major and edges canonical in VtGraph already
        return json.dumps(g.to_dict(), indent=2, sort_keys=True) + '\n'

    def export_json(self, g: VtGraph, path: str) -> str:
        file_path = self._write_text(path, self.graph_json(g))
        logger.info(f"JSON written: {file_path}")
        return file_path

    def export_document(self, document: Dict, path: str) -> str:
        """Any JSON-serializable report, keys sorted"""
        return self._write_text(path, json.dumps(document, indent=2, sort_keys=True, default=str) + '\n')

    # Reports

    def export_csv(self, report, path: str, fieldnames: Optional[List[str]] = None) -> str:
        """
        Write one row per record, header included.

        Args:
            report: Object with to_rows() (congestion profile, verification
                matrix) or a list of dicts
            path: Output file
            fieldnames: Column order; defaults to the keys of the first row

        Returns:
            str: Path of the written file
        """
        rows = report.to_rows() if hasattr(report, 'to_rows') else list(report)
        if fieldnames is None:
            if not rows:
                raise ValueError('cannot infer CSV columns from an empty report')
            fieldnames = list(rows[0].keys())

        file_path = self.resolve(path)
        try:
            directory = os.path.dirname(file_path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(file_path, 'w', newline='', encoding='utf-8') as csvfile:
                writer = csv.DictWriter(csvfile, fieldnames=fieldnames, delimiter=self.csv_delimiter)
                writer.writeheader()
                for row in rows:
                    writer.writerow(row)
        except OSError as e:
            raise ExportError(f"cannot write {os.path.basename(file_path)}: {e.strerror}", file_path)

        logger.info(f"CSV written: {file_path} with {len(rows)} rows")
        return file_path
