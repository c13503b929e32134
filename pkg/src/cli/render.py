"""
Output rendering: JSON documents, CSV tables and aligned text tables.

Every command produces a JSON-ready document and a list of flat rows;
the output format decides which of the two is written.
"""

import json
from typing import Dict, List, Optional

import pandas as pd

from .config import DEFAULTS


def _format_float(value: float) -> str:
    return DEFAULTS['float_format'] % value


def to_frame(rows: List[Dict[str, object]]) -> pd.DataFrame:
    """Build a table from flat row dicts, keeping first-seen column order."""
    columns: List[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    return pd.DataFrame(rows, columns=columns)


def render_json(document: object) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def render_csv(rows: List[Dict[str, object]]) -> str:
    return to_frame(rows).to_csv(index=False, float_format=DEFAULTS['float_format'],
                                 lineterminator="\n")


def render_text(rows: List[Dict[str, object]]) -> str:
    frame = to_frame(rows)
    if frame.empty:
        return "(no rows)\n"
    return frame.to_string(index=False, float_format=_format_float, na_rep="-") + "\n"


def render(document: object, rows: List[Dict[str, object]], output_format: str) -> str:
    """
    Render a command result.

    Args:
        document: Nested JSON-ready structure (used for 'json')
        rows: Flat records (used for 'csv' and 'text')
        output_format: 'json', 'csv' or 'text'

    Returns:
        Rendered text ending in a newline
    """
    if output_format == 'json':
        return render_json(document)
    if output_format == 'csv':
        return render_csv(rows)
    return render_text(rows)


def emit(text: str, output_path: Optional[str], stream) -> None:
    """Write rendered output to a file or to the given stream."""
    if output_path:
        with open(output_path, 'w', encoding='utf-8', newline='\n') as handle:
            handle.write(text)
    else:
        stream.write(text)
