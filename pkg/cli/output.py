"""
Output Formatting

Every command writes exactly one document to standard output: JSON, aligned
text or CSV (plus DOT for graph listings). Diagnostics never go here.
"""

import csv
import json
import sys
from typing import Any, Iterable, Optional, Sequence, TextIO

from colorama import Style

FORMATS = ('json', 'text', 'csv', 'dot')


def write_json(document: Any, stream: Optional[TextIO] = None):
    stream = stream or sys.stdout
    json.dump(document, stream, indent=2)
    stream.write('\n')


def write_csv(header: Sequence[str], rows: Iterable[Sequence[Any]], stream: Optional[TextIO] = None):
    writer = csv.writer(stream or sys.stdout, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)


def banner(title: str, stream: Optional[TextIO] = None) -> str:
    """Title line, bold on a terminal."""
    stream = stream or sys.stdout
    if hasattr(stream, 'isatty') and stream.isatty():
        return f"{Style.BRIGHT}{title}{Style.RESET_ALL}"
    return title


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


def write_text(title: str, rows: Sequence[Sequence[Any]], notes: Sequence[str] = (),
               stream: Optional[TextIO] = None):
    """Banner, then two-column rows aligned on the first column."""
    stream = stream or sys.stdout
    stream.write(banner(title, stream) + '\n')
    width = max((len(str(row[0])) for row in rows), default=0)
    for row in rows:
        label, *values = row
        stream.write(f"  {str(label).ljust(width)}  {' '.join(_cell(v) for v in values)}\n")
    for note in notes:
        stream.write(f"note: {note}\n")
