"""Bundled example datasets.

``table2_degrees.csv`` is the transcribed degree census of the 61-journal
information/library-science editorial-board network (2008 JCR category,
boards as published in May 2010).  ``toy_boards.csv`` is a small synthetic
six-journal membership file whose full pipeline output is known by hand.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

TABLE2_DEGREES = "table2_degrees.csv"
TOY_BOARDS = "toy_boards.csv"


def data_path(name: str) -> Path:
    """Filesystem path of a bundled dataset."""
    return Path(str(resources.files(__package__).joinpath(name)))


def load_text(name: str) -> str:
    return resources.files(__package__).joinpath(name).read_text(encoding="utf-8")
