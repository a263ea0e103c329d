"""Input coercion shared by the parsers.

Every loader accepts a filesystem path, raw bytes, or an open file object;
plain strings are treated as paths, never as document content (pass a
``StringIO``/``bytes`` for in-memory documents).
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import IO, Union

from .errors import ParseError

TextSource = Union[str, "os.PathLike[str]", bytes, IO[str], IO[bytes]]


def read_text(source: TextSource) -> str:
    if isinstance(source, bytes):
        return _decode(source)
    if isinstance(source, (str, os.PathLike)):
        return Path(source).read_text(encoding="utf-8")
    data = source.read()
    if isinstance(data, bytes):
        return _decode(data)
    return data


def _decode(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not valid UTF-8: {exc}") from None
