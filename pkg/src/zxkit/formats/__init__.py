"""Reading and writing circuits and diagrams."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Optional, Union

from ..circuit import Circuit
from .errors import FormatError, ParseError
from .qasm import emit_qasm, parse_qasm
from .qc import emit_qc, parse_qc
from .quipper import parse_quipper
from .tikz import emit_tikz

FORMATS = ("qasm", "qc", "quipper")
EXTENSIONS = {".qasm": "qasm", ".qc": "qc", ".tfc": "qc", ".quipper": "quipper"}
_PARSERS = {"qasm": parse_qasm, "qc": parse_qc, "quipper": parse_quipper}


def detect_format(text: str) -> str:
    """Guess the format from the first meaningful line."""
    for line in text.splitlines():
        s = line.strip()
        if not s or s.startswith("//") or s.startswith("#") or s.startswith("Comment"):
            continue
        if s.startswith("OPENQASM") or s.startswith("qreg") or s.startswith("include"):
            return "qasm"
        if s.startswith(".v"):
            return "qc"
        if s.startswith("Inputs:"):
            return "quipper"
        break
    raise FormatError("cannot detect the circuit format")


def _looks_like_path(source: str) -> bool:
    return "\n" not in source and len(source) < 4096 and os.path.exists(source)


def load(source: Union[str, Path], fmt: Optional[str] = None) -> Circuit:
    """Parse a circuit from a file path or from raw text.

    The format is ``fmt`` if given, otherwise inferred from the file
    extension and, failing that, from the content.
    """
    name = ""
    if isinstance(source, Path) or _looks_like_path(source):
        path = Path(source)
        text = path.read_text(encoding="utf-8")
        name = path.stem
        if fmt is None:
            fmt = EXTENSIONS.get(path.suffix.lower())
    else:
        text = source
    if fmt is None:
        fmt = detect_format(text)
    if fmt not in _PARSERS:
        raise FormatError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    c = _PARSERS[fmt](text)
    c.name = name
    return c


__all__ = ["FormatError", "ParseError", "detect_format", "load", "emit_qasm", "emit_qc", "emit_tikz",
           "parse_qasm", "parse_qc", "parse_quipper"]
