from typing import Optional


class FormatError(ValueError):
    """Unknown or ambiguous input format."""


class ParseError(ValueError):
    """Malformed input; carries the 1-based line (and column when known)."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None) -> None:
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
