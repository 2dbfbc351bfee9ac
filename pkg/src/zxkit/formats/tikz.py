"""TikZ export of diagrams as a standalone LaTeX document."""

from __future__ import annotations

from fractions import Fraction

from ..graph import Diagram, EdgeType, VertexType

PREAMBLE = r"""\documentclass[tikz]{standalone}
\tikzset{
  zdot/.style={circle, draw, fill=green!40, minimum size=4mm, inner sep=1pt, font=\scriptsize},
  xdot/.style={circle, draw, fill=red!40, minimum size=4mm, inner sep=1pt, font=\scriptsize},
  boundary/.style={circle, fill=black, minimum size=1mm, inner sep=0pt},
  simple edge/.style={draw=black},
  hadamard edge/.style={draw=blue, dashed},
}
\begin{document}
\begin{tikzpicture}"""

POSTAMBLE = r"""\end{tikzpicture}
\end{document}"""

_STYLE = {VertexType.Z: "zdot", VertexType.X: "xdot", VertexType.BOUNDARY: "boundary"}


def phase_label(p: Fraction) -> str:
    """LaTeX for ``p*pi``: ``\\pi``, ``\\frac{\\pi}{2}``, ``\\frac{3\\pi}{4}``."""
    if p == 0:
        return ""
    n, d = p.numerator, p.denominator
    num = r"\pi" if n == 1 else f"{n}\\pi"
    return num if d == 1 else f"\\frac{{{num}}}{{{d}}}"


def _coord(x: Fraction) -> str:
    return f"{float(x):g}"


def emit_tikz(d: Diagram) -> str:
    lines = [PREAMBLE]
    for v in sorted(d.vertices()):
        label = phase_label(d.phase(v))
        text = f"${label}$" if label else ""
        lines.append(f"  \\node [{_STYLE[d.type(v)]}] ({v}) at ({_coord(d.row(v))}, {_coord(-d.qubit(v))}) {{{text}}};")
    for u, v in sorted(d.edges()):
        style = "hadamard edge" if d.edge_type(u, v) == EdgeType.HADAMARD else "simple edge"
        lines.append(f"  \\draw [{style}] ({u}) to ({v});")
    lines.append(POSTAMBLE)
    return "\n".join(lines) + "\n"
