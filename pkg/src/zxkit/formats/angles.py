"""Exact evaluation of angle expressions such as ``3*pi/4`` or ``-pi/2``.

Angles are returned as Fractions in units of pi. Plain floating point
numbers are accepted only when they sit within 1e-9 of a rational
multiple of pi with denominator at most 1024.
"""

from __future__ import annotations

import ast
import math
from fractions import Fraction
from typing import Tuple, Union

MAX_DENOMINATOR = 1024
FLOAT_TOLERANCE = 1e-9

Number = Union[Fraction, float]


class AngleError(ValueError):
    pass


def radians_to_pi(x: float) -> Fraction:
    """Rational multiple of pi closest to ``x`` radians, or an error."""
    r = x / math.pi
    f = Fraction(r).limit_denominator(MAX_DENOMINATOR)
    if abs(float(f) - r) > FLOAT_TOLERANCE:
        raise AngleError(f"angle {x!r} is not a rational multiple of pi (denominator <= {MAX_DENOMINATOR})")
    return f


def _num(x: Union[int, float]) -> Number:
    return Fraction(x) if isinstance(x, int) else float(x)


def _eval(node: ast.AST) -> Tuple[Number, Number]:
    """Evaluate to ``(a, b)`` meaning ``a*pi + b``."""
    if isinstance(node, ast.Expression):
        return _eval(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
        return Fraction(0), _num(node.value)
    if isinstance(node, ast.Name) and node.id == "pi":
        return Fraction(1), Fraction(0)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        a, b = _eval(node.operand)
        return (-a, -b) if isinstance(node.op, ast.USub) else (a, b)
    if isinstance(node, ast.BinOp):
        a1, b1 = _eval(node.left)
        a2, b2 = _eval(node.right)
        if isinstance(node.op, ast.Add):
            return a1 + a2, b1 + b2
        if isinstance(node.op, ast.Sub):
            return a1 - a2, b1 - b2
        if isinstance(node.op, ast.Mult):
            if a1 and a2:
                raise AngleError("pi*pi is not an angle")
            return a1 * b2 + a2 * b1, b1 * b2
        if isinstance(node.op, ast.Div):
            if a2:
                raise AngleError("division by a multiple of pi")
            if b2 == 0:
                raise AngleError("division by zero")
            return a1 / b2, b1 / b2
    raise AngleError("unsupported angle expression")


def parse_angle(text: str) -> Fraction:
    """Parse an angle expression in radians into a Fraction of pi."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as e:
        raise AngleError(f"bad angle expression {text!r}") from e
    a, b = _eval(tree)
    if isinstance(a, float):
        # a float coefficient of pi, e.g. 0.25*pi
        a = radians_to_pi(a * math.pi)
    if b:
        if isinstance(b, Fraction):
            b = float(b)
        a = a + radians_to_pi(b)
    return Fraction(a)


def format_angle(p: Fraction) -> str:
    """``numerator*pi/denominator`` with no floating point."""
    p = Fraction(p)
    if p.denominator == 1:
        return f"{p.numerator}*pi"
    return f"{p.numerator}*pi/{p.denominator}"
