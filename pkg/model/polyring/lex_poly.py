"""
PLY lexer for polynomial text: integer and rational literals, variable names,
+ - * ^ (or **) and parentheses.
"""
from __future__ import annotations

try:
    import ply.lex as lex
except Exception as e:
    raise ImportError("PLY is required for model/polyring/lex_poly.py. Install it with `pip install ply`. Original error: %s" % e)

from .errors import PolynomialSyntaxError

tokens = (
    'RATIONAL',
    'NUMBER',
    'NAME',
    'PLUS',
    'MINUS',
    'TIMES',
    'POWER',
    'LPAREN',
    'RPAREN',
)

t_PLUS = r"\+"
t_MINUS = r"-"
t_TIMES = r"\*"
t_POWER = r"\^|\*\*"
t_LPAREN = r"\("
t_RPAREN = r"\)"


def t_RATIONAL(t):
    r"[0-9]+[ \t]*/[ \t]*[0-9]+"
    num, den = t.value.split("/")
    t.value = (int(num), int(den))
    return t


def t_NUMBER(t):
    r"[0-9]+"
    t.value = int(t.value)
    return t


def t_NAME(t):
    r"[A-Za-z_][A-Za-z_0-9]*"
    return t


t_ignore = ' \t\r\n'


def t_error(t):
    raise PolynomialSyntaxError(f"Illegal character '{t.value[0]}'", t.lexpos)


def build_lexer(**kwargs):
    return lex.lex(**kwargs)

