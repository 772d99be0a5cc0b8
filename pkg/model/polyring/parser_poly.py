"""
PLY grammar for polynomial text over a GradedRingSpec.

    expr : expr PLUS expr | expr MINUS expr | expr TIMES expr
         | MINUS expr | expr POWER NUMBER | LPAREN expr RPAREN
         | NUMBER | RATIONAL | NAME

Semantic actions build sympy ring elements directly, so coefficients come out
reduced in the ring's field.
"""
from __future__ import annotations

import sys
import threading
from typing import Optional

import ply.yacc as yacc

from . import lex_poly
from .errors import FieldCoefficientError, PolynomialSyntaxError, UnknownVariableError
from .lex_poly import tokens  # noqa: F401  (read by yacc)
from .polynomial import Polynomial
from .ring import GradedRingSpec


class ParserContext:
    def __init__(self, ring: GradedRingSpec, text: str):
        self.ring = ring
        self.text = text
        self.gens = dict(zip(ring.variables, ring.poly_ring.gens))

    def variable(self, name: str, position: int):
        if name not in self.gens:
            raise UnknownVariableError(name, position)
        return self.gens[name]

    def number(self, num: int, den: int = 1):
        return self.ring.poly_ring.ground_new(self.ring.field.from_fraction(num, den))


ctx: Optional[ParserContext] = None

precedence = (
    ('left', 'PLUS', 'MINUS'),
    ('left', 'TIMES'),
    ('right', 'UMINUS'),
    ('right', 'POWER'),
)


def p_expr_plus(p):
    'expr : expr PLUS expr'
    p[0] = p[1] + p[3]


def p_expr_minus(p):
    'expr : expr MINUS expr'
    p[0] = p[1] - p[3]


def p_expr_times(p):
    'expr : expr TIMES expr'
    p[0] = p[1] * p[3]


def p_expr_uminus(p):
    'expr : MINUS expr %prec UMINUS'
    p[0] = -p[2]


def p_expr_power(p):
    'expr : expr POWER NUMBER'
    p[0] = p[1] ** p[3]


def p_expr_group(p):
    'expr : LPAREN expr RPAREN'
    p[0] = p[2]


def p_expr_number(p):
    'expr : NUMBER'
    p[0] = ctx.number(p[1])


def p_expr_rational(p):
    'expr : RATIONAL'
    num, den = p[1]
    try:
        p[0] = ctx.number(num, den)
    except FieldCoefficientError as e:
        raise FieldCoefficientError(f"{e} at position {p.lexpos(1)}") from None


def p_expr_name(p):
    'expr : NAME'
    p[0] = ctx.variable(p[1], p.lexpos(1))


def p_error(p):
    if p:
        raise PolynomialSyntaxError(f"Syntax error at token {p.type} ({p.value!r})", p.lexpos)
    raise PolynomialSyntaxError("Unexpected end of input", len(ctx.text) if ctx else 0)


_LOCK = threading.Lock()
_LEXER = lex_poly.build_lexer()
_PARSER = yacc.yacc(module=sys.modules[__name__], start='expr', debug=False,
                    write_tables=False, errorlog=yacc.NullLogger())


def parse_polynomial(text: str, ring: GradedRingSpec) -> Polynomial:
    """
    Convierte el texto en un Polynomial del anillo dado.

    :param text: polinomio, p. ej. "x^2 - 3/7*y^2"
    :param ring: anillo de destino
    :return: Polynomial
    """
    global ctx
    if not text.strip():
        raise PolynomialSyntaxError("Empty polynomial", 0)
    with _LOCK:
        ctx = ParserContext(ring, text)
        try:
            element = _PARSER.parse(text, lexer=_LEXER.clone())
        finally:
            ctx = None
    return Polynomial(ring, element)
