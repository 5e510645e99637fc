#!/usr/bin/env python3
#
# Copyright (c) 2024 The ringstar authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing,
# software distributed under the License is distributed on an
# "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, either express or implied. See the License for the
# specific language governing permissions and limitations
# under the License.

"""Parsing and printing of ring element literals."""

import re

from fractions import Fraction

import sympy

from sympy.parsing.sympy_parser import parse_expr, \
    standard_transformations, convert_xor, implicit_multiplication

from ringstar.errors import ParseError

LITERAL_RE = re.compile(r"^[0-9A-Za-z+\-*/^() ]*$")

TRANSFORMATIONS = standard_transformations + (convert_xor,
                                              implicit_multiplication)

SYMBOLS = {name: sympy.Symbol(name) for name in ("T", "t", "w")}


def to_fraction(value):
    """Convert a sympy rational to a Fraction."""

    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def parse_terms(text, names):
    """Parse a polynomial literal in the given variables.

    Return a dict mapping exponent tuples to nonzero Fractions.
    """

    text = text.strip()

    if not text or not LITERAL_RE.match(text):
        raise ParseError("Invalid literal '%s'" % text)

    used = set(re.findall(r"[A-Za-z]+", text))
    unknown = used - set(names)

    if unknown:
        raise ParseError("Unknown symbol %s in '%s'" %
                         (", ".join(sorted(unknown)), text))

    gens = [SYMBOLS[name] for name in names]

    try:
        expr = parse_expr(text, local_dict={n: SYMBOLS[n] for n in names},
                          transformations=TRANSFORMATIONS)
        poly = sympy.Poly(expr, *gens, domain=sympy.QQ) if gens else None
    except (SyntaxError, TypeError, sympy.PolynomialError,
            sympy.SympifyError) as ex:
        raise ParseError("Invalid literal '%s' (%s)" % (text, ex))

    if poly is None:
        if not expr.is_Rational:
            raise ParseError("Invalid number '%s'" % text)
        value = to_fraction(expr)
        return {(): value} if value else {}

    return {monom: to_fraction(coeff) for monom, coeff in poly.terms()
            if coeff}


def split_product(text):
    """Split '(a | b)' into its two components."""

    text = text.strip()

    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError("Invalid pair literal '%s'" % text)

    depth = 0

    for idx, char in enumerate(text[1:-1]):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
        elif char == "|" and depth == 0:
            return text[1:idx + 1], text[idx + 2:-1]

    raise ParseError("Invalid pair literal '%s'" % text)


def format_monomial(coeff, var, exp, wrap=False):
    """Return the text of coeff * var^exp with a sign prefix."""

    if exp == 0:
        body = coeff
    else:
        power = var if exp == 1 else "%s^%u" % (var, exp)
        if coeff == "1":
            body = power
        elif coeff == "-1":
            body = "-" + power
        elif wrap:
            body = "(%s)*%s" % (coeff, power)
        else:
            body = "%s*%s" % (coeff, power)

    return body


def join_terms(terms):
    """Join signed term texts into a sum."""

    if not terms:
        return "0"

    out = terms[0]

    for term in terms[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term

    return out
