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

"""Conversions between coefficient tuples and sympy polynomials."""

from fractions import Fraction

import sympy

from sympy.polys.domains import QQ

from ringstar.rings.literal import SYMBOLS, to_fraction

T = SYMBOLS["T"]


def trim(coeffs, zero=0):
    """Drop trailing zero coefficients."""

    coeffs = list(coeffs)

    while coeffs and coeffs[-1] == zero:
        coeffs.pop()

    return tuple(coeffs)


def to_poly(coeffs):
    """Return the sympy Poly over QQ with the given low-to-high coeffs."""

    values = [sympy.Rational(c.numerator, c.denominator)
              if isinstance(c, Fraction) else sympy.Integer(c)
              for c in reversed(coeffs)]

    return sympy.Poly(values or [0], T, domain=QQ)


def from_poly(poly):
    """Return the trimmed low-to-high Fraction tuple of a Poly."""

    return trim(to_fraction(c) for c in reversed(poly.all_coeffs()))


def is_integral(coeffs):
    """Return True if every coefficient is an integer."""

    return all(Fraction(c).denominator == 1 for c in coeffs)


def to_ints(coeffs):
    """Return the coefficients as ints."""

    return tuple(int(c) for c in coeffs)


def exact_quotient(num, den):
    """Return num / den over QQ[T] or None if den does not divide num."""

    quot, rem = sympy.div(to_poly(num), to_poly(den))

    if not rem.is_zero:
        return None

    return from_poly(quot)


def ratfunc_key(num, den):
    """Return the reduced, monic-denominator form of num/den."""

    num, den = to_poly(num), to_poly(den)

    if num.is_zero:
        return ((), (Fraction(1),))

    common = sympy.gcd(num, den)
    num = sympy.quo(num, common)
    den = sympy.quo(den, common)
    lead = den.LC()

    return (from_poly(num.quo_ground(lead)), from_poly(den.quo_ground(lead)))


def evaluate(coeffs, point):
    """Return the value of the polynomial at a rational point."""

    point = sympy.Rational(point.numerator, point.denominator)

    return to_fraction(to_poly(coeffs).eval(point))
