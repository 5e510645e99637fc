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

"""Univariate polynomials over the rationals."""

from fractions import Fraction

import sympy

from ringstar.rings.literal import parse_terms, format_monomial, join_terms
from ringstar.rings.polynomial import to_poly, from_poly, trim, \
    exact_quotient, ratfunc_key, evaluate
from ringstar.rings.ring import Ring
from ringstar.rings.spiral import poly_shell, rational_shell


class RationalPoly(Ring):
    """The ring Q[T], values are trimmed low-to-high Fraction tuples."""

    @property
    def zero_value(self):
        return ()

    @property
    def one_value(self):
        return (Fraction(1),)

    def canonical(self, value):
        return trim(Fraction(c) for c in value)

    def from_int(self, value):
        return self.element((value,))

    def from_fraction(self, value):
        return self.element((value,))

    @property
    def variable(self):
        """Return T."""

        return self.element((Fraction(0), Fraction(1)))

    def degree(self, x):
        """Return the degree, -1 for zero."""

        self.check(x)
        return len(x.value) - 1

    def monic(self, x):
        """Return x divided by its leading coefficient."""

        self.check(x)
        if x.is_zero():
            return x
        lead = x.value[-1]
        return self.element(tuple(c / lead for c in x.value))

    def remainder(self, x, f):
        """Return the remainder of x modulo a nonzero f."""

        self.check(x, f)
        return self.element(from_poly(sympy.rem(to_poly(x.value),
                                                to_poly(f.value))))

    def gcd(self, x, y):
        """Return the monic gcd, zero for gcd(0, 0)."""

        self.check(x, y)
        return self.element(from_poly(sympy.gcd(to_poly(x.value),
                                                to_poly(y.value))))

    def gcdex(self, x, y):
        """Return (s, t, h) with s*x + t*y = h = gcd(x, y)."""

        self.check(x, y)
        s, t, h = sympy.gcdex(to_poly(x.value), to_poly(y.value))
        return (self.element(from_poly(s)), self.element(from_poly(t)),
                self.element(from_poly(h)))

    def evaluate(self, x, point):
        """Return x(point) for a rational point."""

        self.check(x)
        return evaluate(x.value, Fraction(point))

    def is_irreducible(self, x):
        """Return True if x is irreducible over Q."""

        self.check(x)
        return len(x.value) > 1 and to_poly(x.value).is_irreducible

    def parse(self, text):
        terms = parse_terms(text, ("T",))
        size = max([exp for (exp,) in terms] + [-1]) + 1
        coeffs = [Fraction(0)] * size
        for (exp,), coeff in terms.items():
            coeffs[exp] = coeff
        return self.element(tuple(coeffs))

    def format(self, value):
        return join_terms([format_monomial(str(c), "T", i)
                           for i, c in enumerate(value) if c])

    def sort_key(self, value):
        return (len(value), value)

    def _add(self, x, y):
        size = max(len(x), len(y))
        x = x + (Fraction(0),) * (size - len(x))
        y = y + (Fraction(0),) * (size - len(y))
        return trim(a + b for a, b in zip(x, y))

    def _neg(self, x):
        return tuple(-c for c in x)

    def _mul(self, x, y):
        if not x or not y:
            return ()
        return from_poly(to_poly(x) * to_poly(y))

    def _is_regular(self, x):
        return bool(x)

    def _divide(self, x, b):
        return exact_quotient(x, b)

    def _fraction_key(self, num, den):
        return ratfunc_key(num, den)

    def _non_divisor(self, value):
        root = 0
        while evaluate(value, Fraction(root)) == 0:
            root += 1
        return (Fraction(-root), Fraction(1))

    def _shell(self, height):
        return poly_shell(height, rational_shell)
