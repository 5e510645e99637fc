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

"""Univariate polynomials over a quadratic order."""

import math

from fractions import Fraction

import sympy

from ringstar.errors import ParseError
from ringstar.rings.literal import parse_terms, format_monomial, join_terms
from ringstar.rings.polynomial import to_poly, from_poly, trim, \
    exact_quotient, ratfunc_key, is_integral, to_ints
from ringstar.rings.quadratic import format_quadratic
from ringstar.rings.ring import Ring
from ringstar.rings.spiral import poly_shell, vector_shell

ZERO = (0, 0)


class OrderPoly(Ring):
    """The ring O[T] with O = Z[w], w^2 = d.

    Values are trimmed low-to-high tuples of coefficient pairs (x, y)
    meaning x + y*w. Internally a value is also split as A(T) + w*B(T)
    with A, B in Z[T].
    """

    def __init__(self, descriptor):
        super().__init__(descriptor)
        self.d = descriptor.param

    @property
    def zero_value(self):
        return ()

    @property
    def one_value(self):
        return ((1, 0),)

    def canonical(self, value):
        return trim((tuple(c) for c in value), ZERO)

    def from_int(self, value):
        return self.element(((value, 0),))

    def constant(self, pair):
        """Return the constant polynomial with coefficient x + y*w."""

        return self.element((tuple(pair),))

    @property
    def variable(self):
        """Return T."""

        return self.element((ZERO, (1, 0)))

    @property
    def omega(self):
        """Return w."""

        return self.element(((0, 1),))

    def degree(self, x):
        """Return the degree, -1 for zero."""

        self.check(x)
        return len(x.value) - 1

    def coefficients(self, x):
        """Return the coefficient pairs of x."""

        self.check(x)
        return list(x.value)

    def split(self, value):
        """Return (A, B) with value = A + w*B."""

        return (trim(c[0] for c in value), trim(c[1] for c in value))

    def join(self, first, second):
        """Return the value A + w*B."""

        size = max(len(first), len(second))
        first = tuple(first) + (0,) * (size - len(first))
        second = tuple(second) + (0,) * (size - len(second))
        return trim(zip(first, second), ZERO)

    def conjugate_value(self, value):
        """Apply w -> -w coefficientwise."""

        return tuple((c[0], -c[1]) for c in value)

    def norm_poly(self, value):
        """Return A^2 - d*B^2 as integer coefficients."""

        first, second = self.split(value)
        norm = to_poly(first) ** 2 - self.d * to_poly(second) ** 2
        return to_ints(from_poly(norm))

    def parse(self, text):
        terms = parse_terms(text, ("w", "T"))
        size = max([exp for (_, exp) in terms] + [-1]) + 1
        coeffs = [[Fraction(0), Fraction(0)] for _ in range(size)]
        for (wexp, texp), coeff in terms.items():
            coeffs[texp][wexp % 2] += coeff * self.d ** (wexp // 2)
        if not all(is_integral(c) for c in coeffs):
            raise ParseError("%s is not in Z[w][T]" % text)
        return self.element(tuple((int(c[0]), int(c[1])) for c in coeffs))

    def format(self, value):
        terms = []
        for exp, coeff in enumerate(value):
            if coeff == ZERO:
                continue
            wrap = bool(coeff[0]) and bool(coeff[1])
            terms.append(format_monomial(format_quadratic(coeff), "T", exp,
                                         wrap=wrap))
        return join_terms(terms)

    def sort_key(self, value):
        return (len(value), value)

    def _add(self, x, y):
        size = max(len(x), len(y))
        x = x + (ZERO,) * (size - len(x))
        y = y + (ZERO,) * (size - len(y))
        return trim(((a[0] + b[0], a[1] + b[1]) for a, b in zip(x, y)), ZERO)

    def _neg(self, x):
        return tuple((-c[0], -c[1]) for c in x)

    def _mul(self, x, y):
        if not x or not y:
            return ()
        xa, xb = (to_poly(p) for p in self.split(x))
        ya, yb = (to_poly(p) for p in self.split(y))
        first = xa * ya + self.d * xb * yb
        second = xa * yb + xb * ya
        return self.join(to_ints(from_poly(first)),
                         to_ints(from_poly(second)))

    def _is_regular(self, x):
        return bool(x)

    def _divide(self, x, b):
        # x/b = x*conj(b) / N(b) with N(b) in Z[T]
        first, second = self.split(self._mul(x, self.conjugate_value(b)))
        norm = self.norm_poly(b)
        qa = exact_quotient(first, norm)
        qb = exact_quotient(second, norm)
        if qa is None or qb is None:
            return None
        if not is_integral(qa) or not is_integral(qb):
            return None
        return self.join(to_ints(qa), to_ints(qb))

    def _fraction_key(self, num, den):
        first, second = self.split(self._mul(num, self.conjugate_value(den)))
        norm = self.norm_poly(den)
        return (ratfunc_key(first, norm), ratfunc_key(second, norm))

    def _non_divisor(self, value):
        coeff = next(c for c in value if c != ZERO)
        content = math.gcd(coeff[0], coeff[1])
        prime = 2
        while content % prime == 0:
            prime = sympy.nextprime(prime)
        return ((prime, 0),)

    def _shell(self, height):
        return poly_shell(height, lambda level: vector_shell(2, level))
