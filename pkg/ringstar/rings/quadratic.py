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

"""Quadratic orders Z[w] with w^2 = d."""

from fractions import Fraction

from ringstar.errors import ParseError
from ringstar.rings.literal import parse_terms
from ringstar.rings.ring import LatticeRing
from ringstar.rings.spiral import vector_shell


def format_quadratic(value):
    """Return the literal of x + y*w."""

    x, y = value

    if not y:
        return str(x)

    if abs(y) == 1:
        wpart = "w" if y > 0 else "-w"
    else:
        wpart = "%dw" % y

    if not x:
        return wpart

    return "%d%s%s" % (x, "+" if y > 0 else "", wpart)


class QuadraticOrder(LatticeRing):
    """The order Z[w], values are integer pairs (x, y) meaning x + y*w."""

    rank = 2

    def __init__(self, descriptor):
        super().__init__(descriptor)
        self.d = descriptor.param

    @property
    def zero_value(self):
        return (0, 0)

    @property
    def one_value(self):
        return (1, 0)

    def from_int(self, value):
        return self.element((value, 0))

    @property
    def omega(self):
        """Return the generator w."""

        return self.element((0, 1))

    def basis_values(self):
        return [(1, 0), (0, 1)]

    def to_vector(self, value):
        return value

    def from_vector(self, vector):
        return (vector[0], vector[1])

    def conjugate_value(self, value):
        """Return x - y*w."""

        return (value[0], -value[1])

    def norm_value(self, value):
        """Return x^2 - d*y^2."""

        return value[0] * value[0] - self.d * value[1] * value[1]

    def norm(self, x):
        """Return the norm of an element."""

        self.check(x)
        return self.norm_value(x.value)

    def parse(self, text):
        terms = parse_terms(text, ("w",))
        x, y = Fraction(0), Fraction(0)
        for (exp,), coeff in terms.items():
            # w^2 = d
            if exp % 2:
                y += coeff * self.d ** (exp // 2)
            else:
                x += coeff * self.d ** (exp // 2)
        if x.denominator != 1 or y.denominator != 1:
            raise ParseError("%s is not in Z[w]" % text)
        return self.element((int(x), int(y)))

    def format(self, value):
        return format_quadratic(value)

    def _add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def _neg(self, x):
        return (-x[0], -x[1])

    def _mul(self, x, y):
        return (x[0] * y[0] + self.d * x[1] * y[1],
                x[0] * y[1] + x[1] * y[0])

    def _is_regular(self, x):
        return x != (0, 0)

    def _divide(self, x, b):
        norm = self.norm_value(b)
        num = self._mul(x, self.conjugate_value(b))
        if num[0] % norm or num[1] % norm:
            return None
        return (num[0] // norm, num[1] // norm)

    def _fraction_key(self, num, den):
        norm = self.norm_value(den)
        top = self._mul(num, self.conjugate_value(den))
        return (Fraction(top[0], norm), Fraction(top[1], norm))

    def _non_divisor(self, value):
        return (max(abs(value[0]), abs(value[1])) + 1, 0)

    def _shell(self, height):
        return vector_shell(2, height)
