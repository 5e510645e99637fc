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

"""Integers with a prime inverted."""

import math

from fractions import Fraction

from ringstar.errors import ParseError
from ringstar.rings.literal import parse_terms
from ringstar.rings.ring import Ring
from ringstar.rings.spiral import integers_upto


def p_free(value, prime):
    """Return value with every factor prime removed."""

    value = abs(value)

    if not value:
        return 0

    while value % prime == 0:
        value //= prime

    return value


class LocalizedIntegers(Ring):
    """The ring Z[1/p], values are Fractions with p-power denominators."""

    def __init__(self, descriptor):
        super().__init__(descriptor)
        self.p = descriptor.param

    @property
    def zero_value(self):
        return Fraction(0)

    @property
    def one_value(self):
        return Fraction(1)

    def canonical(self, value):
        value = Fraction(value)
        if p_free(value.denominator, self.p) != 1:
            raise ValueError("%s is not in Z[1/%u]" % (value, self.p))
        return value

    def from_int(self, value):
        return self.element(Fraction(value))

    def from_fraction(self, value):
        return self.element(value)

    def p_free_part(self, x):
        """Return the p-free part of the numerator of x."""

        self.check(x)
        return p_free(x.value.numerator, self.p)

    def parse(self, text):
        terms = parse_terms(text, ())
        value = terms.get((), Fraction(0))
        if p_free(value.denominator, self.p) != 1:
            raise ParseError("%s is not in Z[1/%u]" % (text, self.p))
        return self.element(value)

    def format(self, value):
        return str(value)

    def _add(self, x, y):
        return x + y

    def _neg(self, x):
        return -x

    def _mul(self, x, y):
        return x * y

    def _is_regular(self, x):
        return x != 0

    def _divide(self, x, b):
        quot = x / b
        if p_free(quot.denominator, self.p) != 1:
            return None
        return quot

    def _fraction_key(self, num, den):
        return num / den

    def _non_divisor(self, value):
        candidate = abs(value.numerator) + 1
        if math.gcd(candidate, self.p) != 1:
            candidate += 1
        return Fraction(candidate)

    def _shell(self, height):
        out = []
        for exp in range(height + 1):
            for num in integers_upto(height):
                if max(abs(num), exp) != height:
                    continue
                if exp and num % self.p == 0:
                    continue
                out.append(Fraction(num, self.p ** exp))
        return out
