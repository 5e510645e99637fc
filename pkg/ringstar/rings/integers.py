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

"""The ring of rational integers."""

from fractions import Fraction

from ringstar.errors import ParseError
from ringstar.rings.literal import parse_terms
from ringstar.rings.ring import LatticeRing


class Integers(LatticeRing):
    """The integers Z, values are Python ints."""

    rank = 1

    @property
    def zero_value(self):
        return 0

    @property
    def one_value(self):
        return 1

    def from_int(self, value):
        return self.element(value)

    def basis_values(self):
        return [1]

    def to_vector(self, value):
        return (value,)

    def from_vector(self, vector):
        return vector[0]

    def parse(self, text):
        terms = parse_terms(text, ())
        value = terms.get((), Fraction(0))
        if value.denominator != 1:
            raise ParseError("%s is not an integer" % text)
        return self.element(int(value))

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
        quot, rem = divmod(x, b)
        return None if rem else quot

    def _fraction_key(self, num, den):
        return Fraction(num, den)

    def _non_divisor(self, value):
        return abs(value) + 1 if abs(value) >= 1 else 2

    def _shell(self, height):
        if height == 0:
            return [0]
        return [height, -height]
