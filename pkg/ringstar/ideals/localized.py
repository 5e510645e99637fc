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

"""Ideals of Z[1/p]."""

import math

from fractions import Fraction

import sympy

from sympy.polys.domains import ZZ

from ringstar.ideals.ideal import Ideal, IndexValue


class LocalizedIdeal(Ideal):
    """The ideal (m) of Z[1/p] with m >= 0 coprime to p."""

    def __init__(self, ring, modulus):
        super().__init__(ring)

        if modulus and modulus % ring.p == 0:
            raise ValueError("%u is not coprime to %u" % (modulus, ring.p))

        self.modulus = modulus

    @classmethod
    def generate(cls, ring, gens):
        modulus = 0
        for gen in gens:
            modulus = math.gcd(modulus, ring.p_free_part(gen))
        return cls(ring, modulus)

    def key(self):
        return self.modulus

    @property
    def is_zero(self):
        return self.modulus == 0

    @property
    def generator(self):
        """Return the p-free generator."""

        return self.ring.from_int(self.modulus)

    def generators(self):
        return [self.generator]

    def contains(self, x):
        self.ring.check(x)
        if self.is_zero:
            return x.is_zero()
        return x.value.numerator % self.modulus == 0

    def contains_ideal(self, other):
        self.check(other)
        if self.is_zero:
            return other.is_zero
        return other.modulus % self.modulus == 0

    def sum(self, other):
        self.check(other)
        return LocalizedIdeal(self.ring, math.gcd(self.modulus, other.modulus))

    def intersect(self, other):
        self.check(other)
        if self.is_zero or other.is_zero:
            return LocalizedIdeal(self.ring, 0)
        return LocalizedIdeal(self.ring, sympy.ilcm(self.modulus,
                                                    other.modulus))

    def product(self, other):
        self.check(other)
        return LocalizedIdeal(self.ring, self.modulus * other.modulus)

    def colon(self, b):
        self.ring.require_regular(b)
        if self.is_zero:
            return self
        common = math.gcd(self.modulus, self.ring.p_free_part(b))
        return LocalizedIdeal(self.ring, self.modulus // common)

    def absolute_index(self):
        if self.is_zero:
            return IndexValue.of(None)
        return IndexValue.of(self.modulus)

    def relative_index(self, other):
        self.check(other)
        if self.is_zero:
            return IndexValue.of(1)
        inter = self.intersect(other)
        if inter.is_zero:
            return IndexValue.of(None)
        return IndexValue.of(inter.modulus // self.modulus)

    def transversal(self, other):
        index = self.require_finite(other)
        return [self.ring.from_int(k * self.modulus)
                for k in range(index.value)]

    def reduce(self, x):
        self.ring.check(x)

        if self.is_zero:
            return x

        return self.ring.from_int(self._residue(x.value))

    def _residue(self, value):
        return value.numerator * pow(value.denominator, -1, self.modulus) \
            % self.modulus

    def solve_linear(self, b, x):
        self.ring.check(b, x)

        if self.is_zero:
            return self.ring.divide_exact(x, b)

        if self.modulus == 1:
            return self.ring.zero

        coeff = self._residue(b.value)
        target = self._residue(x.value)
        common = math.gcd(coeff, self.modulus)

        if target % common:
            return None

        modulus = self.modulus // common
        unit = pow(coeff // common, -1, modulus) if modulus > 1 else 0

        return self.ring.from_int(target // common * unit % modulus)

    def split(self, other, x):
        self.check(other)
        self.ring.check(x)

        common = self.sum(other)

        if not common.contains(x):
            return None

        if common.is_zero:
            return (self.ring.zero, self.ring.zero)

        first, _, _ = ZZ.gcdex(ZZ(self.modulus), ZZ(other.modulus))
        scale = x.value / common.modulus
        part = self.ring.element(Fraction(scale * int(first) * self.modulus))

        return (part, x - part)

    def elements(self):
        if self.is_zero:
            yield self.ring.zero
            return

        for elem in self.ring.elements():
            yield elem * self.modulus

    def regular_element(self):
        return None if self.is_zero else self.generator
