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

"""Ideals of Q[T]."""

from ringstar.ideals.ideal import Ideal, IndexValue


class PolyIdeal(Ideal):
    """Principal ideal (f) of Q[T], f monic or zero."""

    def __init__(self, ring, generator):
        super().__init__(ring)
        self.generator = ring.monic(generator)

    @classmethod
    def generate(cls, ring, gens):
        out = ring.zero
        for gen in gens:
            out = ring.gcd(out, gen)
        return cls(ring, out)

    def key(self):
        return self.generator.value

    @property
    def is_zero(self):
        return self.generator.is_zero()

    @property
    def is_unit_ideal(self):
        return self.generator == self.ring.one

    def generators(self):
        return [self.generator]

    def to_str(self):
        return "(%s)" % self.generator

    def contains(self, x):
        self.ring.check(x)
        if self.is_zero:
            return x.is_zero()
        return self.ring.remainder(x, self.generator).is_zero()

    def contains_ideal(self, other):
        self.check(other)
        return self.contains(other.generator)

    def sum(self, other):
        self.check(other)
        return PolyIdeal(self.ring,
                         self.ring.gcd(self.generator, other.generator))

    def intersect(self, other):
        self.check(other)
        if self.is_zero or other.is_zero:
            return PolyIdeal(self.ring, self.ring.zero)
        common = self.ring.gcd(self.generator, other.generator)
        lcm = self.ring.divide_exact(self.generator * other.generator, common)
        return PolyIdeal(self.ring, lcm)

    def product(self, other):
        self.check(other)
        return PolyIdeal(self.ring, self.generator * other.generator)

    def colon(self, b):
        self.ring.require_regular(b)
        if self.is_zero:
            return self
        common = self.ring.gcd(self.generator, b)
        return PolyIdeal(self.ring,
                         self.ring.divide_exact(self.generator, common))

    def absolute_index(self):
        return IndexValue.of(1 if self.is_unit_ideal else None)

    def relative_index(self, other):
        self.check(other)
        return IndexValue.of(1 if other.contains_ideal(self) else None)

    def transversal(self, other):
        self.require_finite(other)
        return [self.ring.zero]

    def reduce(self, x):
        self.ring.check(x)
        if self.is_zero:
            return x
        return self.ring.remainder(x, self.generator)

    def solve_linear(self, b, x):
        self.ring.check(b, x)

        if self.is_zero:
            return self.ring.divide_exact(x, b)

        first, _, common = self.ring.gcdex(b, self.generator)
        scale = self.ring.divide_exact(x, common)

        if scale is None:
            return None

        return self.reduce(first * scale)

    def split(self, other, x):
        self.check(other)
        self.ring.check(x)

        if self.is_zero and other.is_zero:
            return (self.ring.zero, self.ring.zero) if x.is_zero() else None

        first, _, common = self.ring.gcdex(self.generator, other.generator)
        scale = self.ring.divide_exact(x, common)

        if scale is None:
            return None

        part = first * self.generator * scale

        return (part, x - part)

    def elements(self):
        if self.is_zero:
            yield self.ring.zero
            return

        for elem in self.ring.elements():
            yield elem * self.generator

    def regular_element(self):
        return None if self.is_zero else self.generator
