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

"""Ideals of a product ring, pairs of component ideals."""

import itertools

from ringstar.ideals.ideal import Ideal


class ProductIdeal(Ideal):
    """The ideal I1 x I2 of R1 x R2."""

    def __init__(self, ring, left, right):
        super().__init__(ring)
        self.left = left
        self.right = right

    @classmethod
    def generate(cls, ring, gens):
        from ringstar.ideals import ideal_gen

        pairs = [ring.components(gen) for gen in gens]

        return cls(ring, ideal_gen(ring.left, [x for x, _ in pairs]),
                   ideal_gen(ring.right, [y for _, y in pairs]))

    def key(self):
        return (self.left.key(), self.right.key())

    def __eq__(self, other):
        if isinstance(other, ProductIdeal) and other.ring == self.ring:
            return self.left == other.left and self.right == other.right
        return False

    def __hash__(self):
        return hash((self.ring.descriptor, self.left, self.right))

    @property
    def is_zero(self):
        return self.left.is_zero and self.right.is_zero

    def _pair(self, first, second):
        return self.ring.pair(first, second)

    def generators(self):
        out = [self._pair(x, self.ring.right.zero)
               for x in self.left.generators()]
        out += [self._pair(self.ring.left.zero, y)
                for y in self.right.generators()]
        return out

    def to_dict(self):
        out = super().to_dict()
        out["left"] = self.left
        out["right"] = self.right
        return out

    def contains(self, x):
        first, second = self.ring.components(x)
        return self.left.contains(first) and self.right.contains(second)

    def contains_ideal(self, other):
        self.check(other)
        return self.left.contains_ideal(other.left) and \
            self.right.contains_ideal(other.right)

    def _apply(self, other, operation):
        self.check(other)
        return ProductIdeal(self.ring,
                            getattr(self.left, operation)(other.left),
                            getattr(self.right, operation)(other.right))

    def sum(self, other):
        return self._apply(other, "sum")

    def intersect(self, other):
        return self._apply(other, "intersect")

    def product(self, other):
        return self._apply(other, "product")

    def colon(self, b):
        self.ring.require_regular(b)
        first, second = self.ring.components(b)
        return ProductIdeal(self.ring, self.left.colon(first),
                            self.right.colon(second))

    def absolute_index(self):
        return self.left.absolute_index() * self.right.absolute_index()

    def relative_index(self, other):
        self.check(other)
        return self.left.relative_index(other.left) * \
            self.right.relative_index(other.right)

    def transversal(self, other):
        self.require_finite(other)
        return [self._pair(x, y) for x, y in itertools.product(
            self.left.transversal(other.left),
            self.right.transversal(other.right))]

    def reduce(self, x):
        first, second = self.ring.components(x)
        return self._pair(self.left.reduce(first), self.right.reduce(second))

    def solve_linear(self, b, x):
        b_left, b_right = self.ring.components(b)
        x_left, x_right = self.ring.components(x)

        first = self.left.solve_linear(b_left, x_left)
        second = self.right.solve_linear(b_right, x_right)

        if first is None or second is None:
            return None

        return self._pair(first, second)

    def split(self, other, x):
        self.check(other)
        first, second = self.ring.components(x)

        left = self.left.split(other.left, first)
        right = self.right.split(other.right, second)

        if left is None or right is None:
            return None

        return (self._pair(left[0], right[0]), self._pair(left[1], right[1]))

    def elements(self):
        lefts = []
        rights = []
        left_iter = self.left.elements()
        right_iter = self.right.elements()

        # walk growing squares of the two enumerations
        while True:
            new_left = next(left_iter, None)
            new_right = next(right_iter, None)

            if new_left is None and new_right is None:
                return

            if new_left is not None:
                lefts.append(new_left)
                for y in rights:
                    yield self._pair(new_left, y)

            if new_right is not None:
                rights.append(new_right)
                for x in lefts:
                    yield self._pair(x, new_right)

    def regular_element(self):
        first = self.left.regular_element()
        second = self.right.regular_element()

        if first is None or second is None:
            return None

        return self._pair(first, second)
