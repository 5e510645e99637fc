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

"""Binary products of rings."""

from ringstar.rings.literal import split_product
from ringstar.rings.ring import Ring, RingElement


class ProductRing(Ring):
    """The ring R1 x R2 with componentwise operations.

    Values are pairs of component values.
    """

    def __init__(self, descriptor, left, right):
        super().__init__(descriptor)
        self.left = left
        self.right = right

    @property
    def zero_value(self):
        return (self.left.zero_value, self.right.zero_value)

    @property
    def one_value(self):
        return (self.left.one_value, self.right.one_value)

    @property
    def is_domain(self):
        return False

    def canonical(self, value):
        return (self.left.canonical(value[0]), self.right.canonical(value[1]))

    def from_int(self, value):
        return self.pair(self.left.from_int(value), self.right.from_int(value))

    def pair(self, first, second):
        """Return the element (first, second)."""

        self.left.check(first)
        self.right.check(second)
        return RingElement(self, (first.value, second.value))

    def components(self, x):
        """Return the two component elements of x."""

        self.check(x)
        return (RingElement(self.left, x.value[0]),
                RingElement(self.right, x.value[1]))

    def parse(self, text):
        first, second = split_product(text)
        return self.pair(self.left.parse(first), self.right.parse(second))

    def format(self, value):
        return "(%s | %s)" % (self.left.format(value[0]),
                              self.right.format(value[1]))

    def sort_key(self, value):
        return (self.left.sort_key(value[0]), self.right.sort_key(value[1]))

    def _add(self, x, y):
        return (self.left._add(x[0], y[0]), self.right._add(x[1], y[1]))

    def _neg(self, x):
        return (self.left._neg(x[0]), self.right._neg(x[1]))

    def _mul(self, x, y):
        return (self.left._mul(x[0], y[0]), self.right._mul(x[1], y[1]))

    def _is_regular(self, x):
        return self.left._is_regular(x[0]) and self.right._is_regular(x[1])

    def _divide(self, x, b):
        first = self.left._divide(x[0], b[0])
        second = self.right._divide(x[1], b[1])
        if first is None or second is None:
            return None
        return (first, second)

    def _fraction_key(self, num, den):
        return (self.left._fraction_key(num[0], den[0]),
                self.right._fraction_key(num[1], den[1]))

    def _non_divisor(self, value):
        if value[0] != self.left.zero_value:
            return (self.left._non_divisor(value[0]), self.right.one_value)
        return (self.left.one_value, self.right._non_divisor(value[1]))

    def _shell_upto(self, ring, height):
        out = []
        for level in range(height + 1):
            out.extend(ring._shell(level))
        return out

    def _shell(self, height):
        if height == 0:
            return [self.zero_value]
        lower_left = self._shell_upto(self.left, height - 1)
        lower_right = self._shell_upto(self.right, height - 1)
        top_left = self.left._shell(height)
        top_right = self.right._shell(height)
        out = [(x, y) for x in top_left for y in lower_right]
        out += [(x, y) for x in lower_left + top_left for y in top_right]
        return out
