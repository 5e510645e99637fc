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

"""Deterministic enumeration by height.

Every enumerable set is split into finite shells: shell h holds the values
of height exactly h. Inside a shell the order is fixed, so enumerations are
reproducible without seeds.
"""

import itertools
import math

from fractions import Fraction


def integers_upto(height):
    """Return 0, 1, -1, 2, -2, ..., height, -height."""

    out = [0]

    for value in range(1, height + 1):
        out.extend((value, -value))

    return out


def vector_shell(dim, height):
    """Return the integer vectors of max-norm exactly height.

    The first coordinate varies fastest.
    """

    if height == 0:
        return [tuple([0] * dim)]

    values = integers_upto(height)
    out = []

    for vec in itertools.product(values, repeat=dim):
        vec = vec[::-1]
        if max(abs(x) for x in vec) == height:
            out.append(vec)

    return out


def rational_shell(height):
    """Return the reduced fractions n/m with max(|n|, m) exactly height."""

    if height == 0:
        return [Fraction(0)]

    out = []

    for den in range(1, height + 1):
        for num in integers_upto(height)[1:]:
            if max(abs(num), den) != height or math.gcd(num, den) != 1:
                continue
            out.append(Fraction(num, den))

    return out


def poly_shell(height, coefficient_shell):
    """Return coefficient tuples of polynomials of height exactly height.

    The height of a nonzero polynomial is the largest of its degree plus
    one and the heights of its coefficients; coefficient_shell(k) returns
    the coefficient values of height k, the zero value alone for k = 0.
    Tuples are trimmed and the constant slot varies fastest.
    """

    if height == 0:
        return [()]

    values = []
    for level in range(height + 1):
        values.extend((level, value) for value in coefficient_shell(level))

    zero = coefficient_shell(0)[0]
    out = []

    for slots in itertools.product(values, repeat=height):
        slots = slots[::-1]
        coeffs = [value for _, value in slots]
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        if not coeffs:
            continue
        level = max(max(lvl for lvl, _ in slots), len(coeffs))
        if level != height:
            continue
        out.append(tuple(coeffs))

    return out


def chain(shell, max_height=None):
    """Yield the members of shell(0), shell(1), ... in order."""

    height = 0

    while max_height is None or height <= max_height:
        yield from shell(height)
        height += 1
