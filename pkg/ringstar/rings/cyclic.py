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

"""Integral group rings of cyclic groups of prime order."""

from fractions import Fraction

from sympy.polys.domains import QQ

from ringstar.errors import ParseError
from ringstar.rings.lattice import to_matrix
from ringstar.rings.literal import parse_terms, format_monomial, \
    join_terms, to_fraction
from ringstar.rings.ring import LatticeRing
from ringstar.rings.spiral import vector_shell


class CyclicGroupRing(LatticeRing):
    """The ring Z[t]/(t^p - 1).

    Values are integer tuples of length p holding the coefficients of
    1, t, ..., t^(p-1).
    """

    def __init__(self, descriptor):
        super().__init__(descriptor)
        self.p = descriptor.param
        self.rank = self.p

    @property
    def zero_value(self):
        return tuple([0] * self.p)

    @property
    def one_value(self):
        return tuple([1] + [0] * (self.p - 1))

    @property
    def is_domain(self):
        return False

    def from_int(self, value):
        return self.element(tuple([value] + [0] * (self.p - 1)))

    def generator(self):
        """Return t."""

        return self.element(tuple(1 if i == 1 else 0 for i in range(self.p)))

    def norm_element(self):
        """Return 1 + t + ... + t^(p-1)."""

        return self.element(tuple([1] * self.p))

    def basis_values(self):
        return [tuple(1 if i == j else 0 for i in range(self.p))
                for j in range(self.p)]

    def to_vector(self, value):
        return value

    def from_vector(self, vector):
        return tuple(vector)

    def parse(self, text):
        terms = parse_terms(text, ("t",))
        coeffs = [Fraction(0)] * self.p
        for (exp,), coeff in terms.items():
            coeffs[exp % self.p] += coeff
        if any(c.denominator != 1 for c in coeffs):
            raise ParseError("%s is not in Z[t]/(t^%u-1)" % (text, self.p))
        return self.element(tuple(int(c) for c in coeffs))

    def format(self, value):
        terms = [format_monomial(str(c), "t", i)
                 for i, c in enumerate(value) if c]
        return join_terms(terms).replace(" ", "").replace("*", "")

    def _add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def _neg(self, x):
        return tuple(-a for a in x)

    def _mul(self, x, y):
        out = [0] * self.p
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                out[(i + j) % self.p] += a * b
        return tuple(out)

    def _matrix(self, value):
        return to_matrix(self.multiplication_matrix(value), self.p)

    def determinant(self, x):
        """Return the determinant of multiplication by x on Z^p."""

        self.check(x)
        return int(self._matrix(x.value).det())

    def _is_regular(self, x):
        return self._matrix(x).det() != 0

    def _solve(self, x, b):
        matrix = self._matrix(b).convert_to(QQ)
        rhs = to_matrix([x], self.p).convert_to(QQ)
        solution = matrix.lu_solve(rhs).to_Matrix()
        return tuple(to_fraction(solution[i, 0]) for i in range(self.p))

    def _divide(self, x, b):
        solution = self._solve(x, b)
        if any(c.denominator != 1 for c in solution):
            return None
        return tuple(int(c) for c in solution)

    def _fraction_key(self, num, den):
        return self._solve(num, den)

    def _non_divisor(self, value):
        return self._canonical_int(max(abs(c) for c in value) + 1)

    def _canonical_int(self, value):
        return tuple([value] + [0] * (self.p - 1))

    def _shell(self, height):
        return vector_shell(self.p, height)
