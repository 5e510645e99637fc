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

"""Ideals of rings that are free Z-modules of finite rank."""

import itertools

from ringstar.errors import NotRegularError
from ringstar.ideals.ideal import Ideal, IndexValue
from ringstar.rings import lattice
from ringstar.rings.spiral import vector_shell
from ringstar.runtime import bounds


class LatticeIdeal(Ideal):
    """Ideal stored as the normal form basis of its Z-lattice.

    Used for Z, Z[w] and Z[t]/(t^p - 1). Columns of the basis are
    coordinate vectors in the ring's Z-basis.
    """

    def __init__(self, ring, basis):
        super().__init__(ring)
        self.basis = tuple(basis)

    @classmethod
    def generate(cls, ring, gens):
        vectors = []
        for gen in gens:
            ring.check(gen)
            vectors.extend(ring.module_generators(gen.value))
        return cls(ring, lattice.hnf(vectors, ring.rank))

    def key(self):
        return self.basis

    @property
    def dim(self):
        """Return the rank of the ambient ring."""

        return self.ring.rank

    @property
    def is_zero(self):
        return not self.basis

    @property
    def generator(self):
        """Return the nonnegative generator of an ideal of Z."""

        if self.dim != 1:
            raise ValueError("%s is not an ideal of Z" % self)

        return self.ring.element(self.basis[0][0] if self.basis else 0)

    def basis_elements(self):
        """Return the Z-basis as ring elements."""

        return [self.ring.element(self.ring.from_vector(col))
                for col in self.basis]

    def generators(self):
        return self.basis_elements()

    def rows(self):
        """Return the basis vectors as lists."""

        return [list(col) for col in self.basis]

    def contains(self, x):
        self.ring.check(x)
        return lattice.contains(self.basis, self.ring.to_vector(x.value))

    def contains_ideal(self, other):
        self.check(other)
        return all(lattice.contains(self.basis, col) for col in other.basis)

    def sum(self, other):
        self.check(other)
        return LatticeIdeal(self.ring,
                            lattice.hnf(self.basis + other.basis, self.dim))

    def intersect(self, other):
        self.check(other)
        return LatticeIdeal(self.ring,
                            lattice.intersect(self.basis, other.basis,
                                              self.dim))

    def product(self, other):
        self.check(other)
        gens = [x * y for x in self.basis_elements()
                for y in other.basis_elements()]
        return LatticeIdeal.generate(self.ring, gens)

    def colon(self, b):
        self.ring.check(b)

        if not self.ring.is_regular(b):
            raise NotRegularError("%s is a zero-divisor" % b)

        if self.is_zero:
            return self

        mult = self.ring.multiplication_matrix(b.value)
        columns = list(mult) + [tuple(-x for x in col) for col in self.basis]
        vectors = [vec[:self.dim] for vec in lattice.kernel(columns, self.dim)]

        return LatticeIdeal(self.ring, lattice.hnf(vectors, self.dim))

    def absolute_index(self):
        return IndexValue.of(lattice.determinant(self.basis, self.dim))

    def relative_index(self, other):
        self.check(other)
        inter = self.intersect(other)
        return IndexValue.of(lattice.relative_index(self.basis, inter.basis))

    def transversal(self, other):
        self.check(other)
        self.require_finite(other)
        inter = self.intersect(other)
        return [self.ring.element(self.ring.from_vector(vec))
                for vec in lattice.box_transversal(self.basis, inter.basis,
                                                   self.dim)]

    def reduce(self, x):
        self.ring.check(x)

        if self.is_zero:
            return x

        vec = lattice.reduce(self.basis, self.ring.to_vector(x.value))

        return self.ring.element(self.ring.from_vector(vec))

    def solve_linear(self, b, x):
        self.ring.check(b, x)

        columns = list(self.ring.multiplication_matrix(b.value)) + \
            list(self.basis)
        coeffs = lattice.solve(columns, self.ring.to_vector(x.value),
                               self.dim)

        if coeffs is None:
            return None

        return self.ring.element(self.ring.from_vector(coeffs[:self.dim]))

    def split(self, other, x):
        self.check(other)
        self.ring.check(x)

        coeffs = lattice.solve(self.basis + other.basis,
                               self.ring.to_vector(x.value), self.dim)

        if coeffs is None:
            return None

        first = lattice.combine(self.basis, coeffs[:len(self.basis)],
                                self.dim)

        return (self.ring.element(self.ring.from_vector(first)),
                x - self.ring.element(self.ring.from_vector(first)))

    def elements(self):
        height = 0
        while True:
            for coeffs in vector_shell(len(self.basis), height):
                vec = lattice.combine(self.basis, coeffs, self.dim)
                yield self.ring.element(self.ring.from_vector(vec))
            if not self.basis:
                return
            height += 1

    def regular_element(self):
        for elem in self.basis_elements():
            if self.ring.is_regular(elem):
                return elem

        if len(self.basis) < self.dim:
            return None

        unit_line = (tuple(1 if i == 0 else 0 for i in range(self.dim)),)
        line = lattice.intersect(self.basis, unit_line, self.dim)

        return self.ring.element(self.ring.from_vector(line[0]))

    def principal_generator(self):
        """Return b with (b) = self, or None if none is found."""

        if self.is_zero:
            return self.ring.zero

        index = self.absolute_index()
        limit = bounds().max_search

        for elem in itertools.islice(self.elements(), limit):
            if elem.is_zero():
                continue
            if LatticeIdeal.generate(self.ring, [elem]).absolute_index() \
                    != index:
                continue
            return elem

        return None

    def to_str(self):
        if self.is_zero:
            return "(0)"

        if self.dim == 1:
            return "(%u)" % self.basis[0][0]

        return super().to_str()

    def to_dict(self):
        out = super().to_dict()
        out["rows"] = self.rows()
        return out
