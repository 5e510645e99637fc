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

"""Ideals of O[T] of the form c[T]*f.

Here c is an ideal of the quadratic order O and f is a primitive
polynomial. Extended ideals are the ones with f = 1. Operations whose
result leaves this class raise IdealClassError.
"""

from ringstar.errors import IdealClassError
from ringstar.ideals.ideal import Ideal, IndexValue
from ringstar.ideals.lattice import LatticeIdeal
from ringstar.rings import lattice
from ringstar.rings.descriptor import RingDescriptor, QUADRATIC
from ringstar.rings.polynomial import to_poly
from ringstar.rings.spiral import poly_shell, vector_shell


def coefficient_order(ring):
    """Return the order O of O[T]."""

    from ringstar.rings import make_ring
    return make_ring(RingDescriptor(QUADRATIC, ring.d))


def content_ideal(ring, x):
    """Return the ideal of O generated by the coefficients of x."""

    order = coefficient_order(ring)
    return LatticeIdeal.generate(order, [order.element(c) for c in x.value])


def primitive_part(ring, x):
    """Return (kappa, f) with x = kappa * f and f primitive.

    Raises IdealClassError when the content of x is not principal.
    """

    content = content_ideal(ring, x)
    kappa = content.principal_generator()

    if kappa is None:
        raise IdealClassError("The content of %s is not principal" % x, [x])

    return kappa, ring.divide_exact(x, ring.constant(kappa.value))


def associates(ring, x, y):
    """Return True if x and y divide each other."""

    return ring.divide_exact(x, y) is not None and \
        ring.divide_exact(y, x) is not None


def coprime(ring, x, y):
    """Return True if the norms of x and y are coprime over Q[T]."""

    first = to_poly(ring.norm_poly(x.value))
    second = to_poly(ring.norm_poly(y.value))

    return first.gcd(second).degree() == 0


def divmod_monic(ring, x, g):
    """Return (q, r) with x = q*g + r and deg r < deg g, g monic."""

    quot = ring.zero
    rest = x
    degree = ring.degree(g)

    while ring.degree(rest) >= degree:
        shift = ring.degree(rest) - degree
        term = ring.element(tuple([(0, 0)] * shift + [rest.value[-1]]))
        quot = quot + term
        rest = rest - term * g

    return quot, rest


class ExtendedIdeal(Ideal):
    """The ideal c[T]*f of O[T]."""

    def __init__(self, ring, content, factor):
        super().__init__(ring)

        if content.is_zero:
            factor = ring.one

        # fix the sign of the leading coefficient
        if factor.value[-1] < (0, 0):
            factor = -factor

        self.content = content
        self.factor = factor
        self.order = content.ring

    @classmethod
    def generate(cls, ring, gens):
        order = coefficient_order(ring)
        gens = [g for g in gens if not g.is_zero()]

        if not gens:
            return cls(ring, LatticeIdeal(order, ()), ring.one)

        constants = [g for g in gens if ring.degree(g) == 0]

        if len(constants) == len(gens):
            content = LatticeIdeal.generate(
                order, [order.element(g.value[0]) for g in gens])
            return cls(ring, content, ring.one)

        if constants:
            raise IdealClassError("Mixed constant and polynomial generators "
                                  "are not supported", gens)

        kappas = []
        factor = None

        for gen in gens:
            kappa, prim = primitive_part(ring, gen)
            if factor is None:
                factor = prim
            elif not associates(ring, factor, prim):
                raise IdealClassError("Generators with distinct primitive "
                                      "parts are not supported", gens)
            kappas.append(kappa)

        return cls(ring, LatticeIdeal.generate(order, kappas), factor)

    @property
    def is_maximal_order(self):
        """Return True if O = Z[sqrt(d)] is integrally closed."""

        return self.ring.d % 4 in (2, 3)

    def require_gauss(self, operation):
        """Raise IdealClassError unless content is multiplicative."""

        if not self.is_maximal_order:
            raise IdealClassError("%s needs d = 2, 3 mod 4, got d = %d" %
                                  (operation, self.ring.d),
                                  self.generators())

    def key(self):
        return (self.content.basis, self.ring.degree(self.factor))

    def __eq__(self, other):
        if isinstance(other, ExtendedIdeal) and other.ring == self.ring:
            return self.content == other.content and \
                associates(self.ring, self.factor, other.factor)
        return False

    def __hash__(self):
        return hash((self.ring.descriptor, self.key()))

    @property
    def is_zero(self):
        return self.content.is_zero

    @property
    def is_extended(self):
        """Return True if the ideal is c[T]."""

        return self.ring.degree(self.factor) == 0

    def generators(self):
        return [self.ring.constant(kappa.value) * self.factor
                for kappa in self.content.basis_elements()]

    def to_dict(self):
        out = super().to_dict()
        out["content"] = self.content
        out["factor"] = self.factor
        return out

    def make(self, content, factor):
        """Return c[T]*f for the same ring."""

        return ExtendedIdeal(self.ring, content, factor)

    def pi(self):
        """Return the ideal of O given by the constant terms, c * f(0)."""

        constant = self.factor.value[0] if self.factor.value else (0, 0)

        return self.content.scale(self.order.element(constant))

    def contains(self, x):
        self.ring.check(x)

        if x.is_zero():
            return True

        if self.is_zero:
            return False

        quot = self.ring.divide_exact(x, self.factor)

        if quot is None:
            return False

        return all(self.content.contains(self.order.element(c))
                   for c in quot.value)

    def contains_ideal(self, other):
        self.check(other)

        if other.is_zero:
            return True

        if self.is_zero:
            return False

        quot = self.ring.divide_exact(other.factor, self.factor)

        if quot is None:
            return False

        return all(self.content.contains(kappa * self.order.element(c))
                   for kappa in other.content.basis_elements()
                   for c in quot.value)

    def _nested(self, other):
        if self.contains_ideal(other):
            return other, self
        if other.contains_ideal(self):
            return self, other
        return None

    def sum(self, other):
        self.check(other)

        nested = self._nested(other)
        if nested:
            return nested[1]

        if associates(self.ring, self.factor, other.factor):
            return self.make(self.content.sum(other.content), self.factor)

        raise IdealClassError("The sum %s + %s is not supported" %
                              (self, other),
                              self.generators() + other.generators())

    def intersect(self, other):
        self.check(other)

        nested = self._nested(other)
        if nested:
            return nested[0]

        content = self.content.intersect(other.content)

        if associates(self.ring, self.factor, other.factor):
            return self.make(content, self.factor)

        self.require_gauss("Intersection")

        if self.ring.divide_exact(other.factor, self.factor) is not None:
            return self.make(content, other.factor)

        if self.ring.divide_exact(self.factor, other.factor) is not None:
            return self.make(content, self.factor)

        if coprime(self.ring, self.factor, other.factor):
            return self.make(content, self.factor * other.factor)

        raise IdealClassError("The intersection of %s and %s is not "
                              "supported" % (self, other),
                              self.generators() + other.generators())

    def product(self, other):
        self.check(other)
        return self.make(self.content.product(other.content),
                         self.factor * other.factor)

    def colon(self, b):
        self.ring.require_regular(b)

        if self.is_zero:
            return self

        if self.ring.degree(b) == 0:
            if not self.is_extended:
                self.require_gauss("Colon")
            beta = self.order.element(b.value[0])
            return self.make(self.content.colon(beta), self.factor)

        if not self.is_extended:
            # (c[T]*g*q : kappa*g) = (c : kappa)[T]*q
            self.require_gauss("Colon")
            kappa, prim = primitive_part(self.ring, b)
            quot = self.ring.divide_exact(self.factor, prim)
            if quot is None:
                raise IdealClassError("The colon of %s by %s is not "
                                      "supported" % (self, b),
                                      self.generators())
            return self.make(self.content.colon(kappa), quot)

        self.require_gauss("Colon")

        content = None
        for coeff in b.value:
            if coeff == (0, 0):
                continue
            step = self.content.colon(self.order.element(coeff))
            content = step if content is None else content.intersect(step)

        return self.make(content, self.ring.one)

    def absolute_index(self):
        if self.is_extended and self.content.absolute_index().is_one:
            return IndexValue.of(1)
        return IndexValue.of(None)

    def relative_index(self, other):
        self.check(other)
        return IndexValue.of(1 if other.contains_ideal(self) else None)

    def transversal(self, other):
        self.require_finite(other)
        return [self.ring.zero]

    def reduce(self, x):
        self.ring.check(x)

        if self.is_zero or not self.is_extended:
            return x

        return self.ring.element(tuple(self.content.reduce(
            self.order.element(c)).value for c in x.value))

    def solve_linear(self, b, x):
        self.ring.check(b, x)

        quot = self.ring.divide_exact(x, b)

        if quot is not None:
            return quot

        if self.contains(x):
            return self.ring.zero

        if self.is_zero:
            return None

        if self.is_extended and self.ring.degree(b) == 0:
            beta = self.order.element(b.value[0])
            out = []
            for coeff in x.value:
                part = self.content.solve_linear(
                    beta, self.order.element(coeff))
                if part is None:
                    return None
                out.append(part.value)
            return self.ring.element(tuple(out))

        raise IdealClassError("Solving %s*r = %s modulo %s is not supported" %
                              (b, x, self), self.generators())

    def _split_coefficients(self, other, x):
        first = []
        for coeff in x.value:
            parts = self.content.split(other.content,
                                       self.order.element(coeff))
            if parts is None:
                return None
            first.append(parts[0].value)
        return self.ring.element(tuple(first))

    def _split_extended(self, other, x):
        """Split x over c[T] + c'[T]*g for a monic g.

        Since c[T]*g lies in c[T], the sum is c[T] + (c + c')[T]*g and
        x = q*g + r belongs to it exactly when r has coefficients in c
        and q has coefficients in c + c'.
        """

        if other.factor.value[-1] != (1, 0):
            raise IdealClassError("The sum %s + %s needs a monic factor" %
                                  (self, other),
                                  self.generators() + other.generators())

        quot, rest = divmod_monic(self.ring, x, other.factor)

        if not all(self.content.contains(self.order.element(c))
                   for c in rest.value):
            return None

        inner = []
        for coeff in quot.value:
            parts = other.content.split(self.content,
                                        self.order.element(coeff))
            if parts is None:
                return None
            inner.append(parts[0].value)

        second = self.ring.element(tuple(inner)) * other.factor

        return (x - second, second)

    def split(self, other, x):
        self.check(other)
        self.ring.check(x)

        if self.contains_ideal(other):
            return (x, self.ring.zero) if self.contains(x) else None

        if other.contains_ideal(self):
            return (self.ring.zero, x) if other.contains(x) else None

        if not associates(self.ring, self.factor, other.factor):
            if self.is_extended:
                return self._split_extended(other, x)
            if other.is_extended:
                parts = other._split_extended(self, x)
                return None if parts is None else (parts[1], parts[0])
            raise IdealClassError("The sum %s + %s is not supported" %
                                  (self, other),
                                  self.generators() + other.generators())

        quot = self.ring.divide_exact(x, self.factor)

        if quot is None:
            return None

        first = self._split_coefficients(other, quot)

        if first is None:
            return None

        part = first * self.factor

        return (part, x - part)

    def elements(self):
        if self.is_zero:
            yield self.ring.zero
            return

        basis = self.content.basis

        def coefficient_shell(level):
            return [self.order.from_vector(lattice.combine(basis, coeffs, 2))
                    for coeffs in vector_shell(len(basis), level)]

        height = 0
        while True:
            for value in poly_shell(height, coefficient_shell):
                yield self.ring.element(value) * self.factor
            height += 1

    def regular_element(self):
        if self.is_zero:
            return None
        kappa = self.content.basis_elements()[0]
        return self.ring.constant(kappa.value) * self.factor
