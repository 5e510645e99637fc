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

"""Base ring and ring element."""

import logging

from fractions import Fraction

from ringstar.errors import BackendMismatchError, NotRegularError
from ringstar.rings.spiral import chain
from ringstar.serialize import serializable_string


@serializable_string
class RingElement:
    """Exact element of one of the supported rings.

    The value is the canonical, hashable representation chosen by the
    ring backend, so equality is structural.
    """

    __slots__ = ("ring", "value")

    def __init__(self, ring, value):

        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise TypeError("This object is immutable")

    def _other(self, other):

        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise BackendMismatchError("Cannot combine %s and %s" %
                                           (self.ring, other.ring))
            return other

        if isinstance(other, (int, Fraction)):
            return self.ring.coerce(other)

        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self.ring.add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self.ring.sub(self, other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self.ring.sub(other, self)

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self.ring.mul(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return self.ring.neg(self)

    def is_zero(self):
        """Return True if this is the zero element."""

        return self.value == self.ring.zero_value

    def is_regular(self):
        """Return True if this is not a zero-divisor."""

        return self.ring.is_regular(self)

    def sort_key(self):
        """Return a key ordering elements deterministically."""

        return self.ring.sort_key(self.value)

    def to_str(self):
        """Return an ASCII representation of the object."""

        return self.ring.format(self.value)

    def __str__(self):
        return self.to_str()

    def __hash__(self):
        return hash((self.ring.descriptor, self.value))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.coerce(other)
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.value == other.value
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return self.__class__.__name__ + "('" + self.to_str() + "')"


@serializable_string
class Ring:
    """Base class for the commutative unital ring backends.

    Backends work on canonical values and implement the underscore
    methods; the public methods take and return RingElements.
    """

    def __init__(self, descriptor):

        self.descriptor = descriptor
        self.log = logging.getLogger(self.__class__.__module__)

    @property
    def zero_value(self):
        """Return the canonical zero value."""

        raise NotImplementedError()

    @property
    def one_value(self):
        """Return the canonical unit value."""

        raise NotImplementedError()

    @property
    def zero(self):
        """Return the zero element."""

        return RingElement(self, self.zero_value)

    @property
    def one(self):
        """Return the unit element."""

        return RingElement(self, self.one_value)

    @property
    def is_domain(self):
        """Return True if the ring has no zero-divisors."""

        return True

    def element(self, value):
        """Return the element with the given raw value."""

        return RingElement(self, self.canonical(value))

    def canonical(self, value):
        """Return the canonical form of a raw value."""

        return value

    def coerce(self, obj):
        """Return obj as an element of this ring."""

        if isinstance(obj, RingElement):
            if obj.ring != self:
                raise BackendMismatchError("%s is not in %s" % (obj, self))
            return obj

        if isinstance(obj, str):
            return self.parse(obj)

        if isinstance(obj, Fraction) and obj.denominator != 1:
            return self.from_fraction(obj)

        return self.from_int(int(obj))

    def from_int(self, value):
        """Return the image of an integer."""

        raise NotImplementedError()

    def from_fraction(self, value):
        """Return the image of a fraction when it lies in the ring."""

        raise ValueError("%s is not an element of %s" % (value, self))

    def check(self, *elements):
        """Raise BackendMismatchError unless all elements are ours."""

        for element in elements:
            if not isinstance(element, RingElement) or element.ring != self:
                raise BackendMismatchError("%r is not an element of %s" %
                                           (element, self))

    def add(self, x, y):
        """Return x + y."""

        self.check(x, y)
        return self.element(self._add(x.value, y.value))

    def sub(self, x, y):
        """Return x - y."""

        self.check(x, y)
        return self.element(self._add(x.value, self._neg(y.value)))

    def mul(self, x, y):
        """Return x * y."""

        self.check(x, y)
        return self.element(self._mul(x.value, y.value))

    def neg(self, x):
        """Return -x."""

        self.check(x)
        return self.element(self._neg(x.value))

    def arith(self, operation, x, y=None):
        """Apply one of add, sub, mul, neg."""

        if operation == "neg":
            return self.neg(x)

        if operation not in ("add", "sub", "mul"):
            raise ValueError("Invalid operation %s" % operation)

        return getattr(self, operation)(x, y)

    def power(self, x, exp):
        """Return x ** exp for exp >= 0."""

        out = self.one

        for _ in range(exp):
            out = self.mul(out, x)

        return out

    def is_regular(self, x):
        """Return True if multiplication by x is injective."""

        self.check(x)
        return self._is_regular(x.value)

    def is_unit(self, x):
        """Return True if x is invertible."""

        self.check(x)
        return self._divide(self.one_value, x.value) is not None \
            if self._is_regular(x.value) else False

    def require_regular(self, x):
        """Raise NotRegularError unless x is regular."""

        if not self.is_regular(x):
            raise NotRegularError("%s is a zero-divisor in %s" % (x, self))

    def divide_exact(self, x, b):
        """Return q with q * b = x, or None when no such q exists."""

        self.check(x, b)
        self.require_regular(b)

        value = self._divide(x.value, b.value)

        if value is None:
            return None

        return self.element(value)

    def fraction_key(self, num, den):
        """Return a canonical hashable encoding of num/den.

        den must be regular; the value lives in the total ring of
        fractions.
        """

        self.check(num, den)
        self.require_regular(den)

        return self._fraction_key(num.value, den.value)

    def non_divisor(self, value):
        """Return a regular b with value outside (b), value nonzero."""

        self.check(value)

        if value.is_zero():
            raise ValueError("Zero lies in every ideal")

        return self.element(self._non_divisor(value.value))

    def shell(self, height):
        """Return the elements of height exactly height."""

        return [RingElement(self, value) for value in self._shell(height)]

    def elements(self, max_height=None):
        """Yield the ring elements by increasing height."""

        for value in chain(self._shell, max_height):
            yield RingElement(self, value)

    def sort_key(self, value):
        """Return a key ordering values deterministically."""

        return value

    def parse(self, text):
        """Parse a ring literal."""

        raise NotImplementedError()

    def format(self, value):
        """Return the literal text of a value."""

        raise NotImplementedError()

    def _add(self, x, y):
        raise NotImplementedError()

    def _neg(self, x):
        raise NotImplementedError()

    def _mul(self, x, y):
        raise NotImplementedError()

    def _is_regular(self, x):
        raise NotImplementedError()

    def _divide(self, x, b):
        raise NotImplementedError()

    def _fraction_key(self, num, den):
        raise NotImplementedError()

    def _non_divisor(self, value):
        raise NotImplementedError()

    def _shell(self, height):
        raise NotImplementedError()

    def to_str(self):
        """Return an ASCII representation of the object."""

        return self.descriptor.to_str()

    def __str__(self):
        return self.to_str()

    def __hash__(self):
        return hash(self.descriptor)

    def __eq__(self, other):
        if isinstance(other, Ring):
            return self.descriptor == other.descriptor
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return self.__class__.__name__ + "('" + self.to_str() + "')"


class LatticeRing(Ring):
    """Ring whose additive group is Z^n with a fixed basis."""

    rank = 1

    def basis_values(self):
        """Return the Z-basis of the ring as values."""

        raise NotImplementedError()

    def to_vector(self, value):
        """Return the coordinates of value."""

        raise NotImplementedError()

    def from_vector(self, vector):
        """Return the value with the given coordinates."""

        raise NotImplementedError()

    def module_generators(self, value):
        """Return coordinate vectors spanning value * R over Z."""

        return [self.to_vector(self._mul(value, basis))
                for basis in self.basis_values()]

    def multiplication_matrix(self, value):
        """Return the columns of the multiplication-by-value matrix."""

        return self.module_generators(value)
