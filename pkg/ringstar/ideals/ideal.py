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

"""Base ideal and index values."""

from ringstar.errors import BackendMismatchError, InfiniteIndexError
from ringstar.serialize import serializable_dict, serializable_string

ONE = "One"
FINITE = "Finite"
INFINITE = "Infinite"


@serializable_string
class IndexValue:
    """Cardinality classification One | Finite(n) | Infinite."""

    def __init__(self, tag, value=None):

        if tag == FINITE and (value is None or value < 2):
            raise ValueError("Invalid finite index %s" % value)

        if tag not in (ONE, FINITE, INFINITE):
            raise ValueError("Invalid index tag %s" % tag)

        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "value",
                           1 if tag == ONE else value if tag == FINITE
                           else None)

    def __setattr__(self, name, value):
        raise TypeError("This object is immutable")

    @classmethod
    def of(cls, value):
        """Return the index for a cardinality, None meaning infinite."""

        if value is None:
            return cls(INFINITE)

        if value == 1:
            return cls(ONE)

        return cls(FINITE, value)

    @property
    def is_one(self):
        """Return True for One."""

        return self.tag == ONE

    @property
    def is_finite(self):
        """Return True for One and Finite(n)."""

        return self.tag != INFINITE

    @property
    def is_infinite(self):
        """Return True for Infinite."""

        return self.tag == INFINITE

    def __mul__(self, other):
        if self.is_infinite or other.is_infinite:
            return IndexValue(INFINITE)
        return IndexValue.of(self.value * other.value)

    def to_str(self):
        """Return an ASCII representation of the object."""

        if self.tag == FINITE:
            return "Finite(%u)" % self.value

        return self.tag

    def __str__(self):
        return self.to_str()

    def __hash__(self):
        return hash(self.to_str())

    def __eq__(self, other):
        if isinstance(other, IndexValue):
            return self.to_str() == other.to_str()
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return self.__class__.__name__ + "('" + self.to_str() + "')"


@serializable_dict
class Ideal:
    """Base class for the finitely generated ideals of a backend.

    Subclasses keep a normal form and implement the lattice of ideal
    operations on it. Equality is equality of ideals.
    """

    def __init__(self, ring):
        self.ring = ring

    def check(self, other):
        """Raise BackendMismatchError unless other lives in the same ring."""

        if not isinstance(other, Ideal) or other.ring != self.ring:
            raise BackendMismatchError("Ideals %s and %s live in different "
                                       "rings" % (self, other))

    def key(self):
        """Return a hashable normal form."""

        raise NotImplementedError()

    @property
    def is_zero(self):
        """Return True for the zero ideal."""

        raise NotImplementedError()

    @property
    def is_unit_ideal(self):
        """Return True for the whole ring."""

        return self.contains(self.ring.one)

    def contains(self, x):
        """Return True if x lies in the ideal."""

        raise NotImplementedError()

    def contains_ideal(self, other):
        """Return True if other is a subset of this ideal."""

        self.check(other)
        return all(self.contains(x) for x in other.generators())

    def generators(self):
        """Return a finite list of ideal generators."""

        raise NotImplementedError()

    def sum(self, other):
        """Return self + other."""

        raise NotImplementedError()

    def intersect(self, other):
        """Return the intersection of self and other."""

        raise NotImplementedError()

    def product(self, other):
        """Return the product ideal."""

        raise NotImplementedError()

    def colon(self, b):
        """Return (self : b) = {r : b*r in self} for regular b."""

        raise NotImplementedError()

    def scale(self, b):
        """Return b times this ideal."""

        return self.product(self.principal(b))

    def principal(self, b):
        """Return the principal ideal (b) of the same ring."""

        return self.__class__.generate(self.ring, [b])

    @classmethod
    def generate(cls, ring, gens):
        """Return the ideal generated by gens."""

        raise NotImplementedError()

    def absolute_index(self):
        """Return |R/I|."""

        raise NotImplementedError()

    def relative_index(self, other):
        """Return |self/(self & other)|."""

        raise NotImplementedError()

    def transversal(self, other):
        """Return representatives of self modulo self & other."""

        raise NotImplementedError()

    def require_finite(self, other):
        """Raise InfiniteIndexError unless |self/(self & other)| < oo."""

        index = self.relative_index(other)

        if index.is_infinite:
            raise InfiniteIndexError("%s has infinite index over %s" %
                                     (self, self.intersect(other)))

        return index

    def solve_linear(self, b, x):
        """Return r with b*r - x in the ideal, or None when none exists."""

        raise NotImplementedError()

    def reduce(self, x):
        """Return the canonical residue of x, or x without a reduction."""

        return x

    def split(self, other, x):
        """Return (i, j), i in self, j in other, i + j = x, or None."""

        raise NotImplementedError()

    def elements(self):
        """Yield the ideal members by increasing height."""

        raise NotImplementedError()

    def regular_element(self):
        """Return a regular member, or None when all are zero-divisors."""

        raise NotImplementedError()

    def __add__(self, other):
        return self.sum(other)

    def __and__(self, other):
        return self.intersect(other)

    def __mul__(self, other):
        return self.product(other)

    def __le__(self, other):
        return other.contains_ideal(self)

    def to_str(self):
        """Return an ASCII representation of the object."""

        if self.is_zero:
            return "(0)"

        return "ideal(%s)" % ", ".join(str(x) for x in self.generators())

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "ring": self.ring,
            "ideal": self.to_str()
        }

    def __str__(self):
        return self.to_str()

    def __hash__(self):
        return hash((self.ring.descriptor, self.key()))

    def __eq__(self, other):
        if isinstance(other, Ideal):
            return self.ring == other.ring and self.key() == other.key()
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return self.__class__.__name__ + "('" + self.to_str() + "')"
