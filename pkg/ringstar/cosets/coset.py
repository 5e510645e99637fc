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

"""Cosets a + I of ideals."""

from ringstar.errors import NotApplicableError
from ringstar.serialize import serializable_dict


@serializable_dict
class Coset:
    """The set rep + ideal.

    The representative is replaced by its canonical residue whenever the
    ideal has one. Equality is equality of sets.
    """

    def __init__(self, rep, ideal):

        ideal.ring.check(rep)

        object.__setattr__(self, "ideal", ideal)
        object.__setattr__(self, "rep", ideal.reduce(rep))

    def __setattr__(self, name, value):
        raise TypeError("This object is immutable")

    @classmethod
    def whole(cls, ring):
        """Return R as a coset."""

        from ringstar.ideals import unit_ideal
        return cls(ring.zero, unit_ideal(ring))

    @property
    def ring(self):
        """Return the ambient ring."""

        return self.ideal.ring

    @property
    def is_whole(self):
        """Return True if the coset is R."""

        return self.ideal.is_unit_ideal

    def contains(self, x):
        """Return True if x lies in the coset."""

        return self.ideal.contains(self.ring.coerce(x) - self.rep)

    def elements(self):
        """Yield rep + i over the enumeration of the ideal."""

        for elem in self.ideal.elements():
            yield self.rep + elem

    def translate(self, a):
        """Return a + self."""

        return Coset(self.rep + a, self.ideal)

    def to_str(self):
        """Return an ASCII representation of the object."""

        return "coset(%s mod %s)" % (self.rep, self.ideal)

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "rep": self.rep,
            "ideal": self.ideal
        }

    def __str__(self):
        return self.to_str()

    def __hash__(self):
        return hash(self.ideal)

    def __eq__(self, other):
        if isinstance(other, Coset):
            return self.ideal == other.ideal and \
                self.ideal.contains(self.rep - other.rep)
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return self.__class__.__name__ + "('" + self.to_str() + "')"


def coset_intersect(first, second):
    """Return the intersection of two cosets, None when empty."""

    first.ideal.check(second.ideal)

    parts = first.ideal.split(second.ideal, second.rep - first.rep)

    if parts is None:
        return None

    return Coset(first.rep + parts[0], first.ideal.intersect(second.ideal))


def coset_contains(outer, inner):
    """Return True if inner is a subset of outer."""

    outer.ideal.check(inner.ideal)

    return outer.ideal.contains_ideal(inner.ideal) and \
        outer.contains(inner.rep)


def affine_image(a, b, coset):
    """Return a + b*coset."""

    ring = coset.ring
    a, b = ring.coerce(a), ring.coerce(b)
    ring.require_regular(b)

    return Coset(a + b * coset.rep, coset.ideal.scale(b))


def coset_preimage(b, coset):
    """Return {x : b*x in coset}, None when empty."""

    ring = coset.ring
    b = ring.coerce(b)
    ring.require_regular(b)

    point = coset.ideal.solve_linear(b, coset.rep)

    if point is None:
        return None

    return Coset(point, coset.ideal.colon(b))


def coset_complement(coset):
    """Return the other cosets of the ideal, whose union is R - coset."""

    from ringstar.ideals import unit_ideal

    unit = unit_ideal(coset.ring)

    if unit.relative_index(coset.ideal).is_infinite:
        raise NotApplicableError("%s has infinitely many cosets" %
                                 coset.ideal)

    out = []

    for rep in unit.transversal(coset.ideal):
        other = Coset(rep, coset.ideal)
        if other != coset:
            out.append(other)

    return out


def principal_expansion(coset, b=None):
    """Return the cosets rep + c + (b) partitioning rep + I.

    b defaults to a regular element of I; |I/(b)| must be finite.
    """

    ideal = coset.ideal
    ring = coset.ring

    if b is None:
        b = ideal.regular_element()
        if b is None:
            raise NotApplicableError("%s has no regular element" % ideal)

    b = ring.coerce(b)
    ring.require_regular(b)

    if not ideal.contains(b):
        raise NotApplicableError("%s is not in %s" % (b, ideal))

    principal = ideal.principal(b)

    return [Coset(coset.rep + c, principal)
            for c in ideal.transversal(principal)]
