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

"""Linear combinations of coset indicator functions."""

import logging

from ringstar.cosets.coset import Coset, affine_image, coset_contains, \
    coset_intersect, coset_preimage
from ringstar.cosets.cover import cover_decide
from ringstar.errors import SearchExhaustedError
from ringstar.runtime import bounds
from ringstar.scalar import Scalar, ZERO
from ringstar.serialize import serializable_dict

LOG = logging.getLogger(__name__)


@serializable_dict
class IndicatorCombo:
    """The function sum c_j 1_{K_j} on R.

    Terms are (coset, coefficient) pairs with pairwise distinct cosets
    and nonzero coefficients, kept in insertion order.
    """

    def __init__(self, ring, terms=()):
        self.ring = ring
        self.terms = []

        for coset, coeff in terms:
            self._add_term(coset, Scalar.coerce(coeff))

    def _add_term(self, coset, coeff):

        if coset.ring != self.ring:
            raise ValueError("%s is not a coset of %s" % (coset, self.ring))

        for idx, (other, value) in enumerate(self.terms):
            if other == coset:
                value = value + coeff
                if value:
                    self.terms[idx] = (other, value)
                else:
                    del self.terms[idx]
                return

        if coeff:
            self.terms.append((coset, coeff))

    @classmethod
    def indicator(cls, coset, coeff=1):
        """Return coeff * 1_coset."""

        return cls(coset.ring, [(coset, coeff)])

    @property
    def is_empty(self):
        """Return True if no term is stored."""

        return not self.terms

    def cosets(self):
        """Return the cosets of the terms."""

        return [coset for coset, _ in self.terms]

    def evaluate(self, x):
        """Return the value at x."""

        out = ZERO

        for coset, coeff in self.terms:
            if coset.contains(x):
                out = out + coeff

        return out

    def __add__(self, other):
        return IndicatorCombo(self.ring, self.terms + other.terms)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        """Return coeff times the combination."""

        coeff = Scalar.coerce(coeff)
        return IndicatorCombo(self.ring, [(coset, value * coeff)
                                          for coset, value in self.terms])

    def __mul__(self, other):
        terms = []

        for first, value in self.terms:
            for second, other_value in other.terms:
                meet = coset_intersect(first, second)
                if meet is not None:
                    terms.append((meet, value * other_value))

        return IndicatorCombo(self.ring, terms)

    def conjugate(self):
        """Return the coefficientwise complex conjugate."""

        return IndicatorCombo(self.ring, [(coset, value.conjugate())
                                          for coset, value in self.terms])

    def affine(self, a, b):
        """Return x -> f((x - a)/b), supported on a + b*supp."""

        return IndicatorCombo(self.ring, [(affine_image(a, b, coset), value)
                                          for coset, value in self.terms])

    def pullback(self, b):
        """Return x -> f(b*x)."""

        terms = []

        for coset, value in self.terms:
            pre = coset_preimage(b, coset)
            if pre is not None:
                terms.append((pre, value))

        return IndicatorCombo(self.ring, terms)

    def restrict(self, coset):
        """Return the combination times 1_coset."""

        return self * IndicatorCombo.indicator(coset)

    def to_str(self):
        """Return an ASCII representation of the object."""

        if not self.terms:
            return "0"

        return " + ".join("(%s)*1[%s]" % (value, coset)
                          for coset, value in self.terms)

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "terms": [{"coset": coset, "coefficient": value}
                      for coset, value in self.terms]
        }

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return self.__class__.__name__ + "('" + self.to_str() + "')"


@serializable_dict
class Atom:
    """A nonempty region with fixed membership pattern."""

    def __init__(self, pattern, region, representative, value):
        self.pattern = tuple(pattern)
        self.region = region
        self.representative = representative
        self.value = value

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "pattern": list(self.pattern),
            "region": self.region,
            "representative": self.representative,
            "value": self.value
        }

    def __repr__(self):
        return "%s(%s, %s, value=%s)" % (self.__class__.__name__,
                                         self.pattern, self.representative,
                                         self.value)


def atoms(combo):
    """Return the nonempty atoms of the arrangement of combo's cosets.

    Every atom carries the membership pattern, the intersection of the
    cosets it lies in, a point of the atom and the value of combo there.
    Patterns are explored depth first with membership tried first.
    """

    terms = combo.terms
    # at most 2^max_atoms complete patterns, whatever the family size
    limit = 2 ** bounds().max_atoms
    out = []
    patterns = [0]

    def visit(idx, region, pattern, excluded):

        if idx == len(terms):
            patterns[0] += 1
            if patterns[0] > limit:
                raise SearchExhaustedError(
                    "%u cosets give more than %u patterns" %
                    (len(terms), limit))
            result = cover_decide(region, excluded)
            if result.covered:
                return
            value = ZERO
            for flag, (_, coeff) in zip(pattern, terms):
                if flag:
                    value = value + coeff
            out.append(Atom(pattern, region, result.witness, value))
            return

        coset = terms[idx][0]
        meet = coset_intersect(region, coset)

        if meet is not None:
            visit(idx + 1, meet, pattern + (True,), excluded)

        if not coset_contains(coset, region):
            visit(idx + 1, region, pattern + (False,), excluded + [coset])

    visit(0, Coset.whole(combo.ring), (), [])

    LOG.debug("%u atoms for %u cosets", len(out), len(terms))

    return out


def zero_witness(combo):
    """Return an atom where combo is nonzero, None if combo vanishes."""

    for atom in atoms(combo):
        if atom.value:
            return atom

    return None


def indicator_zero_test(combo):
    """Return True if combo is the zero function on R."""

    if combo.is_empty:
        return True

    return zero_witness(combo) is None
