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

"""Finite quotients R/I as levels of the spectrum of the diagonal."""

import logging

import sympy

from ringstar.cosets import Coset, coset_intersect
from ringstar.dot import dot_graph
from ringstar.errors import InfiniteIndexError, NotApplicableError
from ringstar.ideals import ideal_gen, unit_ideal
from ringstar.rings import Integers, LocalizedIntegers
from ringstar.scalar import ZERO
from ringstar.serialize import serializable_dict
from ringstar.simplicity import as_combo

LOG = logging.getLogger(__name__)


@serializable_dict
class FiniteLevel:
    """The points of R/I, I of finite index."""

    def __init__(self, ring, modulus, points):
        self.ring = ring
        self.modulus = modulus
        self.points = list(points)

    def point(self, x):
        """Return the point of the level x reduces to."""

        x = self.ring.coerce(x)

        for point in self.points:
            if self.modulus.contains(x - point):
                return point

        raise ValueError("%s has no point in %s" % (x, self))

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "ring": self.ring,
            "modulus": self.modulus,
            "size": len(self.points),
            "points": self.points
        }

    def __len__(self):
        return len(self.points)

    def __str__(self):
        return "%s/%s" % (self.ring, self.modulus)

    def __repr__(self):
        return self.__class__.__name__ + "('" + str(self) + "')"


def finite_level(ring, ideal):
    """Return the level R/ideal."""

    if ideal.absolute_index().is_infinite:
        raise InfiniteIndexError("%s has infinite index in %s" %
                                 (ideal, ring))

    points = unit_ideal(ring).transversal(ideal)

    LOG.debug("Level %s/%s with %u points", ring, ideal, len(points))

    return FiniteLevel(ring, ideal, points)


def character_eval(level, z, x):
    """Return the value of the diagonal element x at the point z."""

    z = level.ring.coerce(z)
    out = ZERO

    for coset, coeff in as_combo(x).terms:
        if not coset.ideal.contains_ideal(level.modulus):
            raise NotApplicableError("%s does not contain %s" %
                                     (coset.ideal, level.modulus))
        if coset.contains(z):
            out = out + coeff

    return out


def localized_level(ring, m):
    """Return the level Z[1/p]/(m), m prime to p."""

    if not isinstance(ring, LocalizedIntegers):
        raise NotApplicableError("%s is not a localization of Z" % ring)

    if m == 0 or m % ring.p == 0:
        raise NotApplicableError("%u is divisible by %u, which is a unit" %
                                 (m, ring.p))

    return finite_level(ring, ideal_gen(ring, [abs(m)]))


def crt_lift(targets):
    """Return the canonical r with r = residue mod ideal for each target."""

    if not targets:
        raise ValueError("No congruence to lift")

    targets = [(ideal.ring.coerce(residue), ideal)
               for residue, ideal in targets]

    for idx, (_, first) in enumerate(targets):
        for _, second in targets[idx + 1:]:
            if not first.sum(second).is_unit_ideal:
                raise NotApplicableError("%s and %s are not coprime" %
                                         (first, second))

    coset = Coset(*targets[0])

    for residue, ideal in targets[1:]:
        coset = coset_intersect(coset, Coset(residue, ideal))

    LOG.debug("CRT lift %s", coset)

    return coset.rep


def refinement_graph(ring, modulus):
    """Return the DOT graph of the levels Z/d, d dividing modulus."""

    if not isinstance(ring, Integers):
        raise NotApplicableError("Refinement graphs need the integers")

    modulus = abs(int(modulus))

    if modulus == 0:
        raise InfiniteIndexError("(0) has infinite index in Z")

    divisors = sympy.divisors(modulus)[::-1]
    nodes = ["Z/%u" % d for d in divisors]
    edges = [("Z/%u" % d, "Z/%u" % e) for d in divisors for e in divisors
             if d % e == 0 and sympy.isprime(d // e)]

    return dot_graph("levels", nodes, edges)
