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

"""Levels of the spectrum for Q[T].

The level Z_n is the disjoint union of the quotients
Q[T]/(p_1^i_1 ... p_n^i_n) with 0 <= i_k <= n, where p_1, p_2, ... is a
fixed list of monic irreducible polynomials.
"""

import itertools
import logging

from functools import lru_cache

from ringstar.dot import dot_graph
from ringstar.errors import NotApplicableError
from ringstar.rings import RationalPoly, make_ring
from ringstar.runtime import bounds
from ringstar.serialize import serializable_dict

LOG = logging.getLogger(__name__)


def _monic_candidates(height):
    """Yield the monic integer polynomials of the given height.

    Degrees run up to height + 1, then the sum of the absolute values of
    the coefficients and the coefficients themselves break ties.
    """

    found = []

    for degree in range(1, height + 2):
        for coeffs in itertools.product(range(-height, height + 1),
                                        repeat=degree):
            if max([abs(c) for c in coeffs] + [0]) != height:
                continue
            found.append((degree, sum(abs(c) for c in coeffs), coeffs))

    for _, _, coeffs in sorted(found):
        yield coeffs + (1,)


@lru_cache(maxsize=None)
def poly_primes(count):
    """Return the first count monic irreducible polynomials of Q[T]."""

    ring = make_ring("qpoly")
    out = []
    height = 0

    while len(out) < count:
        for coeffs in _monic_candidates(height):
            elem = ring.element(coeffs)
            if ring.is_irreducible(elem):
                out.append(elem)
                if len(out) == count:
                    break
        height += 1

    return tuple(out)


def _require_level(ring, n):

    if not isinstance(ring, RationalPoly):
        raise NotApplicableError("%s is not Q[T]" % ring)

    if n < 1 or n > bounds().primes:
        raise NotApplicableError("Level %u outside 1..%u" %
                                 (n, bounds().primes))


def level_modulus(ring, exponents):
    """Return p_1^i_1 ... p_n^i_n."""

    out = ring.one

    for prime, exp in zip(poly_primes(len(exponents)), exponents):
        out = out * ring.power(prime, exp)

    return out


@serializable_dict
class PolyLevelPoint:
    """A residue modulo p_1^i_1 ... p_n^i_n, a point of the level Z_n."""

    def __init__(self, ring, n, exponents, residue):

        _require_level(ring, n)

        exponents = tuple(int(exp) for exp in exponents)

        if len(exponents) != n or any(exp < 0 or exp > n
                                      for exp in exponents):
            raise ValueError("Exponents %s do not belong to level %u" %
                             (exponents, n))

        self.ring = ring
        self.n = n
        self.exponents = exponents
        self.modulus = level_modulus(ring, exponents)
        self.residue = ring.remainder(ring.coerce(residue), self.modulus)

    def __eq__(self, other):
        if isinstance(other, PolyLevelPoint):
            return self.n == other.n and self.exponents == other.exponents \
                and self.residue == other.residue
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.n, self.exponents, self.residue))

    def to_str(self):
        """Return an ASCII representation of the object."""

        return "%s mod (%s)" % (self.residue, self.modulus)

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "n": self.n,
            "exponents": list(self.exponents),
            "modulus": self.modulus,
            "residue": self.residue
        }

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return self.__class__.__name__ + "('" + self.to_str() + "')"


def poly_level_project(point):
    """Return the image of a point of Z_(n+1) in Z_n."""

    n = point.n - 1

    if n < 1:
        raise ValueError("Level 1 has no coarser level")

    exponents = [min(exp, n) for exp in point.exponents[:n]]

    return PolyLevelPoint(point.ring, n, exponents, point.residue)


def poly_level_le(first, second):
    """Return True if first <= second in the order of the level."""

    if first.n != second.n:
        raise ValueError("Points of levels %u and %u" % (first.n, second.n))

    if any(mine < other for mine, other in zip(first.exponents,
                                               second.exponents)):
        return False

    difference = first.residue - second.residue

    return first.ring.remainder(difference, second.modulus).is_zero()


def poly_level_graph(ring, n, bound):
    """Return the DOT graph of the moduli of Z_n with exponents <= bound."""

    _require_level(ring, n)

    bound = min(bound, n)
    tuples = list(itertools.product(range(bound + 1), repeat=n))

    def label(exponents):
        return "(%s)" % level_modulus(ring, exponents)

    edges = []

    for exponents in tuples:
        for idx, exp in enumerate(exponents):
            if exp == 0:
                continue
            coarser = exponents[:idx] + (exp - 1,) + exponents[idx + 1:]
            edges.append((label(exponents), label(coarser)))

    LOG.debug("Level graph with %u moduli", len(tuples))

    return dot_graph("levels", [label(exponents) for exponents in tuples],
                     edges)
