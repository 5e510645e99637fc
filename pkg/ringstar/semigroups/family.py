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

"""The constructible right ideals of a monoid and the quasi-lattice test."""

import itertools
import logging

from ringstar.dot import dot_graph
from ringstar.semigroups.monoid import RightIdealSet
from ringstar.serialize import serializable_dict

LOG = logging.getLogger(__name__)


def principal_right_ideal(monoid, p):
    """Return pP."""

    return monoid.principal(p)


def ideal_translate(q, members):
    """Return q*S."""

    return members.translate(q)


def ideal_intersect_sg(first, second):
    """Return the intersection of two right ideal sets, maybe empty."""

    if first.monoid != second.monoid:
        raise ValueError("%s and %s live in different monoids" %
                         (first, second))

    return first & second


def constructible_family(monoid, depth):
    """Return the sets reachable from {}, P in at most depth steps.

    A step translates every member by every generator and intersects
    every pair of members.
    """

    family = [RightIdealSet(monoid), monoid.whole()]

    for step in range(depth):
        found = []
        for member in family:
            for gen in monoid.generators:
                found.append(member.translate(gen))
        for first, second in itertools.combinations(family, 2):
            found.append(first & second)
        size = len(family)
        for member in found:
            if member not in family:
                family.append(member)
        LOG.debug("Step %u: %u constructible sets", step + 1, len(family))
        if len(family) == size:
            break

    return family


@serializable_dict
class QuasiLatticeReport:
    """The outcome of the quasi-lattice test."""

    def __init__(self, depth, pairs, counterexample=None, meets=()):
        self.depth = depth
        self.pairs = pairs
        self.counterexample = counterexample
        self.meets = list(meets)

    @property
    def holds(self):
        """Return True if no counterexample was found."""

        return self.counterexample is None

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "depth": self.depth,
            "pairs": self.pairs,
            "holds": self.holds,
            "counterexample": self.counterexample,
            "meets": self.meets
        }


def quasi_lattice_check(monoid, depth):
    """Test pP & qP for all products p, q of at most depth generators.

    Every intersection has to be empty or principal; the first pair
    failing is returned as counterexample.
    """

    elements = monoid.words(depth)
    meets = []
    pairs = 0

    for p, q in itertools.combinations(elements, 2):
        pairs += 1
        meet = monoid.principal(p) & monoid.principal(q)
        if meet.is_empty:
            continue
        generator = meet.generator()
        if generator is None:
            LOG.info("%s & %s is not principal", monoid.format(p),
                     monoid.format(q))
            return QuasiLatticeReport(depth, pairs,
                                      [monoid.format(p), monoid.format(q)],
                                      meets)
        meets.append({"p": monoid.format(p), "q": monoid.format(q),
                      "meet": monoid.format(generator)})

    return QuasiLatticeReport(depth, pairs, None, meets)


def family_graph(family):
    """Return the DOT graph of the covering relation of a family."""

    edges = []

    for small, large in itertools.permutations(family, 2):
        if not large.contains_set(small):
            continue
        between = [other for other in family
                   if other not in (small, large) and
                   other.contains_set(small) and large.contains_set(other)]
        if not between:
            edges.append((str(small), str(large)))

    return dot_graph("family", [str(member) for member in family], edges)
