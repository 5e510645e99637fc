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

"""Ideal families and their closure under principal multiples."""

import itertools
import logging
import threading

from ringstar.serialize import serializable_dict


@serializable_dict
class FamilyMember:
    """An ideal of the closure with the multiples it was built from.

    The derivation is a tuple of (b, I) pairs, the ideal being the
    intersection of the b*I. The cost counts the multiplier factors.
    """

    def __init__(self, ideal, cost, derivation):
        self.ideal = ideal
        self.cost = cost
        self.derivation = tuple(derivation)

    def rebuild(self):
        """Return the intersection described by the derivation."""

        out = None

        for factor, base in self.derivation:
            step = base.scale(factor)
            out = step if out is None else out.intersect(step)

        return out

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "ideal": self.ideal,
            "cost": self.cost,
            "derivation": [{"multiplier": factor, "ideal": base}
                           for factor, base in self.derivation]
        }

    def __repr__(self):
        return "%s(%s, cost=%u)" % (self.__class__.__name__, self.ideal,
                                    self.cost)


@serializable_dict
class IdealFamily:
    """A finite family of ideals of a ring."""

    def __init__(self, ring, base=()):
        self.ring = ring
        self.base = []
        self.log = logging.getLogger("ringstar.ideals.family")

        self._cache = {}
        self._lock = threading.Lock()

        for ideal in base:
            if ideal.ring != ring:
                raise ValueError("%s is not an ideal of %s" % (ideal, ring))
            if ideal not in self.base:
                self.base.append(ideal)

    @property
    def unit_ideal(self):
        """Return R."""

        from ringstar.ideals import ideal_gen
        return ideal_gen(self.ring, [self.ring.one])

    def all_ideals(self):
        """Return R followed by the members of the family."""

        unit = self.unit_ideal
        return [unit] + [ideal for ideal in self.base if ideal != unit]

    def contains_regular(self):
        """Return True if every member contains a regular element."""

        return all(ideal.regular_element() is not None for ideal in self.base)

    def _multiples(self, multipliers, depth):
        products = {}

        for count in range(depth + 1):
            for factors in itertools.combinations_with_replacement(
                    multipliers, count):
                value = self.ring.one
                for factor in factors:
                    value = value * factor
                products.setdefault(value, count)

        return products

    def _closure(self, multipliers, depth):
        members = {}

        def add(ideal, cost, derivation):
            if ideal in members and members[ideal].cost <= cost:
                return False
            members[ideal] = FamilyMember(ideal, cost, derivation)
            return True

        for value, cost in self._multiples(multipliers, depth).items():
            for base in self.all_ideals():
                add(base.scale(value), cost, [(value, base)])

        changed = True
        while changed:
            changed = False
            for first, second in itertools.product(list(members.values()),
                                                   repeat=2):
                cost = first.cost + second.cost
                if cost > depth:
                    continue
                ideal = first.ideal.intersect(second.ideal)
                if add(ideal, cost, first.derivation + second.derivation):
                    changed = True

        return sorted(members.values(), key=lambda m: m.cost)

    def closure(self, multipliers, depth):
        """Return the closure members built with at most depth factors."""

        for value in multipliers:
            self.ring.require_regular(value)

        key = (tuple(multipliers), depth)

        with self._lock:
            if key not in self._cache:
                self.log.debug("Computing closure of %u ideals, depth %u",
                               len(self.base), depth)
                self._cache[key] = self._closure(list(multipliers), depth)
            return list(self._cache[key])

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "ring": self.ring,
            "base": self.base
        }

    def __iter__(self):
        return iter(self.base)

    def __len__(self):
        return len(self.base)

    def __str__(self):
        return "; ".join(str(ideal) for ideal in self.base)

    def __repr__(self):
        return self.__class__.__name__ + "('" + str(self) + "')"


def family_closure(fam, multipliers, depth):
    """Return the ideals of the closure of fam up to depth factors."""

    return [member.ideal for member in fam.closure(multipliers, depth)]
