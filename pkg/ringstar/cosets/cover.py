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

"""Deciding whether finitely many cosets cover a coset.

A coset of infinite relative index can never help covering (a group
covered by finitely many cosets is covered by those of finite index),
so the decision splits along members of finite index and otherwise
searches for a point avoiding everything.
"""

import logging

from ringstar.cosets.coset import Coset, coset_contains, coset_intersect
from ringstar.errors import SearchExhaustedError
from ringstar.runtime import bounds
from ringstar.serialize import serializable_dict

LOG = logging.getLogger(__name__)


@serializable_dict
class CoverResult:
    """Either Covered or Witness(r)."""

    def __init__(self, witness=None):
        self.witness = witness

    @property
    def covered(self):
        """Return True if the coset is covered."""

        return self.witness is None

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "covered": self.covered,
            "witness": self.witness
        }

    def __str__(self):
        if self.covered:
            return "Covered"
        return "Witness(%s)" % self.witness

    def __repr__(self):
        return self.__class__.__name__ + "('" + str(self) + "')"


COVERED = CoverResult()


class _Budget:

    def __init__(self, limit):
        self.limit = limit
        self.visited = 0

    def spend(self):
        self.visited += 1
        if self.visited > self.limit:
            raise SearchExhaustedError("No witness among %u points" %
                                       self.limit)


def _search(coset, members, budget):

    LOG.debug("Searching %s against %u cosets", coset, len(members))

    for point in coset.elements():
        budget.spend()
        if not any(member.contains(point) for member in members):
            return CoverResult(point)

    # only reached for finite enumerations
    return COVERED


def _decide(coset, family, budget):

    members = [member for member in family
               if coset_intersect(coset, member) is not None]

    if not members:
        return CoverResult(coset.rep)

    for member in members:
        if coset_contains(member, coset):
            return COVERED

    for member in members:
        index = coset.ideal.relative_index(member.ideal)
        if not index.is_finite or index.is_one:
            continue
        sub = coset.ideal.intersect(member.ideal)
        for rep in coset.ideal.transversal(member.ideal):
            result = _decide(Coset(coset.rep + rep, sub), members, budget)
            if not result.covered:
                return result
        return COVERED

    return _search(coset, members, budget)


def cover_decide(coset, family):
    """Return Covered if coset lies in the union of family.

    Otherwise return Witness(r) with r in coset and outside every member.
    """

    for member in family:
        coset.ideal.check(member.ideal)

    result = _decide(coset, list(family), _Budget(bounds().max_search))

    LOG.debug("cover %s: %s", coset, result)

    return result
