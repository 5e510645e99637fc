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

"""Refuting that an ideal is covered by finitely many principal cosets."""

import logging

from ringstar.cosets import Coset, CoverResult, cover_decide
from ringstar.errors import HypothesisError, NotApplicableError, \
    SearchExhaustedError
from ringstar.ideals import ideal_gen
from ringstar.ideals.extended import ExtendedIdeal, coefficient_order
from ringstar.runtime import bounds
from ringstar.serialize import serializable_dict

LOG = logging.getLogger(__name__)

# why a principal ideal (b) meets I in infinite index
RULE_CONTENT = "content"
RULE_DEGREE = "degree"
RULE_INDEX = "index"


@serializable_dict
class Refutation:
    """The covering verdict and, per candidate, the index certificate."""

    def __init__(self, result, rules):
        self.result = result
        self.rules = list(rules)

    @property
    def covered(self):
        """Return True if the ideal is covered."""

        return self.result.covered

    @property
    def witness(self):
        """Return the witness, None when covered."""

        return self.result.witness

    def to_dict(self):
        """Return a dict representation of the object."""

        out = self.result.to_dict()
        out["rules"] = self.rules
        return out


def _order_poly_rule(ideal, b):
    """Return the rule showing |I/(I & (b))| is infinite, None if none."""

    ring = ideal.ring

    if ring.degree(b) >= 1:
        # nonzero constants are never multiples of b
        return RULE_DEGREE if not ideal.pi().is_zero else None

    order = coefficient_order(ring)
    principal = ideal_gen(order, [order.element(b.value[0])])

    if not principal.contains_ideal(ideal.pi()):
        return RULE_CONTENT

    return None


def _rule(ideal, b):

    if isinstance(ideal, ExtendedIdeal):
        return _order_poly_rule(ideal, b)

    if ideal.relative_index(ideal_gen(ideal.ring, [b])).is_infinite:
        return RULE_INDEX

    return None


def _avoiding_witness(ideal, cosets):
    """Return Witness(r) for the first r of ideal outside every coset."""

    limit = bounds().max_search

    for count, point in enumerate(Coset(ideal.ring.zero, ideal).elements()):
        if count >= limit:
            break
        if not any(coset.contains(point) for coset in cosets):
            return CoverResult(point)

    raise SearchExhaustedError("No point of %s avoids %u cosets within %u "
                               "points" % (ideal, len(cosets), limit))


def coverage_refute(ideal, candidates):
    """Decide whether ideal lies in the union of the cosets a + (b).

    candidates is a list of (a, b) pairs with b regular and not a unit.
    Return a Refutation holding Covered or a witness r of ideal outside
    every a + (b).
    """

    ring = ideal.ring
    cosets = []
    rules = []

    for a, b in candidates:
        a, b = ring.coerce(a), ring.coerce(b)
        ring.require_regular(b)
        if ring.is_unit(b):
            raise NotApplicableError("%s is a unit, (%s) is the whole ring"
                                     % (b, b))
        cosets.append(Coset(a, ideal_gen(ring, [b])))
        rules.append(_rule(ideal, b))

    # members of infinite relative index never help covering
    kept = [coset for coset, rule in zip(cosets, rules) if rule is None]
    result = cover_decide(Coset(ring.zero, ideal), kept)

    if not result.covered and any(coset.contains(result.witness)
                                  for coset in cosets):
        result = _avoiding_witness(ideal, cosets)

    if not result.covered:
        r = result.witness
        if not ideal.contains(r) or any(coset.contains(r)
                                        for coset in cosets):
            raise HypothesisError("Witness %s does not verify" % r)

    LOG.info("Refutation of %s by %u cosets: %s", ideal, len(cosets), result)

    return Refutation(result, rules)
