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

"""Ring hypotheses under which the algebra is purely infinite and simple.

Two conditions are checked per backend:

  intersection: the principal ideals of regular elements meet in (0);
  zero-divisors: every ideal I made of zero-divisors has infinite index
                 in every (b), b regular.
"""

import itertools
import logging

from ringstar.errors import RingStarError
from ringstar.ideals import ideal_gen
from ringstar.rings import CyclicGroupRing, Integers, LocalizedIntegers, \
    OrderPoly, ProductRing, QuadraticOrder, RationalPoly
from ringstar.runtime import bounds
from ringstar.serialize import serializable_dict

LOG = logging.getLogger(__name__)

CLOSED_FORM = "closed-form"
VACUOUS = "vacuous"
SAMPLED = "sampled"

# regular elements tried per zero-divisor ideal
SAMPLES = 8


@serializable_dict
class Verdict:
    """The outcome of one hypothesis check."""

    def __init__(self, holds, method, reason, samples=0, failures=()):
        self.holds = holds
        self.method = method
        self.reason = reason
        self.samples = samples
        self.failures = list(failures)

    def to_dict(self):
        """Return a dict representation of the object."""

        out = {
            "holds": self.holds,
            "method": self.method,
            "reason": self.reason
        }

        if self.method == SAMPLED:
            out["samples"] = self.samples
            out["failures"] = self.failures

        return out

    def __repr__(self):
        return "%s(%s, %s)" % (self.__class__.__name__, self.holds,
                               self.method)


def _domain_verdicts(ring, infinite_field=False):

    intersection = Verdict(True, CLOSED_FORM,
                           "a nonzero element is not divisible by itself "
                           "times a non-unit")

    if infinite_field:
        zero_divisors = Verdict(True, CLOSED_FORM,
                                "%s contains an infinite field, every "
                                "quotient is a vector space over it" % ring)
    else:
        zero_divisors = Verdict(True, VACUOUS,
                                "%s is an integral domain, the only ideal "
                                "of zero-divisors is (0)" % ring)

    return intersection, zero_divisors


def _sample_regular(ring):

    out = []

    for elem in itertools.islice(ring.elements(bounds().max_height),
                                 bounds().max_search):
        if elem.is_zero() or not ring.is_regular(elem) or ring.is_unit(elem):
            continue
        out.append(elem)
        if len(out) == SAMPLES:
            break

    return out


def _sampled_zero_divisors(ring, ideals):

    samples = 0
    failures = []

    for b in _sample_regular(ring):
        principal = ideal_gen(ring, [b])
        for ideal in ideals:
            samples += 1
            if not principal.relative_index(ideal).is_infinite:
                failures.append({"b": b, "ideal": ideal})

    names = ", ".join(str(ideal) for ideal in ideals)

    return Verdict(not failures, SAMPLED,
                   "|(b)/((b) & I)| for sampled regular b and I in %s" %
                   names, samples, failures)


def _cyclic_verdicts(ring):

    t = ring.generator()

    intersection = Verdict(True, CLOSED_FORM,
                           "the integers n are regular and meet in (0)")

    zero_divisors = _sampled_zero_divisors(
        ring, [ideal_gen(ring, [ring.one - t]),
               ideal_gen(ring, [ring.norm_element()])])

    return intersection, zero_divisors


def _product_verdicts(ring):

    left = ring.pair(ring.left.one, ring.left.zero)
    right = ring.pair(ring.left.zero, ring.right.one)

    intersection = Verdict(True, CLOSED_FORM,
                           "componentwise from %s and %s" %
                           (ring.left, ring.right))

    try:
        zero_divisors = _sampled_zero_divisors(
            ring, [ideal_gen(ring, [left]), ideal_gen(ring, [right])])
    except RingStarError as ex:
        zero_divisors = Verdict(None, SAMPLED, str(ex))

    return intersection, zero_divisors


def family_condition(ring, family):
    """Return [(ideal, regular element or None)] for the family members."""

    out = []

    for ideal in family:
        if ideal.ring != ring:
            raise ValueError("%s is not an ideal of %s" % (ideal, ring))
        out.append((ideal, ideal.regular_element()))

    return out


def theorem_conditions_check(ring, family=None):
    """Return the hypothesis report of ring, and of family when given."""

    if isinstance(ring, (Integers, QuadraticOrder, OrderPoly,
                         LocalizedIntegers)):
        intersection, zero_divisors = _domain_verdicts(ring)
    elif isinstance(ring, RationalPoly):
        intersection, zero_divisors = _domain_verdicts(ring, True)
    elif isinstance(ring, CyclicGroupRing):
        intersection, zero_divisors = _cyclic_verdicts(ring)
    elif isinstance(ring, ProductRing):
        intersection, zero_divisors = _product_verdicts(ring)
    else:
        raise ValueError("Unknown backend %s" % ring)

    report = {
        "ring": ring,
        "intersection": intersection,
        "zero_divisors": zero_divisors
    }

    if family is not None:
        members = family_condition(ring, family)
        report["family"] = {
            "holds": all(elem is not None for _, elem in members),
            "members": [{"ideal": ideal, "regular": elem}
                        for ideal, elem in members]
        }

    LOG.info("Conditions for %s: %s, %s", ring, intersection, zero_divisors)

    return report
