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

"""From the ax+b monoid of Z to the ring algebra of Z.

The isometry of (a, b) goes to u^a s_b and the projection onto the
constructible set (a + bZ) x mN* goes to e_(a + bZ).
"""

from ringstar.algebra import AlgebraElement
from ringstar.errors import NotApplicableError
from ringstar.rings import Integers
from ringstar.semigroups.monoid import AxPlusB, RightIdealSet


def _isometry(ring, pair):

    a, b = AxPlusB.normalize(pair)

    return AlgebraElement.unit(ring, a) * AlgebraElement.isometry(ring, b)


def to_ring_algebra(ring, word):
    """Return the image of a pair, a list of pairs or a constructible set."""

    if not isinstance(ring, Integers):
        raise NotApplicableError("The ax+b monoid maps into the algebra of "
                                 "Z, not of %s" % ring)

    if isinstance(word, RightIdealSet):
        if not isinstance(word.monoid, AxPlusB):
            raise NotApplicableError("%s is not a set of the ax+b monoid" %
                                     word)
        if word.is_empty:
            return AlgebraElement.zero(ring)
        coset, _ = word.datum
        return AlgebraElement.projection(coset)

    if isinstance(word, tuple):
        return _isometry(ring, word)

    out = AlgebraElement.scalar(ring)

    for pair in word:
        out = out * _isometry(ring, pair)

    return out
