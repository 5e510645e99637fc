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

"""Commutative ring backends."""

from functools import lru_cache

from ringstar.rings.descriptor import RingDescriptor, INTEGERS, QUADRATIC, \
    RATIONAL_POLY, ORDER_POLY, CYCLIC, LOCALIZED, PRODUCT
from ringstar.rings.ring import Ring, RingElement, LatticeRing
from ringstar.rings.integers import Integers
from ringstar.rings.quadratic import QuadraticOrder
from ringstar.rings.qpoly import RationalPoly
from ringstar.rings.opoly import OrderPoly
from ringstar.rings.cyclic import CyclicGroupRing
from ringstar.rings.localized import LocalizedIntegers
from ringstar.rings.product import ProductRing

BACKENDS = {
    INTEGERS: Integers,
    QUADRATIC: QuadraticOrder,
    RATIONAL_POLY: RationalPoly,
    ORDER_POLY: OrderPoly,
    CYCLIC: CyclicGroupRing,
    LOCALIZED: LocalizedIntegers,
}


@lru_cache(maxsize=None)
def _make_ring(desc):

    if desc.kind == PRODUCT:
        return ProductRing(desc, _make_ring(desc.left), _make_ring(desc.right))

    return BACKENDS[desc.kind](desc)


def make_ring(desc):
    """Return the ring handle for a descriptor or descriptor text."""

    if isinstance(desc, str):
        desc = RingDescriptor.parse(desc)

    desc.validate()

    return _make_ring(desc)


def arith(operation, x, y=None):
    """Apply add, sub, mul or neg to ring elements."""

    return x.ring.arith(operation, x, y)


__all__ = [
    "RingDescriptor", "Ring", "RingElement", "LatticeRing", "Integers",
    "QuadraticOrder", "RationalPoly", "OrderPoly", "CyclicGroupRing",
    "LocalizedIntegers", "ProductRing", "make_ring", "arith"
]
