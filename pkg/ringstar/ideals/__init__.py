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

"""Finitely generated ideals of the ring backends."""

from ringstar.ideals.ideal import Ideal, IndexValue
from ringstar.ideals.lattice import LatticeIdeal
from ringstar.ideals.localized import LocalizedIdeal
from ringstar.ideals.polynomial import PolyIdeal
from ringstar.ideals.extended import ExtendedIdeal
from ringstar.ideals.product import ProductIdeal
from ringstar.ideals.family import IdealFamily, FamilyMember, family_closure
from ringstar.rings import LatticeRing, RationalPoly, OrderPoly, \
    LocalizedIntegers, ProductRing

IDEALS = [
    (LatticeRing, LatticeIdeal),
    (RationalPoly, PolyIdeal),
    (OrderPoly, ExtendedIdeal),
    (LocalizedIntegers, LocalizedIdeal),
    (ProductRing, ProductIdeal),
]


def ideal_class(ring):
    """Return the ideal class handling the ring."""

    for ring_class, ideal_cls in IDEALS:
        if isinstance(ring, ring_class):
            return ideal_cls

    raise ValueError("No ideals for %s" % ring)


def ideal_gen(ring, gens):
    """Return the ideal generated by gens."""

    gens = [ring.coerce(gen) for gen in gens]

    return ideal_class(ring).generate(ring, gens)


def unit_ideal(ring):
    """Return R as an ideal."""

    return ideal_gen(ring, [ring.one])


def ideal_sum(first, second):
    """Return I + J."""

    return first.sum(second)


def ideal_intersect(first, second):
    """Return the intersection of I and J."""

    return first.intersect(second)


def ideal_product(first, second):
    """Return I * J."""

    return first.product(second)


def ideal_colon(ideal, b):
    """Return (I : b)."""

    return ideal.colon(ideal.ring.coerce(b))


def ideal_contains(ideal, x):
    """Return True if x lies in I."""

    return ideal.contains(ideal.ring.coerce(x))


def absolute_index(ideal):
    """Return |R/I|."""

    return ideal.absolute_index()


def relative_index(first, second):
    """Return |J/(J & J2)|."""

    return first.relative_index(second)


def transversal(first, second):
    """Return representatives of J modulo J & J2."""

    return first.transversal(second)


__all__ = [
    "Ideal", "IndexValue", "LatticeIdeal", "LocalizedIdeal", "PolyIdeal",
    "ExtendedIdeal", "ProductIdeal", "IdealFamily", "FamilyMember",
    "family_closure", "ideal_class", "ideal_gen", "unit_ideal", "ideal_sum",
    "ideal_intersect", "ideal_product", "ideal_colon", "ideal_contains",
    "absolute_index", "relative_index", "transversal"
]
