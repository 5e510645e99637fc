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

"""Checkers for the defining relations and the product structure."""

import logging

from ringstar.algebra.element import AlgebraElement, adjoint, elem_eq, \
    evaluate
from ringstar.algebra.monomial import Monomial
from ringstar.cosets import Coset, affine_image, coset_preimage
from ringstar.errors import NotApplicableError
from ringstar.ideals import ProductIdeal, ideal_gen, unit_ideal
from ringstar.rings import ProductRing
from ringstar.scalar import ZERO

LOG = logging.getLogger(__name__)


def relation_II_check(ring, b):
    """Return True if sum u^a s_b s_b* u^-a over R/(b) equals 1."""

    b = ring.coerce(b)
    ring.require_regular(b)

    principal = ideal_gen(ring, [b])

    if not principal.absolute_index().is_finite:
        raise NotApplicableError("R/(%s) is infinite, the sum does not "
                                 "make sense" % b)

    total = AlgebraElement.zero(ring)
    range_projection = AlgebraElement.isometry(ring, b) * \
        AlgebraElement.isometry_adjoint(ring, b)

    for rep in unit_ideal(ring).transversal(principal):
        shift = AlgebraElement.unit(ring, rep)
        total = total + shift * range_projection * \
            AlgebraElement.unit(ring, -rep)

    LOG.debug("Relation II for b = %s: %s", b, total)

    return elem_eq(total, AlgebraElement.scalar(ring))


def relation_I_check(ring, a, b, c, d):
    """Return True if u^a s_b u^c s_d = u^(a+bc) s_bd."""

    a, b, c, d = (ring.coerce(x) for x in (a, b, c, d))

    left = AlgebraElement.unit(ring, a) * AlgebraElement.isometry(ring, b) \
        * AlgebraElement.unit(ring, c) * AlgebraElement.isometry(ring, d)
    right = AlgebraElement.unit(ring, a + b * c) * \
        AlgebraElement.isometry(ring, b * d)

    return elem_eq(left, right)


def relation_conjugation_check(a, b, coset):
    """Return True if (u^a s_b) e_K (u^a s_b)* = e_(a + bK)."""

    ring = coset.ring
    word = AlgebraElement.unit(ring, a) * AlgebraElement.isometry(ring, b)
    left = word * AlgebraElement.projection(coset) * adjoint(word)
    right = AlgebraElement.projection(affine_image(a, b, coset))

    return elem_eq(left, right)


def unitary_isometry_check(ring, b):
    """Return (s_b s_b* = 1, b is a unit); the two always agree."""

    b = ring.coerce(b)
    range_projection = AlgebraElement.isometry(ring, b) * \
        AlgebraElement.isometry_adjoint(ring, b)

    return (elem_eq(range_projection, AlgebraElement.scalar(ring)),
            ring.is_unit(b))


def diagonal_compress(d, coset):
    """Return D with s_d* e_K s_d = e_D, None when the product vanishes."""

    return coset_preimage(d, coset)


def tensor(ring, first, second):
    """Return the element of R1 x R2 given by first (x) second."""

    if not isinstance(ring, ProductRing):
        raise NotApplicableError("%s is not a product ring" % ring)

    terms = []

    for coeff_x, x in first.monomials():
        for coeff_y, y in second.monomials():
            domain = Coset(ring.pair(x.domain.rep, y.domain.rep),
                           ProductIdeal(ring, x.domain.ideal,
                                        y.domain.ideal))
            terms.append((coeff_x * coeff_y,
                          Monomial(ring.pair(x.b, y.b),
                                   ring.pair(x.c, y.c),
                                   ring.pair(x.b2, y.b2), domain)))

    return AlgebraElement.from_monomials(ring, terms)


def product_eval_factorization(ring, first, second, r1, r2):
    """Return True if the tensor product evaluates componentwise."""

    combined = tensor(ring, first, second)
    point = ring.pair(ring.left.coerce(r1), ring.right.coerce(r2))

    expected = {}

    for coeff_x, x in evaluate(first, r1):
        for coeff_y, y in evaluate(second, r2):
            target = ring.pair(x, y)
            expected[target] = expected.get(target, ZERO) + coeff_x * coeff_y

    expected = {k: v for k, v in expected.items() if v}
    actual = {target: coeff for coeff, target in evaluate(combined, point)}

    return expected == actual
