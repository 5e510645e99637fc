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

"""Monomials s_b* u^c e_K s_b2 of the spanning *-algebra.

A monomial acts on the basis of l2(R) by r -> (c + b2*r)/b for r in
its domain D = {r : b2*r in K} and kills the other basis vectors. It is
stored through its domain, the cell being K = b2*D.
"""

from ringstar.cosets import Coset, affine_image, coset_intersect, \
    coset_preimage
from ringstar.ideals import ideal_gen
from ringstar.serialize import serializable_dict


@serializable_dict
class Monomial:
    """The partial isometry s_b* u^c e_K s_b2 with domain D."""

    def __init__(self, b, c, b2, domain):

        ring = domain.ring
        b, c, b2 = ring.coerce(b), ring.coerce(c), ring.coerce(b2)

        ring.require_regular(b)
        ring.require_regular(b2)

        self.ring = ring
        self.b = b
        self.c = c
        self.b2 = b2
        self.domain = domain

    @property
    def key(self):
        """Return (c/b, b2/b) in the total ring of fractions."""

        return (self.ring.fraction_key(self.c, self.b),
                self.ring.fraction_key(self.b2, self.b))

    @property
    def cell(self):
        """Return K = b2*D."""

        return affine_image(self.ring.zero, self.b2, self.domain)

    @property
    def is_diagonal(self):
        """Return True if the monomial is a projection e_D."""

        return self.key == diagonal_key(self.ring)

    def apply(self, r):
        """Return the image of the basis index r, None outside D."""

        if not self.domain.contains(r):
            return None

        return self.ring.divide_exact(self.c + self.b2 * r, self.b)

    def to_str(self):
        """Return an ASCII representation of the object."""

        return word(self.b, self.c, self.b2, self.domain)

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "b": self.b,
            "c": self.c,
            "cell": self.cell,
            "b2": self.b2,
            "domain": self.domain
        }

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return self.__class__.__name__ + "('" + self.to_str() + "')"


def diagonal_key(ring):
    """Return the key of the diagonal monomials."""

    return (ring.fraction_key(ring.zero, ring.one),
            ring.fraction_key(ring.one, ring.one))


def word(b, c, b2, domain):
    """Return the generator word of a monomial."""

    ring = domain.ring
    out = []

    if b != ring.one:
        out.append("S*(%s)" % b)

    if not c.is_zero():
        out.append("U(%s)" % c)

    if not domain.is_whole:
        out.append("E(%s)" % affine_image(ring.zero, b2, domain))

    if b2 != ring.one:
        out.append("S(%s)" % b2)

    return " ".join(out) if out else "1"


def monomial_make(b, a, ideal, a2, b2):
    """Return s_b* u^-a e_I u^a2 s_b2 as a Monomial, None when zero."""

    ring = ideal.ring
    b, a, a2, b2 = (ring.coerce(x) for x in (b, a, a2, b2))

    ring.require_regular(b)
    ring.require_regular(b2)

    c = a2 - a

    first = coset_preimage(b2, Coset(-a2, ideal))
    second = coset_preimage(b2, Coset(-c, ideal_gen(ring, [b])))

    if first is None or second is None:
        return None

    domain = coset_intersect(first, second)

    if domain is None:
        return None

    return Monomial(b, c, b2, domain)


def monomial_mul(x, y):
    """Return the product x*y, None when zero."""

    ring = x.ring

    # y sends r to s = (c' + d2*r)/d, which x needs inside its domain
    shifted = affine_image(-y.c, y.b, x.domain)
    pre = coset_preimage(y.b2, shifted)

    if pre is None:
        return None

    domain = coset_intersect(y.domain, pre)

    if domain is None:
        return None

    return Monomial(x.b * y.b, x.c * y.b + x.b2 * y.c, x.b2 * y.b2, domain)


def monomial_adjoint(x):
    """Return the adjoint monomial."""

    image = coset_preimage(x.b, affine_image(x.c, x.b2, x.domain))

    return Monomial(x.b2, -x.c, x.b, image)


def unit_monomial(ring, a):
    """Return u^a."""

    return Monomial(ring.one, a, ring.one, Coset.whole(ring))


def isometry_monomial(ring, b):
    """Return s_b."""

    return Monomial(ring.one, ring.zero, b, Coset.whole(ring))


def isometry_adjoint_monomial(ring, b):
    """Return s_b*."""

    b = ring.coerce(b)

    return Monomial(b, ring.zero, ring.one,
                    Coset(ring.zero, ideal_gen(ring, [b])))


def projection_monomial(coset):
    """Return e_K."""

    ring = coset.ring

    return Monomial(ring.one, ring.zero, ring.one, coset)
