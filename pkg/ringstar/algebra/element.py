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

"""Elements of the spanning *-algebra.

Monomials with the same affine map r -> (c + b2*r)/b share a key. An
element keeps, per key, one representative triple (b, c, b2) and an
indicator combination of domain cosets, so two elements are equal iff
their combinations agree key by key.
"""

from ringstar.algebra.monomial import Monomial, diagonal_key, word, \
    monomial_mul, monomial_adjoint, unit_monomial, isometry_monomial, \
    isometry_adjoint_monomial, projection_monomial
from ringstar.cosets import IndicatorCombo, atoms, indicator_zero_test
from ringstar.errors import NotApplicableError
from ringstar.scalar import Scalar, ZERO
from ringstar.serialize import serializable_dict


class TermGroup:
    """The monomials of an element sharing one key."""

    def __init__(self, b, c, b2, combo, denominators=()):
        self.b = b
        self.c = c
        self.b2 = b2
        self.combo = combo
        self.denominators = tuple(denominators) or (b,)

    def monomials(self):
        """Return the (coefficient, Monomial) pairs."""

        return [(coeff, Monomial(self.b, self.c, self.b2, domain))
                for domain, coeff in self.combo.terms]

    def merge(self, other):
        """Return the group holding the terms of both groups."""

        denominators = list(self.denominators)
        for den in other.denominators:
            if den not in denominators:
                denominators.append(den)

        return TermGroup(self.b, self.c, self.b2, self.combo + other.combo,
                         denominators)

    def with_combo(self, combo):
        """Return a group with the same map and another combination."""

        return TermGroup(self.b, self.c, self.b2, combo, self.denominators)


@serializable_dict
class AlgebraElement:
    """A finite linear combination of monomials."""

    def __init__(self, ring, groups=None):
        self.ring = ring
        self.groups = {}

        for key, group in (groups or {}).items():
            if not group.combo.is_empty:
                self.groups[key] = group

    @classmethod
    def from_monomials(cls, ring, terms):
        """Return the sum of coeff * monomial over (coeff, monomial)."""

        out = cls(ring)

        for coeff, monomial in terms:
            if monomial is None:
                continue
            combo = IndicatorCombo(ring, [(monomial.domain, coeff)])
            group = TermGroup(monomial.b, monomial.c, monomial.b2, combo)
            out = out + cls(ring, {monomial.key: group})

        return out

    @classmethod
    def zero(cls, ring):
        """Return 0."""

        return cls(ring)

    @classmethod
    def scalar(cls, ring, value=1):
        """Return value * 1."""

        return cls.from_monomials(ring, [(Scalar.coerce(value),
                                          unit_monomial(ring, ring.zero))])

    @classmethod
    def unit(cls, ring, a):
        """Return u^a."""

        return cls.from_monomials(ring, [(1, unit_monomial(
            ring, ring.coerce(a)))])

    @classmethod
    def isometry(cls, ring, b):
        """Return s_b."""

        return cls.from_monomials(ring, [(1, isometry_monomial(
            ring, ring.coerce(b)))])

    @classmethod
    def isometry_adjoint(cls, ring, b):
        """Return s_b*."""

        return cls.from_monomials(ring, [(1, isometry_adjoint_monomial(
            ring, ring.coerce(b)))])

    @classmethod
    def projection(cls, coset):
        """Return e_K."""

        return cls.from_monomials(coset.ring,
                                  [(1, projection_monomial(coset))])

    @classmethod
    def diagonal(cls, combo):
        """Return the diagonal element with the given indicator combo."""

        ring = combo.ring
        group = TermGroup(ring.one, ring.zero, ring.one, combo)

        return cls(ring, {diagonal_key(ring): group})

    def check(self, other):
        """Raise ValueError unless other lives over the same ring."""

        if not isinstance(other, AlgebraElement) or other.ring != self.ring:
            raise ValueError("%r and %r live over different rings" %
                             (self, other))

    @property
    def is_diagonal(self):
        """Return True if every key is the diagonal key."""

        return all(key == diagonal_key(self.ring) for key in self.groups)

    def diagonal_combo(self):
        """Return the indicator combination of the diagonal part."""

        group = self.groups.get(diagonal_key(self.ring))

        if group is None:
            return IndicatorCombo(self.ring)

        return group.combo

    def monomials(self):
        """Return all (coefficient, Monomial) pairs."""

        out = []

        for group in self.groups.values():
            out.extend(group.monomials())

        return out

    def __add__(self, other):
        self.check(other)

        groups = dict(self.groups)

        for key, group in other.groups.items():
            groups[key] = groups[key].merge(group) if key in groups \
                else group

        return AlgebraElement(self.ring, groups)

    def scale(self, value):
        """Return value times the element."""

        value = Scalar.coerce(value)

        return AlgebraElement(self.ring, {
            key: group.with_combo(group.combo.scale(value))
            for key, group in self.groups.items()})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        return elem_mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def simplify(self):
        """Return the element without semantically zero groups."""

        return AlgebraElement(self.ring, {
            key: group for key, group in self.groups.items()
            if not indicator_zero_test(group.combo)})

    def is_zero(self):
        """Return True if the element is the zero operator."""

        return all(indicator_zero_test(group.combo)
                   for group in self.groups.values())

    def to_str(self):
        """Return an ASCII representation of the object."""

        terms = []
        # order by the affine map (b2/b, c/b), not by the representative
        keys = sorted(self.groups, key=lambda key: (key[1], key[0]))

        for group in (self.groups[key] for key in keys):
            for domain, coeff in group.combo.terms:
                text = word(group.b, group.c, group.b2, domain)
                if coeff == Scalar(1):
                    terms.append(text)
                elif text == "1":
                    terms.append("(%s)" % coeff)
                else:
                    terms.append("(%s)*%s" % (coeff, text))

        return " + ".join(terms) if terms else "0"

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "ring": self.ring,
            "text": self.to_str(),
            "terms": [{"coefficient": coeff, "monomial": monomial}
                      for coeff, monomial in self.monomials()]
        }

    def __str__(self):
        return self.to_str()

    def __eq__(self, other):
        if isinstance(other, AlgebraElement) and other.ring == self.ring:
            return elem_eq(self, other)
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def __repr__(self):
        return self.__class__.__name__ + "('" + self.to_str() + "')"


def elem_mul(x, y):
    """Return the product x*y."""

    x.check(y)

    out = AlgebraElement(x.ring)

    for first in x.groups.values():
        for second in y.groups.values():
            terms = []
            for dom_x, coeff_x in first.combo.terms:
                left = Monomial(first.b, first.c, first.b2, dom_x)
                for dom_y, coeff_y in second.combo.terms:
                    right = Monomial(second.b, second.c, second.b2, dom_y)
                    terms.append((coeff_x * coeff_y,
                                  monomial_mul(left, right)))
            part = AlgebraElement.from_monomials(x.ring, terms)
            out = out + _carry_denominators(part, first, second)

    return out


def _carry_denominators(part, first, second):

    dens = [a * b for a in first.denominators for b in second.denominators]

    return AlgebraElement(part.ring, {
        key: TermGroup(group.b, group.c, group.b2, group.combo, dens)
        for key, group in part.groups.items()})


def adjoint(x):
    """Return x*."""

    terms = [(coeff.conjugate(), monomial_adjoint(monomial))
             for coeff, monomial in x.monomials()]

    return AlgebraElement.from_monomials(x.ring, terms)


def elem_eq(x, y):
    """Return True if x and y are the same operator."""

    return (x - y).is_zero()


def evaluate(x, r):
    """Return x applied to the basis vector at r.

    The result is a list of (coefficient, index) pairs with nonzero
    coefficients, in order of first appearance.
    """

    r = x.ring.coerce(r)
    out = {}

    for coeff, monomial in x.monomials():
        target = monomial.apply(r)
        if target is None:
            continue
        out[target] = out.get(target, ZERO) + coeff

    return [(coeff, target) for target, coeff in out.items() if coeff]


def expectation(x):
    """Return the diagonal part of x."""

    key = diagonal_key(x.ring)

    if key not in x.groups:
        return AlgebraElement(x.ring)

    return AlgebraElement(x.ring, {key: x.groups[key]})


def d_norm(x):
    """Return the norm of a diagonal element as a sympy number."""

    simple = x.simplify()

    if not simple.is_diagonal:
        raise NotApplicableError("%s is not diagonal" % x)

    best = ZERO

    for atom in atoms(simple.diagonal_combo()):
        if atom.value.abs2() > best.abs2():
            best = atom.value

    return best.modulus()


def is_projection(x):
    """Return True if x = x* = x^2."""

    return elem_eq(x, adjoint(x)) and elem_eq(x * x, x)
