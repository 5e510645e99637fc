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

"""Expression syntax tree.

Every node keeps the offset where it starts in the source text. Two
trees are equal when they have the same shape and the same values,
offsets are not compared.
"""

from functools import reduce

from ringstar.algebra import AlgebraElement, adjoint
from ringstar.serialize import serializable_string

UNIT = "U"
ISOMETRY = "S"
ISOMETRY_ADJOINT = "Sstar"


@serializable_string
class Node:
    """Base class of the expression nodes."""

    def __init__(self, pos=0):
        self.pos = pos

    def key(self):
        """Return the values identifying the node."""

        raise NotImplementedError()

    def evaluate(self, ring):
        """Return the node as an AlgebraElement over ring."""

        raise NotImplementedError()

    def to_str(self):
        """Return the source text of the node."""

        raise NotImplementedError()

    def wrapped(self):
        """Return the text of the node as an operand of a product."""

        return self.to_str()

    def __eq__(self, other):
        if isinstance(other, Node) and other.__class__ == self.__class__:
            return self.key() == other.key()
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.to_str())

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return self.__class__.__name__ + "('" + self.to_str() + "')"


class Literal(Node):
    """A Gaussian rational scalar."""

    def __init__(self, value, pos=0):
        super().__init__(pos)
        self.value = value

    def key(self):
        return self.value

    def evaluate(self, ring):
        return AlgebraElement.scalar(ring, self.value)

    def to_str(self):
        return str(self.value)


class Generator(Node):
    """One of U(a), S(b), Sstar(b)."""

    def __init__(self, kind, arg, pos=0):
        super().__init__(pos)
        self.kind = kind
        self.arg = arg

    def key(self):
        return (self.kind, self.arg)

    def evaluate(self, ring):

        if self.kind == UNIT:
            return AlgebraElement.unit(ring, self.arg)

        if self.kind == ISOMETRY:
            return AlgebraElement.isometry(ring, self.arg)

        return AlgebraElement.isometry_adjoint(ring, self.arg)

    def to_str(self):
        return "%s(%s)" % (self.kind, self.arg)


class Projection(Node):
    """E(K) for a coset K.

    The coset text is kept as written (blanks collapsed) so that
    printing gives back the source.
    """

    def __init__(self, coset, text, pos=0):
        super().__init__(pos)
        self.coset = coset
        self.text = " ".join(text.split())

    def key(self):
        return self.coset

    def evaluate(self, ring):
        return AlgebraElement.projection(self.coset)

    def to_str(self):
        return "E(%s)" % self.text


class Product(Node):
    """Juxtaposed factors."""

    def __init__(self, factors, pos=0):
        super().__init__(pos)
        self.factors = list(factors)

    def key(self):
        return tuple(self.factors)

    def evaluate(self, ring):
        return reduce(lambda x, y: x * y,
                      [factor.evaluate(ring) for factor in self.factors])

    def to_str(self):
        return " ".join(factor.wrapped() for factor in self.factors)

    def wrapped(self):
        return "(%s)" % self.to_str()


class Sum(Node):
    """A first term followed by signed terms."""

    def __init__(self, first, rest, pos=0):
        super().__init__(pos)
        self.first = first
        self.rest = list(rest)

    def key(self):
        return (self.first, tuple(self.rest))

    def evaluate(self, ring):

        out = self.first.evaluate(ring)

        for sign, term in self.rest:
            if sign == "+":
                out = out + term.evaluate(ring)
            else:
                out = out - term.evaluate(ring)

        return out

    def to_str(self):

        out = self.first.wrapped() if isinstance(self.first, Sum) \
            else self.first.to_str()

        for sign, term in self.rest:
            text = "(%s)" % term if isinstance(term, (Sum, Negation)) \
                else term.to_str()
            out += " %s %s" % (sign, text)

        return out

    def wrapped(self):
        return "(%s)" % self.to_str()


class Negation(Node):
    """A leading minus sign."""

    def __init__(self, operand, pos=0):
        super().__init__(pos)
        self.operand = operand

    def key(self):
        return self.operand

    def evaluate(self, ring):
        return -self.operand.evaluate(ring)

    def to_str(self):
        if isinstance(self.operand, (Sum, Negation)):
            return "-(%s)" % self.operand
        return "-%s" % self.operand

    def wrapped(self):
        return "(%s)" % self.to_str()


class Adjoint(Node):
    """The postfix adjoint marker '."""

    def __init__(self, operand, pos=0):
        super().__init__(pos)
        self.operand = operand

    def key(self):
        return self.operand

    def evaluate(self, ring):
        return adjoint(self.operand.evaluate(ring))

    def to_str(self):
        if isinstance(self.operand, (Sum, Product, Negation)):
            return "(%s)'" % self.operand
        return "%s'" % self.operand
