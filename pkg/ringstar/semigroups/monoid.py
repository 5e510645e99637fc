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

"""Left cancellative monoids and their right ideals in closed form.

Three kinds are supported: free monoids on a finite alphabet, the
additive monoid N^k and the ax+b monoid Z x N* with the product
(a, b)(c, d) = (a + bc, bd). A right ideal set is either empty or
described by a single datum (a prefix, a lower corner, a coset with a
divisibility constraint), and every operation stays in closed form.
"""

import itertools
import string

from sympy import ilcm

from ringstar.cosets import Coset, affine_image, coset_contains, \
    coset_intersect
from ringstar.errors import DescriptorError
from ringstar.ideals import ideal_gen
from ringstar.rings import make_ring
from ringstar.serialize import serializable_dict

FREE = "free"
ADDITIVE = "nat"
AXB = "axb"


@serializable_dict
class RightIdealSet:
    """A member of the constructible family of right ideals."""

    def __init__(self, monoid, datum=None):
        self.monoid = monoid
        self.datum = datum

    @property
    def is_empty(self):
        """Return True for the empty set."""

        return self.datum is None

    def contains(self, x):
        """Return True if x lies in the set."""

        return not self.is_empty and self.monoid.set_contains(self.datum, x)

    def contains_set(self, other):
        """Return True if other is a subset of self."""

        if other.is_empty:
            return True

        if self.is_empty:
            return False

        return self.monoid.set_includes(self.datum, other.datum)

    def generator(self):
        """Return p with self = pP, None if there is none."""

        if self.is_empty:
            return None

        return self.monoid.set_generator(self.datum)

    def translate(self, q):
        """Return q*self."""

        if self.is_empty:
            return self

        return RightIdealSet(self.monoid,
                             self.monoid.set_translate(q, self.datum))

    def __and__(self, other):
        if self.is_empty or other.is_empty:
            return RightIdealSet(self.monoid)

        return RightIdealSet(self.monoid,
                             self.monoid.set_meet(self.datum, other.datum))

    def __eq__(self, other):
        if isinstance(other, RightIdealSet):
            return self.monoid == other.monoid and self.datum == other.datum
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.datum)

    def to_str(self):
        """Return an ASCII representation of the object."""

        if self.is_empty:
            return "{}"

        return self.monoid.set_format(self.datum)

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "set": self.to_str(),
            "generator": self.monoid.format(self.generator())
            if self.generator() is not None else None
        }

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return self.__class__.__name__ + "('" + self.to_str() + "')"


class Monoid:
    """Base class for the monoid kinds."""

    kind = None

    def __init__(self, generators):
        self.generators = list(generators)

    @property
    def identity(self):
        """Return the neutral element."""

        raise NotImplementedError()

    def compose(self, x, y):
        """Return the product xy."""

        raise NotImplementedError()

    def format(self, x):
        """Return the text of an element."""

        return str(x)

    def whole(self):
        """Return P."""

        return self.principal(self.identity)

    def principal(self, p):
        """Return the principal right ideal pP."""

        return RightIdealSet(self, self.set_translate(p, self.whole_datum()))

    def words(self, depth):
        """Return the products of at most depth generators."""

        out = [self.identity]

        for length in range(1, depth + 1):
            for factors in itertools.product(self.generators, repeat=length):
                value = self.identity
                for factor in factors:
                    value = self.compose(value, factor)
                if value not in out:
                    out.append(value)

        return out

    def is_left_cancellative(self, samples):
        """Return a triple (p, x, y) with px = py, x != y, or None."""

        for p, x, y in itertools.product(samples, repeat=3):
            if x != y and self.compose(p, x) == self.compose(p, y):
                return (p, x, y)

        return None

    def is_associative(self, samples):
        """Return a triple breaking associativity, or None."""

        for x, y, z in itertools.product(samples, repeat=3):
            if self.compose(self.compose(x, y), z) != \
                    self.compose(x, self.compose(y, z)):
                return (x, y, z)

        return None

    def whole_datum(self):
        """Return the datum of P."""

        raise NotImplementedError()

    def set_contains(self, datum, x):
        """Return True if x lies in the set of datum."""

        raise NotImplementedError()

    def set_includes(self, datum, other):
        """Return True if the set of other lies in the set of datum."""

        raise NotImplementedError()

    def set_meet(self, datum, other):
        """Return the datum of the intersection, None when empty."""

        raise NotImplementedError()

    def set_translate(self, q, datum):
        """Return the datum of q times the set."""

        raise NotImplementedError()

    def set_generator(self, datum):
        """Return p with set = pP, None when not principal."""

        raise NotImplementedError()

    def set_format(self, datum):
        """Return the text of a set."""

        raise NotImplementedError()

    def __eq__(self, other):
        return isinstance(other, Monoid) and self.kind == other.kind and \
            self.key() == other.key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.kind, self.key()))

    def key(self):
        """Return the parameters identifying the monoid."""

        raise NotImplementedError()

    def __str__(self):
        return "%s:%s" % (self.kind, self.key())

    def __repr__(self):
        return self.__class__.__name__ + "('" + str(self) + "')"


class FreeMonoid(Monoid):
    """Words over the first size letters, sets are prefix sets wP."""

    kind = FREE

    def __init__(self, size):

        if size < 1 or size > len(string.ascii_lowercase):
            raise ValueError("Invalid alphabet size %s" % size)

        self.size = size
        super().__init__(list(string.ascii_lowercase[:size]))

    def key(self):
        return self.size

    @property
    def identity(self):
        return ""

    def compose(self, x, y):
        return x + y

    def format(self, x):
        return x or "1"

    def whole_datum(self):
        return ""

    def set_contains(self, datum, x):
        return x.startswith(datum)

    def set_includes(self, datum, other):
        return other.startswith(datum)

    def set_meet(self, datum, other):
        if other.startswith(datum):
            return other
        if datum.startswith(other):
            return datum
        return None

    def set_translate(self, q, datum):
        return q + datum

    def set_generator(self, datum):
        return datum

    def set_format(self, datum):
        return "%sP" % (datum or "")


class AdditiveMonoid(Monoid):
    """The monoid N^k, sets are upper sets x + N^k."""

    kind = ADDITIVE

    def __init__(self, rank):

        if rank < 1:
            raise ValueError("Invalid rank %s" % rank)

        self.rank = rank
        super().__init__([tuple(1 if i == j else 0 for i in range(rank))
                          for j in range(rank)])

    def key(self):
        return self.rank

    @property
    def identity(self):
        return tuple([0] * self.rank)

    def compose(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def whole_datum(self):
        return self.identity

    def set_contains(self, datum, x):
        return all(a >= b for a, b in zip(x, datum))

    def set_includes(self, datum, other):
        return self.set_contains(datum, other)

    def set_meet(self, datum, other):
        return tuple(max(a, b) for a, b in zip(datum, other))

    def set_translate(self, q, datum):
        return self.compose(q, datum)

    def set_generator(self, datum):
        return datum

    def set_format(self, datum):
        return "%s+N^%u" % (datum, self.rank)


class AxPlusB(Monoid):
    """The monoid Z x N* of pairs (a, b), b > 0.

    The set (a, b)P is (a + bZ) x bN*. Sets are stored as a pair (coset
    of Z, m) meaning coset x mN*.
    """

    kind = AXB

    def __init__(self, generators=((0, 2), (1, 2))):

        generators = [self.normalize(pair) for pair in generators]

        self.ring = make_ring("z")
        super().__init__(generators)

    def key(self):
        return tuple(self.generators)

    @staticmethod
    def normalize(pair):
        """Return (a, b) checked, b > 0."""

        a, b = (int(x) for x in pair)

        if b <= 0:
            raise DescriptorError("%s is not a positive integer" % b)

        return (a, b)

    @property
    def identity(self):
        return (0, 1)

    def compose(self, x, y):
        return (x[0] + x[1] * y[0], x[1] * y[1])

    def format(self, x):
        return "(%d,%d)" % x

    def whole_datum(self):
        return (Coset(self.ring.zero, ideal_gen(self.ring, [1])), 1)

    def set_contains(self, datum, x):
        coset, m = datum
        return x[1] > 0 and x[1] % m == 0 and coset.contains(x[0])

    def set_includes(self, datum, other):
        return coset_contains(datum[0], other[0]) and other[1] % datum[1] == 0

    def set_meet(self, datum, other):
        coset = coset_intersect(datum[0], other[0])

        if coset is None:
            return None

        return (coset, int(ilcm(datum[1], other[1])))

    def set_translate(self, q, datum):
        q = self.normalize(q)
        return (affine_image(q[0], q[1], datum[0]), q[1] * datum[1])

    def set_generator(self, datum):
        coset, m = datum
        if ideal_gen(self.ring, [m]) != coset.ideal:
            return None
        return (int(coset.rep.value), m)

    def set_format(self, datum):
        coset, m = datum
        return "(%s + %sZ) x %uN*" % (coset.rep, coset.ideal.generator, m)


def make_monoid(text):
    """Return the monoid of a description like free:2, nat:2 or axb."""

    try:
        return _make_monoid(text)
    except DescriptorError:
        raise
    except ValueError as ex:
        raise DescriptorError("Invalid monoid %s (%s)" % (text, ex))


def _make_monoid(text):

    kind, _, param = text.partition(":")

    if kind == FREE:
        return FreeMonoid(int(param or 2))

    if kind == ADDITIVE:
        return AdditiveMonoid(int(param or 1))

    if kind == AXB:
        if not param:
            return AxPlusB()
        pairs = [pair.strip("() ").split(",") for pair in param.split(";")]
        return AxPlusB([(int(a), int(b)) for a, b in pairs])

    raise DescriptorError("Invalid monoid %s" % text)
