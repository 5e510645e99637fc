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

"""Ring descriptor."""

from sympy import factorint, isprime

from ringstar.errors import DescriptorError
from ringstar.serialize import serializable_string

INTEGERS = "z"
QUADRATIC = "quad"
RATIONAL_POLY = "qpoly"
ORDER_POLY = "opoly"
CYCLIC = "cyc"
LOCALIZED = "zinv"
PRODUCT = "prod"

KINDS = (INTEGERS, QUADRATIC, RATIONAL_POLY, ORDER_POLY, CYCLIC, LOCALIZED,
         PRODUCT)

MAX_CYCLIC_PRIME = 7


def _split_top_level(text):
    """Split text at the commas not nested in parentheses."""

    parts = []
    depth = 0
    current = ""

    for char in text:
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
        if char == "," and depth == 0:
            parts.append(current)
            current = ""
        else:
            current += char

    parts.append(current)

    return [part.strip() for part in parts]


def is_squarefree(value):
    """Return True if value has no repeated prime factor."""

    return all(exp == 1 for exp in factorint(abs(value)).values())


@serializable_string
class RingDescriptor:
    """Description of one of the supported commutative rings."""

    def __init__(self, kind, param=None, left=None, right=None):

        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "param", param)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

        self.validate()

    def __setattr__(self, name, value):
        raise TypeError("This object is immutable")

    @classmethod
    def parse(cls, text):
        """Parse a descriptor like z, quad:-5 or prod:(z,qpoly)."""

        text = text.strip().lower()

        if text in (INTEGERS, RATIONAL_POLY):
            return cls(text)

        kind, _, arg = text.partition(":")

        if kind not in KINDS or not arg:
            raise DescriptorError("Invalid ring descriptor %s" % text)

        if kind == PRODUCT:
            if not (arg.startswith("(") and arg.endswith(")")):
                raise DescriptorError("Invalid product descriptor %s" % text)
            parts = _split_top_level(arg[1:-1])
            if len(parts) != 2:
                raise DescriptorError("Invalid product descriptor %s" % text)
            return cls(PRODUCT, left=cls.parse(parts[0]),
                       right=cls.parse(parts[1]))

        try:
            param = int(arg)
        except ValueError:
            raise DescriptorError("Invalid ring parameter %s" % arg)

        return cls(kind, param)

    def validate(self):
        """Raise DescriptorError if the descriptor is not valid."""

        if self.kind not in KINDS:
            raise DescriptorError("Invalid ring kind %s" % self.kind)

        if self.kind in (QUADRATIC, ORDER_POLY):
            if self.param in (0, 1) or not is_squarefree(self.param):
                raise DescriptorError("Invalid quadratic parameter %s" %
                                      self.param)

        if self.kind in (CYCLIC, LOCALIZED):
            if not isprime(self.param):
                raise DescriptorError("Invalid prime %s" % self.param)

        if self.kind == CYCLIC and self.param > MAX_CYCLIC_PRIME:
            raise DescriptorError("Group ring prime %s exceeds %u" %
                                  (self.param, MAX_CYCLIC_PRIME))

        if self.kind == PRODUCT:
            if not isinstance(self.left, RingDescriptor) or \
                    not isinstance(self.right, RingDescriptor):
                raise DescriptorError("Invalid product arms")

    def to_str(self):
        """Return an ASCII representation of the object."""

        if self.kind == PRODUCT:
            return "prod:(%s,%s)" % (self.left.to_str(), self.right.to_str())

        if self.param is None:
            return self.kind

        return "%s:%s" % (self.kind, self.param)

    def __str__(self):
        return self.to_str()

    def __hash__(self):
        return hash(self.to_str())

    def __eq__(self, other):
        if isinstance(other, RingDescriptor):
            return self.to_str() == other.to_str()
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return self.__class__.__name__ + "('" + self.to_str() + "')"
