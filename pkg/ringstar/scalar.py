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

"""Gaussian rational scalars."""

import re

from fractions import Fraction

import sympy

from ringstar.serialize import serializable_string

SCALAR_RE = re.compile(r"^\s*([+-]?\d+(?:/\d+)?)?"
                       r"\s*(?:([+-])\s*(\d+(?:/\d+)?)?\s*i)?\s*$")


@serializable_string
class Scalar:
    """Gaussian rational number re + im*i."""

    __slots__ = ("re", "im")

    def __init__(self, re_part=0, im_part=0):

        object.__setattr__(self, "re", Fraction(re_part))
        object.__setattr__(self, "im", Fraction(im_part))

    @classmethod
    def coerce(cls, value):
        """Return value as a Scalar."""

        if isinstance(value, Scalar):
            return value

        if isinstance(value, complex):
            raise TypeError("Floating point scalars are not supported")

        return cls(value)

    @classmethod
    def parse(cls, text):
        """Parse a literal like 3/2+1/2i, -i or 5."""

        text = text.replace(" ", "")

        if text in ("i", "+i"):
            return cls(0, 1)

        if text == "-i":
            return cls(0, -1)

        if text.endswith("i") and "+" not in text[1:] and "-" not in text[1:]:
            return cls(0, Fraction(text[:-1] or "1"))

        match = SCALAR_RE.match(text)

        if not match or not text:
            raise ValueError("Invalid scalar %s" % text)

        real, sign, imag = match.groups()
        out = cls(Fraction(real) if real else 0)

        if sign:
            value = Fraction(imag) if imag else Fraction(1)
            out = cls(out.re, value if sign == "+" else -value)

        return out

    def __setattr__(self, name, value):
        raise TypeError("This object is immutable")

    def conjugate(self):
        """Return the complex conjugate."""

        return Scalar(self.re, -self.im)

    def abs2(self):
        """Return the squared modulus."""

        return self.re * self.re + self.im * self.im

    def modulus(self):
        """Return the exact modulus as a sympy number."""

        value = self.abs2()
        return sympy.sqrt(sympy.Rational(value.numerator, value.denominator))

    def is_real(self):
        """Return True if the imaginary part is zero."""

        return self.im == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __add__(self, other):
        other = Scalar.coerce(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = Scalar.coerce(other)
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        other = Scalar.coerce(other)
        return Scalar(self.re * other.re - self.im * other.im,
                      self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __truediv__(self, other):
        other = Scalar.coerce(other)
        norm = other.abs2()
        if not norm:
            raise ZeroDivisionError("Division by zero scalar")
        num = self * other.conjugate()
        return Scalar(num.re / norm, num.im / norm)

    def to_str(self):
        """Return an ASCII representation of the object."""

        if not self.im:
            return str(self.re)

        imag = "i" if abs(self.im) == 1 else "%si" % abs(self.im)

        if not self.re:
            return imag if self.im > 0 else "-" + imag

        return "%s%s%s" % (self.re, "+" if self.im > 0 else "-", imag)

    def __str__(self):
        return self.to_str()

    def __hash__(self):
        return hash((self.re, self.im))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return self.__class__.__name__ + "('" + self.to_str() + "')"


ZERO = Scalar(0)
ONE = Scalar(1)
