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

"""Recursive descent parser for expressions, ideals and cosets.

Expressions:

    expr    := term (('+' | '-') term)*
    term    := '-' term | factor (['*'] factor)*
    factor  := atom "'"*
    atom    := number | 'U(' lit ')' | 'S(' lit ')' | 'Sstar(' lit ')'
             | 'S*(' lit ')' | 'E(' coset ')' | '(' expr ')'
    number  := digits ['/' digits] ['i'] | 'i'

Ideals and cosets:

    ideal   := 'R' | 'ideal(' lit (',' lit)* ')' | '(' lit (',' lit)* ')'
             | 'colon(' ideal ',' lit ')' | 'meet(' ideal ',' ideal ')'
    coset   := lit 'mod' ideal | 'coset(' coset ')' | ideal

Ring literals (lit) are handed to the parser of the ring backend. They
extend up to the next separator at parenthesis depth zero.
"""

import logging
import re

from ringstar.cosets import Coset
from ringstar.errors import ParseError, NotRegularError
from ringstar.ideals import ideal_gen, unit_ideal, ideal_colon, \
    ideal_intersect
from ringstar.parser.ast import Literal, Generator, Projection, Product, \
    Sum, Negation, Adjoint, UNIT, ISOMETRY, ISOMETRY_ADJOINT
from ringstar.scalar import Scalar

LOG = logging.getLogger(__name__)

NAME_RE = re.compile(r"[A-Za-z_]+")
NUMBER_RE = re.compile(r"(?:\d+(?:/\d+)?)?i(?![A-Za-z0-9_])|\d+(?:/\d+)?")


class Parser:
    """Parser over the slice [start, end) of a source text.

    Positions in errors are offsets in the whole source.
    """

    def __init__(self, src, ring, start=0, end=None):
        self.src = src
        self.ring = ring
        self.pos = start
        self.end = len(src) if end is None else end

    def sub(self, start, end):
        """Return a parser over another slice of the same source."""

        return Parser(self.src, self.ring, start, end)

    def error(self, msg, pos=None):
        """Return a ParseError at pos (default: the current position)."""

        return ParseError(msg, self.pos if pos is None else pos)

    def skip(self):
        """Move past blanks."""

        while self.pos < self.end and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self):
        """Return the next non blank character, empty at the end."""

        self.skip()

        if self.pos >= self.end:
            return ""

        return self.src[self.pos]

    def done(self):
        """Raise unless the slice is exhausted."""

        if self.peek():
            raise self.error("Unexpected '%s'" % self.src[self.pos])

    def name(self):
        """Return the identifier at the current position, maybe empty."""

        self.skip()
        match = NAME_RE.match(self.src, self.pos, self.end)

        return match.group(0) if match else ""

    def closing(self, start):
        """Return the offset of the ')' matching the '(' at start."""

        depth = 0

        for idx in range(start, self.end):
            char = self.src[idx]
            if char == "(":
                depth += 1
            elif char == ")":
                depth -= 1
                if depth == 0:
                    return idx

        raise self.error("Unbalanced '('", start)

    def call(self):
        """Consume '(...)' and return the slice inside the parentheses."""

        if self.peek() != "(":
            raise self.error("Expected '('")

        start = self.pos
        close = self.closing(start)
        self.pos = close + 1

        return start + 1, close

    def split(self, start, end, sep):
        """Split [start, end) at the separators found at depth zero."""

        out = []
        depth = 0
        last = start

        for idx in range(start, end):
            char = self.src[idx]
            if char == "(":
                depth += 1
            elif char == ")":
                depth -= 1
            elif char == sep and depth == 0:
                out.append((last, idx))
                last = idx + 1

        out.append((last, end))

        return out

    def find_word(self, start, end, word):
        """Return the offset of word at depth zero, -1 if missing."""

        depth = 0

        for idx in range(start, end):
            char = self.src[idx]
            if char == "(":
                depth += 1
            elif char == ")":
                depth -= 1
            elif depth == 0 and self.src.startswith(word, idx) and \
                    idx + len(word) <= end:
                before = self.src[idx - 1] if idx > start else " "
                after = self.src[idx + len(word)] \
                    if idx + len(word) < end else " "
                if not before.isalnum() and not after.isalnum():
                    return idx

        return -1

    def literal(self, start, end):
        """Parse the ring literal in [start, end)."""

        text = self.src[start:end]

        if not text.strip():
            raise self.error("Missing ring element", start)

        try:
            return self.ring.parse(text.strip())
        except ValueError as ex:
            raise self.error("Invalid element '%s' of %s (%s)" %
                             (text.strip(), self.ring, ex), start)

    # expressions

    def expression(self):
        """Parse the whole slice as an expression."""

        node = self.sum()
        self.done()

        return node

    def sum(self):
        """Parse a sum of terms."""

        start = self.pos
        first = self.term()
        rest = []

        while self.peek() in ("+", "-"):
            sign = self.src[self.pos]
            self.pos += 1
            rest.append((sign, self.term()))

        if not rest:
            return first

        return Sum(first, rest, start)

    def term(self):
        """Parse a possibly negated product."""

        if self.peek() == "-":
            start = self.pos
            self.pos += 1
            return Negation(self.term(), start)

        return self.product()

    def starts_factor(self):
        """Return True if a factor begins at the current position."""

        char = self.peek()

        if not char:
            return False

        if char.isdigit() or char == "(":
            return True

        return self.name() in ("U", "S", "Sstar", "E", "i")

    def product(self):
        """Parse juxtaposed or '*' separated factors."""

        start = self.pos
        factors = [self.factor()]

        while True:
            if self.peek() == "*":
                self.pos += 1
                factors.append(self.factor())
            elif self.starts_factor():
                factors.append(self.factor())
            else:
                break

        if len(factors) == 1:
            return factors[0]

        return Product(factors, start)

    def factor(self):
        """Parse an atom followed by adjoint markers."""

        node = self.atom()

        while self.peek() == "'":
            node = Adjoint(node, self.pos)
            self.pos += 1

        return node

    def atom(self):
        """Parse a number, a generator or a parenthesized expression."""

        char = self.peek()
        start = self.pos

        if not char:
            raise self.error("Unexpected end of expression")

        if char == "(":
            first, last = self.call()
            return self.sub(first, last).expression()

        match = NUMBER_RE.match(self.src, self.pos, self.end)

        if match:
            self.pos = match.end()
            return Literal(Scalar.parse(match.group(0)), start)

        name = self.name()

        if not name:
            raise self.error("Unexpected '%s'" % char)

        self.pos += len(name)

        if name == "S" and self.pos < self.end and \
                self.src[self.pos] == "*":
            self.pos += 1
            name = ISOMETRY_ADJOINT

        if name in (UNIT, ISOMETRY, ISOMETRY_ADJOINT):
            first, last = self.call()
            arg = self.literal(first, last)
            if name != UNIT and not self.ring.is_regular(arg):
                raise NotRegularError("%s is a zero-divisor in %s, S(%s) "
                                      "is not an isometry (position %u)" %
                                      (arg, self.ring, arg, first))
            return Generator(name, arg, start)

        if name == "E":
            first, last = self.call()
            coset = self.sub(first, last).coset()
            return Projection(coset, self.src[first:last], start)

        raise self.error("Unknown name '%s'" % name, start)

    # ideals and cosets

    def ideal(self):
        """Parse the whole slice as an ideal."""

        out = self.ideal_term()
        self.done()

        return out

    def ideal_term(self):
        """Parse one ideal."""

        start = self.pos

        if self.peek() == "(":
            first, last = self.call()
            if len(self.split(first, last, "|")) > 1:
                return ideal_gen(self.ring,
                                 [self.literal(first - 1, last + 1)])
            return self.generated(first, last)

        name = self.name()

        if not name:
            raise self.error("Expected an ideal")

        self.pos += len(name)

        if name == "R":
            return unit_ideal(self.ring)

        if name not in ("ideal", "colon", "meet"):
            raise self.error("Unknown ideal constructor '%s'" % name, start)

        first, last = self.call()

        if name == "ideal":
            return self.generated(first, last)

        args = self.split(first, last, ",")

        if len(args) != 2:
            raise self.error("%s takes two arguments" % name, first)

        ideal = self.sub(*args[0]).ideal()

        if name == "colon":
            return ideal_colon(ideal, self.literal(*args[1]))

        return ideal_intersect(ideal, self.sub(*args[1]).ideal())

    def generated(self, first, last):
        """Return the ideal generated by the literals in [first, last)."""

        gens = [self.literal(*arg) for arg in self.split(first, last, ",")]

        return ideal_gen(self.ring, gens)

    def coset(self):
        """Parse the whole slice as a coset."""

        idx = self.find_word(self.pos, self.end, "mod")

        if idx >= 0:
            rep = self.literal(self.pos, idx)
            ideal = self.sub(idx + len("mod"), self.end).ideal()
            self.pos = self.end
            return Coset(rep, ideal)

        if self.name() == "coset":
            self.pos += len("coset")
            first, last = self.call()
            out = self.sub(first, last).coset()
            self.done()
            return out

        return Coset(self.ring.zero, self.ideal())

    def pair(self):
        """Parse '(a, b)' into two ring elements."""

        first, last = self.call()
        self.done()

        args = self.split(first, last, ",")

        if len(args) != 2:
            raise self.error("Expected a pair (a, b)", first)

        return tuple(self.literal(*arg) for arg in args)

    def items(self, seps):
        """Return parsers over the parts separated by any of seps."""

        parts = [(self.pos, self.end)]

        for sep in seps:
            parts = [part for start, end in parts
                     for part in self.split(start, end, sep)]

        return [self.sub(start, end) for start, end in parts
                if self.src[start:end].strip()]


def parse_expression(src, ring):
    """Parse an expression over ring into a syntax tree."""

    LOG.debug("Parsing expression '%s' over %s", src, ring)

    return Parser(src, ring).expression()


def parse_element(src, ring):
    """Parse an expression and return its AlgebraElement."""

    return parse_expression(src, ring).evaluate(ring)


def parse_ideal(src, ring):
    """Parse an ideal."""

    return Parser(src, ring).ideal()


def parse_coset(src, ring):
    """Parse a coset."""

    return Parser(src, ring).coset()


def parse_family(src, ring):
    """Parse a ';' separated list of ideals."""

    return [part.ideal() for part in Parser(src, ring).items(";")]


def parse_cosets(src, ring):
    """Parse a list of cosets separated by ';' or ','."""

    return [part.coset() for part in Parser(src, ring).items(";,")]


def parse_pairs(src, ring):
    """Parse a ';' separated list of pairs (a, b)."""

    return [part.pair() for part in Parser(src, ring).items(";")]


def parse_cover_query(src, ring):
    """Parse 'C by K1, K2, ...' into a coset and a list of cosets."""

    parser = Parser(src, ring)
    idx = parser.find_word(0, len(src), "by")

    if idx < 0:
        return parser.coset(), []

    target = parser.sub(0, idx).coset()
    members = [part.coset()
               for part in parser.sub(idx + len("by"), len(src)).items(";,")]

    return target, members
