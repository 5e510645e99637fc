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


"""Settings shared by all the commands of one invocation."""

from ringstar.errors import DescriptorError
from ringstar.parser import parse_expression, parse_ideal, parse_coset, \
    parse_family
from ringstar.rings import make_ring
from ringstar.runtime import DEFAULT_CONFIG, read_bounds
from ringstar.serialize import serializable_dict

TEXT = "text"
JSON = "json"
DOT = "dot"

FORMATS = (TEXT, JSON, DOT)


@serializable_dict
class RunConfig:
    """The ring, the family, the output format and the search bounds."""

    def __init__(self, ring="z", family=None, output=TEXT,
                 config_dir=DEFAULT_CONFIG):

        if output not in FORMATS:
            raise DescriptorError("Invalid format %s, expected one of %s" %
                                  (output, ", ".join(FORMATS)))

        self.ring = make_ring(ring)
        self.family = parse_family(family, self.ring) if family else []
        self.output = output
        self.bounds = read_bounds(config_dir or DEFAULT_CONFIG)

    def parse(self, src):
        """Return the syntax tree of an expression."""

        return parse_expression(src, self.ring)

    def element(self, src):
        """Return the AlgebraElement of an expression."""

        return self.parse(src).evaluate(self.ring)

    def ideal(self, src):
        """Return an ideal of the ring."""

        return parse_ideal(src, self.ring)

    def coset(self, src):
        """Return a coset of the ring."""

        return parse_coset(src, self.ring)

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "ring": self.ring,
            "family": self.family,
            "format": self.output,
            "bounds": self.bounds
        }
