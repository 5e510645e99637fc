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


"""Constructible right ideals of a left cancellative monoid."""

import argparse

import ringstar.command as command

from ringstar.cli.config import DOT, FORMATS
from ringstar.errors import ParseError
from ringstar.parser import parse_pairs
from ringstar.rings import make_ring
from ringstar.semigroups import make_monoid, constructible_family, \
    family_graph, quasi_lattice_check, to_ring_algebra

FAMILY = "family"
QUASILATTICE = "quasilattice"
IMAGE = "image"


def pa_cmd(args, cmd):
    """ Semigroup option parser. """

    usage = "%s --kind <kind> {family,quasilattice,image}" % \
        command.USAGE.format(cmd)
    desc = command.DESCS[cmd]

    parser = argparse.ArgumentParser(usage=usage, description=desc)

    parser.add_argument("action", choices=[FAMILY, QUASILATTICE, IMAGE],
                        help="What to compute")
    parser.add_argument("-k", "--kind", dest="kind", default="free:2",
                        help="free:N, nat:K or axb[:(a,b);(c,d)]; "
                        "default='free:2'")
    parser.add_argument("-d", "--depth", dest="depth", type=int, default=2,
                        help="Number of construction steps; default=2")
    parser.add_argument("-e", "--emit", dest="emit", default=None,
                        choices=FORMATS, help="Output format of this "
                        "command; default=the global format")
    parser.add_argument("-w", "--word", dest="word", default=None,
                        help="Pairs of the ax+b monoid to map into the ring "
                        "algebra of Z, e.g. '(1,2);(0,2)'")

    (args, leftovers) = parser.parse_known_args(args)

    return args, leftovers


def do_cmd(cfg, args, leftovers):
    """ Semigroup execute method. """

    emit = cfg.output = args.emit or cfg.output

    if args.depth < 0:
        raise ParseError("Invalid depth %d" % args.depth)

    if args.action == IMAGE:
        if not args.word:
            raise ParseError("Missing --word")
        integers = make_ring("z")
        word = [(int(a.value), int(b.value))
                for a, b in parse_pairs(args.word, integers)]
        return to_ring_algebra(cfg.ring, word).simplify()

    monoid = make_monoid(args.kind)

    if args.action == QUASILATTICE:
        return quasi_lattice_check(monoid, args.depth)

    family = constructible_family(monoid, args.depth)

    if emit == DOT:
        return family_graph(family)

    return family
