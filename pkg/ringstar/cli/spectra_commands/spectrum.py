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


"""List the points of a finite level of the diagonal spectrum."""

import argparse

import ringstar.command as command

from ringstar.cli.config import DOT, FORMATS
from ringstar.errors import NotApplicableError, ParseError
from ringstar.ideals import ideal_gen
from ringstar.parser import parse_cosets
from ringstar.rings import Integers, RationalPoly, LocalizedIntegers
from ringstar.spectra import finite_level, character_eval, localized_level, \
    crt_lift, refinement_graph, poly_primes, level_modulus, PolyLevelPoint, \
    poly_level_project, poly_level_graph


def pa_cmd(args, cmd):
    """ Spectrum option parser. """

    usage = "%s --level <level>" % command.USAGE.format(cmd)
    desc = command.DESCS[cmd]

    parser = argparse.ArgumentParser(usage=usage, description=desc)

    parser.add_argument("-l", "--level", dest="level", default=None,
                        help="An ideal of finite index, an integer m for "
                        "zinv:P, or n for qpoly")
    parser.add_argument("-e", "--emit", dest="emit", default=None,
                        choices=FORMATS, help="Output format of this "
                        "command; default=the global format")
    parser.add_argument("-a", "--at", dest="at", default=None,
                        help="Reduce this ring element to its point")
    parser.add_argument("-x", "--eval", dest="expression", default=None,
                        help="Evaluate this diagonal expression at --at")
    parser.add_argument("-p", "--exponents", dest="exponents", default=None,
                        help="Exponents of a qpoly point, e.g. '2,1'")
    parser.add_argument("-b", "--bound", dest="bound", type=int, default=1,
                        help="Largest exponent in qpoly graphs; default=1")
    parser.add_argument("-c", "--lift", dest="lift", default=None,
                        help="Congruences to lift, e.g. "
                        "'1 mod ideal(4); 2 mod ideal(9)'")

    (args, leftovers) = parser.parse_known_args(args)

    return args, leftovers


def _integer(text):

    try:
        return int(text)
    except ValueError:
        raise ParseError("Invalid integer %s" % text)


def _level_ideal(cfg, text):

    try:
        return cfg.ideal(text)
    except ParseError:
        return ideal_gen(cfg.ring, [cfg.ring.parse(text)])


def _poly_level(cfg, args, emit):

    try:
        n = int(args.level)
    except ValueError:
        # proper ideals of Q[T] all have infinite index
        raise NotApplicableError("Levels of %s are integers n, got %s" %
                                 (cfg.ring, args.level))

    if emit == DOT:
        return poly_level_graph(cfg.ring, n, args.bound)

    if args.at is None:
        return {
            "level": n,
            "primes": list(poly_primes(n)),
            "modulus": level_modulus(cfg.ring, [n] * n)
        }

    exponents = [n] * n if args.exponents is None else \
        [_integer(exp) for exp in args.exponents.split(",")]

    point = PolyLevelPoint(cfg.ring, n, exponents, args.at)

    return {
        "point": point,
        "projection": poly_level_project(point) if n > 1 else None
    }


def do_cmd(cfg, args, leftovers):
    """ Spectrum execute method. """

    emit = cfg.output = args.emit or cfg.output
    ring = cfg.ring

    if args.lift:
        cosets = parse_cosets(args.lift, ring)
        return crt_lift([(coset.rep, coset.ideal) for coset in cosets])

    if args.level is None:
        raise ParseError("Missing --level")

    if isinstance(ring, RationalPoly):
        return _poly_level(cfg, args, emit)

    if isinstance(ring, LocalizedIntegers):
        level = localized_level(ring, _integer(args.level))
    else:
        level = finite_level(ring, _level_ideal(cfg, args.level))

    if emit == DOT:
        if not isinstance(ring, Integers):
            raise NotApplicableError("Level graphs need Z or Q[T]")
        return refinement_graph(ring, level.modulus.generator.value)

    if args.at is None:
        return level.to_dict()

    if args.expression is None:
        return level.point(args.at)

    return character_eval(level, args.at, cfg.element(args.expression))
