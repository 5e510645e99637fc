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


"""Evaluate an expression to its normal form."""

import argparse

import ringstar.command as command

from ringstar.algebra import evaluate


def pa_cmd(args, cmd):
    """ Eval option parser. """

    usage = "%s <expression>" % command.USAGE.format(cmd)
    desc = command.DESCS[cmd]

    parser = argparse.ArgumentParser(usage=usage, description=desc)

    parser.add_argument("expression", help="The expression, e.g. 'U(1) S(2)'")
    parser.add_argument("-a", "--at", dest="at", default=None,
                        help="Apply the operator to the basis vector at "
                        "this ring element")
    parser.add_argument("-t", "--tree", action="store_true", dest="tree",
                        default=False, help="Print the parsed expression "
                        "instead of its normal form")

    (args, leftovers) = parser.parse_known_args(args)

    return args, leftovers


def do_cmd(cfg, args, leftovers):
    """ Eval execute method. """

    tree = cfg.parse(args.expression)

    if args.tree:
        return tree

    element = tree.evaluate(cfg.ring).simplify()

    if args.at is None:
        return element

    point = cfg.ring.parse(args.at)
    image = sorted(evaluate(element, point), key=lambda x: x[1].sort_key())

    return {
        "at": point,
        "image": [{"coefficient": coeff, "index": index}
                  for coeff, index in image]
    }
