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


"""Classify |R/I|, or |J/(J & J')| when two ideals are given."""

import argparse

import ringstar.command as command


def pa_cmd(args, cmd):
    """ Index option parser. """

    usage = "%s <ideal> [<ideal>]" % command.USAGE.format(cmd)
    desc = command.DESCS[cmd]

    parser = argparse.ArgumentParser(usage=usage, description=desc)

    parser.add_argument("ideal", help="The ideal, e.g. 'ideal(3, 1+w)'")
    parser.add_argument("other", nargs="?", default=None,
                        help="Second ideal for the relative index")
    parser.add_argument("-t", "--transversal", action="store_true",
                        dest="transversal", default=False,
                        help="Also list a transversal")

    (args, leftovers) = parser.parse_known_args(args)

    return args, leftovers


def do_cmd(cfg, args, leftovers):
    """ Index execute method. """

    ideal = cfg.ideal(args.ideal)

    if args.other is None:
        first, second = cfg.ideal("R"), ideal
        index = ideal.absolute_index()
    else:
        first, second = ideal, cfg.ideal(args.other)
        index = first.relative_index(second)

    if not args.transversal:
        return index

    return {
        "index": index,
        "transversal": first.transversal(second)
    }
