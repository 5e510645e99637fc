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


"""Decide if a coset is covered by a family of cosets."""

import argparse

import ringstar.command as command

from ringstar.cosets import cover_decide
from ringstar.parser import parse_cover_query


def pa_cmd(args, cmd):
    """ Cover option parser. """

    usage = "%s '<coset> by <coset>, <coset>, ...'" % \
        command.USAGE.format(cmd)
    desc = command.DESCS[cmd]

    parser = argparse.ArgumentParser(usage=usage, description=desc)

    parser.add_argument("query", nargs="+",
                        help="e.g. 'coset(0 mod ideal(2)) by "
                        "coset(0 mod ideal(4)), coset(2 mod ideal(4))'")

    (args, leftovers) = parser.parse_known_args(args)

    return args, leftovers


def do_cmd(cfg, args, leftovers):
    """ Cover execute method. """

    target, members = parse_cover_query(" ".join(args.query), cfg.ring)

    return cover_decide(target, members)
