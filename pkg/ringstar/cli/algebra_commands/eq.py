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


"""Decide if two expressions are the same operator."""

import argparse

import ringstar.command as command

from ringstar.algebra import elem_eq


def pa_cmd(args, cmd):
    """ Eq option parser. """

    usage = "%s <expression> <expression>" % command.USAGE.format(cmd)
    desc = command.DESCS[cmd]

    parser = argparse.ArgumentParser(usage=usage, description=desc)

    parser.add_argument("first", help="The first expression")
    parser.add_argument("second", help="The second expression")

    (args, leftovers) = parser.parse_known_args(args)

    return args, leftovers


def do_cmd(cfg, args, leftovers):
    """ Eq execute method. """

    return elem_eq(cfg.element(args.first), cfg.element(args.second))
