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


"""Split diagonal projections into pairwise orthogonal atoms."""

import argparse

import ringstar.command as command

from ringstar.simplicity import orthogonalize


def pa_cmd(args, cmd):
    """ Orthogonalize option parser. """

    usage = "%s <projection> [<projection> ...]" % command.USAGE.format(cmd)
    desc = command.DESCS[cmd]

    parser = argparse.ArgumentParser(usage=usage, description=desc)

    parser.add_argument("projections", nargs="+",
                        help="Diagonal projections, e.g. 'E(ideal(2))'")

    (args, leftovers) = parser.parse_known_args(args)

    return args, leftovers


def do_cmd(cfg, args, leftovers):
    """ Orthogonalize execute method. """

    return orthogonalize([cfg.element(src) for src in args.projections])
