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


"""Find a point of an ideal missed by a family of principal cosets."""

import argparse

import ringstar.command as command

from ringstar.parser import parse_pairs
from ringstar.simplicity import coverage_refute


def pa_cmd(args, cmd):
    """ Refute option parser. """

    usage = "%s --ideal <ideal> --by '(a,b);...'" % command.USAGE.format(cmd)
    desc = command.DESCS[cmd]

    parser = argparse.ArgumentParser(usage=usage, description=desc)

    parser.add_argument("-i", "--ideal", dest="ideal", required=True,
                        help="The ideal, e.g. 'colon(ideal(1+w),2)'")
    parser.add_argument("-b", "--by", dest="by", required=True,
                        help="Candidate cosets a + (b), e.g. '(0,2);(0,T)'")

    (args, leftovers) = parser.parse_known_args(args)

    return args, leftovers


def do_cmd(cfg, args, leftovers):
    """ Refute execute method. """

    return coverage_refute(cfg.ideal(args.ideal),
                           parse_pairs(args.by, cfg.ring))
