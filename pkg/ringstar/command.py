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

"""Command Line Interface."""

import io
import sys
import json
import logging
import pkgutil
import importlib
import contextlib

from argparse import ArgumentParser

import ringstar.cli as help_commands

from ringstar import runtime
from ringstar.cli.config import RunConfig, FORMATS, TEXT, JSON, DOT
from ringstar.errors import RingStarError, EXIT_OK, EXIT_REFUSED, \
    EXIT_USAGE
from ringstar.serialize import serialize, dumps, SCHEMA

USAGE = "%(prog)s {0}"

DESCS = {}
CMDS = {}

LOG = logging.getLogger(__name__)


def load_commands(commands):
    """Load commands from specified package."""

    for _, name, is_pkg in pkgutil.walk_packages(commands.__path__):

        if is_pkg and name.endswith("_commands"):

            package = importlib.import_module(commands.__name__ + "." + name)
            pkgs = pkgutil.walk_packages(package.__path__)

            for _, module_name, _ in pkgs:

                module = importlib.import_module(package.__name__ + "." +
                                                 module_name)

                cmd_name = module_name.replace("_", "-")
                pa_cmd = module.pa_cmd if hasattr(module, 'pa_cmd') else None
                do_cmd = module.do_cmd

                CMDS[cmd_name] = [pa_cmd, do_cmd]
                DESCS[cmd_name] = module.__doc__


def pa_none(args, cmd):
    """ Null parser method. """

    parser = ArgumentParser(usage=USAGE.format(cmd), description=DESCS[cmd])
    (args, leftovers) = parser.parse_known_args(args)
    return args, leftovers


def parse_global_args(arglist):
    """ Parse global arguments list. """

    usage = "ringstar [options] command [command options]"

    args = []

    while arglist and arglist[0] not in CMDS:
        args.append(arglist[0])
        arglist.pop(0)

    parser = ArgumentParser(usage=usage)

    parser.add_argument("-r", "--ring", dest="ring", default="z",
                        help="Ring descriptor (z, quad:D, qpoly, opoly:D, "
                        "cyc:P, zinv:P, prod:(A,B)); default='z'")
    parser.add_argument("-f", "--family", dest="family", default=None,
                        help="Family of ideals, e.g. 'ideal(2);ideal(3)'; "
                        "default=none")
    parser.add_argument("-o", "--format", dest="output", default=TEXT,
                        choices=FORMATS, help="Output format; default=text")
    parser.add_argument("-c", "--config", dest="config",
                        default=runtime.DEFAULT_CONFIG,
                        help="Config directory; default=%s" %
                        runtime.DEFAULT_CONFIG)

    (args, _) = parser.parse_known_args(args)

    return args, arglist, parser


def available_cmds():
    """ Return the list of available commands. """

    cmds = list(CMDS.keys())
    if 'help' in cmds:
        cmds.remove('help')
    cmds.sort()
    out = ["", "Available commands are: "]
    for cmd in cmds:
        out.append("   {0:25}     {1:10}".format(cmd, DESCS[cmd]))
    out.append("\nSee 'ringstar help <command>' for more info.")
    return "\n".join(out)


def print_available_cmds():
    """ Print list of available commands. """

    print(available_cmds())


def command_help(cmd):
    """ Return the help text of a command. """

    (parse_args, _) = CMDS[cmd]
    stream = io.StringIO()

    with contextlib.redirect_stdout(stream):
        try:
            (parse_args or pa_none)(['--help'], cmd)
        except SystemExit:
            pass

    return stream.getvalue().strip()


def render(result, output):
    """ Return the text of a command result in the given format. """

    if output == JSON:
        return dumps(result)

    if output == DOT and isinstance(result, str):
        return result

    if isinstance(result, bool):
        return "true" if result else "false"

    if isinstance(result, (list, tuple)):
        return "\n".join(render(item, TEXT) for item in result)

    if isinstance(result, dict) or type(result).__str__ is object.__str__:
        return json.dumps(serialize(result), indent=2, sort_keys=True)

    return str(result)


def render_error(ex, output):
    """ Return the text of an error in the given format. """

    if output == JSON:
        payload = {"schema": SCHEMA, "error": serialize(ex.to_dict())}
        return json.dumps(payload, indent=2, sort_keys=True)

    return "error: %s: %s" % (ex.code, ex)


def run_command(argv, commands=None):
    """ Run a command line and return (exit code, output text). """

    if not CMDS:
        load_commands(help_commands)

    if commands:
        load_commands(commands)

    try:
        (gargs, rargs, parser) = parse_global_args(list(argv))
    except SystemExit as ex:
        return EXIT_USAGE if ex.code else EXIT_OK, ""

    if not rargs:
        return EXIT_USAGE, "%s\n%s" % (parser.format_help().strip(),
                                       available_cmds())

    output = gargs.output

    try:

        cfg = RunConfig(gargs.ring, gargs.family, output, gargs.config)

        (parse_args, do_func) = CMDS[rargs[0]]

        if parse_args:
            (args, leftovers) = parse_args(rargs[1:], rargs[0])
        else:
            (args, leftovers) = pa_none(rargs[1:], rargs[0])

        if leftovers and rargs[0] != "help":
            LOG.warning("Unknown parameters: %s", ', '.join(leftovers))

        with runtime.using_bounds(cfg.bounds):
            result = do_func(cfg, args, leftovers)

    except SystemExit as ex:
        return EXIT_USAGE if ex.code else EXIT_OK, ""

    except RingStarError as ex:
        LOG.info("%s failed: %s", rargs[0], ex)
        return ex.exit_code, render_error(ex, output)

    except ValueError as ex:
        LOG.info("%s failed: %s", rargs[0], ex)
        return EXIT_REFUSED, render_error(RingStarError(str(ex)), output)

    return EXIT_OK, render(result, cfg.output)


def main(commands=None):
    """ Parse argument list and execute command. """

    load_commands(help_commands)

    if commands:
        load_commands(commands)

    (gargs, _, _) = parse_global_args(sys.argv[1:])

    if not runtime.setup_logging(gargs.config):
        print("Logging configuration not found in %s" % gargs.config)
        sys.exit(EXIT_USAGE)

    (code, text) = run_command(sys.argv[1:])

    if text:
        print(text)

    sys.exit(code)


if __name__ == '__main__':
    main()
