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

"""Runtime configuration and logging setup."""

import configparser
import contextlib
import contextvars
import logging
import logging.config
import os

from ringstar.serialize import serializable_dict

DEFAULT_CONFIG = os.path.join(os.path.dirname(__file__), "conf")


@serializable_dict
class Bounds:
    """Sampling and search bounds."""

    def __init__(self, max_search=200000, max_atoms=12, max_height=64,
                 primes=8):

        self.max_search = int(max_search)
        self.max_atoms = int(max_atoms)
        self.max_height = int(max_height)
        self.primes = int(primes)

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "max_search": self.max_search,
            "max_atoms": self.max_atoms,
            "max_height": self.max_height,
            "primes": self.primes
        }

    def __repr__(self):
        return "%s(%s)" % (self.__class__.__name__, self.to_dict())


BOUNDS = contextvars.ContextVar("bounds", default=Bounds())


def bounds():
    """Return the bounds active in the current context."""

    return BOUNDS.get()


def set_bounds(new_bounds):
    """Replace the bounds of the current context, return the reset token."""

    return BOUNDS.set(new_bounds)


@contextlib.contextmanager
def using_bounds(new_bounds):
    """Run a block under new_bounds, restoring the previous ones after."""

    token = BOUNDS.set(new_bounds)

    try:
        yield new_bounds
    finally:
        BOUNDS.reset(token)


def _read_config(config_dir):
    """Read the runtime config file."""

    runtime_config = os.path.join(config_dir, "runtime.cfg")
    config = configparser.ConfigParser()
    config.read(runtime_config)

    return config


def read_bounds(config_dir=DEFAULT_CONFIG):
    """Read the sampling bounds from the config directory."""

    config = _read_config(config_dir)

    defaults = Bounds()

    return Bounds(
        max_search=config.get('sampling', 'max_search',
                              fallback=defaults.max_search),
        max_atoms=config.get('sampling', 'max_atoms',
                             fallback=defaults.max_atoms),
        max_height=config.get('sampling', 'max_height',
                              fallback=defaults.max_height),
        primes=config.get('spectra', 'primes', fallback=defaults.primes))


def setup_logging(config_dir=DEFAULT_CONFIG):
    """Setup logging. Return False if the logging config is missing."""

    config = _read_config(config_dir)

    log_config = config.get('general', 'logging', fallback="logging.cfg")

    if not os.path.isabs(log_config):
        log_config = os.path.join(config_dir, log_config)

    if not os.path.exists(log_config):
        return False

    logging.config.fileConfig(log_config, disable_existing_loggers=False)

    return True
