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

"""Exceptions raised by the library."""

# exit codes used by the command line interface
EXIT_OK = 0
EXIT_REFUSED = 1
EXIT_USAGE = 2


class RingStarError(ValueError):
    """Base class for all the library errors."""

    code = "error"
    exit_code = EXIT_REFUSED

    def to_dict(self):
        """Return a dict representation of the error."""

        return {
            "code": self.code,
            "message": str(self)
        }


class DescriptorError(RingStarError):
    """Invalid ring descriptor."""

    code = "invalid-descriptor"
    exit_code = EXIT_USAGE


class BackendMismatchError(RingStarError):
    """Operands living in different rings."""

    code = "backend-mismatch"


class NotRegularError(RingStarError):
    """A zero-divisor was used where a regular element is required."""

    code = "not-regular"


class IdealClassError(RingStarError):
    """Ideal outside the class supported by the backend."""

    code = "ideal-class"

    def __init__(self, msg, generators=()):
        super().__init__(msg)
        self.generators = tuple(generators)

    def to_dict(self):
        """Return a dict representation of the error."""

        out = super().to_dict()
        out["generators"] = [str(x) for x in self.generators]
        return out


class InfiniteIndexError(RingStarError):
    """A finite index was required."""

    code = "infinite-index"


class NotApplicableError(RingStarError):
    """Operation not defined for this input."""

    code = "not-applicable"


class HypothesisError(RingStarError):
    """A hypothesis of the simplicity machinery does not hold."""

    code = "hypothesis"


class SearchExhaustedError(RingStarError):
    """An enumeration reached the configured bound."""

    code = "search-exhausted"


class ParseError(RingStarError):
    """Syntax error in an expression."""

    code = "syntax"
    exit_code = EXIT_USAGE

    def __init__(self, msg, position=None):
        if position is not None:
            msg = "%s at position %u" % (msg, position)
        super().__init__(msg)
        self.position = position

    def to_dict(self):
        """Return a dict representation of the error."""

        out = super().to_dict()
        out["position"] = self.position
        return out
