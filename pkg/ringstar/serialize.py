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

"""JSON Serializer."""

import json

from fractions import Fraction
from functools import singledispatch

import sympy

SCHEMA = 1


@singledispatch
def serialize(obj):
    """Recursively serialise objects."""

    return obj


@serialize.register(dict)
def _(obj):
    return {str(k): serialize(v) for k, v in obj.items()}


@serialize.register(list)
@serialize.register(set)
@serialize.register(tuple)
@serialize.register(frozenset)
def _(obj):
    return [serialize(v) for v in obj]


@serialize.register(Fraction)
def _(obj):
    if obj.denominator == 1:
        return obj.numerator
    return str(obj)


@serialize.register(sympy.Basic)
def _(obj):
    if obj.is_Integer:
        return int(obj)
    return str(obj)


def serializable_string(cls):
    """Decorator for classes that can be serialized as strings."""

    def decorator(cls):

        @serialize.register(cls)
        def _(obj):
            return str(obj)

        return cls

    return decorator(cls)


def serializable_dict(cls):
    """Decorator for classes that can be serialized as dicts."""

    def decorator(cls):

        @serialize.register(cls)
        def _(obj):
            return serialize(obj.to_dict())

        return cls

    return decorator(cls)


def dumps(obj):
    """Return the versioned JSON document for obj."""

    payload = serialize(obj)

    if not isinstance(payload, dict):
        payload = {"result": payload}

    payload["schema"] = SCHEMA

    return json.dumps(payload, indent=2, sort_keys=True)
