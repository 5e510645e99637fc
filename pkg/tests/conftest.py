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


"""Shared fixtures."""

import pytest

from ringstar import runtime
from ringstar.rings import make_ring


@pytest.fixture
def integers():
    """Return Z."""

    return make_ring("z")


@pytest.fixture
def order():
    """Return Z[i sqrt 5]."""

    return make_ring("quad:-5")


@pytest.fixture
def qpoly():
    """Return Q[T]."""

    return make_ring("qpoly")


@pytest.fixture
def opoly():
    """Return Z[i sqrt 5][T]."""

    return make_ring("opoly:-5")


@pytest.fixture
def cyclic():
    """Return Z[t]/(t^2 - 1)."""

    return make_ring("cyc:2")


@pytest.fixture
def localized():
    """Return Z[1/5]."""

    return make_ring("zinv:5")


@pytest.fixture
def product():
    """Return Z x Z."""

    return make_ring("prod:(z,z)")


@pytest.fixture(autouse=True)
def default_bounds():
    """Run every test under the default bounds."""

    token = runtime.set_bounds(runtime.Bounds())
    yield
    runtime.BOUNDS.reset(token)
