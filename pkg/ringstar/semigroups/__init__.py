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

"""Left cancellative monoids and their constructible right ideals."""

from ringstar.semigroups.monoid import RightIdealSet, Monoid, FreeMonoid, \
    AdditiveMonoid, AxPlusB, make_monoid
from ringstar.semigroups.family import principal_right_ideal, \
    ideal_translate, ideal_intersect_sg, constructible_family, \
    QuasiLatticeReport, quasi_lattice_check, family_graph
from ringstar.semigroups.algebra import to_ring_algebra

__all__ = [
    "RightIdealSet", "Monoid", "FreeMonoid", "AdditiveMonoid", "AxPlusB",
    "make_monoid", "principal_right_ideal", "ideal_translate",
    "ideal_intersect_sg", "constructible_family", "QuasiLatticeReport",
    "quasi_lattice_check", "family_graph", "to_ring_algebra"
]
