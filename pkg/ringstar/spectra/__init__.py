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

"""Finite levels of the spectrum of the diagonal subalgebra."""

from ringstar.spectra.level import FiniteLevel, finite_level, \
    character_eval, localized_level, crt_lift, refinement_graph
from ringstar.spectra.poly import PolyLevelPoint, poly_primes, \
    level_modulus, poly_level_project, poly_level_le, poly_level_graph

__all__ = [
    "FiniteLevel", "finite_level", "character_eval",
    "localized_level", "crt_lift", "refinement_graph", "PolyLevelPoint",
    "poly_primes", "level_modulus", "poly_level_project", "poly_level_le",
    "poly_level_graph"
]
