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

"""Cosets, covering decisions and indicator combinations."""

from ringstar.cosets.coset import Coset, coset_intersect, coset_contains, \
    affine_image, coset_preimage, coset_complement, principal_expansion
from ringstar.cosets.cover import CoverResult, COVERED, cover_decide
from ringstar.cosets.indicator import IndicatorCombo, Atom, atoms, \
    zero_witness, indicator_zero_test

__all__ = [
    "Coset", "coset_intersect", "coset_contains", "affine_image",
    "coset_preimage", "coset_complement", "principal_expansion",
    "CoverResult", "COVERED", "cover_decide", "IndicatorCombo", "Atom",
    "atoms", "zero_witness", "indicator_zero_test"
]
