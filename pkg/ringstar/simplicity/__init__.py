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

"""Pure infiniteness and simplicity machinery."""

from ringstar.simplicity.projections import ProjectionFamily, as_combo, \
    orthogonalize, index_condition, normalize_indices, subprojection_extract
from ringstar.simplicity.criterion import CriticalIndex, Witness, \
    CriterionReport, criterion_pipeline
from ringstar.simplicity.refute import Refutation, coverage_refute
from ringstar.simplicity.conditions import Verdict, family_condition, \
    theorem_conditions_check

__all__ = [
    "ProjectionFamily", "as_combo", "orthogonalize", "index_condition",
    "normalize_indices", "subprojection_extract", "CriticalIndex", "Witness",
    "CriterionReport", "criterion_pipeline", "Refutation", "coverage_refute",
    "Verdict", "family_condition", "theorem_conditions_check"
]
