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

"""The dense spanning *-algebra of a ring and a family of ideals."""

from ringstar.algebra.monomial import Monomial, monomial_make, \
    monomial_mul, monomial_adjoint, diagonal_key
from ringstar.algebra.element import AlgebraElement, TermGroup, elem_mul, \
    adjoint, elem_eq, evaluate, expectation, d_norm, is_projection
from ringstar.algebra.relations import relation_II_check, \
    relation_I_check, relation_conjugation_check, unitary_isometry_check, \
    diagonal_compress, tensor, product_eval_factorization


def unit(ring, a):
    """Return u^a."""

    return AlgebraElement.unit(ring, a)


def isometry(ring, b):
    """Return s_b."""

    return AlgebraElement.isometry(ring, b)


def isometry_adjoint(ring, b):
    """Return s_b*."""

    return AlgebraElement.isometry_adjoint(ring, b)


def projection(coset):
    """Return e_K."""

    return AlgebraElement.projection(coset)


def scalar(ring, value):
    """Return value * 1."""

    return AlgebraElement.scalar(ring, value)


__all__ = [
    "Monomial", "monomial_make", "monomial_mul", "monomial_adjoint",
    "diagonal_key", "AlgebraElement", "TermGroup", "elem_mul", "adjoint",
    "elem_eq", "evaluate", "expectation", "d_norm", "is_projection",
    "relation_II_check", "relation_I_check", "relation_conjugation_check",
    "unitary_isometry_check", "diagonal_compress", "tensor",
    "product_eval_factorization", "unit", "isometry", "isometry_adjoint",
    "projection", "scalar"
]
