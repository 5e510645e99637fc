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


"""Expression, ideal and coset syntax."""

from ringstar.parser.ast import Node, Literal, Generator, Projection, \
    Product, Sum, Negation, Adjoint
from ringstar.parser.grammar import Parser, parse_expression, \
    parse_element, parse_ideal, parse_coset, parse_family, parse_cosets, \
    parse_pairs, parse_cover_query

__all__ = [
    "Node", "Literal", "Generator", "Projection", "Product", "Sum",
    "Negation", "Adjoint", "Parser", "parse_expression", "parse_element",
    "parse_ideal", "parse_coset", "parse_family", "parse_cosets",
    "parse_pairs", "parse_cover_query"
]
