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

"""Integer lattice helpers.

A lattice in Z^n is stored as a tuple of column vectors in Hermite normal
form as computed by sympy: the last nonzero entry of every column is its
pivot, pivots are positive, pivot rows increase from left to right and the
entries to the right of a pivot are reduced modulo it. The form is unique,
so two lattices are equal iff their bases are identical.
"""

import itertools
import math

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form, \
    invariant_factors


def to_matrix(columns, dim):
    """Return the dim x len(columns) DomainMatrix with the given columns."""

    rows = [[ZZ(col[i]) for col in columns] for i in range(dim)]
    return DomainMatrix(rows, (dim, len(columns)), ZZ)


def from_matrix(matrix):
    """Return the columns of a DomainMatrix as tuples of ints."""

    rows, cols = matrix.shape
    entries = matrix.to_Matrix().tolist()

    return tuple(tuple(int(entries[i][j]) for i in range(rows))
                 for j in range(cols))


def pivot(column):
    """Return the index of the last nonzero entry."""

    for i in range(len(column) - 1, -1, -1):
        if column[i]:
            return i

    raise ValueError("Zero column has no pivot")


def hnf(vectors, dim):
    """Return the normal form basis of the lattice spanned by vectors."""

    vectors = [tuple(v) for v in vectors if any(v)]

    if not vectors:
        return ()

    if dim == 1:
        return ((math.gcd(*[v[0] for v in vectors]),),)

    return from_matrix(hermite_normal_form(to_matrix(vectors, dim)))


def reduce(basis, vector):
    """Return the canonical residue of vector modulo the lattice."""

    out = list(vector)

    for col in reversed(basis):
        row = pivot(col)
        quot = out[row] // col[row]
        if quot:
            out = [x - quot * y for x, y in zip(out, col)]

    return tuple(out)


def contains(basis, vector):
    """Return True if vector lies in the lattice."""

    return not any(reduce(basis, vector))


def coordinates(basis, vector):
    """Return the integer coordinates of vector in basis or None."""

    out = list(vector)
    coeffs = [0] * len(basis)

    for idx in range(len(basis) - 1, -1, -1):
        col = basis[idx]
        row = pivot(col)
        quot, rem = divmod(out[row], col[row])
        if rem:
            return None
        coeffs[idx] = quot
        if quot:
            out = [x - quot * y for x, y in zip(out, col)]

    if any(out):
        return None

    return tuple(coeffs)


def combine(basis, coeffs, dim):
    """Return the integer combination of the basis columns."""

    out = [0] * dim

    for coeff, col in zip(coeffs, basis):
        if coeff:
            out = [x + coeff * y for x, y in zip(out, col)]

    return tuple(out)


def kernel(columns, dim):
    """Return a basis of the integer kernel of the matrix with columns."""

    size = len(columns)

    if not size:
        return []

    stacked = [tuple(1 if i == j else 0 for i in range(size)) + tuple(col)
               for j, col in enumerate(columns)]

    return [col[:size] for col in hnf(stacked, size + dim)
            if pivot(col) < size]


def intersect(basis1, basis2, dim):
    """Return the normal form basis of the intersection of two lattices."""

    if not basis1 or not basis2:
        return ()

    if dim == 1:
        return ((basis1[0][0] * basis2[0][0] //
                 math.gcd(basis1[0][0], basis2[0][0]),),)

    columns = list(basis1) + [tuple(-x for x in col) for col in basis2]
    vectors = [combine(basis1, vec[:len(basis1)], dim)
               for vec in kernel(columns, dim)]

    return hnf(vectors, dim)


def solve(columns, target, dim):
    """Return integer coefficients c with sum(c_j col_j) = target or None."""

    if not any(target):
        return tuple(0 for _ in columns)

    if not columns:
        return None

    size = len(columns)
    augmented = list(columns) + [tuple(-x for x in target)]
    kern = kernel(augmented, dim)

    if not kern:
        return None

    for col in hnf(kern, size + 1):
        if pivot(col) == size:
            if col[size] != 1:
                return None
            return col[:size]

    return None


def determinant(basis, dim):
    """Return the index of a full rank lattice, None otherwise."""

    if len(basis) < dim:
        return None

    return math.prod(col[pivot(col)] for col in basis)


def relative_basis(basis, sublattice):
    """Return the coordinates of the sublattice basis inside basis."""

    out = []

    for col in sublattice:
        coords = coordinates(basis, col)
        if coords is None:
            raise ValueError("Vector %s outside lattice" % (col,))
        out.append(coords)

    return out


def relative_index(basis, sublattice):
    """Return |L/M| for M inside L, None if infinite."""

    if len(sublattice) < len(basis):
        return None

    if not basis:
        return 1

    coords = relative_basis(basis, sublattice)
    factors = invariant_factors(to_matrix(coords, len(basis)))

    return abs(math.prod(int(x) for x in factors))


def box_transversal(basis, sublattice, dim):
    """Return representatives of L modulo a full rank sublattice M."""

    if not basis:
        return [tuple(0 for _ in range(dim))]

    coords = hnf(relative_basis(basis, sublattice), len(basis))
    sides = [col[pivot(col)] for col in coords]

    return [combine(basis, point, dim)
            for point in itertools.product(*[range(side) for side in sides])]
