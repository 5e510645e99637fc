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

"""Diagonal projections: orthogonalization and principal subprojections.

Diagonal projections are handled through their indicator combinations.
A family of commuting projections p_1..p_n is split into the atoms
prod_{k in S} p_k prod_{k not in S} (1 - p_k), S a nonempty subset, which
are integer combinations of coset indicators.
"""

import itertools
import logging

from ringstar.algebra import AlgebraElement, is_projection
from ringstar.cosets import Coset, IndicatorCombo, coset_intersect, \
    cover_decide, indicator_zero_test
from ringstar.errors import HypothesisError, NotApplicableError, \
    SearchExhaustedError
from ringstar.runtime import bounds
from ringstar.serialize import serializable_dict

LOG = logging.getLogger(__name__)


@serializable_dict
class ProjectionFamily:
    """Pairwise orthogonal atoms and the decomposition of the inputs."""

    def __init__(self, ring, inputs, atoms, decomposition):
        self.ring = ring
        self.inputs = list(inputs)
        self.atoms = list(atoms)
        self.decomposition = [list(indices) for indices in decomposition]

    def combos(self):
        """Return the indicator combinations of the atoms."""

        return [atom.diagonal_combo() for atom in self.atoms]

    def rebuild(self, idx):
        """Return the sum of the atoms making up input idx."""

        out = AlgebraElement.zero(self.ring)

        for atom_idx in self.decomposition[idx]:
            out = out + self.atoms[atom_idx]

        return out

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "atoms": self.atoms,
            "decomposition": self.decomposition
        }

    def __len__(self):
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    def __repr__(self):
        return "%s(%u atoms)" % (self.__class__.__name__, len(self.atoms))


def as_combo(p):
    """Return the indicator combination of a diagonal element or combo."""

    if isinstance(p, IndicatorCombo):
        return p

    simple = p.simplify()

    if not simple.is_diagonal:
        raise NotApplicableError("%s is not diagonal" % p)

    return simple.diagonal_combo()


def orthogonalize(ps):
    """Return the atoms generated by commuting diagonal projections."""

    if not ps:
        raise NotApplicableError("No projection to orthogonalize")

    ring = ps[0].ring

    if len(ps) > bounds().max_atoms:
        raise SearchExhaustedError("%u projections exceed the atom limit %u"
                                   % (len(ps), bounds().max_atoms))

    combos = []

    for p in ps:
        if p.ring != ring:
            raise ValueError("%s and %s live over different rings" %
                             (p.ring, ring))
        element = p if isinstance(p, AlgebraElement) else \
            AlgebraElement.diagonal(p)
        if not is_projection(element):
            raise NotApplicableError("%s is not a projection" % element)
        combos.append(as_combo(element))

    whole = IndicatorCombo.indicator(Coset.whole(ring))

    atoms = []
    decomposition = [[] for _ in combos]

    for size in range(len(combos), 0, -1):
        for subset in itertools.combinations(range(len(combos)), size):
            atom = whole
            for idx, combo in enumerate(combos):
                atom = atom * (combo if idx in subset else whole - combo)
            if indicator_zero_test(atom):
                continue
            for idx in subset:
                decomposition[idx].append(len(atoms))
            atoms.append(AlgebraElement.diagonal(atom))

    LOG.debug("%u projections split into %u atoms", len(ps), len(atoms))

    return ProjectionFamily(ring, ps, atoms, decomposition)


def index_condition(ideals):
    """Return True if all pairwise relative indices are One or Infinite."""

    for first, second in itertools.permutations(ideals, 2):
        index = first.relative_index(second)
        if index.is_finite and not index.is_one:
            return False

    return True


def _refine(ideal, other):
    """Return ideal & other if the relative index is finite and not one."""

    index = ideal.relative_index(other)

    if index.is_finite and not index.is_one:
        return ideal.intersect(other)

    return ideal


def normalize_indices(p):
    """Return an equal combination whose ideals satisfy index_condition.

    Every ideal J is replaced by a finite index subideal J' and each
    term a + J by the cosets a + r + J', r over J modulo J'.
    """

    combo = as_combo(p)

    current = []
    replaced = {}

    for coset in combo.cosets():
        if coset.ideal in replaced:
            continue

        ideal = coset.ideal
        for other in current:
            ideal = _refine(ideal, other)

        refined = [_refine(other, ideal) for other in current]

        for original, target in replaced.items():
            replaced[original] = refined[current.index(target)]

        current = refined + [ideal] if ideal not in refined else refined
        replaced[coset.ideal] = ideal

    terms = []

    for coset, coeff in combo.terms:
        target = replaced[coset.ideal]
        if target == coset.ideal:
            terms.append((coset, coeff))
            continue
        for rep in coset.ideal.transversal(target):
            terms.append((Coset(coset.rep + rep, target), coeff))

    out = IndicatorCombo(combo.ring, terms)

    LOG.debug("Normalized %u terms into %u terms", len(combo.terms),
              len(out.terms))

    return out


def _candidates(combo):
    """Return the positive terms whose ideal is maximal among them."""

    positive = [(coset, coeff) for coset, coeff in combo.terms
                if coeff.is_real() and coeff.re > 0]

    out = []

    for coset, coeff in positive:
        larger = [other for other, _ in positive
                  if other.ideal != coset.ideal and
                  other.ideal.contains_ideal(coset.ideal)]
        if not larger:
            out.append((coset, coeff))

    return out


def subprojection_extract(p):
    """Return (a, b), b regular, with e_(a + (b)) <= p."""

    combo = as_combo(p)

    if indicator_zero_test(combo):
        raise NotApplicableError("The zero projection has no subprojection")

    combo = normalize_indices(combo)

    for coset, _ in _candidates(combo):

        meets = []
        for other, _ in combo.terms:
            if other == coset:
                continue
            meet = coset_intersect(coset, other)
            if meet is not None:
                meets.append(meet)

        result = cover_decide(coset, meets)

        if result.covered:
            LOG.debug("%s is covered by the other terms", coset)
            continue

        region = coset.ideal
        for meet in meets:
            region = region.intersect(meet.ideal)

        b = region.regular_element()

        if b is None:
            raise HypothesisError("%s consists of zero-divisors" % region)

        sub = Coset(result.witness, region.principal(b))
        indicator = IndicatorCombo.indicator(sub)

        if indicator_zero_test(indicator * combo - indicator):
            LOG.debug("Subprojection %s of %s", sub, combo)
            return (sub.rep, b)

    raise HypothesisError("No principal subprojection found for %s" % combo)
