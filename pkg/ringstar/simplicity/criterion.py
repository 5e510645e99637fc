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

"""Projections compressing a self-adjoint element onto scalars.

For a nonzero self-adjoint x the pipeline builds pairwise orthogonal
projections f_i = e_(a_i + (b_i)) with f_i x f_i = lambda_i f_i and
max |lambda_i| equal to the norm of the diagonal part of x.
"""

import logging

from ringstar.algebra import AlgebraElement, adjoint, d_norm, \
    diagonal_key, elem_eq, expectation
from ringstar.cosets import Coset, affine_image
from ringstar.errors import HypothesisError, NotApplicableError, \
    SearchExhaustedError
from ringstar.ideals import ideal_gen
from ringstar.runtime import bounds
from ringstar.scalar import ZERO
from ringstar.serialize import serializable_dict
from ringstar.simplicity.projections import orthogonalize, \
    subprojection_extract

LOG = logging.getLogger(__name__)


@serializable_dict
class CriticalIndex:
    """A monomial of x off the diagonal."""

    def __init__(self, b, c, b2, domain, coefficient):
        self.b = b
        self.c = c
        self.b2 = b2
        self.domain = domain
        self.coefficient = coefficient

    def value(self, a):
        """Return c - (b - b2)*a, the shift seen from the point a."""

        return self.c - (self.b - self.b2) * a

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "shift": self.c,
            "l": self.b,
            "l_prime": self.b2,
            "domain": self.domain,
            "coefficient": self.coefficient
        }


@serializable_dict
class Witness:
    """The data of one compressing projection f_i."""

    def __init__(self, a_prime, b_prime, a, b, value):
        self.a_prime = a_prime
        self.b_prime = b_prime
        self.a = a
        self.b = b
        self.value = value

    @property
    def coset(self):
        """Return a + (b)."""

        return Coset(self.a, ideal_gen(self.a.ring, [self.b]))

    def projection(self):
        """Return f = e_(a + (b))."""

        return AlgebraElement.projection(self.coset)

    def isometry(self):
        """Return u^a s_b."""

        ring = self.a.ring

        return AlgebraElement.unit(ring, self.a) * \
            AlgebraElement.isometry(ring, self.b)

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "a_prime": self.a_prime,
            "b_prime": self.b_prime,
            "a": self.a,
            "b": self.b,
            "lambda": self.value
        }


@serializable_dict
class CriterionReport:
    """The outcome of the compression pipeline on x."""

    def __init__(self, x, theta, d, projections, witnesses, critical, checks):
        self.x = x
        self.theta = theta
        self.d = d
        self.projections = projections
        self.witnesses = witnesses
        self.critical = critical
        self.checks = checks

    @property
    def passed(self):
        """Return True if every check passed."""

        return all(check["passed"] for check in self.checks)

    def to_dict(self):
        """Return a dict representation of the object."""

        return {
            "x": self.x,
            "theta": self.theta,
            "d": self.d,
            "projections": self.projections,
            "witnesses": self.witnesses,
            "critical_indices": self.critical,
            "checks": self.checks,
            "passed": self.passed
        }


def _critical_indices(x):

    out = []
    diagonal = diagonal_key(x.ring)

    for key, group in x.groups.items():
        if key == diagonal:
            continue
        for domain, coeff in group.combo.terms:
            out.append(CriticalIndex(group.b, group.c, group.b2, domain,
                                     coeff))

    return out


def _avoiding_point(coset, critical):
    """Return the first point of coset where no critical shift vanishes."""

    limit = bounds().max_search

    for count, point in enumerate(coset.elements()):
        if count >= limit:
            break
        if all(not index.value(point).is_zero() for index in critical):
            return point

    raise SearchExhaustedError("No point of %s avoids the critical shifts "
                               "within %u points" % (coset, limit))


def _diagonal_projections(theta, d):
    """Return e_(d*D) for the domains D of the diagonal part."""

    ring = theta.ring

    if theta.is_zero():
        return [AlgebraElement.projection(Coset.whole(ring))]

    out = []

    for domain, _ in theta.diagonal_combo().terms:
        out.append(AlgebraElement.projection(
            affine_image(ring.zero, d, domain)))

    return out


def _denominator(theta):

    ring = theta.ring
    group = theta.groups.get(diagonal_key(ring))
    d = ring.one

    if group is None:
        return d

    for den in group.denominators:
        d = d * den

    return d


def _check(clause, passed, **detail):

    out = {"clause": clause, "passed": bool(passed)}

    if not passed:
        out["counterexample"] = detail

    return out


def _verify(x, theta, witnesses):

    ring = x.ring
    zero = AlgebraElement.zero(ring)
    fs = [witness.projection() for witness in witnesses]
    checks = []

    bad = [(i, j) for i in range(len(fs)) for j in range(i + 1, len(fs))
           if not elem_eq(fs[i] * fs[j], zero)]
    checks.append(_check("orthogonal", not bad, pairs=bad))

    bad = [i for i, witness in enumerate(witnesses)
           if not elem_eq(fs[i], witness.isometry() *
                          adjoint(witness.isometry()))]
    checks.append(_check("range", not bad, indices=bad))

    off_diagonal = x - theta
    bad = [i for i, f in enumerate(fs)
           if not elem_eq(f * off_diagonal * f, zero)]
    checks.append(_check("compression", not bad, indices=bad))

    bad = [i for i, (f, witness) in enumerate(zip(fs, witnesses))
           if not elem_eq(f * theta * f, f * witness.value)]
    checks.append(_check("scalar", not bad, indices=bad))

    best = ZERO
    for witness in witnesses:
        if witness.value.abs2() > best.abs2():
            best = witness.value

    norm = d_norm(theta)
    checks.append(_check("norm", best.modulus() == norm,
                         found=str(best.modulus()), expected=str(norm)))

    return checks


def criterion_pipeline(x):
    """Return the CriterionReport of a nonzero self-adjoint element."""

    ring = x.ring
    x = x.simplify()

    if x.is_zero():
        raise NotApplicableError("The element is zero")

    if not elem_eq(x, adjoint(x)):
        raise NotApplicableError("%s is not self-adjoint" % x)

    theta = expectation(x)
    d = _denominator(theta)

    LOG.info("Diagonal part %s with denominator %s", theta, d)

    projections = orthogonalize(_diagonal_projections(theta, d))
    critical = _critical_indices(x)
    combo = theta.diagonal_combo()

    witnesses = []

    for atom in projections.atoms:
        a_prime, b_prime = subprojection_extract(atom)

        rep = ring.divide_exact(a_prime, d)
        b = ring.divide_exact(b_prime, d)

        if rep is None or b is None:
            raise HypothesisError("%s + (%s) is not inside (%s)" %
                                  (a_prime, b_prime, d))

        a = _avoiding_point(Coset(rep, ideal_gen(ring, [b])), critical)

        factors = []
        for index in critical:
            factor = ring.non_divisor(index.value(a))
            if factor not in factors:
                factors.append(factor)
                b = b * factor

        witnesses.append(Witness(a_prime, b_prime, a, b, combo.evaluate(a)))

        LOG.debug("Projection e(%s + (%s)) for atom %s", a, b, atom)

    checks = _verify(x, theta, witnesses)

    report = CriterionReport(x, theta, d, projections, witnesses, critical,
                             checks)

    LOG.info("Criterion for %s: %s", x, "passed" if report.passed else
             "failed")

    return report
