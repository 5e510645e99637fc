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


"""Tests for projections, the compression criterion and refutations."""

import random

import pytest

from ringstar.algebra import AlgebraElement, adjoint, elem_eq, unit, \
    isometry, isometry_adjoint, projection, scalar
from ringstar.cosets import Coset
from ringstar.errors import NotApplicableError
from ringstar.ideals import ideal_gen
from ringstar.simplicity import orthogonalize, index_condition, \
    normalize_indices, subprojection_extract, criterion_pipeline, \
    coverage_refute, theorem_conditions_check, family_condition


def proj(ring, rep, gen):
    """Return e_(rep + (gen))."""

    return projection(Coset(ring.coerce(rep), ideal_gen(ring, [gen])))


def test_orthogonalize(integers):
    """e_(2) and e_(3) split into three atoms."""

    family = orthogonalize([proj(integers, 0, 2), proj(integers, 0, 3)])
    zero = AlgebraElement.zero(integers)

    assert len(family) == 3

    for i, first in enumerate(family.atoms):
        for second in family.atoms[i + 1:]:
            assert elem_eq(first * second, zero)

    assert elem_eq(family.rebuild(0), proj(integers, 0, 2))
    assert elem_eq(family.rebuild(1), proj(integers, 0, 3))
    assert any(elem_eq(atom, proj(integers, 0, 6)) for atom in family)


def test_orthogonalize_orthogonal(integers):
    """Orthogonal inputs are their own atoms."""

    inputs = [proj(integers, 0, 2), proj(integers, 1, 2)]
    family = orthogonalize(inputs)

    assert len(family) == 2
    assert elem_eq(family.rebuild(0), inputs[0])
    assert elem_eq(family.rebuild(1), inputs[1])


def test_orthogonalize_single(integers):
    """A single projection is left alone."""

    family = orthogonalize([proj(integers, 1, 4)])

    assert len(family) == 1
    assert elem_eq(family.atoms[0], proj(integers, 1, 4))


def test_orthogonalize_rejects(integers):
    """Only diagonal projections can be split."""

    with pytest.raises(NotApplicableError):
        orthogonalize([unit(integers, 1)])

    with pytest.raises(NotApplicableError):
        orthogonalize([proj(integers, 0, 2).scale(2)])

    with pytest.raises(NotApplicableError):
        orthogonalize([])


def test_index_condition(integers, qpoly):
    """Finite relative indices other than one break the condition."""

    assert not index_condition([ideal_gen(integers, [2]),
                                ideal_gen(integers, [3])])
    assert index_condition([ideal_gen(qpoly, [qpoly.parse("T")]),
                            ideal_gen(qpoly, [qpoly.parse("T - 1")])])


def test_normalize_indices(integers, qpoly):
    """Terms over (2) and (3) are rewritten over (6)."""

    x = proj(integers, 0, 2) + proj(integers, 0, 3)
    combo = normalize_indices(x)
    six = ideal_gen(integers, [6])

    assert all(coset.ideal == six for coset in combo.cosets())
    assert index_condition([coset.ideal for coset in combo.cosets()])

    for r in range(-12, 12):
        assert combo.evaluate(integers.from_int(r)) == \
            x.diagonal_combo().evaluate(integers.from_int(r))

    y = proj(qpoly, 0, qpoly.parse("T")) + \
        proj(qpoly, 0, qpoly.parse("T - 1"))

    assert len(normalize_indices(y).terms) == 2


def test_subprojection(integers, qpoly):
    """Principal subprojections."""

    a, b = subprojection_extract(proj(integers, 1, 2))
    assert (a.value, b.value) == (1, 2)

    a, b = subprojection_extract(proj(integers, 0, 2) - proj(integers, 0, 6))
    assert (a.value, b.value) == (2, 6)

    t = qpoly.parse("T")
    t2 = qpoly.parse("T^2")
    a, b = subprojection_extract(proj(qpoly, 0, t) - proj(qpoly, 0, t2))
    assert (a, b) == (t, t2)


def test_subprojection_zero(integers):
    """The zero projection has no subprojection."""

    with pytest.raises(NotApplicableError):
        subprojection_extract(AlgebraElement.zero(integers))


def check_report(report):
    """Check the compressions of a report by hand."""

    assert report.passed

    zero = AlgebraElement.zero(report.x.ring)
    off_diagonal = report.x - report.theta

    for witness in report.witnesses:
        f = witness.projection()
        word = witness.isometry()
        assert elem_eq(f, word * adjoint(word))
        assert elem_eq(f * off_diagonal * f, zero)


def test_criterion_projection(integers):
    """x = e_(2) is already diagonal."""

    report = criterion_pipeline(proj(integers, 0, 2))

    check_report(report)
    assert report.critical == []
    assert elem_eq(report.theta, proj(integers, 0, 2))


def test_criterion_unitary(integers):
    """x = 1 + u + u*."""

    x = scalar(integers, 1) + unit(integers, 1) + unit(integers, -1)
    report = criterion_pipeline(x)

    check_report(report)
    assert elem_eq(report.theta, scalar(integers, 1))
    assert len(report.critical) == 2
    assert all(witness.value == 1 for witness in report.witnesses)


def test_criterion_isometry(integers):
    """x = 1 + s_2 + s_2*."""

    x = scalar(integers, 1) + isometry(integers, 2) + \
        isometry_adjoint(integers, 2)
    report = criterion_pipeline(x)

    check_report(report)
    assert all(not witness.a.is_zero() for witness in report.witnesses)
    assert report.to_dict()["passed"]


def test_criterion_random(integers):
    """Random self-adjoint elements pass every clause."""

    rng = random.Random(12)
    done = 0

    while done < 20:
        x = proj(integers, rng.randint(0, 3), rng.randint(1, 4)).scale(
            rng.randint(1, 3))
        for _ in range(rng.randint(1, 3)):
            word = unit(integers, rng.randint(-3, 3)) * \
                isometry(integers, rng.randint(1, 3))
            x = x + (word + adjoint(word)).scale(rng.randint(-2, 2))

        if x.simplify().is_zero():
            continue

        check_report(criterion_pipeline(x))
        done += 1


def test_criterion_rejects(integers):
    """Zero and non self-adjoint elements are refused."""

    with pytest.raises(NotApplicableError):
        criterion_pipeline(AlgebraElement.zero(integers))

    with pytest.raises(NotApplicableError):
        criterion_pipeline(unit(integers, 1))


def test_coverage_refute(integers, opoly):
    """Refutations by cosets of principal ideals."""

    two = ideal_gen(integers, [2])

    assert coverage_refute(two, [(0, 2)]).covered

    p3 = ideal_gen(opoly, [3, opoly.parse("1+w")])

    result = coverage_refute(p3, [(0, 2)])
    assert not result.covered
    assert p3.contains(result.witness)
    assert not ideal_gen(opoly, [2]).contains(result.witness)
    assert result.rules == ["content"]

    t = opoly.parse("T")
    result = coverage_refute(p3, [(0, t)])
    assert not result.covered
    assert not ideal_gen(opoly, [t]).contains(result.witness)
    assert result.rules == ["degree"]

    result = coverage_refute(p3, [(0, 2), (0, t)])
    assert not result.covered
    assert p3.contains(result.witness)
    assert not ideal_gen(opoly, [2]).contains(result.witness)
    assert not ideal_gen(opoly, [t]).contains(result.witness)
    assert result.rules == ["content", "degree"]


def test_coverage_refute_sampled(opoly):
    """Finite families of principal cosets never cover p3[T]."""

    rng = random.Random(4)
    p3 = ideal_gen(opoly, [3, opoly.parse("1+w")])
    moduli = ["2", "3", "1+w", "T", "T+1", "3*T", "T^2+w"]
    shifts = ["0", "1", "w", "T"]

    for _ in range(50):
        candidates = [(opoly.parse(rng.choice(shifts)),
                       opoly.parse(rng.choice(moduli)))
                      for _ in range(rng.randint(1, 3))]

        result = coverage_refute(p3, candidates)

        assert not result.covered
        assert p3.contains(result.witness)
        assert None not in result.rules
        for (_, b), rule in zip(candidates, result.rules):
            expected = "degree" if opoly.degree(b) >= 1 else "content"
            assert rule == expected


def test_coverage_refute_unit(integers):
    """Units generate the whole ring."""

    with pytest.raises(NotApplicableError):
        coverage_refute(ideal_gen(integers, [2]), [(0, 1)])


def test_conditions_domains(integers, qpoly):
    """Integral domains satisfy both conditions."""

    report = theorem_conditions_check(integers)

    assert report["intersection"].holds
    assert report["zero_divisors"].holds
    assert report["zero_divisors"].method == "vacuous"

    report = theorem_conditions_check(qpoly)

    assert report["zero_divisors"].holds
    assert report["zero_divisors"].method == "closed-form"


def test_conditions_group_ring(cyclic):
    """Zero-divisor ideals of Z[t]/(t^2 - 1) have infinite index."""

    report = theorem_conditions_check(cyclic)
    verdict = report["zero_divisors"]

    assert verdict.method == "sampled"
    assert verdict.holds
    assert verdict.samples > 0
    assert verdict.failures == []


def test_conditions_family(integers, cyclic):
    """Family members must contain a regular element."""

    report = theorem_conditions_check(integers, [ideal_gen(integers, [2])])
    assert report["family"]["holds"]

    members = family_condition(cyclic, [ideal_gen(cyclic,
                                                  [cyclic.parse("1+t")])])
    assert members[0][1] is None
