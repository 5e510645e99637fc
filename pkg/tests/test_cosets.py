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


"""Tests for cosets, covering and indicator combinations."""

import math
import random

import pytest

from ringstar.cosets import Coset, IndicatorCombo, coset_intersect, \
    coset_contains, affine_image, coset_preimage, coset_complement, \
    principal_expansion, cover_decide, atoms, zero_witness, \
    indicator_zero_test
from ringstar.errors import NotApplicableError, SearchExhaustedError
from ringstar.ideals import ideal_gen, unit_ideal
from ringstar.runtime import Bounds, set_bounds


def coset(ring, rep, gen):
    """Return rep + (gen)."""

    return Coset(ring.coerce(rep), ideal_gen(ring, [gen]))


def test_coset_intersect(integers):
    """Chinese remainders for cosets of Z."""

    meet = coset_intersect(coset(integers, 1, 2), coset(integers, 2, 3))

    assert meet == coset(integers, 5, 6)
    assert meet.rep.value == 5
    assert coset_intersect(coset(integers, 1, 2),
                           coset(integers, 0, 2)) is None


def test_coset_intersect_qpoly(qpoly):
    """(1 + (T)) & (0 + (T - 1)) = (1 - T) + (T^2 - T)."""

    first = Coset(qpoly.one, ideal_gen(qpoly, [qpoly.parse("T")]))
    second = Coset(qpoly.zero, ideal_gen(qpoly, [qpoly.parse("T - 1")]))

    meet = coset_intersect(first, second)

    assert meet == Coset(qpoly.parse("1 - T"),
                         ideal_gen(qpoly, [qpoly.parse("T^2 - T")]))


def test_coset_intersect_localized(localized):
    """(1 + (2)) & (2 + (3)) = 5 + (6) over Z[1/5]."""

    meet = coset_intersect(coset(localized, 1, 2), coset(localized, 2, 3))

    assert meet == coset(localized, 5, 6)
    assert meet.contains(localized.parse("1/5"))
    assert coset_intersect(coset(localized, 1, 2),
                           coset(localized, 0, 4)) is None

    meet = coset_intersect(coset(localized, 0, 4), coset(localized, 0, 6))

    assert meet == coset(localized, 0, 12)


def test_coset_equality(integers):
    """Cosets compare as sets."""

    assert coset(integers, 7, 3) == coset(integers, 1, 3)
    assert coset(integers, 7, 3) != coset(integers, 2, 3)
    assert hash(coset(integers, 7, 3)) == hash(coset(integers, 1, 3))


def test_coset_contains(integers, opoly):
    """Containment of cosets."""

    assert coset_contains(coset(integers, 0, 2), coset(integers, 2, 6))
    assert not coset_contains(coset(integers, 0, 2), coset(integers, 3, 6))

    p3 = ideal_gen(opoly, [3, opoly.parse("1+w")])
    inner = Coset(opoly.from_int(3), p3.scale(opoly.from_int(2)))

    assert coset_contains(Coset(opoly.zero, p3), inner)


def test_coset_intersect_distinct_factors(opoly):
    """p3[T] against (T): membership is decided modulo T."""

    p3 = ideal_gen(opoly, [3, opoly.parse("1+w")])
    multiples = ideal_gen(opoly, [opoly.parse("T")])

    assert coset_intersect(Coset(opoly.zero, p3),
                           Coset(opoly.one, multiples)) is None

    meet = coset_intersect(Coset(opoly.zero, p3),
                           Coset(opoly.from_int(3), multiples))

    assert meet.contains(opoly.from_int(3))
    assert meet.contains(opoly.parse("3 + 3*T"))
    assert not meet.contains(opoly.parse("3 + T"))

    meet = coset_intersect(Coset(opoly.parse("T"), multiples),
                           Coset(opoly.zero, p3))

    assert meet.contains(opoly.parse("3*T"))
    assert not meet.contains(opoly.parse("T"))


def test_cover_distinct_factors(opoly):
    """(T) alone does not cover p3[T]."""

    p3 = ideal_gen(opoly, [3, opoly.parse("1+w")])
    target = Coset(opoly.zero, p3)
    members = [Coset(opoly.zero, ideal_gen(opoly, [opoly.parse("T")]))]

    result = cover_decide(target, members)

    assert not result.covered
    assert target.contains(result.witness)
    assert not members[0].contains(result.witness)


def test_affine_image(integers):
    """a + b*K."""

    whole = Coset.whole(integers)

    assert affine_image(1, 2, whole) == coset(integers, 1, 2)
    assert affine_image(0, 1, coset(integers, 1, 2)) == coset(integers, 1, 2)
    assert affine_image(1, 3, coset(integers, 1, 2)) == coset(integers, 4, 6)


def test_coset_preimage(integers):
    """{x : 2x in 4 + 6Z} = 2 + 3Z."""

    assert coset_preimage(2, coset(integers, 4, 6)) == coset(integers, 2, 3)
    assert coset_preimage(2, coset(integers, 1, 2)) is None


def test_coset_complement(integers, qpoly):
    """The other cosets of the same ideal."""

    others = coset_complement(coset(integers, 1, 3))

    assert sorted(other.rep.value for other in others) == [0, 2]

    with pytest.raises(NotApplicableError):
        coset_complement(Coset(qpoly.zero,
                               ideal_gen(qpoly, [qpoly.parse("T")])))


def test_principal_expansion(order):
    """p3 splits into three cosets of (3)."""

    p3 = ideal_gen(order, [3, order.parse("1+w")])
    parts = principal_expansion(Coset(order.zero, p3), order.from_int(3))

    assert len(parts) == 3
    assert all(part.ideal == ideal_gen(order, [3]) for part in parts)
    assert len(set(parts)) == 3


def test_cover_decide(integers):
    """Covering of cosets of Z."""

    whole = Coset.whole(integers)

    result = cover_decide(whole, [coset(integers, 0, 2),
                                  coset(integers, 1, 2)])
    assert result.covered
    assert str(result) == "Covered"

    result = cover_decide(whole, [coset(integers, 0, 2),
                                  coset(integers, 1, 4)])
    assert not result.covered
    assert result.witness.value == 3

    result = cover_decide(coset(integers, 0, 3), [coset(integers, 0, 6),
                                                  coset(integers, 3, 12)])
    assert result.witness.value == 9
    assert result.to_dict() == {"covered": False, "witness": result.witness}


def test_cover_empty_family(integers):
    """Nothing covers a nonempty coset."""

    result = cover_decide(coset(integers, 1, 5), [])

    assert not result.covered
    assert result.witness.value == 1


def test_cover_decide_brute_force(integers):
    """Covering over Z agrees with checking every residue."""

    rng = random.Random(17)
    checked = 0

    while checked < 500:
        moduli = [rng.randint(1, 36) for _ in range(rng.randint(1, 5))]
        target_mod = rng.randint(1, 36)
        period = math.lcm(target_mod, *moduli)
        if period > 720:
            continue

        target = coset(integers, rng.randrange(target_mod), target_mod)
        members = [coset(integers, rng.randrange(m), m) for m in moduli]

        expected = all(any(member.contains(integers.from_int(r))
                           for member in members)
                       for r in range(period)
                       if target.contains(integers.from_int(r)))

        result = cover_decide(target, members)

        assert result.covered == expected
        if not result.covered:
            assert target.contains(result.witness)
            assert not any(member.contains(result.witness)
                           for member in members)

        checked += 1


def test_cover_witness_avoids(order):
    """Witnesses lie in the coset and outside every member."""

    target = Coset(order.zero, unit_ideal(order))
    members = [Coset(order.zero, ideal_gen(order, [2])),
               Coset(order.one, ideal_gen(order, [order.parse("1+w")])),
               Coset(order.parse("w"), ideal_gen(order, [3]))]

    result = cover_decide(target, members)

    assert not result.covered
    assert target.contains(result.witness)
    assert not any(member.contains(result.witness) for member in members)


def test_cover_infinite_index(qpoly):
    """Q[T] is not covered by finitely many proper cosets."""

    members = [Coset(qpoly.from_int(n), ideal_gen(qpoly, [qpoly.parse("T")]))
               for n in range(3)]

    result = cover_decide(Coset.whole(qpoly), members)

    assert not result.covered
    assert all(not member.contains(result.witness) for member in members)


def test_cover_search_bound(qpoly):
    """The enumeration stops at the configured bound."""

    set_bounds(Bounds(max_search=1))
    members = [Coset(qpoly.from_int(n), ideal_gen(qpoly, [qpoly.parse("T")]))
               for n in range(-3, 4)]

    with pytest.raises(SearchExhaustedError):
        cover_decide(Coset.whole(qpoly), members)


def test_indicator_zero(integers):
    """The cosets of (2) partition Z."""

    whole = IndicatorCombo.indicator(Coset.whole(integers))
    combo = whole - IndicatorCombo.indicator(coset(integers, 0, 2)) - \
        IndicatorCombo.indicator(coset(integers, 1, 2))

    assert indicator_zero_test(combo)
    assert indicator_zero_test(IndicatorCombo(integers))


def test_indicator_nonzero(integers):
    """1_(2) - 1_(3) is nonzero at 2."""

    combo = IndicatorCombo.indicator(coset(integers, 0, 2)) - \
        IndicatorCombo.indicator(coset(integers, 0, 3))

    assert not indicator_zero_test(combo)

    atom = zero_witness(combo)

    assert combo.evaluate(atom.representative) == atom.value
    assert atom.value


def test_atoms(integers):
    """Atoms of 2*1_(2) + 3*1_(3)."""

    combo = IndicatorCombo.indicator(coset(integers, 0, 2), 2) + \
        IndicatorCombo.indicator(coset(integers, 0, 3), 3)

    found = atoms(combo)

    assert sorted(int(atom.value.re) for atom in found) == [0, 2, 3, 5]

    for atom in found:
        assert combo.evaluate(atom.representative) == atom.value


def test_indicator_product(integers):
    """Products of indicators are indicators of intersections."""

    combo = IndicatorCombo.indicator(coset(integers, 0, 2)) * \
        IndicatorCombo.indicator(coset(integers, 1, 3))

    assert combo.cosets() == [coset(integers, 4, 6)]


def test_indicator_pullback(integers):
    """x -> 1_(4)(2x) is 1_(2)."""

    combo = IndicatorCombo.indicator(coset(integers, 0, 4)).pullback(
        integers.from_int(2))

    assert combo.cosets() == [coset(integers, 0, 2)]


def test_indicator_partition_many_cosets(integers):
    """The 13 cosets of (13) partition Z, beyond the default pattern cap."""

    combo = IndicatorCombo.indicator(Coset.whole(integers))
    for r in range(13):
        combo = combo - IndicatorCombo.indicator(coset(integers, r, 13))

    assert len(combo.cosets()) == 14
    assert indicator_zero_test(combo)

    combo = combo + IndicatorCombo.indicator(coset(integers, 4, 26))

    assert not indicator_zero_test(combo)
    assert zero_witness(combo).representative.value % 26 == 4


def test_atoms_pattern_bound(integers):
    """Overlapping cosets need more patterns than the bound allows."""

    set_bounds(Bounds(max_atoms=1))
    combo = IndicatorCombo.indicator(coset(integers, 0, 2)) + \
        IndicatorCombo.indicator(coset(integers, 0, 3))

    with pytest.raises(SearchExhaustedError):
        atoms(combo)


def test_cover_infinite_index_random(qpoly):
    """Over Q[T] a coset is covered only when one member contains it."""

    rng = random.Random(41)

    def poly(degree):
        return qpoly.element([rng.randint(-3, 3) for _ in range(degree + 1)])

    for _ in range(100):
        modulus = qpoly.parse("T") * poly(1) + qpoly.one
        target = Coset(poly(2), ideal_gen(qpoly, [modulus]))
        members = []
        for _ in range(rng.randint(1, 4)):
            gen = poly(2)
            while qpoly.degree(gen) < 1:
                gen = poly(2)
            members.append(Coset(poly(2), ideal_gen(qpoly, [gen])))
        if rng.random() < 0.2:
            members.append(Coset(target.rep + poly(1) * modulus,
                                 ideal_gen(qpoly, [qpoly.one])))

        result = cover_decide(target, members)

        assert result.covered == any(coset_contains(member, target)
                                     for member in members)
        if not result.covered:
            assert target.contains(result.witness)
            assert not any(member.contains(result.witness)
                           for member in members)
