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


"""Tests for the finite levels of the spectrum."""

import random

import pytest

from ringstar.algebra import projection, scalar
from ringstar.cosets import Coset
from ringstar.errors import NotApplicableError, InfiniteIndexError
from ringstar.ideals import IndexValue, absolute_index, ideal_gen
from ringstar.spectra import finite_level, character_eval, \
    localized_level, crt_lift, refinement_graph, PolyLevelPoint, \
    poly_primes, level_modulus, poly_level_project, poly_level_le, \
    poly_level_graph


def test_finite_level_sizes(integers, cyclic, order):
    """Points of R/I."""

    assert len(finite_level(integers, ideal_gen(integers, [6]))) == 6
    assert len(finite_level(cyclic, ideal_gen(cyclic, [2]))) == 4
    assert len(finite_level(order,
                            ideal_gen(order, [order.parse("1+w")]))) == 6


LEVEL_IDEALS = [
    ("integers", ["2"]), ("integers", ["7"]), ("integers", ["12"]),
    ("integers", ["30"]), ("integers", ["4", "6"]), ("integers", ["1"]),
    ("integers", ["36"]),
    ("order", ["2"]), ("order", ["3"]), ("order", ["1+w"]),
    ("order", ["3", "1+w"]), ("order", ["2", "1+w"]), ("order", ["w"]),
    ("order", ["4"]),
    ("cyclic", ["2"]), ("cyclic", ["3"]), ("cyclic", ["3", "1-t"]),
    ("cyclic", ["2", "1+t"]), ("cyclic", ["1+2*t"]), ("cyclic", ["4"]),
]


@pytest.mark.parametrize("name,gens", LEVEL_IDEALS)
def test_finite_level_index(request, name, gens):
    """A finite level has as many points as the index of its ideal."""

    ring = request.getfixturevalue(name)
    ideal = ideal_gen(ring, [ring.parse(gen) for gen in gens])

    level = finite_level(ring, ideal)

    assert absolute_index(ideal) == IndexValue.of(len(level))


def test_finite_level_infinite(qpoly):
    """Levels need a finite quotient."""

    with pytest.raises(InfiniteIndexError):
        finite_level(qpoly, ideal_gen(qpoly, [qpoly.parse("T")]))


def test_level_point(integers):
    """Elements reduce to their point."""

    level = finite_level(integers, ideal_gen(integers, [6]))

    assert level.point(integers.from_int(17)).value == 5
    assert level.point(integers.from_int(-1)).value == 5
    assert level.to_dict()["size"] == 6


def test_character_eval(integers):
    """Characters of the diagonal algebra at the points of Z/6."""

    level = finite_level(integers, ideal_gen(integers, [6]))
    odd = projection(Coset(integers.one, ideal_gen(integers, [2])))

    assert character_eval(level, 5, odd) == 1
    assert character_eval(level, 0, odd) == 0

    for z in range(6):
        assert character_eval(level, z, scalar(integers, 1)) == 1


def test_character_eval_coarse_level(integers):
    """The level has to refine the cosets of the element."""

    level = finite_level(integers, ideal_gen(integers, [6]))
    x = projection(Coset(integers.zero, ideal_gen(integers, [4])))

    with pytest.raises(NotApplicableError):
        character_eval(level, 0, x)


def test_localized_level(localized, integers):
    """Levels of Z[1/5]."""

    assert len(localized_level(localized, 6)) == 6
    assert len(localized_level(localized, 1)) == 1

    with pytest.raises(NotApplicableError):
        localized_level(localized, 5)

    with pytest.raises(NotApplicableError):
        localized_level(integers, 6)


def test_localized_level_divisibility(localized):
    """Levels of Z[1/5] exist exactly when 5 does not divide m."""

    for m in range(1, 31):
        if m % 5 == 0:
            with pytest.raises(NotApplicableError):
                localized_level(localized, m)
        else:
            assert len(localized_level(localized, m)) == m


def test_crt_lift(integers, qpoly):
    """Chinese remainder lifts."""

    assert crt_lift([(1, ideal_gen(integers, [2])),
                     (2, ideal_gen(integers, [3]))]).value == 5
    assert crt_lift([(3, ideal_gen(integers, [7]))]).value == 3

    lift = crt_lift([(1, ideal_gen(qpoly, [qpoly.parse("T")])),
                     (0, ideal_gen(qpoly, [qpoly.parse("T - 1")]))])

    assert lift == qpoly.parse("1 - T")

    with pytest.raises(NotApplicableError):
        crt_lift([(1, ideal_gen(integers, [2])),
                  (0, ideal_gen(integers, [4]))])


def test_refinement_graph(integers, qpoly):
    """Divisor lattice of 12 as a DOT graph."""

    graph = refinement_graph(integers, 12)

    assert graph.startswith("digraph levels {")
    assert '"Z/12" -> "Z/6";' in graph
    assert '"Z/12" -> "Z/4";' in graph
    assert '"Z/12" -> "Z/3";' not in graph

    with pytest.raises(NotApplicableError):
        refinement_graph(qpoly, 12)


def test_poly_primes(qpoly):
    """Distinct monic irreducible polynomials."""

    primes = poly_primes(5)

    assert len(set(primes)) == 5
    assert all(qpoly.is_irreducible(p) for p in primes)
    assert all(p == qpoly.monic(p) for p in primes)
    assert poly_primes(3) == primes[:3]


def test_level_projection(qpoly):
    """Z_2 -> Z_1 keeps the residue modulo p_1."""

    first = poly_primes(1)[0]
    residue = qpoly.parse("T^3 + 2")
    point = PolyLevelPoint(qpoly, 2, (2, 1), residue)

    image = poly_level_project(point)

    assert image.n == 1
    assert image.exponents == (1,)
    assert image.modulus == first
    assert image.residue == qpoly.remainder(residue, first)

    zero = PolyLevelPoint(qpoly, 2, (1, 1), 0)
    assert poly_level_project(zero).residue.is_zero()


def test_level_coherence(qpoly):
    """Projecting Z_3 -> Z_2 -> Z_1 is projecting Z_3 -> Z_1."""

    rng = random.Random(10)

    for _ in range(50):
        exponents = [rng.randint(0, 3) for _ in range(3)]
        residue = qpoly.element([rng.randint(-6, 6) for _ in range(5)])
        point = PolyLevelPoint(qpoly, 3, exponents, residue)

        middle = poly_level_project(point)
        bottom = poly_level_project(middle)

        assert middle.residue == qpoly.remainder(point.residue,
                                                 middle.modulus)
        assert bottom == PolyLevelPoint(qpoly, 1, [min(exponents[0], 1)],
                                        residue)


def test_level_order(qpoly):
    """Canonical coarsening is the order of the level."""

    residue = qpoly.parse("T^2 + T + 5")
    fine = PolyLevelPoint(qpoly, 2, (2, 0), residue)
    coarse = PolyLevelPoint(qpoly, 2, (1, 0), residue)
    other = PolyLevelPoint(qpoly, 2, (1, 0), residue + qpoly.one)

    assert poly_level_le(fine, coarse)
    assert not poly_level_le(coarse, fine)
    assert not poly_level_le(fine, other)

    first = PolyLevelPoint(qpoly, 2, (1, 0), residue)
    second = PolyLevelPoint(qpoly, 2, (0, 1), residue)

    assert not poly_level_le(first, second)
    assert not poly_level_le(second, first)


def test_level_bounds(qpoly, integers):
    """Exponents stay within the level."""

    with pytest.raises(ValueError):
        PolyLevelPoint(qpoly, 1, (2,), 0)

    with pytest.raises(NotApplicableError):
        PolyLevelPoint(integers, 1, (1,), 0)


def test_level_graph(qpoly):
    """Moduli of Z_2 with exponents at most one."""

    graph = poly_level_graph(qpoly, 2, 1)
    top = "(%s)" % level_modulus(qpoly, (1, 1))

    assert graph.count(";") - graph.count("->") == 2 + 4
    assert '"%s" -> ' % top in graph


def random_diagonal(ring, rng, modulus):
    """Return a sum of projections onto cosets of divisors of modulus."""

    divisors = [d for d in range(1, modulus + 1) if modulus % d == 0]
    x = scalar(ring, 0)

    for _ in range(rng.randint(1, 3)):
        d = rng.choice(divisors)
        coset = Coset(ring.from_int(rng.randrange(d)), ideal_gen(ring, [d]))
        x = x + projection(coset).scale(rng.randint(-3, 3))

    return x


def test_character_multiplicative(integers):
    """Characters are multiplicative on elements living above the level."""

    rng = random.Random(31)
    level = finite_level(integers, ideal_gen(integers, [12]))

    for _ in range(30):
        x = random_diagonal(integers, rng, 12)
        y = random_diagonal(integers, rng, 12)
        z = rng.randrange(12)

        assert character_eval(level, z, x * y) == \
            character_eval(level, z, x) * character_eval(level, z, y)
        assert character_eval(level, z, x + y) == \
            character_eval(level, z, x) + character_eval(level, z, y)


def test_character_refinement(integers):
    """Evaluating on Z/30 agrees with the coarser levels Z/d below it."""

    rng = random.Random(37)
    fine = finite_level(integers, ideal_gen(integers, [30]))

    for modulus in (2, 3, 5, 6, 10, 15):
        coarse = finite_level(integers, ideal_gen(integers, [modulus]))
        x = random_diagonal(integers, rng, modulus)
        for z in fine.points:
            assert character_eval(fine, z, x) == \
                character_eval(coarse, coarse.point(z), x)
