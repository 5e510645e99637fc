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


"""Tests for the dense *-algebra."""

import random

import pytest

from ringstar.algebra import AlgebraElement, Monomial, monomial_make, \
    adjoint, elem_eq, evaluate, expectation, d_norm, is_projection, \
    relation_II_check, relation_I_check, relation_conjugation_check, \
    unitary_isometry_check, diagonal_compress, product_eval_factorization, \
    unit, isometry, isometry_adjoint, projection, scalar
from ringstar.cosets import Coset
from ringstar.errors import NotApplicableError, NotRegularError
from ringstar.ideals import ideal_gen, unit_ideal
from ringstar.scalar import Scalar


def proj(ring, rep, gen):
    """Return e_(rep + (gen))."""

    return projection(Coset(ring.coerce(rep), ideal_gen(ring, [gen])))


def image(x, r):
    """Return the evaluation of x at r with plain values."""

    return sorted((target.value, coeff) for coeff, target in evaluate(x, r))


def test_monomial_make(integers):
    """Canonical monomials of simple words."""

    two = ideal_gen(integers, [2])
    whole = unit_ideal(integers)

    first = monomial_make(1, 0, two, 0, 1)
    assert elem_eq(AlgebraElement.from_monomials(integers, [(1, first)]),
                   proj(integers, 0, 2))

    second = monomial_make(2, 0, whole, 0, 2)
    assert elem_eq(AlgebraElement.from_monomials(integers, [(1, second)]),
                   scalar(integers, 1))

    third = monomial_make(2, -1, whole, 0, 1)
    assert third.domain == Coset(integers.one, two)
    assert isinstance(third, Monomial)


def test_monomial_make_zero(integers):
    """An empty cell gives the zero monomial."""

    two = ideal_gen(integers, [2])

    assert monomial_make(1, 0, two, 1, 2) is None


def test_monomial_make_not_regular(cyclic):
    """Zero-divisors are refused as isometry labels."""

    with pytest.raises(NotRegularError):
        monomial_make(cyclic.parse("1+t"), 0, unit_ideal(cyclic), 0, 1)


def test_projection_product(integers):
    """e_(2) e_(1 + (3)) = e_(4 + (6))."""

    assert elem_eq(proj(integers, 0, 2) * proj(integers, 1, 3),
                   proj(integers, 4, 6))


def test_isometry_products(integers):
    """Words in u and s reduce by the ring relations."""

    left = isometry_adjoint(integers, 2) * unit(integers, 2) * \
        isometry(integers, 2)
    assert elem_eq(left, unit(integers, 1))

    left = unit(integers, 1) * isometry(integers, 2) * unit(integers, 1) * \
        isometry(integers, 3)
    assert elem_eq(left, unit(integers, 3) * isometry(integers, 6))

    assert elem_eq(isometry_adjoint(integers, 2) * isometry(integers, 2),
                   scalar(integers, 1))


def test_adjoint(integers):
    """Adjoints of generators."""

    assert elem_eq(adjoint(unit(integers, 1)), unit(integers, -1))
    assert elem_eq(adjoint(proj(integers, 1, 2)), proj(integers, 1, 2))

    word = unit(integers, 1) * isometry(integers, 2)
    star = isometry_adjoint(integers, 2) * unit(integers, -1)

    assert elem_eq(adjoint(word), star)
    assert image(adjoint(word), 3) == image(star, 3) == [(1, 1)]


def test_adjoint_involution(integers):
    """x** = x with complex coefficients."""

    rng = random.Random(5)

    for _ in range(10):
        x = AlgebraElement.zero(integers)
        for _ in range(3):
            word = unit(integers, rng.randint(-3, 3)) * \
                isometry(integers, rng.randint(1, 4)) * \
                proj(integers, rng.randint(0, 2), rng.randint(1, 3))
            x = x + word.scale(Scalar(rng.randint(-2, 2), rng.randint(-2, 2)))
        assert elem_eq(adjoint(adjoint(x)), x)


def test_semantic_equality(integers):
    """Equal operators written differently compare equal."""

    assert elem_eq(proj(integers, 0, 2) + proj(integers, 1, 2),
                   scalar(integers, 1))
    assert elem_eq(isometry(integers, 2) * isometry_adjoint(integers, 2),
                   proj(integers, 0, 2))
    assert not elem_eq(unit(integers, 1), unit(integers, 2))


def test_simplify_drops_vanishing(integers):
    """Terms whose indicators cancel disappear."""

    x = proj(integers, 0, 2) + proj(integers, 1, 2) - scalar(integers, 1)

    assert x.is_zero()
    assert str(x.simplify()) == "0"


def test_evaluate(integers):
    """Action on the basis of l^2(Z)."""

    assert image(unit(integers, 1) * isometry(integers, 2), 3) == [(7, 1)]
    assert image(isometry_adjoint(integers, 2), 3) == []
    assert image(proj(integers, 1, 3), 4) == [(4, 1)]
    assert image(proj(integers, 1, 3), 5) == []


def composed(x, y, r):
    """Return x applied to the image of r under y, keyed by index."""

    out = {}

    for coeff, target in evaluate(y, r):
        for other, final in evaluate(x, target):
            out[final.value] = out.get(final.value, Scalar(0)) + coeff * other

    return {index: coeff for index, coeff in out.items() if coeff}


def test_evaluate_random_words(integers):
    """Evaluation is multiplicative."""

    rng = random.Random(3)

    for _ in range(200):
        x = random_word(integers, rng)
        y = random_word(integers, rng)
        product = x * y
        for r in range(-50, 50):
            assert dict(image(product, r)) == composed(x, y, r)


def test_expectation(integers):
    """The diagonal part of an element."""

    assert expectation(unit(integers, 1)).is_zero()

    diagonal = isometry_adjoint(integers, 2) * proj(integers, 0, 6) * \
        isometry(integers, 2)
    assert elem_eq(expectation(diagonal), diagonal)

    x = scalar(integers, 1) + unit(integers, 1) + unit(integers, -1)
    assert elem_eq(expectation(x), scalar(integers, 1))


def test_d_norm(integers):
    """Norms of diagonal elements are maxima over the atoms."""

    x = proj(integers, 0, 2).scale(2) + proj(integers, 1, 2).scale(3)
    assert d_norm(x) == 3

    assert d_norm(proj(integers, 0, 2) + proj(integers, 0, 3)) == 2
    assert d_norm(AlgebraElement.zero(integers)) == 0

    with pytest.raises(NotApplicableError):
        d_norm(unit(integers, 1))


def test_d_norm_complex(integers):
    """|3 + 4i| = 5."""

    x = proj(integers, 0, 2).scale(Scalar(3, 4))

    assert d_norm(x) == 5


def test_is_projection(integers):
    """Projections are self-adjoint idempotents."""

    assert is_projection(proj(integers, 1, 2))
    assert is_projection(isometry(integers, 3) * isometry_adjoint(integers, 3))
    assert not is_projection(unit(integers, 1))
    assert not is_projection(proj(integers, 0, 2).scale(2))


@pytest.mark.parametrize("b", range(1, 13))
def test_relation_II(integers, b):
    """Sum of the range projections over R/(b)."""

    assert relation_II_check(integers, b)


@pytest.mark.parametrize("b", ["2", "3", "1+w"])
def test_relation_II_order(order, b):
    """The same sum over ideals of Z[sqrt(-5)] of index at most 36."""

    assert relation_II_check(order, order.parse(b))


def test_relation_II_infinite(qpoly):
    """The sum is refused when R/(b) is infinite."""

    with pytest.raises(NotApplicableError):
        relation_II_check(qpoly, qpoly.parse("T"))


def test_relation_I(integers, order):
    """u^a s_b u^c s_d = u^(a+bc) s_bd."""

    rng = random.Random(9)

    for _ in range(100):
        a, c = rng.randint(-4, 4), rng.randint(-4, 4)
        b, d = rng.randint(1, 4), rng.randint(1, 4)
        assert relation_I_check(integers, a, b, c, d)

    assert relation_I_check(order, order.parse("w"), 2, 1,
                            order.parse("1+w"))


def test_relation_conjugation(integers):
    """(u^a s_b) e_K (u^a s_b)* = e_(a + bK)."""

    assert relation_conjugation_check(1, 3, Coset(integers.one,
                                                  ideal_gen(integers, [2])))


def test_unitary_isometry(integers, localized):
    """s_b is unitary exactly when b is a unit."""

    assert unitary_isometry_check(integers, 2) == (False, False)
    assert unitary_isometry_check(integers, -1) == (True, True)
    assert unitary_isometry_check(localized, 5) == (True, True)


def test_diagonal_compress(integers):
    """s_2* e_(6) s_2 = e_(3)."""

    assert diagonal_compress(integers.from_int(2),
                             Coset(integers.zero, ideal_gen(integers, [6]))) \
        == Coset(integers.zero, ideal_gen(integers, [3]))


def test_product_factorization(integers, product):
    """Evaluation on Z x Z factors over the components."""

    assert product_eval_factorization(product, proj(integers, 0, 2),
                                      proj(integers, 0, 3), 4, 3)
    assert product_eval_factorization(product, unit(integers, 1),
                                      unit(integers, 1), 0, 0)
    assert product_eval_factorization(product, isometry(integers, 2),
                                      isometry(integers, 3), 1, 1)


def random_word(ring, rng):
    """Return a random u^a s_b e_K s_c* u^d over Z."""

    return unit(ring, rng.randint(-3, 3)) * isometry(ring, rng.randint(1, 3)) \
        * proj(ring, rng.randint(0, 2), rng.randint(1, 4)) * \
        isometry_adjoint(ring, rng.randint(1, 3)) * \
        unit(ring, rng.randint(-3, 3))


def test_expectation_laws(integers):
    """The expectation is idempotent and linear over the diagonal."""

    rng = random.Random(21)

    for _ in range(100):
        x = AlgebraElement.zero(integers)
        for _ in range(3):
            x = x + random_word(integers, rng).scale(rng.randint(-2, 2))

        theta = expectation(x)
        left = proj(integers, rng.randint(0, 1), rng.randint(1, 3))
        right = proj(integers, rng.randint(0, 1), rng.randint(1, 3))

        assert elem_eq(expectation(theta), theta)
        assert elem_eq(expectation(left * x * right), left * theta * right)

        for coeff, monomial in x.monomials():
            single = AlgebraElement.from_monomials(integers,
                                                   [(coeff, monomial)])
            image_single = expectation(single)
            assert image_single.is_zero() or elem_eq(image_single, single)


def random_poly(ring, rng, degree, nonzero=False):
    """Return a random element of Q[T] of at most the given degree."""

    while True:
        x = ring.element([rng.randint(-4, 4) for _ in range(degree + 1)])
        if not nonzero or not x.is_zero():
            return x


def test_evaluate_polynomial_words(qpoly):
    """Products over Q[T] act as the composed operators."""

    rng = random.Random(13)

    for _ in range(100):
        x = unit(qpoly, random_poly(qpoly, rng, 2)) * \
            isometry(qpoly, random_poly(qpoly, rng, 1, True))
        b = random_poly(qpoly, rng, 1, True)
        c = random_poly(qpoly, rng, 2)
        if rng.random() < 0.5:
            y = unit(qpoly, c) * isometry(qpoly, b)
        else:
            y = isometry_adjoint(qpoly, b) * unit(qpoly, c)
        product = x * y

        for count in range(100):
            r = random_poly(qpoly, rng, 2)
            if count % 2:
                # lands in the domain of s_b* u^c
                r = b * random_poly(qpoly, rng, 1) - c
            assert dict(image(product, r)) == composed(x, y, r)


def test_diagonal_compress_polynomials(qpoly):
    """s_d* e_(a + (b)) s_d is the projection onto a single coset."""

    rng = random.Random(8)

    for _ in range(50):
        d = random_poly(qpoly, rng, 1, True)
        domain = Coset(random_poly(qpoly, rng, 2),
                       ideal_gen(qpoly, [random_poly(qpoly, rng, 2, True)]))

        left = isometry_adjoint(qpoly, d) * projection(domain) * \
            isometry(qpoly, d)
        compressed = diagonal_compress(d, domain)

        if compressed is None:
            assert left.is_zero()
        else:
            assert elem_eq(left, projection(compressed))


def test_print_order(integers, order):
    """The printed form does not depend on the order of the summands."""

    for ring in (integers, order):
        parts = [unit(ring, 1), isometry(ring, 2), unit(ring, -1),
                 isometry_adjoint(ring, 3), proj(ring, 1, 2)]
        forward = parts[0]
        for part in parts[1:]:
            forward = forward + part
        backward = parts[-1]
        for part in reversed(parts[:-1]):
            backward = backward + part

        assert str(forward) == str(backward)
        assert elem_eq(forward, backward)
