"""Sparse Laurent polynomial and factored rational arithmetic."""

import random
from fractions import Fraction

import pytest

from torus_super.algebra import (
    KNOT,
    MACD,
    PRIME_61,
    AlphabetMismatchError,
    FactoredRational,
    LaurentPolynomial,
    NonDivisibleError,
    SubstitutionMap,
    exact_divide,
    parse_polynomial,
    sum_rationals,
)
from torus_super.invariant import MACD_TO_KNOT

QT = ("q", "t")


def poly(alphabet, terms):
    return LaurentPolynomial(alphabet, terms)


def random_poly(rng, alphabet, max_terms=12, span=8):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = tuple(rng.randint(-span, span) for _ in alphabet)
        coeff = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        merged = terms.get(exps, 0) + coeff
        if merged:
            terms[exps] = merged
        else:
            terms.pop(exps, None)
    if not terms:
        terms[(0,) * len(alphabet)] = Fraction(1)
    return LaurentPolynomial(alphabet, terms)


def test_difference_of_squares():
    one_plus_q = poly(QT, {(0, 0): 1, (1, 0): 1})
    one_minus_q = poly(QT, {(0, 0): 1, (1, 0): -1})
    assert one_plus_q * one_minus_q == poly(QT, {(0, 0): 1, (2, 0): -1})


def test_additive_identity():
    f = poly(QT, {(2, -1): 3, (0, 1): Fraction(1, 2)})
    assert f + LaurentPolynomial.zero(QT) == f
    assert f - f == LaurentPolynomial.zero(QT)
    assert not (f - f)


def test_ring_laws_on_seeded_inputs():
    rng = random.Random(20240817)
    for _ in range(25):
        f = random_poly(rng, QT)
        g = random_poly(rng, QT)
        h = random_poly(rng, QT)
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h


def test_exact_divide_examples():
    one_minus_q2 = poly(QT, {(0, 0): 1, (2, 0): -1})
    one_minus_q = poly(QT, {(0, 0): 1, (1, 0): -1})
    one_plus_q = poly(QT, {(0, 0): 1, (1, 0): 1})
    assert exact_divide(one_minus_q2, one_minus_q) == one_plus_q
    with pytest.raises(NonDivisibleError):
        exact_divide(one_plus_q, one_minus_q)


def test_exact_divide_round_trip():
    rng = random.Random(20240818)
    for _ in range(40):
        f = random_poly(rng, KNOT, max_terms=30)
        g = random_poly(rng, KNOT, max_terms=30)
        assert exact_divide(f * g, g) == f


def test_divide_by_zero_rejected():
    f = poly(QT, {(0, 0): 1})
    with pytest.raises(ZeroDivisionError):
        exact_divide(f, LaurentPolynomial.zero(QT))


def test_alphabet_mismatch_rejected():
    f = poly(QT, {(0, 0): 1})
    g = poly(KNOT, {(0, 0, 0): 1})
    with pytest.raises(AlphabetMismatchError):
        f + g


def test_substitution_example():
    f = poly(MACD, {(0, 0, 0): 1, (1, 1, 0): 1, (1, 0, 1): -1})
    image = f.substitute(MACD_TO_KNOT)
    assert image == poly(KNOT, {(0, 0, 0): 1, (0, 4, 2): 1, (2, 2, 3): 1})


def test_substitution_images():
    a_var = poly(MACD, {(0, 0, 1): 1})
    assert a_var.substitute(MACD_TO_KNOT) == poly(KNOT, {(2, 0, 1): -1})
    assert LaurentPolynomial.one(MACD).substitute(MACD_TO_KNOT) == LaurentPolynomial.one(KNOT)


def test_substitution_is_ring_homomorphism():
    rng = random.Random(20240819)
    for _ in range(20):
        f = random_poly(rng, MACD)
        g = random_poly(rng, MACD)
        assert (f * g).substitute(MACD_TO_KNOT) == f.substitute(MACD_TO_KNOT) * g.substitute(MACD_TO_KNOT)
        assert (f + g).substitute(MACD_TO_KNOT) == f.substitute(MACD_TO_KNOT) + g.substitute(MACD_TO_KNOT)


def test_substitution_requires_full_cover():
    with pytest.raises(ValueError):
        SubstitutionMap(MACD, KNOT, {"q": (1, (0, 2, 2))})


def test_eval_mod_basics():
    q = LaurentPolynomial.variable(KNOT, "q")
    point = {"a": 1, "q": 5, "t": 1}
    assert q.eval_mod(point) == 5
    q_inv = LaurentPolynomial.variable(KNOT, "q", -1)
    assert q_inv.eval_mod(point) == pow(5, -1, PRIME_61)
    assert q_inv.eval_mod(point) * 5 % PRIME_61 == 1
    with pytest.raises(ZeroDivisionError):
        q.eval_mod({"a": 1, "q": 0, "t": 1})
    with pytest.raises(KeyError):
        q.eval_mod({"a": 1, "q": 5})


def test_eval_mod_respects_products():
    rng = random.Random(20240820)
    for _ in range(10):
        f = random_poly(rng, KNOT)
        g = random_poly(rng, KNOT)
        h = exact_divide(f * g, g)
        for _ in range(10):
            point = {name: rng.randint(1, PRIME_61 - 1) for name in KNOT}
            lhs = (f * g).eval_mod(point)
            assert lhs == f.eval_mod(point) * g.eval_mod(point) % PRIME_61
            assert h.eval_mod(point) == f.eval_mod(point)


def test_content_examples():
    f = poly(KNOT, {(0, 2, 1): 1, (0, 3, 0): 1})
    assert f.content() == (0, 2, 0)
    assert poly(KNOT, {(0, 0, 0): 1, (0, 1, 0): 1}).content() == (0, 0, 0)
    g = poly(KNOT, {(0, -2, 0): 1, (0, 0, 1): 1})
    assert g.content() == (0, -2, 0)
    content, reduced = g.divide_content()
    assert content == (0, -2, 0)
    assert reduced.min_exponents() == (0, 0, 0)
    with pytest.raises(ValueError):
        LaurentPolynomial.zero(KNOT).content()


def test_canonical_text_round_trip():
    rng = random.Random(20240821)
    for _ in range(20):
        f = random_poly(rng, KNOT)
        assert parse_polynomial(KNOT, f.canonical_text()) == f


def test_canonical_text_order_independent_of_construction():
    rng = random.Random(20240822)
    items = [((2, -1, 0), Fraction(3)), ((0, 0, 0), Fraction(1)), ((-1, 4, 2), Fraction(-7, 2))]
    base = LaurentPolynomial(KNOT, items).canonical_text()
    for _ in range(5):
        shuffled = items[:]
        rng.shuffle(shuffled)
        assert LaurentPolynomial(KNOT, shuffled).canonical_text() == base
    assert base.splitlines() == sorted(base.splitlines(), key=lambda s: tuple(map(int, s.split()[:3])))


def test_factored_expand_monomial_prefactor():
    r = FactoredRational(MACD, prefactor=(0, 2, 0), factors={(1, 0, 0): -1})
    num, den = r.expand()
    assert num == poly(MACD, {(0, 2, 0): 1})
    assert den == poly(MACD, {(0, 0, 0): 1, (1, 0, 0): -1})


def test_factored_expand_single_box_dimension_shape():
    r = FactoredRational(MACD, factors=[((0, 0, 1), 1), ((0, 1, 0), -1)])
    num, den = r.expand()
    assert num == poly(MACD, {(0, 0, 0): 1, (0, 0, 1): -1})
    assert den == poly(MACD, {(0, 0, 0): 1, (0, 1, 0): -1})


def test_factored_expand_two_box_row_dimension_shape():
    r = FactoredRational(
        MACD,
        factors=[((0, 0, 1), 1), ((1, 0, 1), 1), ((0, 1, 0), -1), ((1, 1, 0), -1)],
    )
    num, den = r.expand()
    one_minus_a = poly(MACD, {(0, 0, 0): 1, (0, 0, 1): -1})
    one_minus_aq = poly(MACD, {(0, 0, 0): 1, (1, 0, 1): -1})
    one_minus_t = poly(MACD, {(0, 0, 0): 1, (0, 1, 0): -1})
    one_minus_qt = poly(MACD, {(0, 0, 0): 1, (1, 1, 0): -1})
    assert num == one_minus_a * one_minus_aq
    assert den == one_minus_t * one_minus_qt


def test_factored_binomial_canonicalization():
    # 1 - 1/t == (-1/t) * (1 - t)
    r = FactoredRational(MACD, factors={(0, -1, 0): 1})
    assert r == FactoredRational(MACD, coeff=-1, prefactor=(0, -1, 0), factors={(0, 1, 0): 1})
    num, den = r.expand()
    assert den == LaurentPolynomial.one(MACD)
    assert num == poly(MACD, {(0, 0, 0): 1, (0, -1, 0): -1})


def test_factored_multiplication_cancels():
    r = FactoredRational(
        MACD, coeff=Fraction(3, 2), prefactor=(1, -2, 0),
        factors={(1, 0, 0): 2, (0, 1, 0): -1},
    )
    assert r * r.reciprocal() == FactoredRational.one(MACD)
    with pytest.raises(ZeroDivisionError):
        FactoredRational(MACD, factors={(0, 0, 0): 1})


def test_sum_rationals_cancellation():
    plus = FactoredRational(MACD, factors={(1, 0, 0): -1})
    minus = FactoredRational(MACD, coeff=-1, factors={(1, 0, 0): -1})
    num, den = sum_rationals([plus, minus])
    assert num.is_zero()
    assert den == poly(MACD, {(0, 0, 0): 1, (1, 0, 0): -1})


def test_sum_rationals_distinct_denominators():
    over_q = FactoredRational(MACD, factors={(1, 0, 0): -1})
    over_t = FactoredRational(MACD, factors={(0, 1, 0): -1})
    num, den = sum_rationals([over_q, over_t])
    assert num == poly(MACD, {(0, 0, 0): 2, (1, 0, 0): -1, (0, 1, 0): -1})
    assert den == poly(MACD, {(0, 0, 0): 1, (1, 0, 0): -1, (0, 1, 0): -1, (1, 1, 0): 1})


def test_sum_rationals_with_weights():
    one = FactoredRational.one(MACD)
    w = poly(MACD, {(1, 0, 0): 1})
    num, den = sum_rationals([one, one], weights=[w, w])
    assert num == poly(MACD, {(1, 0, 0): 2})
    assert den == LaurentPolynomial.one(MACD)
