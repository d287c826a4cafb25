import random
from fractions import Fraction

import pytest

from covariants.polynomial import Polynomial

from conftest import random_frac, random_poly


def _vars(n):
    return [Polynomial.variable(n, i) for i in range(n)]


def test_difference_of_squares():
    x, y = _vars(2)
    assert (x + y) * (x - y) == x * x - y * y


def test_additive_identity():
    p = Polynomial(2, {(1, 0): 3, (0, 2): Fraction(-1, 2)})
    assert p + Polynomial.zero(2) == p
    assert p + 0 == p


def test_distributivity_via_evaluation(rng):
    for _ in range(25):
        p = random_poly(rng, 4)
        q = random_poly(rng, 4)
        r = random_poly(rng, 4)
        lhs = p * (q + r)
        rhs = p * q + p * r
        for _ in range(20):
            pt = [random_frac(rng) for _ in range(4)]
            assert lhs.evaluate(pt) == rhs.evaluate(pt)
        assert lhs == rhs


def test_universe_mismatch_raises():
    p = Polynomial.variable(2, 0)
    q = Polynomial.variable(3, 0)
    with pytest.raises(ValueError):
        p + q
    with pytest.raises(ValueError):
        p * q


def test_constant_evaluation():
    p = Polynomial.const(3, 5)
    assert p.evaluate([random_frac(random.Random(1)) for _ in range(3)]) == 5


def test_monomial_evaluation():
    x1, x2 = _vars(2)
    assert (x1 * x2).evaluate([2, Fraction(3, 2)]) == 3


def test_evaluation_length_mismatch():
    p = Polynomial.variable(2, 0)
    with pytest.raises(ValueError):
        p.evaluate([1])


def test_associativity_and_eval_commutes():
    # module invariant: exact arithmetic over 1000 random triples, with
    # evaluation commuting with the arithmetic at 10 random points each
    rng = random.Random(7)
    for _ in range(1000):
        p = random_poly(rng, 3, max_degree=2, max_terms=3)
        q = random_poly(rng, 3, max_degree=2, max_terms=3)
        r = random_poly(rng, 3, max_degree=2, max_terms=3)
        left = (p * q) * r
        assert left == p * (q * r)
        for _ in range(10):
            pt = [random_frac(rng) for _ in range(3)]
            vp, vq, vr = p.evaluate(pt), q.evaluate(pt), r.evaluate(pt)
            assert left.evaluate(pt) == vp * vq * vr
            assert (p + q).evaluate(pt) == vp + vq


def test_power():
    x, y = _vars(2)
    assert (x + y) ** 3 == x**3 + 3 * x * x * y + 3 * x * y * y + y**3
    assert (x + y) ** 0 == Polynomial.const(2, 1)


def test_no_zero_terms_stored(rng):
    for _ in range(50):
        p = random_poly(rng, 3)
        q = p - p
        assert not q.terms
        assert all(c for c in (p * p).terms.values())


def test_substitute_composes():
    x, y = _vars(2)
    p = x * x + y
    images = {0: x + y, 1: Polynomial.const(2, 2)}
    assert p.substitute(images) == (x + y) * (x + y) + 2


def test_permute_variables():
    x, y, z = _vars(3)
    p = x * y + z
    assert p.permute_variables([2, 0, 1]) == z * x + y


def test_json_round_trip(rng):
    for _ in range(25):
        p = random_poly(rng, 5)
        assert Polynomial.from_json(p.to_json()) == p
    data = Polynomial(2, {(1, 1): Fraction(3, 2), (0, 0): -2}).to_json()
    assert data == {
        "vars": 2,
        "terms": [
            {"coeff": "-2", "exps": [0, 0]},
            {"coeff": "3/2", "exps": [1, 1]},
        ],
    }


def test_homogeneity_helpers():
    x, y = _vars(2)
    assert (x * y).is_homogeneous(2)
    assert not (x + x * y).is_homogeneous()
    assert Polynomial.zero(2).degree() == -1
