import random
from fractions import Fraction

import pytest

from covariants.polynomial import Polynomial


def random_poly(rng: random.Random, nvars: int, max_degree: int = 3, max_terms: int = 4) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * nvars
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(nvars)] += 1
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + Fraction(
            rng.randint(-5, 5), rng.randint(1, 4)
        )
    return Polynomial(nvars, terms)


def random_frac(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 7))


@pytest.fixture
def rng():
    return random.Random(20240817)
