"""Deterministic named RNG substreams.

All randomness in the package flows from one integer seed through named
substreams, so adding a check never perturbs the samples another check
draws.  The derivation is a stable hash (not Python's salted ``hash``), so
identical configs reproduce byte-identical reports across runs and machines.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction


def substream(seed: int, name: str) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{name}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def random_rational(rng: random.Random, num_bound: int = 9, den_bound: int = 7) -> Fraction:
    """A small nonzero random rational for evaluation-point coordinates.

    Zero coordinates are excluded: they make tiny evaluation matrices
    degenerate far too often (a monomial vanishes identically on the sample).
    """
    sign = 1 if rng.random() < 0.5 else -1
    return Fraction(sign * rng.randint(1, num_bound), rng.randint(1, den_bound))


def random_point(rng: random.Random, nvars: int) -> list[Fraction]:
    return [random_rational(rng) for _ in range(nvars)]
