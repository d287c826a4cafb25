"""Graded dimensions of the generated subalgebra and of the invariant ring.

Two quantities are compared throughout the verification suite:

* ``generated_dimension``: the dimension of the degree-t piece of the
  subalgebra generated by the generator system, measured as the rank of the
  evaluation matrix of all degree-t generator monomials at random rational
  points.  Ranks are computed modulo a large prime (numpy elimination) at
  two independent seeds with two distinct primes; a disagreement aborts.
  Modular evaluation ranks can only undercount, so they are a certified
  lower bound for the true dimension.

* ``invariant_dimension``: the dimension of the space of degree-t (and
  optionally fixed-weight) polynomials annihilated by the whole nilradical,
  computed as an exact sparse kernel over the integers, block by weight.

Since the generated subalgebra always sits inside the invariant ring,
equality of the lower bound with the exact dimension pins both quantities —
the comparison is an unconditional certificate whenever it succeeds.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .generators import GeneratorSet, generator_monomials, monomial_weight
from .groups import nilradical_basis
from .linalg import PRIME_A, PRIME_B, rank_mod_p, sparse_rank_int
from .rng import random_point, substream
from .scenario import Scenario

DEFAULT_MONOMIAL_CAP = 20000
CAP_ENV_VAR = "COVARIANTS_MONOMIAL_CAP"


class CapExceeded(RuntimeError):
    """A monomial basis would exceed the configured resource cap."""


class SeedDisagreement(RuntimeError):
    """Two independently seeded rank computations disagreed."""


def monomial_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV_VAR)
    return int(env) if env else DEFAULT_MONOMIAL_CAP


def degree_monomial_count(nvars: int, t: int) -> int:
    return math.comb(nvars + t - 1, t)


def degree_monomials(nvars: int, t: int) -> Iterable[tuple[int, ...]]:
    """All exponent tuples of total degree t, lexicographically."""

    def rec(pos: int, remaining: int, acc: list):
        if pos == nvars - 1:
            acc.append(remaining)
            yield tuple(acc)
            acc.pop()
            return
        for e in range(remaining + 1):
            acc.append(e)
            yield from rec(pos + 1, remaining - e, acc)
            acc.pop()

    if nvars == 0:
        if t == 0:
            yield ()
        return
    yield from rec(0, t, [])


def _monomial_weight_key(s: Scenario, exps: tuple[int, ...]) -> tuple:
    n, l = s.n, s.l
    nx = n * l
    w = [0] * n
    for idx, e in enumerate(exps):
        if not e:
            continue
        if idx < nx:
            w[idx % n] -= e
        else:
            w[(idx - nx) % n] += e
    if s.group != "gl":
        w = [w[i] - w[n - 1 - i] for i in range(s.r)]
    return tuple(w)


# -- exact invariant dimensions -------------------------------------------------


@lru_cache(maxsize=None)
def _invariant_weight_dims_cached(s: Scenario, t: int, cap: int) -> dict:
    count = degree_monomial_count(s.nvars, t)
    if count > cap:
        raise CapExceeded(
            f"degree-{t} monomial basis has {count} elements (cap {cap})"
        )
    blocks: dict[tuple, list[tuple[int, ...]]] = {}
    for exps in degree_monomials(s.nvars, t):
        blocks.setdefault(_monomial_weight_key(s, exps), []).append(exps)
    basis = nilradical_basis(s)
    # sparse images per variable: var -> list of (target var, int coefficient)
    images_per_xi = []
    for xi in basis:
        images: list[list[tuple[int, int]]] = [[] for _ in range(s.nvars)]
        for j in range(s.l):
            for i in range(s.n):
                images[s.x_var(i, j)] = [
                    (s.x_var(k, j), xi[i, k]) for k in range(s.n) if xi[i, k]
                ]
        for i in range(s.m):
            for j in range(s.n):
                images[s.a_var(i, j)] = [
                    (s.a_var(i, k), -xi[k, j]) for k in range(s.n) if xi[k, j]
                ]
        images_per_xi.append(images)
    dims: dict[tuple, int] = {}
    for wkey, monos in sorted(blocks.items()):
        index = {e: i for i, e in enumerate(monos)}
        rows: dict[tuple, dict[int, int]] = {}
        for col, exps in enumerate(monos):
            for xi_idx, images in enumerate(images_per_xi):
                for v, e in enumerate(exps):
                    if not e or not images[v]:
                        continue
                    for wvar, coeff in images[v]:
                        target = list(exps)
                        target[v] -= 1
                        target[wvar] += 1
                        key = (xi_idx, tuple(target))
                        row = rows.setdefault(key, {})
                        val = row.get(col, 0) + e * coeff
                        if val:
                            row[col] = val
                        else:
                            del row[col]
        nullity = len(monos) - sparse_rank_int([r for r in rows.values() if r])
        if nullity:
            dims[wkey] = nullity
    return dims


def invariant_weight_dims(s: Scenario, t: int, cap: int | None = None) -> dict:
    """Exact dimension of each weight space of degree-t invariants."""
    return dict(_invariant_weight_dims_cached(s, t, monomial_cap(cap)))


def invariant_dimension(
    s: Scenario, t: int, weight: tuple | None = None, cap: int | None = None
) -> int:
    """Exact dimension of the degree-t invariants (of one weight if given).

    ``weight`` is in epsilon-coordinates of the scenario's torus.
    """
    if t < 0:
        raise ValueError("degree must be nonnegative")
    dims = invariant_weight_dims(s, t, cap)
    if weight is None:
        return sum(dims.values())
    return dims.get(tuple(weight), 0)


# -- evaluation ranks of generator monomials -------------------------------------


def _frac_mod(x, p: int) -> int:
    f = Fraction(x)
    return f.numerator % p * pow(f.denominator % p, p - 2, p) % p


def _gen_values_mod(gs: GeneratorSet, points: Sequence[Sequence[Fraction]], p: int) -> np.ndarray:
    """Values of every generator at every point, mod p (vectorized)."""
    nvars = gs.scenario.nvars
    tmax = max((g.degree for g in gs.gens), default=0)
    vals = np.array(
        [[_frac_mod(pt[i], p) for pt in points] for i in range(nvars)], dtype=np.int64
    )
    npoints = vals.shape[1] if nvars else len(points)
    powers = np.ones((nvars, tmax + 1, npoints), dtype=np.int64)
    for e in range(1, tmax + 1):
        powers[:, e, :] = powers[:, e - 1, :] * vals % p
    out = np.zeros((len(gs.gens), npoints), dtype=np.int64)
    for gi, g in enumerate(gs.gens):
        acc = np.zeros(npoints, dtype=np.int64)
        for exps, c in g.poly.terms.items():
            term = np.full(npoints, _frac_mod(c, p), dtype=np.int64)
            for i, e in enumerate(exps):
                if e:
                    term = term * powers[i, e, :] % p
            acc = (acc + term) % p
        out[gi] = acc
    return out


def monomial_eval_matrix(
    gs: GeneratorSet,
    monomials: Sequence,
    npoints: int,
    seed: int,
    stream: str,
    p: int,
) -> np.ndarray:
    """Rows = generator monomials, columns = values at random points (mod p)."""
    rng = substream(seed, stream)
    points = [random_point(rng, gs.scenario.nvars) for _ in range(npoints)]
    gen_vals = _gen_values_mod(gs, points, p)
    rows = np.ones((len(monomials), npoints), dtype=np.int64)
    for ri, mono in enumerate(monomials):
        row = rows[ri]
        for idx, mult in mono:
            for _ in range(mult):
                row = row * gen_vals[idx] % p
        rows[ri] = row
    return rows


def two_seed_rank(
    gs: GeneratorSet, monomials: Sequence, npoints: int, seed: int, stream: str
) -> int:
    """Evaluation rank at two seeds/primes; abort loudly on disagreement."""
    r1 = rank_mod_p(monomial_eval_matrix(gs, monomials, npoints, seed, stream + ":1", PRIME_A), PRIME_A)
    r2 = rank_mod_p(monomial_eval_matrix(gs, monomials, npoints, seed, stream + ":2", PRIME_B), PRIME_B)
    if r1 != r2:
        raise SeedDisagreement(
            f"evaluation ranks disagree ({r1} vs {r2}) for stream {stream!r}; "
            "rerun with a different seed and report if it persists"
        )
    return r1


def generated_dimension(gs: GeneratorSet, t: int, seed: int = 0, cap: int | None = None) -> int:
    """Dimension of the degree-t piece of the generated subalgebra.

    Rank of the evaluation matrix of all degree-t generator monomials at
    R >= 2x(monomial count) random rational points, at two seeds.  This is a
    certified lower bound that equals the true dimension away from a
    measure-zero set of point choices.
    """
    if t < 0:
        raise ValueError("degree must be nonnegative")
    if t == 0:
        return 1
    monomials = generator_monomials(gs, t)
    if not monomials:
        return 0
    cap_val = monomial_cap(cap)
    if len(monomials) > cap_val:
        raise CapExceeded(f"{len(monomials)} generator monomials (cap {cap_val})")
    return two_seed_rank(gs, monomials, 2 * len(monomials), seed, f"genrank:{t}")


# -- minimality ------------------------------------------------------------------


def minimality_check(gs: GeneratorSet, seed: int = 0) -> "MinimalityReport":
    """Certify that no generator lies in the algebra the others generate.

    Every generator and every generator monomial is a weight vector, and the
    coordinate ring splits by weight, so a generator can only be spanned by
    degree-d monomials of its own weight.  Block by (degree, weight): the
    generators of the block are essential iff appending their evaluation
    rows to the rows of the block's decomposable monomials raises the rank
    by the number of generators.  Rank increases observed mod p prove
    essentiality exactly; shortfalls are pinned down per generator.
    """
    s = gs.scenario
    verdicts: dict[str, bool] = {}
    blocks: dict[tuple, list[int]] = {}
    for idx, g in enumerate(gs.gens):
        blocks.setdefault((g.degree, g.weight.eps), []).append(idx)
    for (d, w), gen_indices in sorted(blocks.items()):
        singles = {((idx, 1),) for idx in gen_indices}
        block_monos = [
            m
            for m in generator_monomials(gs, d)
            if monomial_weight(gs, m) == w and m not in singles
        ]
        ordered = block_monos + [((idx, 1),) for idx in gen_indices]
        npoints = len(ordered) + 32
        base = None
        full = None
        for tag, prime in ((f"min:{d}:{w}:1", PRIME_A), (f"min:{d}:{w}:2", PRIME_B)):
            mat = monomial_eval_matrix(gs, ordered, npoints, seed, tag, prime)
            b = rank_mod_p(mat[: len(block_monos)], prime)
            f = rank_mod_p(mat, prime)
            if base is None:
                base, full = b, f
            elif (base, full) != (b, f):
                raise SeedDisagreement(f"minimality ranks disagree in block {(d, w)}")
        if full == base + len(gen_indices):
            for idx in gen_indices:
                verdicts[gs.gens[idx].label] = True
            continue
        # at least one generator is spanned by the rest: identify which
        for idx in gen_indices:
            others = block_monos + [((j, 1),) for j in gen_indices if j != idx]
            rows = others + [((idx, 1),)]
            r_without = two_seed_rank(gs, others, len(rows) + 32, seed, f"min:{d}:{w}:g{idx}:a")
            r_with = two_seed_rank(gs, rows, len(rows) + 32, seed, f"min:{d}:{w}:g{idx}:b")
            verdicts[gs.gens[idx].label] = r_with == r_without + 1
    return MinimalityReport(s, verdicts)


class MinimalityReport:
    def __init__(self, scenario: Scenario, verdicts: dict[str, bool]):
        self.scenario = scenario
        self.verdicts = verdicts

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    def inessential(self) -> list[str]:
        return [lbl for lbl, ok in self.verdicts.items() if not ok]

    def to_json(self) -> dict:
        return {
            "check": "minimality",
            "inputs": {"scenario": self.scenario.to_json()},
            "verdict": "pass" if self.passed else "fail",
            "witness": {"inessential": self.inessential()} if not self.passed else None,
        }
