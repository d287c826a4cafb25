"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial lives in a fixed variable universe of ``nvars`` variables and is
stored as a dict mapping exponent tuples to nonzero coefficients:

    x0^2*x1 + 3/2   ->   {(2, 1, 0): 1, (0, 0, 0): Fraction(3, 2)}

Coefficients are kept as plain ``int`` whenever they are integral and as
``fractions.Fraction`` otherwise; both mix freely in arithmetic, and the int
fast path matters for the heavy substitution workloads elsewhere in the
package.  Every operation is exact — there is no floating point anywhere.

The zero polynomial has an empty term dict.  Zero coefficients are never
stored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

Coeff = "int | Fraction"
Expt = "tuple[int, ...]"


def canon_coeff(c):
    """Collapse integral Fractions to int; leave everything else alone."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def coeff_from_string(s: str):
    """Parse an exact fraction string like ``-3/2`` or ``5``."""
    return canon_coeff(Fraction(s))


class Polynomial:
    """Immutable-by-convention sparse polynomial over the rationals."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                c = canon_coeff(c)
                if not c:
                    continue
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ValueError(
                        f"exponent tuple of length {len(exps)} in a universe of {nvars} variables"
                    )
                clean[exps] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    # -- predicates --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            other = canon_coeff(other)
            if not other:
                return not self.terms
            return self.terms == {(0,) * self.nvars: other}
        return NotImplemented

    __hash__ = None

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def degree(self) -> int:
        """Total degree; the zero polynomial gets -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return d is None or degs == {d}

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError(
                f"mismatched variable universes ({self.nvars} vs {other.nvars})"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(self.nvars, other)
        elif not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = canon_coeff(s)
            else:
                out.pop(e, None)
        p = Polynomial.__new__(Polynomial)
        p.nvars = self.nvars
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = Polynomial.__new__(Polynomial)
        p.nvars = self.nvars
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(self.nvars, other)
        elif not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = canon_coeff(other)
            if not other:
                return Polynomial.zero(self.nvars)
            p = Polynomial.__new__(Polynomial)
            p.nvars = self.nvars
            p.terms = {e: canon_coeff(c * other) for e, c in self.terms.items()}
            return p
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        p = Polynomial.__new__(Polynomial)
        p.nvars = self.nvars
        p.terms = {e: canon_coeff(c) for e, c in out.items()}
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Polynomial.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, point: Sequence):
        """Exact value at a rational point (length must match the universe)."""
        if len(point) != self.nvars:
            raise ValueError(
                f"point of length {len(point)} in a universe of {self.nvars} variables"
            )
        total = 0
        powers = {}
        for exps, c in self.terms.items():
            v = c
            for i, e in enumerate(exps):
                if e:
                    key = (i, e)
                    pw = powers.get(key)
                    if pw is None:
                        pw = point[i] ** e
                        powers[key] = pw
                    v = v * pw
            total = total + v
        return canon_coeff(total)

    def substitute(self, images: Mapping[int, "Polynomial"]) -> "Polynomial":
        """Substitute ``images[i]`` for variable i (identity where omitted).

        All image polynomials must share this polynomial's universe size.
        """
        n = self.nvars
        powers: dict = {}

        def power(i: int, e: int) -> "Polynomial":
            key = (i, e)
            pw = powers.get(key)
            if pw is None:
                base = images.get(i)
                if base is None:
                    base = Polynomial.variable(n, i)
                elif base.nvars != n:
                    raise ValueError("substitution image in a different universe")
                pw = base ** e
                powers[key] = pw
            return pw

        out: dict = {}
        for exps, c in self.terms.items():
            prod = None
            for i, e in enumerate(exps):
                if e:
                    pw = power(i, e)
                    prod = pw if prod is None else prod * pw
            if prod is None:
                e0 = (0,) * n
                out[e0] = out.get(e0, 0) + c
                continue
            for e, pc in prod.terms.items():
                s = out.get(e, 0) + c * pc
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial(n, out)

    def permute_variables(self, perm: Sequence[int]) -> "Polynomial":
        """Relabel variables: old index i becomes ``perm[i]`` (a bijection)."""
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError("perm must be a permutation of the variable indices")
        out = {}
        for exps, c in self.terms.items():
            e = [0] * self.nvars
            for i, ei in enumerate(exps):
                e[perm[i]] = ei
            out[tuple(e)] = c
        return Polynomial(self.nvars, out)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        """Canonical JSON form: terms sorted by exponent tuple."""
        return {
            "vars": self.nvars,
            "terms": [
                {"coeff": str(Fraction(c)), "exps": list(e)}
                for e, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Polynomial":
        return cls(
            data["vars"],
            {tuple(t["exps"]): coeff_from_string(t["coeff"]) for t in data["terms"]},
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            factors = [f"v{i}^{k}" if k > 1 else f"v{i}" for i, k in enumerate(e) if k]
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")
