"""Classical groups: invariant forms, unipotent subgroups, and their actions.

Conventions (fixed so that every downstream artifact is reproducible):

* The bilinear form lives on the secondary diagonal.  Orthogonal: all +1.
  Symplectic: +1 in rows 1..r, -1 in rows r+1..n.
* The maximal unipotent subgroup consists of the upper unitriangular
  elements of the group; its Lie algebra (the nilradical) is cut out of the
  strictly upper triangular matrices by xi^T Q + Q xi = 0.
* A group element g acts on a polynomial by substitution: every V-copy
  column transforms by v -> g v (so x[i,j] -> sum_k g[i][k] x[k,j]) and
  every V*-copy row by w -> w g^{-1}.  The Lie algebra acts by the
  derivation obtained by differentiating that substitution along exp(t xi)
  at t = 0.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from .linalg import Matrix, kernel_basis
from .polynomial import Polynomial, canon_coeff
from .scenario import Scenario
from .weights import Weight


def form_matrix(s: Scenario) -> Matrix:
    """The defining bilinear form of o/sp (errors for gl)."""
    if s.group == "gl":
        raise ValueError("gl preserves no bilinear form")
    n = s.n
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        if s.group == "o":
            rows[i][n - 1 - i] = 1
        else:
            rows[i][n - 1 - i] = 1 if i < n // 2 else -1
    return Matrix(rows)


def nilradical_basis(s: Scenario) -> list[Matrix]:
    """Integer basis of the Lie algebra of the maximal unipotent subgroup.

    gl: the elementary matrices E[i][j], i < j, in lexicographic order.
    o/sp: the kernel of xi -> xi^T Q + Q xi inside the strictly upper
    triangular matrices, found by exact elimination and normalized to
    primitive integer vectors.
    """
    n = s.n
    positions = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if s.group == "gl":
        out = []
        for i, j in positions:
            rows = [[0] * n for _ in range(n)]
            rows[i][j] = 1
            out.append(Matrix(rows))
        return out
    q = form_matrix(s)
    # Entry (a, b) of xi^T Q + Q xi must vanish; the coefficient of the
    # unknown xi[i][j] there is Q[i][b]*[j == a] + Q[a][i]*[j == b].
    constraint_rows = []
    for a in range(n):
        for b in range(n):
            row = [0] * len(positions)
            for idx, (i, j) in enumerate(positions):
                coeff = (q[i, b] if j == a else 0) + (q[a, i] if j == b else 0)
                row[idx] = coeff
            constraint_rows.append(row)
    basis = kernel_basis(constraint_rows, len(positions))
    out = []
    for vec in basis:
        denom = math.lcm(*(Fraction(v).denominator for v in vec))
        ints = [int(Fraction(v) * denom) for v in vec]
        g = math.gcd(*(abs(v) for v in ints))
        if g > 1:
            ints = [v // g for v in ints]
        rows = [[0] * n for _ in range(n)]
        for idx, (i, j) in enumerate(positions):
            rows[i][j] = ints[idx]
        out.append(Matrix(rows))
    return out


def exp_nilpotent(xi: Matrix) -> Matrix:
    """Exact exponential of a nilpotent matrix (the series terminates)."""
    n = xi.n
    g = Matrix.identity(n)
    term = Matrix.identity(n)
    k = 1
    while True:
        term = (term * xi).scale(Fraction(1, k))
        if term.is_zero():
            break
        g = g + term
        k += 1
        if k > n + 1:
            raise ValueError("matrix is not nilpotent")
    return g.map(canon_coeff)


def sample_unipotent(s: Scenario, rng, entry_range: tuple[int, int] = (-3, 3)) -> Matrix:
    """A random element of the maximal unipotent subgroup (exact entries).

    gl: unitriangular with uniform integer entries.  o/sp: exp of a random
    integer combination of the nilradical basis, which preserves the form
    exactly because the exponential series terminates.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    lo, hi = entry_range
    n = s.n
    if s.group == "gl":
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = 1
            for j in range(i + 1, n):
                rows[i][j] = rng.randint(lo, hi)
        return Matrix(rows)
    xi = Matrix.zero(n, n)
    for b in nilradical_basis(s):
        c = rng.randint(lo, hi)
        if c:
            xi = xi + b.scale(c)
    return exp_nilpotent(xi)


# -- actions on polynomials ---------------------------------------------------


def substitution_images(g: Matrix, s: Scenario) -> dict[int, Polynomial]:
    """Variable images of the substitution action of g (see module docstring)."""
    nv = s.nvars
    images: dict[int, Polynomial] = {}
    for j in range(s.l):
        for i in range(s.n):
            terms = {}
            for k in range(s.n):
                c = g[i, k]
                if c:
                    e = [0] * nv
                    e[s.x_var(k, j)] = 1
                    terms[tuple(e)] = c
            images[s.x_var(i, j)] = Polynomial(nv, terms)
    if s.m:
        ginv = g.inverse()
        for i in range(s.m):
            for j in range(s.n):
                terms = {}
                for k in range(s.n):
                    c = ginv[k, j]
                    if c:
                        e = [0] * nv
                        e[s.a_var(i, k)] = 1
                        terms[tuple(e)] = c
                images[s.a_var(i, j)] = Polynomial(nv, terms)
    return images


def act_on_polynomial(g: Matrix, p: Polynomial, s: Scenario) -> Polynomial:
    """The substitution action of a group element on a polynomial."""
    if p.nvars != s.nvars:
        raise ValueError("polynomial does not live on this scenario's universe")
    return p.substitute(substitution_images(g, s))


def lie_act_on_polynomial(xi: Matrix, p: Polynomial, s: Scenario) -> Polynomial:
    """The derivation action: d/dt of the substitution along exp(t xi) at 0."""
    if p.nvars != s.nvars:
        raise ValueError("polynomial does not live on this scenario's universe")
    nv = s.nvars
    # sparse images: var index -> list of (var index, coefficient)
    images: list[list[tuple[int, object]]] = [[] for _ in range(nv)]
    for j in range(s.l):
        for i in range(s.n):
            img = [
                (s.x_var(k, j), xi[i, k]) for k in range(s.n) if xi[i, k]
            ]
            images[s.x_var(i, j)] = img
    for i in range(s.m):
        for j in range(s.n):
            img = [
                (s.a_var(i, k), -xi[k, j]) for k in range(s.n) if xi[k, j]
            ]
            images[s.a_var(i, j)] = img
    out: dict = {}
    for exps, c in p.terms.items():
        for v, e in enumerate(exps):
            if not e or not images[v]:
                continue
            base = list(exps)
            base[v] = e - 1
            for w, coeff in images[v]:
                key = list(base)
                key[w] += 1
                key = tuple(key)
                val = out.get(key, 0) + c * e * coeff
                if val:
                    out[key] = val
                else:
                    del out[key]
    return Polynomial(nv, out)


def torus_weight(p: Polynomial, s: Scenario) -> Weight:
    """The torus weight of a weight-homogeneous polynomial.

    Each monomial contributes -e_i per x[i,j] factor and +e_j per a[i,j]
    factor; for o/sp the result is restricted to the small torus
    (e_{n+1-i} becomes -e_i, the middle coordinate dies for odd n).  Raises
    if the monomials do not agree.
    """
    if not p.terms:
        raise ValueError("the zero polynomial has no weight")
    n, l = s.n, s.l
    nx = n * l
    found = None
    for exps in p.terms:
        w = [0] * n
        for idx, e in enumerate(exps):
            if not e:
                continue
            if idx < nx:
                w[idx % n] -= e
            else:
                w[(idx - nx) % n] += e
        if s.group != "gl":
            r = s.r
            w = [w[i] - w[n - 1 - i] for i in range(r)]
        w = tuple(w)
        if found is None:
            found = w
        elif found != w:
            raise ValueError("not a weight vector (monomials of mixed weight)")
    return Weight(found)
