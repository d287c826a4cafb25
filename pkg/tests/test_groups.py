import random
from fractions import Fraction

import pytest

from covariants.generators import build_generators, form_value_poly
from covariants.groups import (
    act_on_polynomial,
    exp_nilpotent,
    form_matrix,
    lie_act_on_polynomial,
    nilradical_basis,
    sample_unipotent,
    torus_weight,
)
from covariants.linalg import Matrix
from covariants.polynomial import Polynomial
from covariants.scenario import Scenario
from covariants.weights import eps_to_phi

from conftest import random_poly


def positive_root_count(s):
    if s.group == "gl":
        return s.n * (s.n - 1) // 2
    if s.group == "sp":
        return s.r * s.r
    return s.r * s.r if s.n % 2 else s.r * (s.r - 1)


def test_form_matrices():
    assert form_matrix(Scenario("o", 3, 1)) == Matrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    assert form_matrix(Scenario("sp", 2, 1)) == Matrix([[0, 1], [-1, 0]])
    assert form_matrix(Scenario("o", 2, 1)) == Matrix([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        form_matrix(Scenario("gl", 2, 1))


def test_form_symmetry():
    q_o = form_matrix(Scenario("o", 4, 1))
    assert q_o.transpose() == q_o
    q_sp = form_matrix(Scenario("sp", 4, 1))
    assert q_sp.transpose() == Matrix([[-x for x in row] for row in q_sp.rows])


def test_gl_nilradical_is_elementary():
    basis = nilradical_basis(Scenario("gl", 2, 1))
    assert basis == [Matrix([[0, 1], [0, 0]])]


def test_sp2_nilradical_by_hand():
    # hand oracle: xi = a E12 satisfies the form condition for every a
    basis = nilradical_basis(Scenario("sp", 2, 1))
    assert len(basis) == 1
    xi = basis[0]
    assert xi[0, 1] != 0 and xi[0, 0] == xi[1, 0] == xi[1, 1] == 0


def test_nilradical_counts_match_positive_roots():
    for s in (
        Scenario("gl", 4, 1),
        Scenario("o", 3, 1),
        Scenario("o", 5, 1),
        Scenario("o", 4, 1),
        Scenario("o", 6, 1),
        Scenario("sp", 2, 1),
        Scenario("sp", 4, 1),
        Scenario("sp", 6, 1),
    ):
        basis = nilradical_basis(s)
        assert len(basis) == positive_root_count(s), s
        if s.group != "gl":
            q = form_matrix(s)
            for xi in basis:
                assert (xi.transpose() * q + q * xi).is_zero()
                assert all(xi[i, j] == 0 for i in range(s.n) for j in range(i + 1))


def test_exp_of_zero_is_identity():
    assert exp_nilpotent(Matrix.zero(3, 3)) == Matrix.identity(3)


def test_gl_samples_are_unitriangular():
    s = Scenario("gl", 4, 1)
    for seed in range(5):
        g = sample_unipotent(s, seed)
        assert g.det() == 1
        assert all(g[i, i] == 1 for i in range(4))
        assert all(g[i, j] == 0 for i in range(4) for j in range(i))


def test_o_sample_preserves_form_seed_42():
    s = Scenario("o", 5, 1)
    g = sample_unipotent(s, 42)
    q = form_matrix(s)
    assert (g.transpose() * q * g - q).is_zero()


def test_symbolic_exponential_preserves_form():
    # exp(t * xi) preserves the form identically in a symbolic parameter t
    for s in (Scenario("o", 4, 1), Scenario("o", 5, 1), Scenario("sp", 4, 1)):
        q = form_matrix(s).map(lambda c: Polynomial.const(1, c))
        t = Polynomial.variable(1, 0)
        for xi in nilradical_basis(s):
            xi_t = xi.map(lambda c: c * t)
            g = Matrix.identity(s.n).map(lambda c: Polynomial.const(1, c))
            term = g
            k = 1
            while True:
                term = (term * xi_t).map(lambda p: p * Fraction(1, k))
                if term.is_zero():
                    break
                g = g + term
                k += 1
            assert (g.transpose() * q * g - q).is_zero()


def test_identity_acts_trivially(rng):
    s = Scenario("gl", 2, 2, 1)
    for _ in range(5):
        p = random_poly(rng, s.nvars)
        assert act_on_polynomial(Matrix.identity(2), p, s) == p


def test_unitriangular_fixes_bottom_row():
    s = Scenario("gl", 2, 1)
    g = Matrix([[1, 1], [0, 1]])
    x2 = s.x_poly(1, 0)
    assert act_on_polynomial(g, x2, s) == x2
    x1 = s.x_poly(0, 0)
    assert act_on_polynomial(g, x1, s) == x1 + x2


def test_form_value_fixed_by_50_samples():
    s = Scenario("o", 3, 1)
    qv = form_value_poly(s, 0, 0)
    rng = random.Random(3)
    for _ in range(50):
        g = sample_unipotent(s, rng)
        assert act_on_polynomial(g, qv, s) == qv


def test_action_composes(rng):
    for s in (Scenario("gl", 3, 2, 1), Scenario("o", 4, 2), Scenario("sp", 2, 2)):
        stream = random.Random(11)
        for _ in range(4):
            g = sample_unipotent(s, stream)
            h = sample_unipotent(s, stream)
            for _ in range(5):
                p = random_poly(rng, s.nvars, max_degree=2, max_terms=3)
                assert act_on_polynomial(g * h, p, s) == act_on_polynomial(
                    h, act_on_polynomial(g, p, s), s
                )


def test_lie_action_on_constants_and_variables():
    s = Scenario("gl", 2, 1)
    xi = Matrix([[0, 1], [0, 0]])
    assert not lie_act_on_polynomial(xi, Polynomial.const(s.nvars, 7), s)
    assert not lie_act_on_polynomial(xi, s.x_poly(1, 0), s)
    assert lie_act_on_polynomial(xi, s.x_poly(0, 0), s) == s.x_poly(1, 0)


def test_lie_action_is_first_order_of_group_action():
    # substitute along exp(t xi) with symbolic t; the t-linear part is the
    # derivation (finite-difference oracle for the sign convention)
    s = Scenario("gl", 3, 2)
    rng = random.Random(5)
    nv = s.nvars
    ext = nv + 1  # extra variable plays the role of t
    for xi in nilradical_basis(s):
        g_t = {}
        for j in range(s.l):
            for i in range(s.n):
                terms = {tuple(int(k == s.x_var(i, j)) for k in range(ext)): 1}
                for k in range(s.n):
                    if xi[i, k]:
                        e = [0] * ext
                        e[s.x_var(k, j)] = 1
                        e[ext - 1] = 1
                        terms[tuple(e)] = xi[i, k]
                g_t[s.x_var(i, j)] = Polynomial(ext, terms)
        for _ in range(3):
            p = random_poly(rng, nv, max_degree=2, max_terms=3)
            p_ext = Polynomial(ext, {e + (0,): c for e, c in p.terms.items()})
            moved = p_ext.substitute(g_t)
            linear = {
                e[:-1]: c for e, c in moved.terms.items() if e[-1] == 1
            }
            assert Polynomial(nv, linear) == lie_act_on_polynomial(xi, p, s)


def test_leibniz(rng):
    s = Scenario("o", 4, 2)
    for xi in nilradical_basis(s):
        for _ in range(5):
            p = random_poly(rng, s.nvars, max_degree=2, max_terms=3)
            q = random_poly(rng, s.nvars, max_degree=2, max_terms=3)
            lhs = lie_act_on_polynomial(xi, p * q, s)
            rhs = lie_act_on_polynomial(xi, p, s) * q + p * lie_act_on_polynomial(xi, q, s)
            assert lhs == rhs


def test_torus_weight_examples():
    s = Scenario("gl", 3, 1, 1)
    w = torus_weight(s.x_poly(2, 0), s)
    assert w.eps == (0, 0, -1)
    assert eps_to_phi(s, w.eps) == (0, 1, -1)  # phi_{n-1} - phi_n
    c_entry = sum(
        (s.a_poly(0, k) * s.x_poly(k, 0) for k in range(3)),
        start=Polynomial.zero(s.nvars),
    )
    assert torus_weight(c_entry, s).is_zero()
    mixed = s.x_poly(0, 0) + s.x_poly(1, 0) * s.x_poly(0, 0)
    with pytest.raises(ValueError):
        torus_weight(mixed, s)


def test_weight_additive_under_multiplication():
    s = Scenario("sp", 4, 2)
    gs = build_generators(s)
    for a in gs.gens:
        for b in gs.gens:
            w = torus_weight(a.poly * b.poly, s)
            assert w.eps == (a.weight + b.weight).eps
