"""Classical groups acting on polynomials, and what invariance means here.

The maximal unipotent subgroup is the upper unitriangular part of the
group.  A polynomial is invariant exactly when the whole nilradical kills
it; random unipotent substitutions give an independent spot check, and both
certificates are exact.
"""

from covariants import (
    Scenario,
    act_on_polynomial,
    form_matrix,
    lie_act_on_polynomial,
    nilradical_basis,
    sample_unipotent,
    torus_weight,
)
from covariants.weights import eps_to_phi

s = Scenario("o", 5, 2)
print("scenario:", s.to_json(), "| torus rank", s.rank)

q = form_matrix(s)
print("\ninvariant form (secondary diagonal):")
for row in q.rows:
    print("   ", list(row))

basis = nilradical_basis(s)
print("\nnilradical dimension:", len(basis), "(the number of positive roots)")
print("first basis element:")
for row in basis[0].rows:
    print("   ", list(row))

g = sample_unipotent(s, 42)
print("\nrandom unipotent sample (seed 42) preserves the form exactly:",
      (g.transpose() * q * g) == q)

# the bottom coordinate of a V-copy is a highest-weight vector ...
bottom = s.x_poly(s.n - 1, 0)
print("\nbottom coordinate:")
print("  killed by the nilradical:",
      all(not lie_act_on_polynomial(xi, bottom, s) for xi in basis))
print("  fixed by the sample:", act_on_polynomial(g, bottom, s) == bottom)
print("  weight:", torus_weight(bottom, s).eps,
      "=", eps_to_phi(s, torus_weight(bottom, s).eps), "in fundamental-weight coordinates")

# ... while the top coordinate is not
top = s.x_poly(0, 0)
moved = lie_act_on_polynomial(basis[0], top, s)
print("\ntop coordinate is moved by the first raising operator:", bool(moved))
