from fractions import Fraction

from covariants.lp import convex_membership
from covariants.polytopes import (
    build_polytopes,
    chamber_inclusion_check,
    sample_chamber_point,
)
from covariants.rng import substream
from covariants.scenario import Scenario


def test_gl2_vertex_lists():
    spec = build_polytopes(Scenario("gl", 2, 2))
    assert set(spec.phi_vertices) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert set(spec.delta_vertices) == {
        (0, 0),
        (1, 0),
        (Fraction(1, 2), Fraction(1, 2)),
        (0, -1),
        (Fraction(-1, 2), Fraction(-1, 2)),
    }


def test_sp4_delta():
    spec = build_polytopes(Scenario("sp", 4, 1))
    assert set(spec.delta_vertices) == {(0, 0), (1, 0), (Fraction(1, 2), Fraction(1, 2))}


def test_o6_has_spin_vertex():
    spec = build_polytopes(Scenario("o", 6, 1))
    assert (Fraction(1, 3), Fraction(1, 3), Fraction(-1, 3)) in set(spec.delta_vertices)


def test_delta_vertices_satisfy_chamber():
    for s in (
        Scenario("gl", 3, 1),
        Scenario("o", 5, 1),
        Scenario("o", 6, 1),
        Scenario("sp", 4, 1),
    ):
        spec = build_polytopes(s)
        for v in spec.delta_vertices:
            assert spec.in_chamber(v), (s, v)


def test_sampler_lands_in_domain():
    for s in (Scenario("gl", 3, 1), Scenario("o", 6, 1), Scenario("sp", 4, 1)):
        spec = build_polytopes(s)
        rng = substream(3, f"sampler:{s.group}{s.n}")
        for _ in range(50):
            pt = sample_chamber_point(s, spec, rng)
            assert convex_membership(pt, spec.phi_vertices)
            assert spec.in_chamber(pt)
    # a chamber point outside the weight hull is not in the sampler's domain
    spec = build_polytopes(Scenario("gl", 3, 1))
    assert not convex_membership((2, 0, 0), spec.phi_vertices)


def test_even_o_sampler_reaches_negative_last_coordinate():
    s = Scenario("o", 6, 1)
    spec = build_polytopes(s)
    rng = substream(1, "negcheck")
    assert any(
        sample_chamber_point(s, spec, rng)[-1] < 0 for _ in range(100)
    )


def test_inclusion_gl3_500_samples_seed7():
    rep = chamber_inclusion_check(Scenario("gl", 3, 1), samples=500, seed=7)
    assert rep.passed
    assert rep.sample_failures == [] and rep.vertex_failures == []


def test_inclusion_across_groups():
    for s in (Scenario("o", 4, 1), Scenario("o", 5, 1), Scenario("sp", 4, 1)):
        assert chamber_inclusion_check(s, samples=120, seed=2).passed


def test_report_json_shape():
    rep = chamber_inclusion_check(Scenario("sp", 2, 1), samples=10, seed=0)
    data = rep.to_json()
    assert data["check"] == "chamber-inclusion"
    assert data["verdict"] == "pass"
    assert data["inputs"]["seed"] == 0
