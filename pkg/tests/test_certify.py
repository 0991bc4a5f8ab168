"""Decision procedures: exact verdicts, searches, and their certificates."""

import itertools
import random

import pytest

from sx import Complex, from_facets, replay, standard_ball, standard_sphere
from sx.certify import (
    SearchBudget,
    certify_k_shelled,
    certify_k_stacked_sphere,
    certify_k_stellated,
    collapse,
    ear_scan,
    flip_scan,
    is_in_class,
    is_k_stacked_ball,
    is_one_stacked_ball,
    is_tight_exhaustive,
    tightness_beta_condition,
)
from sx.constructions import klee_novik, stacked_ball_closure
from sx.errors import DimensionTooHigh, GuardExceeded, NotABall, NotNormalPseudomanifold
from sx.growth import grow_shelled_ball, grow_stacked_sphere, grow_stellated_sphere


def cross_polytope(d):
    c = standard_sphere(0, ("x1", "y1"))
    for i in range(2, d + 2):
        c = c.join(standard_sphere(0, (f"x{i}", f"y{i}")))
    return c


def oracle_subset_closure(s, size):
    """Oracle: the clique-style closure by scanning all vertex subsets."""
    verts = list(s.vertices)
    member = []
    for r in range(1, len(verts) + 1):
        for cand in itertools.combinations(verts, r):
            ok = all(
                s.has_face(sub)
                for m in range(1, min(size, len(cand)) + 1)
                for sub in itertools.combinations(cand, m)
            )
            if ok:
                member.append(frozenset(cand))
    return Complex(member)


# -- stackedness --------------------------------------------------------------------


def test_standard_ball_is_zero_stacked():
    v = is_k_stacked_ball(standard_ball(4), 0)
    assert v.proved


def test_dfm_ball_is_two_stacked(dfm_ball):
    v = is_k_stacked_ball(dfm_ball, 2)
    assert v.proved
    assert any("field screen" in n for n in v.notes)


def test_stacked_ball_refutation_carries_interior_face():
    ball = stacked_ball_closure(cross_polytope(2), 2)  # the octahedron's cone-like closure
    # a simpler refutation: the 2-facet 4-ball is not 0-stacked
    two = from_facets([[1, 2, 3, 4, 5], [2, 3, 4, 5, 6]])
    v = is_k_stacked_ball(two, 0)
    assert v.refuted
    assert v.witness["interior_face"] == [2, 3, 4, 5]


def test_is_k_stacked_ball_rejects_non_balls():
    with pytest.raises(NotABall):
        is_k_stacked_ball(standard_sphere(2), 1)


def test_one_stacked_ball_verdicts(ziegler_b1, lutz_b1):
    assert is_one_stacked_ball(ziegler_b1).proved
    assert is_one_stacked_ball(lutz_b1).proved
    closed = is_one_stacked_ball(standard_sphere(2))
    assert closed.refuted


def test_one_stacked_requires_normal_pseudomanifold():
    wedge = from_facets([[1, 2, 3], [3, 4, 5]])
    with pytest.raises(NotNormalPseudomanifold):
        is_one_stacked_ball(wedge)


# -- shellability ----------------------------------------------------------------------


def test_standard_ball_zero_shelled():
    v = certify_k_shelled(standard_ball(3), 0)
    assert v.proved and v.certificate.length == 0


def test_lutz_ball_is_two_shelled(lutz_b2):
    v = certify_k_shelled(lutz_b2, 2)
    assert v.proved
    assert v.certificate.max_index() <= 1


def test_lutz_certificate_replays(lutz_b2):
    v = certify_k_shelled(lutz_b2, 2)
    assert v.proved
    for f in lutz_b2.facets:
        seed = Complex([f])
        if seed.digest == v.certificate.start_digest:
            final, _ = replay(v.certificate, seed)
            assert final == lutz_b2
            break
    else:
        pytest.fail("certificate seed facet not found")


def test_ziegler_ball_not_shellable(ziegler_b2):
    v = certify_k_shelled(ziegler_b2, 3)
    assert v.refuted
    assert v.budget_spent["nodes"] < 100_000


def test_shelled_search_budget_cutoff(ziegler_b2):
    v = certify_k_shelled(ziegler_b2, 3, SearchBudget(max_nodes=10))
    assert v.status == "UNKNOWN"


# -- stellatedness ----------------------------------------------------------------------


def test_standard_sphere_zero_stellated():
    v = certify_k_stellated(standard_sphere(3), 0)
    assert v.proved and v.certificate.length == 0


def test_zero_stellated_refuted_off_standard():
    s = grow_stacked_sphere(2, 2, random.Random(0))
    assert certify_k_stellated(s, 0).refuted


def test_ziegler_boundary_sphere_is_one_stellated(ziegler_s2):
    v = certify_k_stellated(ziegler_s2, 1)
    assert v.proved
    cert = v.certificate
    # the certificate replays from the standard sphere on its seed labels
    for f in stacked_ball_closure(ziegler_s2, 1).facets:
        seed = Complex([f]).boundary()
        if seed.digest == cert.start_digest:
            final, _ = replay(cert, seed)
            assert final == ziegler_s2
            break
    else:
        pytest.fail("no matching start sphere found")
    assert cert.max_index() == 0


def test_one_stellated_refuted_on_cross_polytope():
    v = certify_k_stellated(cross_polytope(2), 1)
    assert v.refuted


def test_stellated_cycles_always_proved():
    rng = random.Random(77)
    for n in (4, 5, 8):
        edges = [(i, (i + 1) % n) for i in range(n)]
        cyc = from_facets(edges)
        v = certify_k_stellated(cyc, 1)
        assert v.proved, (n, v)


def test_two_stellated_search_on_small_spheres():
    rng = random.Random(41)
    for _ in range(10):
        s, _ = grow_stellated_sphere(3, 2, rng.randrange(1, 5), rng)
        v = certify_k_stellated(s, 2)
        assert v.proved
        assert v.certificate.max_index() <= 1


def test_tilde_sphere_is_not_proved_two_stellated(lutz_b2):
    # two copies of (unique-ear ball * triangle), glued along the boundary
    # facet spanned by the shared ear: a 2-stacked 5-sphere that is not
    # 2-stellated, so the search must never prove it
    b = lutz_b2.join(standard_ball(2, ("a", "b", "c")))
    bp = b.rename({v: f"{v}p" for v in b.vertices})
    glued = bp.rename({f"{v}p": v for v in (2, 4, 5, "a", "b", "c")})
    btilde = Complex(set(b.facet_sets) | set(glued.facet_sets))
    assert len(btilde.vertices) == 16
    assert is_k_stacked_ball(btilde, 2).proved
    stilde = btilde.boundary()
    v = certify_k_stellated(stilde, 2, SearchBudget(max_moves=2_000, restarts=4))
    assert not v.proved


# -- stacked spheres -------------------------------------------------------------------


def test_stacked_sphere_closure_matches_oracle():
    s = from_facets([[1, 2, 3, 4], [2, 3, 4, 5]]).boundary()
    closure = stacked_ball_closure(s, 1)
    assert closure == oracle_subset_closure(s, 2)
    assert closure == from_facets([[1, 2, 3, 4], [2, 3, 4, 5]])
    v = certify_k_stacked_sphere(s, 1)
    assert v.proved


@pytest.mark.parametrize("d", [2, 3, 4])
def test_cross_polytope_not_almost_top_stacked(d):
    assert certify_k_stacked_sphere(cross_polytope(d), d - 1).refuted


def test_dfm_stacked_via_candidate(dfm, dfm_ball):
    v = certify_k_stacked_sphere(dfm, 2, candidate=dfm_ball)
    assert v.proved
    assert certify_k_stacked_sphere(dfm, 2).status == "UNKNOWN"


def test_stacked_sphere_proved_decisively():
    rng = random.Random(1)
    s = grow_stacked_sphere(3, 4, rng)
    v = certify_k_stacked_sphere(s, 1)
    assert v.proved


# -- flip scans -------------------------------------------------------------------------


def test_flip_scan_on_dfm(dfm):
    assert flip_scan(dfm, 1, 3) == []


def test_flip_scan_join_with_vertex_remains_unflippable(dfm_ball):
    tilde = dfm_ball.join(standard_ball(0, ("q",)))
    sphere = tilde.boundary()
    assert sphere.dimension == 4
    assert flip_scan(sphere, 1, 4) == []


def test_flip_scan_finds_reverse_stacking_moves():
    # both apexes of the 2-facet stacked sphere admit the reverse move
    s = from_facets([[1, 2, 3, 4], [2, 3, 4, 5]]).boundary()
    moves = flip_scan(s, 2, 2)
    assert {(frozenset(m.alpha), frozenset(m.beta)) for m in moves} == {
        (frozenset((1,)), frozenset((2, 3, 4))),
        (frozenset((5,)), frozenset((2, 3, 4))),
    }


# -- ears --------------------------------------------------------------------------------


def test_ear_scans(lutz_b2, ziegler_b2):
    assert ear_scan(lutz_b2) == [(2, 4, 5, 7)]
    assert ear_scan(ziegler_b2) == []


def test_single_facet_ball_is_its_own_ear():
    assert ear_scan(standard_ball(3)) == [(1, 2, 3, 4)]


def test_ear_scan_exact_mode_guard():
    five = standard_ball(5)
    grown = grow_shelled_ball(5, 1, 3, random.Random(0))[0]
    with pytest.raises(DimensionTooHigh):
        ear_scan(grown, mode="exact")
    # screen mode still works and finds the last-added leaf facets
    ears = ear_scan(grown, mode="screen")
    assert ears


# -- collapsing -------------------------------------------------------------------------


def test_collapse_standard_balls():
    for d in (1, 2, 3, 4):
        v = collapse(standard_ball(d))
        assert v.proved
        assert len(v.witness["collapse_steps"]) * 2 + 1 == sum(standard_ball(d).f_vector())


def test_collapse_ziegler(ziegler_b2):
    v = collapse(ziegler_b2)
    assert v.proved


def test_collapse_closed_complex_unknown():
    v = collapse(standard_sphere(2))
    assert v.status == "UNKNOWN"


# -- classes ------------------------------------------------------------------------------


@pytest.mark.parametrize("k,d", [(1, 2), (1, 3), (2, 4)])
def test_klee_novik_in_class_w(k, d):
    assert is_in_class(klee_novik(k, d), k, "W").proved


def test_stacked_spheres_in_class_k():
    s = grow_stacked_sphere(3, 3, random.Random(6))
    assert is_in_class(s, 1, "K").proved


def test_cross_polytope_fails_class_w_at_zero():
    assert is_in_class(cross_polytope(2), 0, "W").refuted


def test_stellated_spheres_have_stellated_links():
    rng = random.Random(51)
    for _ in range(10):
        k = rng.choice([1, 2])
        d = rng.choice([2, 3])
        k = min(k, d)
        s, _ = grow_stellated_sphere(d, k, rng.randrange(1, 5), rng)
        assert is_in_class(s, k, "W", use_symmetry=False).proved


# -- tightness ----------------------------------------------------------------------------


def test_tightness_beta_condition_arithmetic():
    from sx.certify import required_tight_beta

    assert required_tight_beta(1, 9) == (10, 10)
    num, den = required_tight_beta(1, 14)
    assert num % den != 0
    assert required_tight_beta(2, 12) == (35, 35)


def test_tightness_beta_condition_on_standard_sphere():
    s = standard_sphere(3)  # in W_1(3), 2-neighborly, orientable
    assert tightness_beta_condition(s, 1, 0).proved


def test_tightness_beta_condition_non_integer_refutes():
    s = grow_stacked_sphere(3, 9, random.Random(9))  # 14 vertices
    assert len(s.vertices) == 14
    v = tightness_beta_condition(s, 1, 0)
    assert v.refuted
    assert "not an integer" in v.witness["reason"]


def test_tight_balls_and_spheres():
    for d in (1, 2, 3):
        assert is_tight_exhaustive(standard_ball(d), 2).proved
        assert is_tight_exhaustive(standard_sphere(d), 0).proved


def test_cone_over_sphere_not_tight():
    cone = standard_ball(0, ("c",)).join(standard_sphere(2))
    v = is_tight_exhaustive(cone, 2)
    assert v.refuted
    assert v.witness == {"vertices": ["1", "2", "3", "4"], "dimension": 2}


def test_disconnected_induced_subcomplex_refutes_tightness():
    path = from_facets([[1, 2], [2, 3]])
    v = is_tight_exhaustive(path, 2)
    assert v.refuted
    assert v.witness["dimension"] == 0


def test_tightness_guard():
    with pytest.raises(GuardExceeded):
        is_tight_exhaustive(cross_polytope(8), 2, guard=16)


# -- structural cross-checks ------------------------------------


def test_monotonicity_in_k():
    rng = random.Random(63)
    for _ in range(8):
        dim = rng.choice([2, 3])
        ball, _ = grow_shelled_ball(dim, 1, rng.randrange(2, 6), rng)
        for k in range(1, dim + 1):
            assert certify_k_shelled(ball, k).proved
        for k in range(1, dim + 2):
            assert is_k_stacked_ball(ball, k).proved


def test_search_certificates_transport_to_boundary():
    # a proved shelling certificate moves the boundary sphere with no search
    from sx.moves import boundary_certificate

    rng = random.Random(29)
    for _ in range(10):
        dim = rng.choice([2, 3])
        k = min(rng.choice([1, 2]), dim)
        ball, _ = grow_shelled_ball(dim, k, rng.randrange(2, 6), rng)
        verdict = certify_k_shelled(ball, k)
        assert verdict.proved
        for f in ball.facets:
            seed = Complex([f])
            if seed.digest == verdict.certificate.start_digest:
                sphere_cert = boundary_certificate(verdict.certificate, seed)
                final, _ = replay(sphere_cert, seed.boundary())
                assert final == ball.boundary()
                assert sphere_cert.max_index() <= k - 1 or sphere_cert.length == 0
                break
        else:
            pytest.fail("certificate seed not found")


def test_stellated_refutes_non_spheres():
    torus = klee_novik(1, 2)
    v = certify_k_stellated(torus, 2)
    assert v.refuted
    assert "not a homology sphere" in v.witness["reason"]


def test_join_with_standard_ball_stays_two_stacked(dfm_ball):
    # joining a 2-stacked ball with a standard ball preserves 2-stackedness
    tall = dfm_ball.join(standard_ball(1, ("a", "b")))
    assert tall.dimension == 6
    assert is_k_stacked_ball(tall, 2).proved


def test_exhaustive_search_path():
    # force the memoized complete traversal by disabling the descent
    rng = random.Random(3)
    s, _ = grow_stellated_sphere(3, 2, 3, rng)
    budget = SearchBudget(restarts=0, max_nodes=50_000)
    v = certify_k_stellated(s, 2, budget, exhaustive=True)
    assert v.proved
    assert v.budget_spent.get("nodes", 0) > 0


def test_exhaustive_search_on_moveless_sphere_is_unknown(dfm_ball):
    # the join construction is unflippable, so the reverse-move DAG is a
    # single node and the search exhausts instantly without proving
    sphere = dfm_ball.join(standard_ball(0, ("q",))).boundary()
    v = certify_k_stellated(sphere, 2, SearchBudget(restarts=1), exhaustive=True)
    assert v.status == "UNKNOWN"


def test_ear_scan_on_paths():
    path = from_facets([[1, 2], [2, 3], [3, 4]])
    assert ear_scan(path) == [(1, 2), (3, 4)]


def test_top_degree_stackedness_always_proved():
    # every screened homology d-sphere is d-stacked via the vertex ball
    rng = random.Random(19)
    for d in (1, 2):
        s, _ = grow_stellated_sphere(d, min(2, d), rng.randrange(1, 4), rng)
        v = certify_k_stacked_sphere(s, d)
        assert v.proved
        assert "vertex_ball_apex" in v.witness


def test_dfm_links_form_class_k_at_top_degree(dfm):
    assert is_in_class(dfm, 2, "K").proved
