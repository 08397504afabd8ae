import pytest

from unprojection.ring import GradedRing
from unprojection.groebner import GradedIdeal
from unprojection.unproject import (UnprojectionProblem, HypothesisError,
                                    validate_problem, compute_hom_generators,
                                    wiggle_to_injective, unproject, project,
                                    verify_certificates,
                                    kustin_miller_cross_check,
                                    solve_affine_change)


def nodal_problem():
    R = GradedRing(["x", "y"], [1, 1])
    x, y = R.gens()
    return UnprojectionProblem(R, GradedIdeal(R, [x * x - y * y]),
                               GradedIdeal(R, [x, y]))


def cubic_problem():
    R = GradedRing(["x", "y", "z", "w"], [1, 1, 1, 1])
    x, y, z, w = R.gens()
    A = z * z + y * w
    B = w * w + x * z
    return UnprojectionProblem(R, GradedIdeal(R, [x * B - y * A]),
                               GradedIdeal(R, [x, y]))


def test_validate_nodal_is_affine():
    p = validate_problem(nodal_problem())
    assert p.mode == "affine"
    assert p.k == 0


def test_validate_cubic_is_graded_degree_one():
    p = validate_problem(cubic_problem())
    assert p.mode == "graded"
    assert p.k == 1


def test_validate_rejects_principal_divisor():
    R = GradedRing(["x", "y"], [1, 1])
    x, y = R.gens()
    p = UnprojectionProblem(R, GradedIdeal(R, [x * y]), GradedIdeal(R, [x]))
    with pytest.raises(HypothesisError) as err:
        validate_problem(p)
    text = str(err.value)
    assert "principal" in text or "codimension" in text


def test_validate_rejects_missing_inclusion():
    R = GradedRing(["x", "y"], [1, 1])
    x, y = R.gens()
    p = UnprojectionProblem(R, GradedIdeal(R, [x * x]), GradedIdeal(R, [y]))
    with pytest.raises(HypothesisError) as err:
        validate_problem(p)
    assert "inclusion" in str(err.value)


def test_validate_rejects_forced_mode_mismatch():
    R = GradedRing(["x", "y"], [1, 1])
    x, y = R.gens()
    p = UnprojectionProblem(R, GradedIdeal(R, [x * x - y * y]),
                            GradedIdeal(R, [x, y]), mode="graded")
    with pytest.raises(HypothesisError) as err:
        validate_problem(p)
    assert "mode" in str(err.value)


def test_hom_generators_nodal():
    p = validate_problem(nodal_problem())
    hom = compute_hom_generators(p)
    assert str(hom.w) == "x"
    assert str(hom.q) == "y"
    assert hom.k == 0
    assert hom.wiggles == 0


def test_hom_generators_cubic():
    p = validate_problem(cubic_problem())
    hom = compute_hom_generators(p)
    assert str(hom.w) == "x"
    assert str(hom.q) == "z^2 + y*w"


def test_unproject_nodal():
    p = validate_problem(nodal_problem())
    res = unproject(p)
    assert [str(g) for g in res.ideal_y.gens] == \
        ["x^2 - y^2", "x*S - y", "y*S - x"]
    rep = verify_certificates(res)
    assert rep.passed()
    statuses = {c.name: c.status for c in rep.certificates}
    assert statuses["nzd-of-S"] == "pass"
    assert statuses["round-trip"] == "pass"
    assert statuses["gorenstein-of-Y"] == "skipped"
    assert statuses["hilbert-identity"] == "skipped"


def test_unproject_cubic_minimal_generators():
    p = validate_problem(cubic_problem())
    res = unproject(p)
    mg = res.minimal_y_generators()
    assert len(mg) == 2
    assert sorted(g.homogeneous_degree() for g in mg) == [2, 2]
    rep = verify_certificates(res)
    assert rep.passed()
    assert all(c.status == "pass" for c in rep.certificates)


def test_numerator_consistency():
    for problem in (nodal_problem(), cubic_problem()):
        p = validate_problem(problem)
        res = unproject(p)
        for f, h in zip(p.generators, res.numerators):
            assert p.ideal_x.contains(res.hom.w * h - res.hom.q * f)


def test_wiggle_on_reducible_quadric():
    """X = V(xy) needs a wiggle: the first degree-1 candidate q kills a
    component, and q + w restores injectivity."""
    R = GradedRing(["x", "y"], [1, 1])
    x, y = R.gens()
    p = UnprojectionProblem(R, GradedIdeal(R, [x * y]), GradedIdeal(R, [x, y]))
    validate_problem(p)
    hom = compute_hom_generators(p)
    assert hom.wiggles > 0
    assert str(hom.w) == "x + y"
    assert str(hom.q) == "2*x + y"
    res = unproject(p, hom)
    assert verify_certificates(res).passed()


def test_wiggle_noop_when_already_injective():
    p = validate_problem(cubic_problem())
    hom = compute_hom_generators(p)
    again = wiggle_to_injective(p, hom)
    assert again.q == hom.q and again.wiggles == 0


def test_project_round_trip():
    p = validate_problem(cubic_problem())
    res = unproject(p)
    back = project(res.ideal_y, res.s_name)
    ix = GradedIdeal(back.ring, [back.ring.poly(dict(g.terms))
                                 for g in p.ideal_x.gens])
    assert back.equals(ix)
    with pytest.raises(ValueError):
        project(res.ideal_y, "nope")


def test_fresh_unprojection_variable_name():
    R = GradedRing(["S", "t"], [1, 1])
    S, t = R.gens()
    p = UnprojectionProblem(R, GradedIdeal(R, [S * S - t * t]),
                            GradedIdeal(R, [S, t]))
    validate_problem(p)
    res = unproject(p)
    assert res.s_name not in ("S",)
    assert res.s_name in res.ext_ring.names


def test_cross_check_cubic():
    p = validate_problem(cubic_problem())
    res = unproject(p)
    ok, u, h = kustin_miller_cross_check(p, res)
    assert ok
    assert u
    assert h.is_zero()


def test_cross_check_detects_perturbed_numerators():
    """Adding f_1 to h_1 is exactly the coordinate change S -> S + h."""
    p = validate_problem(cubic_problem())
    res = unproject(p)
    z = p.ring.var("z")
    perturbed = [hi + z * fi for hi, fi in zip(res.numerators, p.generators)]
    ok, u, h = solve_affine_change(p, perturbed, res.numerators)
    assert ok
    # perturbed_i = u * h_i + h * f_i with u = 1, h = z
    assert str(h) == "z"


def test_w_choice_invariance_cubic():
    """Two admissible w give ideals identified by S -> uS + h."""
    p = validate_problem(cubic_problem())
    x = p.ring.var("x")
    y = p.ring.var("y")
    res1 = unproject(p, compute_hom_generators(p, w=x))
    res2 = unproject(p, compute_hom_generators(p, w=y))
    ok, u, h = solve_affine_change(p, res2.numerators, res1.numerators)
    assert ok and u
