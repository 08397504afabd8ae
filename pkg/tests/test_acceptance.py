"""Acceptance gate: one test per criterion, each printing a PASS line.

Budgets are wall-clock seconds for the operations each criterion names,
measured on this machine during the run.
"""

import random
import time

import pytest

from unprojection.fields import PrimeField
from unprojection.ring import GradedRing
from unprojection.groebner import GradedIdeal
from unprojection.resolution import minimal_free_resolution, codim
from unprojection.hilbert import (HilbertSeries, hilbert_series,
                                  unprojection_series, series_equal,
                                  brute_dims, monomials_of_degree)
from unprojection.unproject import (validate_problem, compute_hom_generators,
                                    unproject, verify_certificates,
                                    kustin_miller_cross_check,
                                    solve_affine_change)
from unprojection.corpus import load

import test_groebner
import test_hilbert
import test_resolution


def build(name, field=None):
    p = load(name).to_problem(field)
    validate_problem(p)
    return p


@pytest.fixture(scope="module")
def cramer():
    t0 = time.monotonic()
    p = build("cramer")
    res = unproject(p)
    resolution = minimal_free_resolution(res.ideal_y)
    elapsed = time.monotonic() - t0
    return p, res, resolution, elapsed


@pytest.fixture(scope="module")
def cubic():
    p = build("cubic")
    return p, unproject(p)


def test_criterion_1_cramer_seven_by_twelve(cramer):
    p, res, resolution, elapsed = cramer
    mg = res.minimal_y_generators()
    degrees = sorted(g.homogeneous_degree() for g in mg)
    assert degrees == [2, 2, 2, 3, 3, 3, 3]
    assert resolution.betti().totals() == [1, 7, 12, 7, 1]
    assert elapsed < 120
    # prime-field run of the same construction and resolution
    t0 = time.monotonic()
    pp = build("cramer", field=PrimeField())
    rp = unproject(pp)
    bp = minimal_free_resolution(rp.ideal_y).betti().totals()
    fp_elapsed = time.monotonic() - t0
    assert bp == [1, 7, 12, 7, 1]
    assert fp_elapsed < 10
    print("ACCEPTANCE 1: PASS - Cramer 7x12, Betti (1,7,12,7,1), "
          "QQ %.1fs, F32003 %.1fs" % (elapsed, fp_elapsed))


def test_criterion_2_cubic_to_dp4(cubic):
    t0 = time.monotonic()
    p, res = cubic
    mg = res.minimal_y_generators()
    assert len(mg) == 2
    assert all(g.homogeneous_degree() == 2 for g in mg)
    series = hilbert_series(res.ideal_y)
    expected = HilbertSeries({0: 1, 1: 2, 2: 1}, (1, 1, 1))  # (1+t)^2/(1-t)^3
    assert series_equal(series, expected)
    back = res.ideal_y.eliminate([res.s_name])
    ix = GradedIdeal(back.ring, [back.ring.poly(dict(g.terms))
                                 for g in p.ideal_x.gens])
    assert back.equals(ix)
    elapsed = time.monotonic() - t0
    assert elapsed < 5
    print("ACCEPTANCE 2: PASS - dP4 in %.1fs" % elapsed)


def test_criterion_3_z6_to_x5():
    t0 = time.monotonic()
    p = build("z6")
    res = unproject(p)
    report = verify_certificates(res)
    assert report.passed()
    assert all(c.status == "pass" for c in report.certificates)
    assert p.k == 2
    # eliminate z as well: the X5 hypersurface in (x0, x1, x2, x3, S)
    flat = res.ideal_y.eliminate(["z"])
    small = flat.ring
    x0, x1, x2, x3, S = small.gens()
    a3 = x1 ** 3 + x2 ** 3 + x3 ** 3
    b5 = x1 ** 5 + x1 * x2 ** 2 * x3 ** 2 + x2 * x3 ** 4
    expected = GradedIdeal(small, [x0 * S * S + a3 * S + b5])
    assert flat.equals(expected)
    elapsed = time.monotonic() - t0
    assert elapsed < 60
    print("ACCEPTANCE 3: PASS - X5 relation recovered in %.1fs" % elapsed)


def test_criterion_4_nodal_affine():
    t0 = time.monotonic()
    p = build("nodal")
    res = unproject(p)
    assert [str(g) for g in res.ideal_y.gens] == \
        ["x^2 - y^2", "x*S - y", "y*S - x"]
    S = res.ext_ring.var(res.s_name)
    colon = res.ideal_y.quotient_element(S)
    assert colon.equals(res.ideal_y)
    back = res.ideal_y.eliminate([res.s_name])
    x, y = back.ring.gens()
    assert back.equals(GradedIdeal(back.ring, [x * x - y * y]))
    elapsed = time.monotonic() - t0
    assert elapsed < 1
    print("ACCEPTANCE 4: PASS - nodal curve in %.2fs" % elapsed)


def test_criterion_5_hilbert_identity_on_graded_corpus(cramer, cubic):
    checked = []
    for name, pair in (("cubic", cubic), ("cramer", cramer[:2])):
        p, res = pair[0], pair[1]
        p_y = hilbert_series(res.ideal_y)
        p_x = hilbert_series(p.ideal_x, p.res_x)
        p_d = hilbert_series(p.ideal_d, p.res_d)
        assert series_equal(p_y, unprojection_series(p_x, p_d, p.k)), name
        checked.append(name)
    p = build("z6")
    res = unproject(p)
    p_y = hilbert_series(res.ideal_y)
    p_x = hilbert_series(p.ideal_x, p.res_x)
    p_d = hilbert_series(p.ideal_d, p.res_d)
    assert series_equal(p_y, unprojection_series(p_x, p_d, p.k))
    checked.append("z6")
    print("ACCEPTANCE 5: PASS - Hilbert identity on %s" % ", ".join(checked))


def test_criterion_6_genus_five_series():
    short = HilbertSeries({0: 1, 1: 2, 2: 5, 3: 2, 4: 1}, (1, 1, 1))
    long_num = {0: 1, 3: -6, 4: -1, 5: 12, 6: -1, 7: -6, 10: 1}
    long_form = HilbertSeries(long_num, (1, 1, 1, 1, 1, 2, 2))
    assert series_equal(short, long_form)
    assert short.numerator == {0: 1, 1: 2, 2: 5, 3: 2, 4: 1}
    assert short.denominator == (1, 1, 1)
    print("ACCEPTANCE 6: PASS - genus-5 series forms agree; numerator "
          "(1 + 2t + 5t^2 + 2t^3 + t^4)/(1-t)^3")


def test_criterion_7_cross_check_oracle(cramer, cubic):
    p, res = cubic
    ok, u, h = kustin_miller_cross_check(p, res)
    assert ok and u
    pc, rc = cramer[0], cramer[1]
    ok, u, h = kustin_miller_cross_check(pc, rc)
    assert ok and u
    print("ACCEPTANCE 7: PASS - chain-map cross-check on cubic and Cramer")


def test_criterion_8_property_suites(cramer):
    # each named suite runs >= 100 randomized cases with a fixed seed
    test_groebner.test_buchberger_fixpoint_random()
    test_groebner.test_normal_form_idempotent_random()
    test_groebner.test_colon_random_property()
    test_groebner.test_elimination_random_soundness()
    test_resolution.test_complex_property_random()
    test_hilbert.test_brute_dims_matches_series_random()
    _betti_symmetry_suite(cramer)
    _w_invariance_suite()
    print("ACCEPTANCE 8: PASS - property suites (Buchberger fixpoint, NF "
          "idempotence, colon/elimination, resolution certificates, Betti "
          "symmetry, series-vs-oracle, w-invariance)")


def _betti_symmetry_suite(cramer):
    """Betti tables of Gorenstein quotients are twist-symmetric."""

    def assert_symmetric(resolution):
        counts = resolution.betti().counts
        length = resolution.length
        top = resolution.twists[-1][0]
        for (i, j), c in counts.items():
            assert counts.get((length - i, top - j)) == c

    assert_symmetric(cramer[2])
    for name in ("cubic", "z6"):
        p = build(name)
        res = unproject(p)
        assert_symmetric(minimal_free_resolution(res.ideal_y))
    # random small complete intersections are Gorenstein
    rng = random.Random(12)
    count = 0
    while count < 100:
        n = rng.choice([2, 3])
        R = GradedRing(["x", "y", "z"][:n], [1] * n)
        c = rng.randrange(1, n + 1)
        gens = []
        for _ in range(c):
            d = rng.randrange(1, 4)
            monos = monomials_of_degree(R, d)
            g = R.poly({rng.choice(monos): rng.randrange(-3, 4)
                        for _ in range(3)})
            if g:
                gens.append(g)
        if not gens:
            continue
        I = GradedIdeal(R, gens)
        if I.is_unit() or codim(I) != len(gens):
            continue   # not a regular sequence; skip
        assert_symmetric(minimal_free_resolution(I))
        count += 1


def _w_invariance_suite():
    """Different admissible w differ by S -> uS + h (solved exactly)."""
    cases = 0
    for name in ("cubic", "cramer", "nodal"):
        p = build(name)
        regular = [f for f in p.generators if p.ideal_x.is_nonzerodivisor(f)]
        base = unproject(p, compute_hom_generators(p, w=regular[0]))
        for w in regular[1:]:
            other = unproject(p, compute_hom_generators(p, w=w))
            ok, u, h = solve_affine_change(p, other.numerators,
                                           base.numerators)
            assert ok and u, (name, str(w))
            cases += 1
    assert cases >= 4
