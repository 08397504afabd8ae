"""Gorenstein unprojection: build s = q/w, form the extended ideal, and
certify the construction.

The Hom module of the divisor ideal into the dualising sheaf is realised as
the fractional ideal (1/w) * ((w) + I_X : I_D); its degree-k generator q
gives s = q/w, and the unprojection ideal is I_X extended plus the graph
relations S*f_i - h_i with q*f_i = w*h_i modulo I_X.
"""

import itertools

from . import linalg
from .ring import GradedRing
from .groebner import GradedIdeal, ModuleVector, GBEngine, express
from .resolution import (minimal_free_resolution, codim, is_gorenstein_quotient,
                         canonical_degree, lift_chain_map, dual_tail)
from .hilbert import hilbert_series, unprojection_series, series_equal, \
    monomials_of_degree

W_SEARCH_BUDGET = 200
WIGGLE_BUDGET = 200


class HypothesisError(Exception):
    """A named hypothesis of the construction fails on the input."""

    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__("; ".join(self.failures))


class UnprojectionProblem:
    """A pair of homogeneous ideals I_X subset I_D in a graded ring."""

    def __init__(self, ring, ideal_x, ideal_d, mode="auto", name=None):
        if ideal_x.ring != ring or ideal_d.ring != ring:
            raise ValueError("ideals must live in the ambient ring")
        if mode not in ("auto", "graded", "affine"):
            raise ValueError("mode must be auto, graded, or affine")
        self.ring = ring
        self.ideal_x = ideal_x
        self.ideal_d = ideal_d
        self.requested_mode = mode
        self.name = name
        self.generators = list(ideal_d.gens)   # the chosen f_i, as listed
        # filled in by validate()
        self.mode = None
        self.k = None
        self.res_x = None
        self.res_d = None
        self.k_x = None
        self.k_d = None


def validate_problem(p):
    """Check the construction hypotheses; raises HypothesisError on failure."""
    failures = []
    ix, idl = p.ideal_x, p.ideal_d
    if not all(idl.contains(g) for g in ix.gens):
        failures.append("inclusion: I_X is not contained in I_D")
    if idl.is_unit():
        failures.append("proper: I_D is the unit ideal")
    if failures:
        raise HypothesisError(failures)

    p.res_x = minimal_free_resolution(ix)
    p.res_d = minimal_free_resolution(idl)
    gor_x, _ = is_gorenstein_quotient(ix, p.res_x)
    gor_d, _ = is_gorenstein_quotient(idl, p.res_d)
    if not gor_x:
        failures.append("gorenstein-X: A/I_X is not Gorenstein")
    if not gor_d:
        failures.append("gorenstein-D: A/I_D is not Gorenstein")
    cx = codim(ix)
    cd = codim(idl)
    if cd != cx + 1:
        failures.append("codimension: codim I_D = %d, expected codim I_X + 1 = %d"
                        % (cd, cx + 1))
    if _count_generators_mod(idl, ix) <= 1:
        failures.append("non-principal: I_D is principal modulo I_X")
    if failures:
        raise HypothesisError(failures)

    p.k_x = canonical_degree(ix, p.res_x)
    p.k_d = canonical_degree(idl, p.res_d)
    p.k = p.k_x - p.k_d
    if p.k < 0:
        raise HypothesisError(["degree: k = k_X - k_D = %d is negative" % p.k])
    mode = "graded" if p.k >= 1 else "affine"
    if p.requested_mode != "auto" and p.requested_mode != mode:
        raise HypothesisError(["mode: requested %s but k = %d forces %s"
                               % (p.requested_mode, p.k, mode)])
    p.mode = mode
    return p


def _count_generators_mod(ideal_d, ideal_x):
    """Number of minimal generators of I_D modulo I_X (graded greedy)."""
    ring = ideal_d.ring
    eng = GBEngine(ring, rank=1)
    for g in ideal_x.gens:
        eng.add(ModuleVector(ring, [g]))
    eng.complete()
    count = 0
    for f in sorted(ideal_d.gens, key=lambda g: g.homogeneous_degree()):
        if eng.nf(ModuleVector(ring, [f])).is_zero():
            continue
        count += 1
        eng.add(ModuleVector(ring, [f]))
        eng.complete()
    return count


class HomGenerators:
    """The fraction s = q/w generating Hom(I, omega) beside the inclusion."""

    def __init__(self, w, q, k, wiggles=0):
        self.w = w
        self.q = q
        self.k = k
        self.wiggles = wiggles

    def __repr__(self):
        return "s = (%s) / (%s)" % (self.q, self.w)


def _regular_candidates(p):
    """Deterministic stream of candidate regular elements of I_D."""
    for f in p.generators:
        yield f
    # small integer combinations of generators of equal degree
    by_deg = {}
    for f in p.generators:
        by_deg.setdefault(f.homogeneous_degree(), []).append(f)
    coeffs = [1, -1, 2, -2, 3, -3]
    for d in sorted(by_deg):
        group = by_deg[d]
        if len(group) < 2:
            continue
        for combo in itertools.product([0] + coeffs, repeat=len(group)):
            if sum(1 for c in combo if c) < 2:
                continue
            g = p.ring.zero()
            for c, f in zip(combo, group):
                if c:
                    g = g + f.scale(c)
            if g:
                yield g


def find_regular_element(p):
    """First candidate w in I_D that is a non-zerodivisor modulo I_X."""
    tried = 0
    for w in _regular_candidates(p):
        tried += 1
        if p.ideal_x.is_nonzerodivisor(w):
            return w
        if tried >= W_SEARCH_BUDGET:
            break
    raise HypothesisError(["regular-element: no regular w in I_D found "
                           "within the search budget"])


def _is_injective(p, q):
    """s = q/w injective on I: (I_X : q) cap I_D lies inside I_X."""
    colon = p.ideal_x.quotient_element(q)
    inter = colon.intersect(p.ideal_d)
    return all(p.ideal_x.contains(g) for g in inter.gens)


def compute_hom_generators(p, w=None):
    """Find w and q so that s = q/w has degree k and generates the Hom
    module beside the inclusion.

    ``w`` forces a particular regular element instead of searching.
    """
    if p.mode is None:
        validate_problem(p)
    ring = p.ring
    if w is None:
        w = find_regular_element(p)
    elif not p.ideal_x.is_nonzerodivisor(w):
        raise ValueError("the supplied w is a zerodivisor modulo I_X")
    shifted = GradedIdeal(ring, [w] + p.ideal_x.gens)
    quot = shifted.quotient(p.ideal_d)
    target = w.homogeneous_degree() + p.k
    cands = [g for g in quot.minimal_generators()
             if g.homogeneous_degree() == target]
    cands.sort(key=lambda g: ring.order.key(g.lead()[0]), reverse=True)
    for q in cands:
        if shifted.contains(q):
            continue
        if _is_injective(p, q):
            return HomGenerators(w, q, p.k)
        h = wiggle_to_injective(p, HomGenerators(w, q, p.k))
        if h is not None:
            return h
    raise HypothesisError(["hom-generator: no generator of degree %d gives an "
                           "injective s" % target])


def wiggle_to_injective(p, hom):
    """Replace q by q + h*w for deterministic homogeneous h until injective.

    Returns the adjusted HomGenerators, or None if the budget runs out.
    """
    if _is_injective(p, hom.q):
        return hom
    ring = p.ring
    monos = sorted(monomials_of_degree(ring, p.k),
                   key=ring.order.key, reverse=True)
    shifted = GradedIdeal(ring, [hom.w] + p.ideal_x.gens)
    tried = 0
    for c in (1, -1, 2, -2, 3, -3):
        for e in monos:
            tried += 1
            if tried > WIGGLE_BUDGET:
                return None
            h = ring.poly({e: c})
            q2 = hom.q + h * hom.w
            if not q2 or shifted.contains(q2):
                continue
            if _is_injective(p, q2):
                return HomGenerators(hom.w, q2, p.k, wiggles=tried)
    return None


class UnprojectionResult:
    """The extended ring, the unprojection ideal, and the numerator data."""

    def __init__(self, problem, hom, ext_ring, s_name, numerators, ideal_y,
                 ideal_j):
        self.problem = problem
        self.hom = hom
        self.ext_ring = ext_ring
        self.s_name = s_name
        self.numerators = numerators     # h_i aligned with the f_i
        self.ideal_y = ideal_y
        self.ideal_j = ideal_j

    def minimal_y_generators(self):
        return self.ideal_y.minimal_generators()


def unproject(p, hom=None, s_name=None):
    """Form the unprojection ideal I_Y = I_X + (S f_i - h_i)."""
    if p.mode is None:
        validate_problem(p)
    if hom is None:
        hom = compute_hom_generators(p)
    ring = p.ring
    if s_name is None:
        s_name = "S"
        while s_name in ring.names:
            s_name = s_name + "_"
    cols = [ModuleVector(ring, [hom.w])] + \
        [ModuleVector(ring, [g]) for g in p.ideal_x.gens]
    numerators = []
    for f in p.generators:
        coeffs = express(cols, ModuleVector(ring, [hom.q * f]))
        if coeffs is None:
            raise AssertionError("q*f_i should lie in (w) + I_X")
        numerators.append(coeffs[0])
    ext = ring.extend(s_name, hom.k)
    s_var = ext.var(s_name)
    gens_y = [ring.embed(g, ext) for g in p.ideal_x.gens]
    for f, h in zip(p.generators, numerators):
        rel = s_var * ring.embed(f, ext) - ring.embed(h, ext)
        gens_y.append(rel)
    ideal_y = GradedIdeal(ext, gens_y)
    ideal_j = GradedIdeal(ring, p.ideal_x.gens + numerators)
    return UnprojectionResult(p, hom, ext, s_name, numerators, ideal_y, ideal_j)


def project(ideal_y, s_name):
    """Eliminate the unprojection variable; the inverse linear projection."""
    if s_name not in ideal_y.ring.names:
        raise ValueError("%r is not a variable of the ring" % s_name)
    return ideal_y.eliminate([s_name])


# -- certificates -------------------------------------------------------


class Certificate:
    def __init__(self, name, status, witness=None, reason=None):
        self.name = name
        self.status = status          # "pass" | "fail" | "skipped"
        self.witness = witness
        self.reason = reason

    def as_dict(self):
        d = {"name": self.name, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.reason is not None:
            d["reason"] = self.reason
        return d

    def __repr__(self):
        extra = " (%s)" % self.reason if self.reason else ""
        return "%s: %s%s" % (self.name, self.status, extra)


class CertificateReport:
    def __init__(self, certificates):
        self.certificates = certificates

    def passed(self):
        return all(c.status != "fail" for c in self.certificates)

    def by_name(self, name):
        for c in self.certificates:
            if c.name == name:
                return c
        return None

    def as_list(self):
        return [c.as_dict() for c in self.certificates]

    def __repr__(self):
        return "\n".join(repr(c) for c in self.certificates)


CERTIFICATE_NAMES = ("nzd-of-S", "gorenstein-of-Y", "codim-of-N",
                     "gorenstein-of-N", "hilbert-identity", "round-trip",
                     "cross-check")


def verify_certificates(result, skip=(), run_cross_check=True):
    """Run the conclusion certificates; failures are report entries."""
    p = result.problem
    graded = p.mode == "graded"
    certs = []

    def skipped(name, reason):
        certs.append(Certificate(name, "skipped", reason=reason))

    def run(name, fn):
        if name in skip:
            skipped(name, "skipped by request")
            return
        status, witness = fn()
        certs.append(Certificate(name, "pass" if status else "fail",
                                 witness=witness))

    s_var = result.ext_ring.var(result.s_name)

    def c_nzd():
        quot = result.ideal_y.quotient_element(s_var)
        ok = all(result.ideal_y.contains(g) for g in quot.gens)
        return ok, None
    run("nzd-of-S", c_nzd)

    if graded:
        def c_gor_y():
            ok, betti = is_gorenstein_quotient(result.ideal_y)
            return ok, {"betti": betti.totals(), "grid": betti.to_grid()}
        run("gorenstein-of-Y", c_gor_y)

        def c_codim_n():
            c = codim(result.ideal_j)
            want = codim(p.ideal_x) + 1
            return c == want, {"codim": c, "expected": want}
        run("codim-of-N", c_codim_n)

        def c_gor_n():
            ok, betti = is_gorenstein_quotient(result.ideal_j)
            return ok, {"betti": betti.totals()}
        run("gorenstein-of-N", c_gor_n)

        def c_hilbert():
            p_y = hilbert_series(result.ideal_y)
            p_x = hilbert_series(p.ideal_x, p.res_x)
            p_d = hilbert_series(p.ideal_d, p.res_d)
            rhs = unprojection_series(p_x, p_d, p.k)
            return series_equal(p_y, rhs), {"P_Y": repr(p_y), "rhs": repr(rhs)}
        run("hilbert-identity", c_hilbert)
    else:
        for name in ("gorenstein-of-Y", "codim-of-N", "gorenstein-of-N",
                     "hilbert-identity"):
            skipped(name, "affine mode, deg S = 0")

    def c_round_trip():
        back = project(result.ideal_y, result.s_name)
        # compare in the original ring
        target = GradedIdeal(back.ring, [
            p.ring.convert(g, back.ring) if back.ring != p.ring else g
            for g in p.ideal_x.gens]) if back.ring != p.ring else p.ideal_x
        return back.equals(target), None
    run("round-trip", c_round_trip)

    if graded and run_cross_check and "cross-check" not in skip:
        try:
            ok, u, h = kustin_miller_cross_check(p, result)
            certs.append(Certificate(
                "cross-check", "pass" if ok else "fail",
                witness=None if not ok else {"u": str(u), "h": str(h)}))
        except ValueError as exc:
            skipped("cross-check", str(exc))
    else:
        reason = ("affine mode, deg S = 0" if not graded
                  else "skipped by request")
        skipped("cross-check", reason)
    return CertificateReport(certs)


def kustin_miller_cross_check(p, result):
    """Independent recomputation of the numerators from the resolutions.

    Lifts the chain map between the resolutions of A/I_X and A/I_D, reads
    the candidate numerators off the dual tail, and solves for the affine
    change S -> u S + h identifying them with the constructed h_i modulo
    I_X.  Returns (ok, u, h).
    """
    if p.mode != "graded":
        raise ValueError("cross-check requires graded mode")
    res_x, res_d = p.res_x, p.res_d
    if res_d.length != res_x.length + 1:
        raise ValueError("resolution lengths must differ by one")
    if res_x.rank(res_x.length) != 1 or res_d.rank(res_d.length) != 1:
        raise ValueError("rank-1 resolution tails required")
    cm = lift_chain_map(res_x, res_d)
    g_cand = dual_tail(cm, p.generators)
    return solve_affine_change(p, list(g_cand), result.numerators)


def solve_affine_change(p, g_list, h_list):
    """Solve g_i = u h_i + h f_i modulo I_X with u a nonzero scalar.

    Unknowns are u and the coefficients of a homogeneous h of degree k.
    Returns (ok, u, h).
    """
    ring = p.ring
    field = ring.field
    monos = sorted(monomials_of_degree(ring, p.k), key=ring.order.key)
    ncols = 1 + len(monos)
    rows, rhs = [], []
    for f, g_i, h_i in zip(p.generators, g_list, h_list):
        nf_g = p.ideal_x.normal_form(g_i)
        nf_h = p.ideal_x.normal_form(h_i)
        shifts = [p.ideal_x.normal_form(ring.poly({e: 1}) * f) for e in monos]
        support = set(nf_g.terms) | set(nf_h.terms)
        for s in shifts:
            support |= set(s.terms)
        for e in sorted(support, key=ring.order.key):
            row = [nf_h.terms.get(e, field.zero)]
            row.extend(s.terms.get(e, field.zero) for s in shifts)
            rows.append(row)
            rhs.append(nf_g.terms.get(e, field.zero))
    if not rows:
        return False, None, None
    sol = linalg.solve(rows, rhs, field)
    if sol is None:
        return False, None, None
    if not sol[0]:
        for v in linalg.nullspace(rows, ncols, field):
            if v[0]:
                sol = [a + b for a, b in zip(sol, v)]
                break
        else:
            return False, None, None
    u = sol[0]
    h = ring.poly({e: c for e, c in zip(monos, sol[1:])})
    return True, u, h
