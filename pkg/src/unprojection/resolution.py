"""Minimal graded free resolutions, Betti tables, dimension theory, and
chain maps between resolutions.

Resolutions are built by iterated syzygy computation, pruning each syzygy
generating set to a minimal one, so the result is minimal by construction
(graded Nakayama); a unit-entry sweep is kept as a safety check.
"""

from .groebner import (GradedIdeal, ModuleVector, syzygies,
                       minimal_generating_set, express)


class BettiTable:
    """Ranks by twist of the free modules in a resolution."""

    def __init__(self, twists):
        self.counts = {}
        for i, tw in enumerate(twists):
            for j in tw:
                self.counts[(i, j)] = self.counts.get((i, j), 0) + 1
        self.length = len(twists) - 1

    def total(self, i):
        return sum(c for (a, _), c in self.counts.items() if a == i)

    def totals(self):
        return [self.total(i) for i in range(self.length + 1)]

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.counts == other.counts

    def to_grid(self):
        """Row-per-homological-step text grid: ``i: twist^count ...``."""
        lines = []
        for i in range(self.length + 1):
            cells = ["%d^%d" % (j, c) for (a, j), c in sorted(self.counts.items())
                     if a == i]
            lines.append("%d: %s" % (i, " ".join(cells)))
        return "\n".join(lines)

    def __repr__(self):
        return "Betti(%s)" % ", ".join(str(t) for t in self.totals())


class FreeResolution:
    """A chain of graded free modules F_0 <- F_1 <- ... with differentials.

    ``diffs[i]`` holds the columns of d_{i+1}: F_{i+1} -> F_i as module
    vectors of rank = rank(F_i); ``twists[i]`` lists the generator degrees
    of F_i.
    """

    def __init__(self, ring, twists, diffs):
        self.ring = ring
        self.twists = twists
        self.diffs = diffs

    @property
    def length(self):
        return len(self.diffs)

    def rank(self, i):
        return len(self.twists[i])

    def betti(self):
        return BettiTable(self.twists)

    def is_complex(self):
        """d_i o d_{i+1} = 0 for all i."""
        for i in range(1, len(self.diffs)):
            prev = self.diffs[i - 1]
            for col in self.diffs[i]:
                img = None
                for r, p in enumerate(col.comps):
                    if not p:
                        continue
                    t = _poly_scale(prev[r], p)
                    img = t if img is None else img + t
                if img is not None and not img.is_zero():
                    return False
        return True

    def has_unit_entries(self):
        for cols in self.diffs:
            for col in cols:
                for p in col.comps:
                    if p and p.is_constant():
                        return True
        return False


def _poly_scale(mv, p):
    from .groebner import ModuleVector
    return ModuleVector(mv.ring, [p * q for q in mv.comps])


def mat_apply(columns, coeffs):
    """Apply a matrix (list of columns) to a coefficient vector."""
    out = None
    for c, col in zip(coeffs, columns):
        if not c:
            continue
        t = _poly_scale(col, c)
        out = t if out is None else out + t
    if out is None:
        ring = columns[0].ring
        from .groebner import ModuleVector
        return ModuleVector(ring, [ring.zero()] * columns[0].rank)
    return out


def minimal_free_resolution(I):
    """Minimal graded free resolution of A/I over the ambient ring."""
    ring = I.ring
    if not ring.is_graded:
        raise ValueError("resolution refused: ring has a weight-0 variable "
                         "(affine mode)")
    gens = I.minimal_generators()
    twists = [[0]]
    diffs = []
    if gens:
        diffs.append([ModuleVector(ring, [g]) for g in gens])
        twists.append([g.homogeneous_degree() for g in gens])
    while diffs:
        cur = diffs[-1]
        tw = twists[-1]
        syz = syzygies(cur, twists=twists[-2])
        syz = minimal_generating_set(syz, twists=tw)
        if not syz:
            break
        syz = sorted(syz, key=lambda v: v.degree(tw))
        diffs.append(syz)
        twists.append([v.degree(tw) for v in syz])
        if len(diffs) > ring.nvars:
            raise AssertionError("resolution exceeds the Hilbert syzygy bound")
    res = FreeResolution(ring, twists, diffs)
    if res.has_unit_entries():
        raise AssertionError("resolution is not minimal")
    return res


def krull_dimension(I):
    """Krull dimension of A/I from the lead-term ideal (independent sets)."""
    ring = I.ring
    n = ring.nvars
    if I.is_zero():
        return n
    gb = I.groebner()
    supports = set()
    for g in gb:
        e = g.lead(I.order)[0]
        supports.add(frozenset(i for i, x in enumerate(e) if x))
    if frozenset() in supports:
        raise ValueError("unit ideal has no dimension")
    # drop non-minimal supports
    supports = [s for s in supports
                if not any(t < s for t in supports)]
    best = 0

    def rec(i, cur, size):
        nonlocal best
        if size + (n - i) <= best:
            return
        if i == n:
            best = max(best, size)
            return
        cur2 = cur | {i}
        if all(not (s <= cur2) for s in supports):
            rec(i + 1, cur2, size + 1)
        rec(i + 1, cur, size)

    rec(0, frozenset(), 0)
    return best


def codim(I):
    """Codimension (height) of a proper homogeneous ideal."""
    if I.is_unit():
        raise ValueError("unit ideal")
    return I.ring.nvars - krull_dimension(I)


def is_gorenstein_quotient(I, resolution=None):
    """Gorenstein certificate for A/I: pd = codim and last Betti number 1.

    Returns (flag, BettiTable witness).
    """
    if I.is_unit():
        raise ValueError("unit ideal")
    res = resolution or minimal_free_resolution(I)
    c = codim(I)
    flag = res.length == c and res.rank(res.length) == 1
    return flag, res.betti()

def canonical_degree(I, resolution=None):
    """The twist k with omega = O(k) for a graded Gorenstein quotient A/I."""
    res = resolution or minimal_free_resolution(I)
    if res.length > 0 and res.rank(res.length) != 1:
        raise ValueError("not a Gorenstein quotient (last rank != 1)")
    top = res.twists[-1][0] if res.length > 0 else 0
    return top - sum(I.ring.weights)


class ChainMap:
    """Per-step matrices phi_i: L_i -> M_i commuting with the differentials."""

    def __init__(self, resL, resM, mats):
        self.resL = resL
        self.resM = resM
        self.mats = mats  # mats[i]: list of columns (vectors in M_i)

    def verify(self):
        for i in range(1, len(self.mats)):
            dL = self.resL.diffs[i - 1]
            dM = self.resM.diffs[i - 1]
            for j, colL in enumerate(dL):
                left = mat_apply(self.mats[i - 1], list(colL.comps))
                right = mat_apply(dM, list(self.mats[i][j].comps))
                if not (left - right).is_zero():
                    return False
        return True


def lift_chain_map(resL, resM):
    """Lift the identity of A to a map of complexes L -> M.

    Requires that the ideal resolved by L is contained in the one resolved
    by M (otherwise the first lift fails).
    """
    ring = resL.ring
    if resM.ring != ring:
        raise ValueError("ring mismatch")
    phi0 = [ModuleVector(ring, [ring.one()])]
    mats = [phi0]
    for i in range(1, resL.length + 1):
        dL = resL.diffs[i - 1]
        dM = resM.diffs[i - 1]
        cols = []
        for colL in dL:
            v = mat_apply(mats[i - 1], list(colL.comps))
            coeffs = express(dM, v, twists=resM.twists[i - 1])
            if coeffs is None:
                raise ValueError("chain map lift failed: inclusion of ideals "
                                 "does not hold at step %d" % i)
            cols.append(ModuleVector(ring, coeffs))
        mats.append(cols)
    cm = ChainMap(resL, resM, mats)
    if not cm.verify():
        raise AssertionError("chain map does not commute")
    return cm


def dual_tail(chain_map, f_gens):
    """Numerator candidates read off the tail of a lifted chain map.

    ``f_gens`` are the chosen generators of the larger ideal, aligned with
    the columns of the first differential of M.  Requires length(M) =
    length(L) + 1 and rank-1 tails on both resolutions.  Returns a tuple
    (g_1, ..., g_k) aligned with f_gens.
    """
    resL, resM = chain_map.resL, chain_map.resM
    d = resL.length
    if resM.length != d + 1:
        raise ValueError("resolution lengths must differ by one")
    if resL.rank(d) != 1 or resM.rank(d + 1) != 1:
        raise ValueError("rank-1 tails required")
    w_col = resM.diffs[d][0]           # the single column of the last map of M
    t_col = chain_map.mats[d][0]       # phi_d of the generator of L_d
    k = len(f_gens)
    if w_col.rank != k:
        raise ValueError("tail rank does not match the generator count")
    g = [None] * k
    used = set()
    for i in range(k):
        wi = w_col.comps[i]
        if not wi:
            raise ValueError("degenerate tail column")
        matched = False
        for j, f in enumerate(f_gens):
            if j in used or not f:
                continue
            ei, ci = wi.lead()
            ej, cj = f.lead()
            if ei != ej:
                continue
            c = ci / cj
            if (wi - f.scale(c)).is_zero():
                g[j] = t_col.comps[i].scale(f.ring.field.one / c)
                used.add(j)
                matched = True
                break
        if not matched:
            raise ValueError("tail entry is not a scalar multiple of a "
                             "chosen generator")
    return tuple(g)
