"""Buchberger engine for graded ideals and submodules of free modules.

One engine serves ideals (rank-1 modules) and syzygy computations.  Basis
elements can carry trace representations in terms of the original
generators, which is how cofactor extraction, lifting, and Schreyer-style
syzygies are implemented without auxiliary variables.
"""

import heapq

from .ring import (GradedRing, Polynomial, BlockElimination, mono_mul,
                   mono_divides, mono_lcm)


class ModuleVector:
    """An element of a free module A^r: a tuple of polynomials."""

    __slots__ = ("ring", "comps", "_lt")

    def __init__(self, ring, comps):
        self.ring = ring
        self.comps = tuple(comps)
        self._lt = None

    @property
    def rank(self):
        return len(self.comps)

    def is_zero(self):
        return all(not p for p in self.comps)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (isinstance(other, ModuleVector) and self.ring == other.ring
                and self.comps == other.comps)

    def __add__(self, other):
        return ModuleVector(self.ring, [a + b for a, b in zip(self.comps, other.comps)])

    def __neg__(self):
        return ModuleVector(self.ring, [-a for a in self.comps])

    def __sub__(self, other):
        return self + (-other)

    def term_mul(self, c, e):
        return ModuleVector(self.ring, [p.term_mul(c, e) for p in self.comps])

    def scale(self, c):
        return ModuleVector(self.ring, [p.scale(c) for p in self.comps])

    def lead(self, order):
        """(component, exponent, coefficient) of the leading module term."""
        if self._lt is not None and self._lt[0] == order:
            return self._lt[1]
        best = None
        bestkey = None
        for comp, p in enumerate(self.comps):
            if not p:
                continue
            e, c = p.lead(order)
            k = (order.key(e), -comp)
            if best is None or k > bestkey:
                best, bestkey = (comp, e, c), k
        if best is None:
            raise ValueError("zero vector has no lead term")
        self._lt = (order, best)
        return best

    def degree(self, twists):
        """Common homogeneous degree with respect to column twists, or None."""
        degs = set()
        for comp, p in enumerate(self.comps):
            if not p:
                continue
            d = p.homogeneous_degree()
            if d is None:
                return None
            degs.add(d + twists[comp])
        if len(degs) > 1:
            return None
        return degs.pop() if degs else None

    def __repr__(self):
        return "(" + ", ".join(str(p) for p in self.comps) + ")"


def vector(ring, comps):
    return ModuleVector(ring, comps)


def unit_vector(ring, rank, i, poly=None):
    comps = [ring.zero()] * rank
    comps[i] = poly if poly is not None else ring.one()
    return ModuleVector(ring, comps)


class GBEngine:
    """Incremental Buchberger for a submodule of A^rank.

    Pair selection is the normal strategy: lowest S-polynomial degree first,
    ties broken by generator indices.  The chain criterion prunes old pairs;
    the product criterion is applied only at rank 1.
    """

    def __init__(self, ring, order=None, rank=1, twists=None, track=False):
        self.ring = ring
        self.order = order or ring.order
        self.rank = rank
        self.twists = list(twists) if twists is not None else [0] * rank
        self.track = track
        self.gens = []
        self.basis = []
        self.leads = []          # (comp, exp) per basis element
        self.by_comp = {}        # comp -> list of basis indices
        self.reps = []           # basis element = sum reps[k][i] * gens[i]
        self._heap = []
        self._pairset = {}       # (i, j) -> lcm exponent
        self._reduced = False

    # -- reduction ------------------------------------------------------

    def _find_reducer(self, comp, e, restrict=None, skip=None):
        for bi in self.by_comp.get(comp, ()):
            if bi == skip or (restrict is not None and bi not in restrict):
                continue
            if mono_divides(self.leads[bi][1], e):
                return bi
        return None

    def _reduce_dicts(self, w, restrict=None, skip=None):
        """Full normal form of the mutable term dicts ``w``.

        Returns (normal-form dicts, quotients {basis index: term dict}).
        """
        order = self.order
        out = [dict() for _ in range(self.rank)]
        quots = {}
        while True:
            best = None
            bestkey = None
            for comp in range(self.rank):
                d = w[comp]
                if not d:
                    continue
                e = max(d, key=order.key)
                k = (order.key(e), -comp)
                if best is None or k > bestkey:
                    best, bestkey = (comp, e), k
            if best is None:
                break
            comp, e = best
            c = w[comp][e]
            bi = self._find_reducer(comp, e, restrict, skip)
            if bi is None:
                out[comp][e] = c
                del w[comp][e]
                continue
            diff = tuple(a - b for a, b in zip(e, self.leads[bi][1]))
            g = self.basis[bi]
            for gc in range(self.rank):
                gterms = g.comps[gc].terms
                if not gterms:
                    continue
                d = w[gc]
                for ge, gco in gterms.items():
                    ne = mono_mul(ge, diff)
                    s = d.get(ne)
                    s = -(c * gco) if s is None else s - c * gco
                    if s:
                        d[ne] = s
                    elif ne in d:
                        del d[ne]
            qd = quots.setdefault(bi, {})
            s = qd.get(diff)
            s = c if s is None else s + c
            if s:
                qd[diff] = s
            elif diff in qd:
                del qd[diff]
        return out, quots

    def _to_dicts(self, v):
        return [dict(p.terms) for p in v.comps]

    def _from_dicts(self, dicts):
        return ModuleVector(self.ring, [Polynomial(self.ring, d) for d in dicts])

    def nf(self, v):
        out, _ = self._reduce_dicts(self._to_dicts(v))
        return self._from_dicts(out)

    def reduce_with_quotients(self, v):
        """Normal form plus the quotients over the basis: v = nf + sum q_k b_k."""
        out, quots = self._reduce_dicts(self._to_dicts(v))
        qpolys = {k: Polynomial(self.ring, d) for k, d in quots.items() if d}
        return self._from_dicts(out), qpolys

    # -- basis growth ---------------------------------------------------

    def add(self, v):
        """Adjoin a generator; reduces it against the current basis first."""
        if v.rank != self.rank:
            raise ValueError("rank mismatch")
        gi = len(self.gens)
        self.gens.append(v)
        if self.track:
            for rep in self.reps:
                rep.append(self.ring.zero())
        if v.is_zero():
            return
        out, quots = self._reduce_dicts(self._to_dicts(v))
        nf = self._from_dicts(out)
        if nf.is_zero():
            return
        rep = None
        if self.track:
            rep = [self.ring.zero()] * len(self.gens)
            rep[gi] = self.ring.one()
            for k, qd in quots.items():
                q = Polynomial(self.ring, qd)
                rep = [r - q * s for r, s in zip(rep, self.reps[k])]
        self._install(nf, rep)

    def _install(self, nf, rep):
        comp, e, c = nf.lead(self.order)
        inv = self.ring.field.one / c
        nf = nf.scale(inv)
        if rep is not None:
            rep = [r.scale(inv) for r in rep]
        t = len(self.basis)
        self._update_pairs(t, comp, e)
        self.basis.append(nf)
        self.leads.append((comp, e))
        self.by_comp.setdefault(comp, []).append(t)
        if self.track:
            self.reps.append(rep if rep is not None else [])
        self._reduced = False

    def _pair_degree(self, lcm, comp):
        return self.ring.wdeg(lcm) + self.twists[comp]

    def _update_pairs(self, t, comp, e):
        # chain criterion on existing pairs
        for (i, j), lcm in list(self._pairset.items()):
            if self.leads[i][0] != comp:
                continue
            if mono_divides(e, lcm):
                lij = lcm
                lit = mono_lcm(self.leads[i][1], e)
                ljt = mono_lcm(self.leads[j][1], e)
                if lit != lij and ljt != lij:
                    del self._pairset[(i, j)]
        for i, (ci, ei) in enumerate(self.leads):
            if ci != comp:
                continue
            lcm = mono_lcm(ei, e)
            if self.rank == 1 and lcm == mono_mul(ei, e):
                continue  # product criterion (valid for ideals)
            self._pairset[(i, t)] = lcm
            heapq.heappush(self._heap, (self._pair_degree(lcm, comp), i, t))

    def complete(self):
        """Process all pending S-pairs (Buchberger completion)."""
        while self._heap:
            _, i, j = heapq.heappop(self._heap)
            lcm = self._pairset.pop((i, j), None)
            if lcm is None:
                continue
            sp = self._spair(i, j, lcm)
            out, quots = self._reduce_dicts(self._to_dicts(sp))
            nf = self._from_dicts(out)
            if nf.is_zero():
                continue
            rep = None
            if self.track:
                ei = tuple(a - b for a, b in zip(lcm, self.leads[i][1]))
                ej = tuple(a - b for a, b in zip(lcm, self.leads[j][1]))
                one = self.ring.field.one
                rep = [ri.term_mul(one, ei) - rj.term_mul(one, ej)
                       for ri, rj in zip(self.reps[i], self.reps[j])]
                for k, qd in quots.items():
                    q = Polynomial(self.ring, qd)
                    rep = [r - q * s for r, s in zip(rep, self.reps[k])]
            self._install(nf, rep)

    def _spair(self, i, j, lcm):
        one = self.ring.field.one
        ei = tuple(a - b for a, b in zip(lcm, self.leads[i][1]))
        ej = tuple(a - b for a, b in zip(lcm, self.leads[j][1]))
        return self.basis[i].term_mul(one, ei) - self.basis[j].term_mul(one, ej)

    # -- canonical form -------------------------------------------------

    def interreduce(self):
        """Replace the basis with the minimal reduced Groebner basis."""
        self.complete()
        if self._reduced:
            return
        idx = sorted(range(len(self.basis)),
                     key=lambda k: (self.order.key(self.leads[k][1]), -self.leads[k][0]))
        keep = []
        for k in idx:
            ck, ek = self.leads[k]
            if any(self.leads[m][0] == ck and mono_divides(self.leads[m][1], ek)
                   for m in keep):
                continue
            keep.append(k)
        kept = set(keep)
        new_basis, new_leads, new_reps = [], [], []
        for k in keep:
            out, quots = self._reduce_dicts(self._to_dicts(self.basis[k]),
                                            restrict=kept, skip=k)
            nf = self._from_dicts(out)
            rep = None
            if self.track:
                rep = list(self.reps[k])
                for m, qd in quots.items():
                    q = Polynomial(self.ring, qd)
                    rep = [r - q * s for r, s in zip(rep, self.reps[m])]
            comp, e, c = nf.lead(self.order)
            inv = self.ring.field.one / c
            new_basis.append(nf.scale(inv))
            new_leads.append((comp, e))
            if self.track:
                new_reps.append([r.scale(inv) for r in rep])
        self.basis = new_basis
        self.leads = new_leads
        self.reps = new_reps
        self.by_comp = {}
        for t, (comp, _) in enumerate(self.leads):
            self.by_comp.setdefault(comp, []).append(t)
        self._reduced = True


# -- module-level operations --------------------------------------------


def syzygies(vectors, order=None, twists=None):
    """Generators of the kernel of the map A^s -> A^r given by ``vectors``.

    Returns homogeneous vectors of rank s = len(vectors).  Uses Schreyer's
    theorem: every S-pair reduction of a Groebner basis of the column module
    yields a syzygy of the basis, and those pull back to the input columns
    through the trace representations.
    """
    if not vectors:
        return []
    ring = vectors[0].ring
    rank = vectors[0].rank
    eng = GBEngine(ring, order, rank, twists, track=True)
    for v in vectors:
        eng.add(v)
    eng.complete()
    gb, reps = eng.basis, eng.reps
    t = len(gb)
    s = len(vectors)
    one = ring.field.one
    zero = ring.zero()
    syz_over_gb = []
    for i in range(t):
        ci, ei = eng.leads[i]
        for j in range(i + 1, t):
            cj, ej = eng.leads[j]
            if ci != cj:
                continue
            lcm = mono_lcm(ei, ej)
            sp = eng._spair(i, j, lcm)
            nfv, quots = eng.reduce_with_quotients(sp)
            if not nfv.is_zero():
                raise AssertionError("S-pair of a completed basis did not reduce to 0")
            z = [zero] * t
            z[i] = z[i] + ring.poly({tuple(a - b for a, b in zip(lcm, ei)): one})
            z[j] = z[j] - ring.poly({tuple(a - b for a, b in zip(lcm, ej)): one})
            for k, q in quots.items():
                z[k] = z[k] - q
            syz_over_gb.append(z)
    # originals over the basis: V[k][j] with gen_j = sum_k V[k][j] gb_k
    V = []
    for v in vectors:
        nfv, quots = eng.reduce_with_quotients(v)
        if not nfv.is_zero():
            raise AssertionError("generator does not reduce to 0 against its basis")
        V.append(quots)
    out = []
    for z in syz_over_gb:
        comps = [zero] * s
        for k, zk in enumerate(z):
            if not zk:
                continue
            for i in range(s):
                u = reps[k][i]
                if u:
                    comps[i] = comps[i] + u * zk
        mv = ModuleVector(ring, comps)
        if mv:
            out.append(mv)
    for j in range(s):
        comps = [zero] * s
        comps[j] = ring.one()
        for k, q in V[j].items():
            for i in range(s):
                u = reps[k][i]
                if u:
                    comps[i] = comps[i] - u * q
        mv = ModuleVector(ring, comps)
        if mv:
            out.append(mv)
    return out


def express(columns, v, order=None, twists=None):
    """Coefficients c with v = sum c_i * columns_i, or None if not a member."""
    ring = v.ring
    eng = GBEngine(ring, order, v.rank, twists, track=True)
    for c in columns:
        eng.add(c)
    eng.complete()
    nfv, quots = eng.reduce_with_quotients(v)
    if not nfv.is_zero():
        return None
    coeffs = [ring.zero()] * len(columns)
    for k, q in quots.items():
        for i in range(len(columns)):
            u = eng.reps[k][i]
            if u:
                coeffs[i] = coeffs[i] + u * q
    return coeffs


def minimal_generating_set(vectors, order=None, twists=None):
    """Greedy minimal generating set of a graded submodule (graded Nakayama).

    Processes generators by ascending degree and drops any that the kept
    ones already generate.  Input vectors must be homogeneous.
    """
    if not vectors:
        return []
    ring = vectors[0].ring
    tw = twists if twists is not None else [0] * vectors[0].rank
    degs = []
    for v in vectors:
        d = v.degree(tw)
        if d is None:
            raise ValueError("non-homogeneous generator")
        degs.append(d)
    idx = sorted(range(len(vectors)), key=lambda i: (degs[i], i))
    eng = GBEngine(ring, order, vectors[0].rank, tw, track=False)
    kept = []
    for i in idx:
        v = vectors[i]
        if eng.nf(v).is_zero():
            continue
        kept.append(v)
        eng.add(v)
        eng.complete()
    return kept


# -- graded ideals ------------------------------------------------------


class GradedIdeal:
    """A homogeneous ideal with a cached reduced Groebner basis per order."""

    def __init__(self, ring, gens, order=None, check_homogeneous=True):
        self.ring = ring
        cleaned = []
        for g in gens:
            if not isinstance(g, Polynomial) or g.ring != ring:
                raise ValueError("generator not in the ring")
            if not g:
                continue
            if check_homogeneous and g.homogeneous_degree() is None:
                degs = sorted({ring.wdeg(e) for e in g.terms})
                raise ValueError(
                    "non-homogeneous generator %s (term degrees %s)" % (g, degs))
            cleaned.append(g)
        self.gens = cleaned
        self.order = order or ring.order
        self._engines = {}

    # -- basic predicates ------------------------------------------------

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        gb = self.groebner()
        return any(g.is_constant() for g in gb)

    # -- Groebner machinery ----------------------------------------------

    def engine(self, order=None):
        order = order or self.order
        eng = self._engines.get(order)
        if eng is None:
            eng = GBEngine(self.ring, order, rank=1)
            for g in self.gens:
                eng.add(ModuleVector(self.ring, [g]))
            eng.complete()
            eng.interreduce()
            self._engines[order] = eng
        return eng

    def groebner(self, order=None):
        """Minimal reduced monic Groebner basis, sorted by descending lead."""
        eng = self.engine(order)
        order = order or self.order
        polys = [v.comps[0] for v in eng.basis]
        return sorted(polys, key=lambda p: order.key(p.lead(order)[0]), reverse=True)

    def normal_form(self, f, order=None):
        if f.ring != self.ring:
            raise ValueError("ring mismatch")
        eng = self.engine(order)
        return eng.nf(ModuleVector(self.ring, [f])).comps[0]

    def contains(self, f):
        if not f:
            return True
        return self.normal_form(f).is_zero()

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.gens)

    def equals(self, other):
        if self.ring != other.ring:
            return False
        return self.groebner() == other.groebner()

    def minimal_generators(self):
        vecs = [ModuleVector(self.ring, [g]) for g in self.gens]
        kept = minimal_generating_set(vecs, self.order)
        return [v.comps[0] for v in kept]

    # -- ideal operations -------------------------------------------------

    def quotient_element(self, g):
        """(I : g) via syzygies of the generators together with g."""
        if not g:
            raise ValueError("quotient by zero")
        if g.ring != self.ring:
            raise ValueError("ring mismatch")
        if not self.gens:
            return GradedIdeal(self.ring, [], self.order)
        vecs = [ModuleVector(self.ring, [f]) for f in self.gens]
        vecs.append(ModuleVector(self.ring, [g]))
        syz = syzygies(vecs, self.order)
        out = [s.comps[-1] for s in syz if s.comps[-1]]
        return GradedIdeal(self.ring, out, self.order, check_homogeneous=False)

    def intersect(self, other):
        """I cap J via syzygies of the concatenated generator lists."""
        if self.ring != other.ring:
            raise ValueError("ring mismatch")
        if not self.gens or not other.gens:
            return GradedIdeal(self.ring, [], self.order)
        vecs = ([ModuleVector(self.ring, [f]) for f in self.gens]
                + [ModuleVector(self.ring, [g]) for g in other.gens])
        syz = syzygies(vecs, self.order)
        n = len(self.gens)
        out = []
        for s in syz:
            h = self.ring.zero()
            for i in range(n):
                if s.comps[i]:
                    h = h + s.comps[i] * self.gens[i]
            if h:
                out.append(h)
        return GradedIdeal(self.ring, out, self.order, check_homogeneous=False)

    def quotient(self, other):
        """(I : g) for a polynomial, or (I : J) for an ideal."""
        if isinstance(other, Polynomial):
            return self.quotient_element(other)
        result = None
        for g in other.gens:
            q = self.quotient_element(g)
            result = q if result is None else result.intersect(q)
        if result is None:
            raise ValueError("quotient by the zero ideal")
        return result

    def is_nonzerodivisor(self, f):
        """True iff multiplication by f is injective on the quotient ring."""
        if not f:
            raise ValueError("zero is a zerodivisor")
        q = self.quotient_element(f)
        return all(self.contains(g) for g in q.gens)

    def eliminate(self, front_names):
        """Generators of I intersected with the subring without front_names."""
        front = [self.ring._index[n] for n in front_names]
        if not front:
            return self
        order = BlockElimination(self.ring, front)
        gb = self.groebner(order)
        fset = set(front)
        small, keep = self.ring.drop(front)
        out = []
        for g in gb:
            if all(not any(e[i] for i in fset) for e in g.terms):
                out.append(self.ring.restrict(g, small, keep))
        return GradedIdeal(small, out)

    def extend_to(self, big_ring):
        """The extension ideal in a ring with appended variables."""
        return GradedIdeal(big_ring, [self.ring.embed(g, big_ring) for g in self.gens],
                           check_homogeneous=False)

    def __repr__(self):
        return "GradedIdeal(%s)" % ", ".join(str(g) for g in self.gens)
