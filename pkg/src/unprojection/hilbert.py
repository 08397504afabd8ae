"""Exact Hilbert/Poincare series of graded quotients.

A series is numerator / prod (1 - t^a) with an integer-coefficient
numerator; the denominator is a multiset of positive weights.  brute_dims
is the independent Macaulay-matrix oracle: graded-piece dimensions by
linear algebra only.
"""

from . import linalg
from .resolution import minimal_free_resolution


# -- integer polynomials in t (dicts degree -> int) ----------------------

def tp_mul(p, q):
    out = {}
    for a, ca in p.items():
        for b, cb in q.items():
            out[a + b] = out.get(a + b, 0) + ca * cb
    return {k: v for k, v in out.items() if v}

def tp_sub(p, q):
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) - v
        if not out[k]:
            del out[k]
    return out

def tp_add(p, q):
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + v
        if not out[k]:
            del out[k]
    return out

def tp_divide_by_cyclo(p, a):
    """Exact quotient p / (1 - t^a), or None if it does not divide."""
    # synthetic division by ascending degree: q_d = p_d + q_{d-a}
    if not p:
        return {}
    q = {}
    top = max(p)
    for d in range(top + 1):
        c = p.get(d, 0) + q.get(d - a, 0)
        if c:
            q[d] = c
    # remainder check: q must vanish above top - a
    for d in list(q):
        if d > top - a:
            return None
    return q

def tp_str(p):
    if not p:
        return "0"
    parts = []
    for d in sorted(p):
        c = p[d]
        if d == 0:
            body = str(abs(c))
        else:
            mono = "t" if d == 1 else "t^%d" % d
            body = mono if abs(c) == 1 else "%d*%s" % (abs(c), mono)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


class HilbertSeries:
    """numerator / prod_{a in denom} (1 - t^a), kept in cancelled form."""

    def __init__(self, numerator, denominator):
        num = {k: v for k, v in numerator.items() if v}
        den = sorted(denominator)
        # cancel common (1 - t^a) factors
        changed = True
        while changed and num:
            changed = False
            for i, a in enumerate(den):
                q = tp_divide_by_cyclo(num, a)
                if q is not None:
                    num = q
                    del den[i]
                    changed = True
                    break
        self.numerator = num
        self.denominator = tuple(den)

    def is_zero(self):
        return not self.numerator

    def __eq__(self, other):
        return series_equal(self, other)

    def __add__(self, other):
        den = _lcm_multiset(self.denominator, other.denominator)
        n1 = _scale_to(self, den)
        n2 = _scale_to(other, den)
        return HilbertSeries(tp_add(n1, n2), den)

    def scale_monomial(self, k):
        """Multiply the series by t^k."""
        return HilbertSeries({d + k: c for d, c in self.numerator.items()},
                             self.denominator)

    def expand(self, d_max):
        """Power-series coefficients up to degree d_max."""
        coeffs = [0] * (d_max + 1)
        for d, c in self.numerator.items():
            if 0 <= d <= d_max:
                coeffs[d] += c
        for a in self.denominator:
            # multiply by 1/(1 - t^a) = 1 + t^a + t^{2a} + ...
            for d in range(a, d_max + 1):
                coeffs[d] += coeffs[d - a]
        return coeffs

    def __repr__(self):
        if not self.denominator:
            return tp_str(self.numerator)
        den = "".join("(1-t^%d)" % a if a != 1 else "(1-t)"
                      for a in self.denominator)
        return "(%s) / %s" % (tp_str(self.numerator), den)


def _lcm_multiset(d1, d2):
    out = []
    from collections import Counter
    c1, c2 = Counter(d1), Counter(d2)
    for a in sorted(set(c1) | set(c2)):
        out.extend([a] * max(c1[a], c2[a]))
    return tuple(out)

def _scale_to(s, den):
    from collections import Counter
    extra = Counter(den) - Counter(s.denominator)
    num = dict(s.numerator)
    for a, m in extra.items():
        for _ in range(m):
            num = tp_mul(num, {0: 1, a: -1})
    return num


def series_equal(p, q):
    """Exact equality as rational functions (cross-multiplied identity)."""
    den = _lcm_multiset(p.denominator, q.denominator)
    return _scale_to(p, den) == _scale_to(q, den)


def hilbert_series(I, resolution=None):
    """Series of A/I from a free resolution (alternating twist sum)."""
    ring = I.ring
    if not ring.is_graded:
        raise ValueError("Hilbert series requires a positively graded ring")
    res = resolution or minimal_free_resolution(I)
    num = {}
    sign = 1
    for tw in res.twists:
        for j in tw:
            num[j] = num.get(j, 0) + sign
        sign = -sign
    return HilbertSeries(num, tuple(ring.weights))


def unprojection_series(p_x, p_d, k):
    """P_X + t^k / (1 - t^k) * P_D, in canonical form."""
    if k <= 0:
        raise ValueError("the series identity requires deg s = k > 0")
    extra = HilbertSeries({d + k: c for d, c in p_d.numerator.items()},
                          tuple(p_d.denominator) + (k,))
    return p_x + extra


def monomials_of_degree(ring, n):
    """All exponent tuples of weighted degree n (dense enumeration)."""
    weights = ring.weights
    out = []

    def rec(i, rem, cur):
        if i == len(weights):
            if rem == 0:
                out.append(tuple(cur))
            return
        w = weights[i]
        if w == 0:
            raise ValueError("cannot enumerate monomials with a weight-0 variable")
        for e in range(rem // w + 1):
            cur.append(e)
            rec(i + 1, rem - e * w, cur)
            cur.pop()

    rec(0, n, [])
    return out


def brute_dims(I, d_max):
    """dim_k (A/I)_n for n = 0..d_max by Macaulay-matrix rank only."""
    if d_max < 0:
        raise ValueError("d_max must be nonnegative")
    ring = I.ring
    if not ring.is_graded:
        raise ValueError("graded mode required")
    field = ring.field
    gens = [(g, g.homogeneous_degree()) for g in I.gens]
    if any(d == 0 for _, d in gens):
        raise ValueError("non-proper ideal")
    dims = []
    for n in range(d_max + 1):
        basis = monomials_of_degree(ring, n)
        index = {e: i for i, e in enumerate(basis)}
        rows = []
        for g, d in gens:
            if d > n:
                continue
            for m in monomials_of_degree(ring, n - d):
                row = [field.zero] * len(basis)
                for e, c in g.terms.items():
                    row[index[tuple(a + b for a, b in zip(e, m))]] = c
                rows.append(row)
        r = linalg.rank(rows, len(basis), field) if rows else 0
        dims.append(len(basis) - r)
    return dims
