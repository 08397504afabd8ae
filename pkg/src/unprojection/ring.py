"""Weighted graded polynomial rings, monomial orders, and exact polynomials.

Monomials are dense exponent tuples.  Orders expose a sort key; a larger key
means a larger monomial.  Polynomials are immutable dicts from exponent tuple
to a nonzero field element.
"""

from fractions import Fraction

from .fields import QQ


def mono_mul(e1, e2):
    return tuple(a + b for a, b in zip(e1, e2))


def mono_div(e1, e2):
    """Quotient exponent e1 - e2, or None if e2 does not divide e1."""
    out = []
    for a, b in zip(e1, e2):
        if a < b:
            return None
        out.append(a - b)
    return tuple(out)


def mono_divides(e2, e1):
    return all(a >= b for a, b in zip(e1, e2))


def mono_lcm(e1, e2):
    return tuple(max(a, b) for a, b in zip(e1, e2))


class GrevLex:
    """Weighted graded reverse lexicographic order.

    Ties in weighted degree are broken by total degree and then classical
    reverse lex, so the order stays a well-order even if a weight-0 variable
    is present (affine mode).
    """

    kind = "grevlex"

    def __init__(self, ring):
        self.ring = ring
        self._memo = {}

    def key(self, e):
        k = self._memo.get(e)
        if k is None:
            k = (self.ring.wdeg(e), sum(e), tuple(-x for x in reversed(e)))
            self._memo[e] = k
        return k

    def __eq__(self, other):
        return isinstance(other, GrevLex) and other.ring is self.ring

    def __hash__(self):
        return hash(("grevlex", id(self.ring)))

    def __repr__(self):
        return "GrevLex(%s)" % ",".join(self.ring.names)


class BlockElimination:
    """Block order eliminating a front set of variables.

    Front exponents are compared first (by weighted grevlex on the front
    block), so intersecting a Groebner basis with the back subring computes
    elimination.
    """

    kind = "block-elimination"

    def __init__(self, ring, front):
        self.ring = ring
        self.front = tuple(sorted(front))
        fset = set(self.front)
        if not fset <= set(range(ring.nvars)):
            raise ValueError("front variables outside ring")
        self._memo = {}

    def key(self, e):
        k = self._memo.get(e)
        if k is None:
            fe = tuple(e[i] for i in self.front)
            fw = sum(self.ring.weights[i] * e[i] for i in self.front)
            k = (fw, sum(fe), tuple(-x for x in reversed(fe)),
                 self.ring.wdeg(e), sum(e), tuple(-x for x in reversed(e)))
            self._memo[e] = k
        return k

    def __eq__(self, other):
        return (isinstance(other, BlockElimination)
                and other.ring is self.ring and other.front == self.front)

    def __hash__(self):
        return hash(("block", id(self.ring), self.front))

    def __repr__(self):
        names = [self.ring.names[i] for i in self.front]
        return "BlockElimination(%s)" % ",".join(names)


def compare(e1, e2, order):
    """Three-way comparison of monomials: -1, 0, or 1."""
    k1, k2 = order.key(e1), order.key(e2)
    return (k1 > k2) - (k1 < k2)


class GradedRing:
    """A polynomial ring with positive integer weights on the variables.

    Weight 0 is tolerated only for the adjoined unprojection variable in
    affine mode; ``is_graded`` reports whether all weights are >= 1.
    """

    def __init__(self, names, weights, field=QQ):
        names = list(names)
        weights = list(weights)
        if len(names) != len(weights):
            raise ValueError("names and weights differ in length")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        if any(w < 0 for w in weights):
            raise ValueError("weights must be nonnegative")
        self.names = names
        self.weights = weights
        self.field = field
        self.nvars = len(names)
        self.order = GrevLex(self)
        self._index = {n: i for i, n in enumerate(names)}

    # -- element constructors -------------------------------------------

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.field.of(c)
        if not c:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name):
        i = self._index[name]
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self):
        return [self.var(n) for n in self.names]

    def poly(self, terms):
        """Build a polynomial from {exponent tuple: coefficient-like}."""
        clean = {}
        for e, c in terms.items():
            if len(e) != self.nvars:
                raise ValueError("exponent arity mismatch")
            c = self.field.of(c)
            if c:
                clean[tuple(e)] = c
        return Polynomial(self, clean)

    # -- degrees --------------------------------------------------------

    def wdeg(self, e):
        if len(e) != self.nvars:
            raise ValueError("exponent arity mismatch")
        return sum(w * x for w, x in zip(self.weights, e))

    @property
    def is_graded(self):
        return all(w >= 1 for w in self.weights)

    # -- ring surgery ---------------------------------------------------

    def extend(self, name, weight):
        """Append a fresh variable; returns the new ring."""
        if name in self._index:
            raise ValueError("duplicate variable name %r" % name)
        if weight < 0:
            raise ValueError("weight must be nonnegative")
        return GradedRing(self.names + [name], self.weights + [weight], self.field)

    def embed(self, f, big):
        """Embed a polynomial of this ring into an extension ring ``big``.

        The extension must list this ring's variables as a prefix.
        """
        if big.names[: self.nvars] != self.names:
            raise ValueError("not an extension of this ring")
        pad = (0,) * (big.nvars - self.nvars)
        return Polynomial(big, {e + pad: c for e, c in f.terms.items()})

    def drop(self, indices):
        """Remove the given variable indices; returns the smaller ring."""
        keep = [i for i in range(self.nvars) if i not in set(indices)]
        small = GradedRing([self.names[i] for i in keep],
                           [self.weights[i] for i in keep], self.field)
        return small, keep

    def restrict(self, f, small, keep):
        """Map f into the subring ``small`` (f must not use dropped variables)."""
        kset = set(keep)
        terms = {}
        for e, c in f.terms.items():
            if any(x and i not in kset for i, x in enumerate(e)):
                raise ValueError("polynomial involves a dropped variable")
            terms[tuple(e[i] for i in keep)] = c
        return Polynomial(small, terms)

    def with_field(self, field):
        return GradedRing(self.names, self.weights, field)

    def convert(self, f, other):
        """Re-coefficient a polynomial into a ring with the same variables.

        Rational coefficients must have denominator coprime to the modulus
        when converting to a prime field.
        """
        terms = {}
        for e, c in f.terms.items():
            if isinstance(c, Fraction):
                nc = other.field.of(c.numerator) / other.field.of(c.denominator)
            else:
                nc = other.field.of(c.v)
            terms[e] = nc
        return other.poly(terms)

    def __eq__(self, other):
        return (isinstance(other, GradedRing) and self.names == other.names
                and self.weights == other.weights and self.field == other.field)

    def __hash__(self):
        return hash((tuple(self.names), tuple(self.weights), self.field))

    def __repr__(self):
        vs = ", ".join("%s(%d)" % (n, w) for n, w in zip(self.names, self.weights))
        return "%s[%s]" % (self.field, vs)


class Polynomial:
    """An exact multivariate polynomial; immutable after construction."""

    __slots__ = ("ring", "terms", "_lt")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._lt = None

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((id(self.ring), frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                del out[e]
        return Polynomial(self.ring, out)

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                s = out.get(e)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial(self.ring, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c):
        c = self.ring.field.of(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: v * c for e, v in self.terms.items()})

    def term_mul(self, c, e):
        """Multiply by the term c * x^e."""
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring,
                          {mono_mul(e1, e): c1 * c for e1, c1 in self.terms.items()})

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("ring mismatch")

    # -- leading data ---------------------------------------------------

    def lead(self, order=None):
        """(exponent, coefficient) of the leading term under ``order``."""
        if not self.terms:
            raise ValueError("zero polynomial has no lead term")
        order = order or self.ring.order
        if self._lt is not None and self._lt[0] == order:
            return self._lt[1]
        e = max(self.terms, key=order.key)
        lt = (e, self.terms[e])
        self._lt = (order, lt)
        return lt

    def monic(self, order=None):
        e, c = self.lead(order)
        if c == self.ring.field.one:
            return self
        return self.scale(self.ring.field.one / c)

    # -- degrees --------------------------------------------------------

    def wdeg(self):
        """Weighted degree (max over terms)."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.ring.wdeg(e) for e in self.terms)

    def homogeneous_degree(self):
        """Common weighted degree of all terms, or None if not homogeneous."""
        if not self.terms:
            raise ValueError("zero polynomial")
        degs = {self.ring.wdeg(e) for e in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self):
        return bool(self.terms) and self.homogeneous_degree() is not None

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    # -- normalization and display --------------------------------------

    def primitive(self):
        """Over QQ: integer coefficients, content 1, positive lead coefficient."""
        if not self.terms or self.ring.field != QQ:
            return self
        from math import gcd
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        g = 0
        for c in self.terms.values():
            g = gcd(g, abs(c.numerator * den // c.denominator))
        s = Fraction(den, g)
        if self.lead()[1] < 0:
            s = -s
        return self.scale(s)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return format_poly(self)


def format_poly(f, order=None):
    if not f.terms:
        return "0"
    order = order or f.ring.order
    names = f.ring.names
    parts = []
    for e in sorted(f.terms, key=order.key, reverse=True):
        c = f.terms[e]
        factors = []
        for i, x in enumerate(e):
            if x == 1:
                factors.append(names[i])
            elif x > 1:
                factors.append("%s^%d" % (names[i], x))
        cs = str(c)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        if factors and cs == "1":
            body = "*".join(factors)
        elif factors:
            body = cs + "*" + "*".join(factors)
        else:
            body = cs
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)
