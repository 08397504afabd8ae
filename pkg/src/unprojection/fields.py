"""Exact coefficient fields: the rationals and prime fields F_p."""

from fractions import Fraction

DEFAULT_PRIME = 32003


class RationalField:
    """The field of rationals, with Fraction elements."""

    name = "QQ"

    def of(self, n):
        return Fraction(n)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class FpElement:
    """An element of F_p, reduced to [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def __add__(self, other):
        return FpElement(self.v + other.v, self.p)

    def __sub__(self, other):
        return FpElement(self.v - other.v, self.p)

    def __neg__(self):
        return FpElement(-self.v, self.p)

    def __mul__(self, other):
        return FpElement(self.v * other.v, self.p)

    def __truediv__(self, other):
        return FpElement(self.v * pow(other.v, self.p - 2, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        return isinstance(other, FpElement) and self.v == other.v and self.p == other.p

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return "%d" % self.v


class PrimeField:
    """F_p for a prime p (no primality check beyond p >= 2)."""

    def __init__(self, p=DEFAULT_PRIME):
        if p < 2:
            raise ValueError("modulus must be >= 2")
        self.p = p
        self.name = "F%d" % p

    def of(self, n):
        if isinstance(n, FpElement):
            return n
        return FpElement(int(n), self.p)

    @property
    def zero(self):
        return FpElement(0, self.p)

    @property
    def one(self):
        return FpElement(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return self.name


QQ = RationalField()
