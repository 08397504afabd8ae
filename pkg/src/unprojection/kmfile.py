"""Parser and formatter for ``.km`` problem files.

Grammar (whitespace-insensitive, ``#`` starts a line comment):

    ring x(1), y(1), z(3);
    ideal IX = x^2 - y^2, x*z;
    ideal ID = x, y;
    option mode graded;

Polynomials use ``+ - * ^`` with integer coefficients and parentheses.
Errors carry a line and column.
"""

from fractions import Fraction

from .fields import QQ, PrimeField
from .ring import GradedRing
from .groebner import GradedIdeal
from .unproject import UnprojectionProblem

KNOWN_OPTIONS = ("mode", "field", "oracle-depth", "name")


class ParseError(Exception):
    def __init__(self, message, line, col):
        self.line = line
        self.col = col
        super().__init__("%s (line %d, column %d)" % (message, line, col))


class Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col


def _tokenize(text):
    toks = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("int", int(text[i:j]), line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_-"):
                j += 1
            toks.append(Token("name", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in "(),;=+-*^:":
            toks.append(Token(ch, ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError("unexpected character %r" % ch, line, col)
    toks.append(Token("eof", None, line, col))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind):
        t = self.next()
        if t.kind != kind:
            raise ParseError("expected %r, found %r" % (kind, t.value), t.line, t.col)
        return t

    def fail(self, message):
        t = self.peek()
        raise ParseError(message, t.line, t.col)

    # -- statements ------------------------------------------------------

    def parse_file(self):
        ring_decl = None
        ideals = {}
        options = {}
        order = []
        while self.peek().kind != "eof":
            t = self.expect("name")
            if t.value == "ring":
                if ring_decl is not None:
                    raise ParseError("duplicate ring declaration", t.line, t.col)
                ring_decl = self.parse_ring()
            elif t.value == "ideal":
                if ring_decl is None:
                    raise ParseError("ideal before ring declaration", t.line, t.col)
                name_tok = self.expect("name")
                if name_tok.value in ideals:
                    raise ParseError("duplicate ideal %r" % name_tok.value,
                                     name_tok.line, name_tok.col)
                self.expect("=")
                ideals[name_tok.value] = self.parse_poly_list(ring_decl)
                order.append(name_tok.value)
            elif t.value == "option":
                key = self.expect("name")
                if key.value not in KNOWN_OPTIONS:
                    raise ParseError("unknown option %r" % key.value,
                                     key.line, key.col)
                val = self.next()
                if val.kind not in ("name", "int"):
                    raise ParseError("expected an option value", val.line, val.col)
                options[key.value] = val.value
                self.expect(";")
            else:
                raise ParseError("expected ring, ideal, or option, found %r"
                                 % t.value, t.line, t.col)
        if ring_decl is None:
            raise ParseError("missing ring declaration", 1, 1)
        return ProblemFile(ring_decl, ideals, order, options)

    def parse_ring(self):
        names, weights = [], []
        while True:
            nt = self.expect("name")
            self.expect("(")
            wt = self.expect("int")
            self.expect(")")
            if nt.value in names:
                raise ParseError("duplicate variable %r" % nt.value, nt.line, nt.col)
            if wt.value < 1:
                raise ParseError("weights must be positive", wt.line, wt.col)
            names.append(nt.value)
            weights.append(wt.value)
            t = self.next()
            if t.kind == ";":
                return (names, weights)
            if t.kind != ",":
                raise ParseError("expected ',' or ';'", t.line, t.col)

    def parse_poly_list(self, ring_decl):
        polys = [self.parse_expr(ring_decl)]
        while True:
            t = self.next()
            if t.kind == ";":
                return polys
            if t.kind != ",":
                raise ParseError("expected ',' or ';'", t.line, t.col)
            polys.append(self.parse_expr(ring_decl))

    # -- expressions: expr -> term (('+'|'-') term)* ---------------------
    #    term -> factor ('*' factor)*     factor -> atom ('^' int)?
    #    atom -> int | name | '(' expr ')' | '-' factor

    def parse_expr(self, ring_decl):
        t = self.peek()
        if t.kind == "-":
            self.next()
            acc = [("-", self.parse_term(ring_decl))]
        else:
            acc = [("+", self.parse_term(ring_decl))]
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            acc.append((op, self.parse_term(ring_decl)))
        out = None
        for op, term in acc:
            term = [(-c if op == "-" else c, m) for c, m in term]
            out = term if out is None else _add(out, term)
        return out

    def parse_term(self, ring_decl):
        out = self.parse_factor(ring_decl)
        while self.peek().kind == "*":
            self.next()
            out = _mul(out, self.parse_factor(ring_decl))
        return out

    def parse_factor(self, ring_decl):
        base = self.parse_atom(ring_decl)
        if self.peek().kind == "^":
            self.next()
            et = self.expect("int")
            out = [(1, ())]
            for _ in range(et.value):
                out = _mul(out, base)
            return out
        return base

    def parse_atom(self, ring_decl):
        t = self.next()
        if t.kind == "int":
            return [(t.value, ())]
        if t.kind == "name":
            if t.value not in ring_decl[0]:
                raise ParseError("unknown variable %r" % t.value, t.line, t.col)
            return [(1, ((t.value, 1),))]
        if t.kind == "(":
            out = self.parse_expr(ring_decl)
            self.expect(")")
            return out
        if t.kind == "-":
            return [(-c, m) for c, m in self.parse_factor(ring_decl)]
        raise ParseError("expected a polynomial, found %r"
                         % (t.value if t.value is not None else "end of input"),
                         t.line, t.col)


# sparse symbolic terms: list of (int coeff, tuple of (var, exponent))

def _mono_mul(m1, m2):
    d = {}
    for v, e in m1:
        d[v] = d.get(v, 0) + e
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))

def _mul(p, q):
    out = {}
    for c1, m1 in p:
        for c2, m2 in q:
            m = _mono_mul(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    return [(c, m) for m, c in out.items() if c]

def _add(p, q):
    out = {}
    for c, m in p + q:
        out[m] = out.get(m, 0) + c
    return [(c, m) for m, c in out.items() if c]


class ProblemFile:
    """A parsed ``.km`` file: ring declaration, named ideals, options."""

    def __init__(self, ring_decl, ideals, ideal_order, options):
        self.names, self.weights = ring_decl
        self.ideals = ideals          # name -> list of term lists
        self.ideal_order = ideal_order
        self.options = options

    def __eq__(self, other):
        return (isinstance(other, ProblemFile)
                and self.names == other.names
                and self.weights == other.weights
                and {k: sorted(map(sorted, v)) for k, v in self.ideals.items()}
                == {k: sorted(map(sorted, v)) for k, v in other.ideals.items()}
                and self.options == other.options)

    def field(self):
        spec = self.options.get("field", "q")
        if spec == "q":
            return QQ
        if isinstance(spec, str) and spec.startswith("fp:"):
            return PrimeField(int(spec[3:]))
        raise ValueError("unknown field %r" % spec)

    def build_ring(self, field=None):
        return GradedRing(self.names, self.weights, field or self.field())

    def build_poly(self, ring, terms):
        out = {}
        for c, m in terms:
            e = [0] * ring.nvars
            for v, p in m:
                e[ring.names.index(v)] = p
            e = tuple(e)
            out[e] = out.get(e, 0) + c
        return ring.poly(out)

    def build_ideal(self, ring, name):
        if name not in self.ideals:
            raise ValueError("file does not declare ideal %r" % name)
        return GradedIdeal(ring, [self.build_poly(ring, t)
                                  for t in self.ideals[name]])

    def to_problem(self, field=None):
        ring = self.build_ring(field)
        if "IX" not in self.ideals:
            raise ValueError("file does not declare ideal IX")
        if "ID" not in self.ideals:
            raise ValueError("file does not declare ideal ID")
        return UnprojectionProblem(ring, self.build_ideal(ring, "IX"),
                                   self.build_ideal(ring, "ID"),
                                   mode=self.options.get("mode", "auto"),
                                   name=self.options.get("name"))


def parse_problem(text):
    return _Parser(text).parse_file()


def format_problem(pf):
    """Render a ProblemFile back to ``.km`` text (reparses to an equal file)."""
    lines = ["ring " + ", ".join("%s(%d)" % (n, w)
                                 for n, w in zip(pf.names, pf.weights)) + ";"]
    for name in pf.ideal_order:
        polys = [_format_terms(t, pf.names) for t in pf.ideals[name]]
        lines.append("ideal %s = %s;" % (name, ", ".join(polys)))
    for k in sorted(pf.options):
        lines.append("option %s %s;" % (k, pf.options[k]))
    return "\n".join(lines) + "\n"


def _format_terms(terms, names):
    if not terms:
        return "0"
    key = lambda cm: tuple(-dict(cm[1]).get(n, 0) for n in names)
    parts = []
    for c, m in sorted(terms, key=key):
        body = "*".join("%s^%d" % (v, e) if e > 1 else v for v, e in m)
        if not body:
            body = str(abs(c))
        elif abs(c) != 1:
            body = "%d*%s" % (abs(c), body)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
