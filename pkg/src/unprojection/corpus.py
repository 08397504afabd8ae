"""Embedded example instances in ``.km`` form.

Coefficient choices for the "general" forms are concrete witnesses frozen
after one-time validation; the freeze is pinned by the test suite.
"""

from .kmfile import parse_problem

NODAL = """\
# nodal curve: two lines through the origin, unprojecting the origin
ring x(1), y(1);
ideal IX = x^2 - y^2;
ideal ID = x, y;
option name nodal;
"""

CUBIC = """\
# cubic surface containing the line x = y = 0, with
# A = z^2 + y*w and B = w^2 + x*z
ring x(1), y(1), z(1), w(1);
ideal IX = x*(w^2 + x*z) - y*(z^2 + y*w);
ideal ID = x, y;
option name cubic;
"""

Z6 = """\
# double cover branched data in weighted P(1,1,1,1,3), unprojecting the
# plane x0 = z + a3 = 0; a3 and b5 are concrete general forms
ring x0(1), x1(1), x2(1), x3(1), z(3);
ideal IX = z^2 + (x1^3 + x2^3 + x3^3)*z + x0*(x1^5 + x1*x2^2*x3^2 + x2*x3^4);
ideal ID = x0, z + x1^3 + x2^3 + x3^3;
option name z6;
"""

CRAMER = """\
# generic 3x4 matrix of indeterminates against a column of indeterminates
ring a11(1), a12(1), a13(1), a14(1), a21(1), a22(1), a23(1), a24(1), a31(1), a32(1), a33(1), a34(1), x1(1), x2(1), x3(1), x4(1);
ideal IX = a11*x1 + a12*x2 + a13*x3 + a14*x4, a21*x1 + a22*x2 + a23*x3 + a24*x4, a31*x1 + a32*x2 + a33*x3 + a34*x4;
ideal ID = x1, x2, x3, x4;
option name cramer;
"""

INSTANCES = {
    "nodal": NODAL,
    "cubic": CUBIC,
    "z6": Z6,
    "cramer": CRAMER,
}


def corpus():
    """All embedded instances, parsed, keyed by name."""
    return {name: parse_problem(text) for name, text in INSTANCES.items()}


def load(name):
    if name not in INSTANCES:
        raise KeyError("unknown corpus instance %r (have: %s)"
                       % (name, ", ".join(sorted(INSTANCES))))
    return parse_problem(INSTANCES[name])
