"""Dense exact linear algebra over a coefficient field.

Matrices are lists of rows; entries are field elements (Fraction or
FpElement).  Everything here is plain Gaussian elimination: it serves as the
independent oracle behind the Groebner machinery, so it deliberately shares
nothing with it.
"""


def rref(rows, ncols, field):
    """Reduced row echelon form.  Returns (new_rows, pivot_columns)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(rows, ncols, field):
    return len(rref(rows, ncols, field)[1])


def solve(rows, rhs, field):
    """One solution of A x = b, or None if inconsistent.

    ``rows`` is the matrix A (list of rows), ``rhs`` the vector b.
    """
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, n + 1, field)
    if n in pivots:
        return None
    x = [field.zero] * n
    for row, c in zip(red, pivots):
        x[c] = row[n]
    return x


def nullspace(rows, ncols, field):
    """Basis of the kernel of A (as column vectors, returned as lists)."""
    red, pivots = rref(rows, ncols, field)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for row, c in zip(red, pivots):
            v[c] = -row[free]
        basis.append(v)
    return basis
