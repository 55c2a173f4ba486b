"""Exact integer and rational linear algebra on small matrices.

Everything here works with plain Python ints (arbitrary precision) and
``fractions.Fraction``.  Matrices are lists/tuples of row tuples.
"""

from fractions import Fraction
from math import gcd
from operator import mul


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v):
    """Divide an integer vector by the gcd of its entries (keeps the sign)."""
    g = vec_gcd(v)
    if g in (0, 1):
        return tuple(v)
    return tuple(x // g for x in v)


def dot(a, b):
    return sum(map(mul, a, b))


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(a, c):
    return tuple(c * x for x in a)


def is_zero_vec(v):
    return all(x == 0 for x in v)


def _int_rows(rows):
    """Clear denominators row by row; rows may hold ints or Fractions."""
    out = []
    for r in rows:
        if all(isinstance(x, int) for x in r):
            out.append(list(r))
            continue
        fr = [Fraction(x) for x in r]
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        out.append([int(x * den) for x in fr])
    return out


def matrix_rank(rows):
    """Rank of a matrix with integer or Fraction entries."""
    m = [r for r in _int_rows(rows) if not is_zero_vec(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    col = 0
    while col < ncols and rank < len(m):
        piv = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        for i in range(rank + 1, len(m)):
            c = m[i][col]
            if c:
                row = [pv * a - c * b for a, b in zip(m[i], m[rank])]
                g = vec_gcd(row)
                if g > 1:
                    row = [a // g for a in row]
                m[i] = row
        rank += 1
        col += 1
    return rank


def solve_rational(rows, rhs):
    """One solution x (free variables set to 0) of rows . x = rhs, or None.

    Entries may be ints or Fractions; the result is a tuple of Fractions.
    Fraction-free elimination keeps the hot path in integer arithmetic.
    """
    if not rows:
        return ()
    ncols = len(rows[0])
    aug = _int_rows([list(r) + [b] for r, b in zip(rows, rhs)])
    pivots = []
    rank = 0
    nrows = len(aug)
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if aug[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        pv = aug[rank][col]
        for i in range(rank + 1, nrows):
            c = aug[i][col]
            if c:
                row = [pv * a - c * b for a, b in zip(aug[i], aug[rank])]
                g = vec_gcd(row)
                if g > 1:
                    row = [a // g for a in row]
                aug[i] = row
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    for i in range(rank, nrows):
        if aug[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i in range(rank - 1, -1, -1):
        col = pivots[i]
        acc = Fraction(aug[i][ncols])
        for j in range(col + 1, ncols):
            if aug[i][j]:
                acc -= aug[i][j] * x[j]
        x[col] = acc / aug[i][col]
    return tuple(x)


def solve_rational_columns(rows, rhs_list):
    """Solve rows . x = b for several right-hand sides with one elimination.

    Returns one solution tuple (or None) per right-hand side, with the same
    free-variable convention as ``solve_rational``.
    """
    if not rows:
        return [() for _ in rhs_list]
    ncols = len(rows[0])
    nrhs = len(rhs_list)
    aug = _int_rows([list(r) + [b[i] for b in rhs_list]
                     for i, r in enumerate(rows)])
    pivots = []
    rank = 0
    nrows = len(aug)
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if aug[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        pv = aug[rank][col]
        for i in range(rank + 1, nrows):
            c = aug[i][col]
            if c:
                row = [pv * a - c * b for a, b in zip(aug[i], aug[rank])]
                g = vec_gcd(row)
                if g > 1:
                    row = [a // g for a in row]
                aug[i] = row
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    out = []
    for k in range(nrhs):
        if any(aug[i][ncols + k] != 0 for i in range(rank, nrows)):
            out.append(None)
            continue
        x = [Fraction(0)] * ncols
        for i in range(rank - 1, -1, -1):
            col = pivots[i]
            acc = Fraction(aug[i][ncols + k])
            for j in range(col + 1, ncols):
                if aug[i][j]:
                    acc -= aug[i][j] * x[j]
            x[col] = acc / aug[i][col]
        out.append(tuple(x))
    return out


def in_span(vectors, x):
    """Is x in the rational span of the given vectors?"""
    vecs = [v for v in vectors if not is_zero_vec(v)]
    if not vecs:
        return is_zero_vec(x)
    cols = list(zip(*vecs))  # one row per coordinate
    return solve_rational(cols, x) is not None


def row_hnf(rows):
    """Row-style Hermite normal form of an integer matrix.

    Returns the list of nonzero rows: echelon shape, positive pivots, entries
    above each pivot reduced into [0, pivot).  The nonzero rows are a canonical
    basis of the lattice generated by the input rows.
    """
    m = [list(r) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        # Clear the column below the pivot with a Euclidean loop.
        while True:
            nz = [i for i in range(rank + 1, len(m)) if m[i][col] != 0]
            if not nz:
                break
            for i in nz:
                q = m[i][col] // m[rank][col]
                m[i] = [a - q * b for a, b in zip(m[i], m[rank])]
                if m[i][col] != 0:
                    m[rank], m[i] = m[i], m[rank]
        if m[rank][col] < 0:
            m[rank] = [-a for a in m[rank]]
        rank += 1
        if rank == len(m):
            break
    out = [r for r in m[:rank]]
    # Reduce entries above each pivot.
    for i in range(len(out) - 1, -1, -1):
        col = next(j for j, a in enumerate(out[i]) if a != 0)
        for k in range(i):
            q = out[k][col] // out[i][col]
            if q:
                out[k] = [a - q * b for a, b in zip(out[k], out[i])]
    return [tuple(r) for r in out]


def hnf_with_transform(rows):
    """Row HNF together with a unimodular transform U with U . rows = H.

    Returns (H, U) where H has the same number of rows as the input (zero rows
    at the bottom) and U is unimodular.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    u = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    if not m:
        return [], []
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        u[rank], u[piv] = u[piv], u[rank]
        while True:
            nz = [i for i in range(rank + 1, nrows) if m[i][col] != 0]
            if not nz:
                break
            for i in nz:
                q = m[i][col] // m[rank][col]
                m[i] = [a - q * b for a, b in zip(m[i], m[rank])]
                u[i] = [a - q * b for a, b in zip(u[i], u[rank])]
                if m[i][col] != 0:
                    m[rank], m[i] = m[i], m[rank]
                    u[rank], u[i] = u[i], u[rank]
        if m[rank][col] < 0:
            m[rank] = [-a for a in m[rank]]
            u[rank] = [-a for a in u[rank]]
        rank += 1
        if rank == nrows:
            break
    # Reduce entries above each pivot so H is in full Hermite form.
    for i in range(rank - 1, -1, -1):
        col = next(j for j, a in enumerate(m[i]) if a != 0)
        for k in range(i):
            q = m[k][col] // m[i][col]
            if q:
                m[k] = [a - q * b for a, b in zip(m[k], m[i])]
                u[k] = [a - q * b for a, b in zip(u[k], u[i])]
    return [tuple(r) for r in m], [tuple(r) for r in u]


def integer_kernel_basis(rows, ncols=None):
    """Basis of the saturated lattice {x in Z^n : rows . x = 0}.

    The rows of the returned list form a lattice basis that extends to a basis
    of Z^n (they come from rows of a unimodular matrix).
    """
    rows = [tuple(r) for r in rows]
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty system")
        ncols = len(rows[0])
    if not rows:
        return [tuple(1 if i == j else 0 for j in range(ncols)) for i in range(ncols)]
    # x is in the kernel iff x . rows^T = 0, i.e. x is a left-kernel vector of
    # the transpose; row-reduce the transpose with a tracked transform.
    bt = [tuple(r[i] for r in rows) for i in range(ncols)]  # ncols x len(rows)
    h, u = hnf_with_transform(bt)
    out = []
    for hrow, urow in zip(h, u):
        if is_zero_vec(hrow):
            out.append(tuple(urow))
    return out


def span_lattice_basis(vectors, ncols=None):
    """Saturated basis (HNF rows) of span(vectors) ∩ Z^n."""
    vectors = [tuple(v) for v in vectors if not is_zero_vec(v)]
    if ncols is None:
        if not vectors:
            raise ValueError("ncols required when no vectors are given")
        ncols = len(vectors[0])
    if not vectors:
        return []
    equations = integer_kernel_basis(vectors, ncols)
    if not equations:
        return [tuple(1 if i == j else 0 for j in range(ncols)) for i in range(ncols)]
    return row_hnf(integer_kernel_basis(equations, ncols))


def det_int(m):
    """Determinant of a square matrix with integer or Fraction entries."""
    a = [list(map(Fraction, row)) for row in m]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = None
        for i in range(col, n):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        pv = a[col][col]
        det *= pv
        for i in range(col + 1, n):
            if a[i][col] != 0:
                f = a[i][col] / pv
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    assert det.denominator == 1
    return int(det)


def lattice_span_index(vectors):
    """Index of the lattice generated by the vectors inside its saturation.

    Expresses a lattice basis of the generated lattice in coordinates of the
    saturated basis; the index is the absolute determinant of that matrix.
    """
    h = row_hnf(vectors)
    if not h:
        return 1
    ncols = len(h[0])
    sat = span_lattice_basis(h, ncols)
    cols = list(zip(*sat))
    coord_rows = []
    for v in h:
        sol = solve_rational(cols, v)
        coord_rows.append(sol)
    return abs(det_int(coord_rows))


def solve_gcd_one(g, target=1):
    """Integer vector u with g . u = target, where gcd(g) divides target."""
    n = len(g)
    u = [0] * n
    # Extended gcd folded over the entries.
    acc = 0
    coeffs = []  # coefficient of each entry in the running gcd
    for x in g:
        if acc == 0:
            acc, cx, ca = abs(x), (1 if x >= 0 else -1), 0
        else:
            old_r, r = acc, abs(x)
            old_s, s = 1, 0
            old_t, t = 0, 1
            while r:
                q = old_r // r
                old_r, r = r, old_r - q * r
                old_s, s = s, old_s - q * s
                old_t, t = t, old_t - q * t
            # old_s * acc + old_t * |x| == old_r
            cx = old_t * (1 if x >= 0 else -1)
            ca = old_s
            acc = old_r
        coeffs = [ca * c for c in coeffs] + [cx]
    if acc == 0 or target % acc:
        raise ValueError("no integer solution")
    mult = target // acc
    for i, c in enumerate(coeffs):
        u[i] = mult * c
    return tuple(u)


def mat_vec(matrix, v):
    return tuple(dot(row, v) for row in matrix)


def identity_matrix(n):
    return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
