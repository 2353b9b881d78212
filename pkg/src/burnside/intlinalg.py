"""Exact integer linear algebra: kernels, Smith normal form, lattice solves.

Everything here works on matrices stored as lists of rows of Python ints,
so coefficient growth is absorbed by arbitrary precision arithmetic.
"""

from __future__ import annotations


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def _diagonalize(A: list[list[int]], ncols: int):
    """Reduce A to a diagonal matrix D by unimodular row and column operations.

    Returns (D, T) where T records the column operations, i.e. the columns
    of T express the new column basis in terms of the old one (A @ T has
    the columnwise behavior of D).  No divisibility normalization is done.
    """
    D = [row[:] for row in A]
    m = len(D)
    n = ncols
    T = [[0] * n for _ in range(n)]
    for i in range(n):
        T[i][i] = 1

    def row_op(i1, i2, j):
        a, b = D[i1][j], D[i2][j]
        if b == 0:
            return
        if a == 0:
            D[i1], D[i2] = D[i2], D[i1]
        elif b % a == 0:
            q = -(b // a)
            r1, r2 = D[i1], D[i2]
            for jj in range(j, n):
                r2[jj] += q * r1[jj]
        else:
            g, x, y = xgcd(a, b)
            mbg, ag = -(b // g), a // g
            r1, r2 = D[i1], D[i2]
            for jj in range(j, n):
                aa, bb = r1[jj], r2[jj]
                r1[jj] = x * aa + y * bb
                r2[jj] = mbg * aa + ag * bb

    def col_op(j1, j2, i):
        a, b = D[i][j1], D[i][j2]
        if b == 0:
            return
        if a == 0:
            for r in D:
                r[j1], r[j2] = r[j2], r[j1]
            for r in T:
                r[j1], r[j2] = r[j2], r[j1]
        elif b % a == 0:
            q = -(b // a)
            for r in D:
                r[j2] += q * r[j1]
            for r in T:
                r[j2] += q * r[j1]
        else:
            g, x, y = xgcd(a, b)
            mbg, ag = -(b // g), a // g
            for r in D:
                aa, bb = r[j1], r[j2]
                r[j1] = x * aa + y * bb
                r[j2] = mbg * aa + ag * bb
            for r in T:
                aa, bb = r[j1], r[j2]
                r[j1] = x * aa + y * bb
                r[j2] = mbg * aa + ag * bb

    for k in range(min(m, n)):
        while True:
            for i in range(k + 1, m):
                row_op(k, i, k)
            if all(D[k][j] == 0 for j in range(k + 1, n)):
                break
            for j in range(k + 1, n):
                col_op(k, j, k)
            if all(D[i][k] == 0 for i in range(k + 1, m)):
                break
    return D, T


def kernel_of_columns(A: list[list[int]], ncols: int) -> list[list[int]]:
    """Basis of the lattice {x in Z^ncols : A @ x = 0}.

    Columns are inserted one by one into an integer row echelon while a
    combination vector tracks how each state row arises from the original
    columns.  Every update is a unimodular operation on the tracked rows,
    so the combinations emitted when a column reduces to zero form a
    genuine Z-basis of the kernel, not merely a spanning set.
    """
    for row in A:
        assert len(row) == ncols
    m = len(A)
    echelon: dict[int, tuple[list[int], list[int]]] = {}
    kernel: list[list[int]] = []
    for j in range(ncols):
        vec = [A[i][j] for i in range(m)]
        combo = [0] * ncols
        combo[j] = 1
        while True:
            lead = next((i for i, x in enumerate(vec) if x), -1)
            if lead < 0:
                kernel.append(combo)
                break
            hit = echelon.get(lead)
            if hit is None:
                if vec[lead] < 0:
                    vec = [-x for x in vec]
                    combo = [-x for x in combo]
                echelon[lead] = (vec, combo)
                break
            rvec, rcombo = hit
            a, b = rvec[lead], vec[lead]
            if b % a == 0:
                q = b // a
                vec = [x - q * y for x, y in zip(vec, rvec)]
                combo = [x - q * y for x, y in zip(combo, rcombo)]
            else:
                g, x, y = xgcd(a, b)
                ag, bg = a // g, b // g
                new_rvec = [x * u + y * v for u, v in zip(rvec, vec)]
                new_rcombo = [x * u + y * v for u, v in zip(rcombo, combo)]
                vec = [ag * v - bg * u for u, v in zip(rvec, vec)]
                combo = [ag * v - bg * u for u, v in zip(rcombo, combo)]
                echelon[lead] = (new_rvec, new_rcombo)
    kernel.sort(key=_vec_key)
    return kernel


def _vec_key(vec):
    for i, x in enumerate(vec):
        if x:
            return (i, abs(x), vec)
    return (len(vec), 0, vec)


def rank(A: list[list[int]], ncols: int) -> int:
    """Rank over Q (equivalently over Z up to torsion)."""
    if not A:
        return 0
    D, _ = _diagonalize(A, ncols)
    return sum(1 for j in range(min(len(A), ncols)) if D[j][j] != 0)


def smith_invariants(A: list[list[int]], ncols: int) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of A, ascending."""
    D, _ = _diagonalize(A, ncols)
    diag = [abs(D[j][j]) for j in range(min(len(A), ncols)) if D[j][j] != 0]
    # fix divisibility: diag(a, b) is equivalent to diag(gcd, lcm)
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                a, b = diag[i], diag[j]
                if b % a != 0:
                    g = xgcd(a, b)[0]
                    diag[i], diag[j] = g, a * b // g
                    changed = True
    return sorted(diag)


def solve_integer(A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    """Solve A @ Y = B where A has full column rank; assert Y is integral.

    Pure integer elimination: unimodular row operations bring the
    augmented matrix [A | B] to an echelon form whose pivot equations are
    then back-substituted with exact divisions.  Used to express lattice
    vectors (columns of B) in a lattice basis (columns of A).
    """
    m = len(A)
    r = len(A[0]) if A else 0
    q = len(B[0]) if B else 0
    aug = [list(A[i]) + list(B[i]) for i in range(m)]
    row = 0
    for col in range(r):
        piv = None
        for i in range(row, m):
            if aug[i][col] != 0:
                piv = i
                break
        if piv is None:
            raise ValueError("matrix does not have full column rank")
        aug[row], aug[piv] = aug[piv], aug[row]
        for i in range(row + 1, m):
            while aug[i][col]:
                a, b = aug[row][col], aug[i][col]
                if b % a == 0:
                    qq = b // a
                    aug[i] = [x - qq * y for x, y in zip(aug[i], aug[row])]
                else:
                    g, x, y = xgcd(a, b)
                    ag, bg = a // g, b // g
                    new_top = [x * u + y * v for u, v in zip(aug[row], aug[i])]
                    aug[i] = [ag * v - bg * u for u, v in zip(aug[row], aug[i])]
                    aug[row] = new_top
        row += 1
    for i in range(row, m):
        if any(aug[i][r:]):
            raise ValueError("system is inconsistent")
    # back-substitute the triangular pivot block; divisions must be exact
    Y = [[0] * q for _ in range(r)]
    for col in range(r - 1, -1, -1):
        arow = aug[col]
        for j in range(q):
            acc = arow[r + j]
            for k in range(col + 1, r):
                acc -= arow[k] * Y[k][j]
            quot, rem = divmod(acc, arow[col])
            if rem:
                raise ValueError("non-integral solution entry")
            Y[col][j] = quot
    return Y


def lattice_span_basis(vectors: list[list[int]]) -> list[list[int]]:
    """Echelon basis of the lattice spanned by the given vectors.

    Entries above each pivot are reduced modulo the pivot as rows come
    in; without that normalization the Bezout updates blow coefficients
    up exponentially in the number of insertions.
    """
    echelon: dict[int, list[int]] = {}
    for count, vec in enumerate(vectors):
        vec = list(vec)
        while True:
            lead = next((i for i, x in enumerate(vec) if x), -1)
            if lead < 0:
                break
            hit = echelon.get(lead)
            if hit is None:
                if vec[lead] < 0:
                    vec = [-x for x in vec]
                echelon[lead] = vec
                break
            a, b = hit[lead], vec[lead]
            if b % a == 0:
                qq = b // a
                vec = [x - qq * y for x, y in zip(vec, hit)]
            else:
                g, x, y = xgcd(a, b)
                ag, bg = a // g, b // g
                echelon[lead] = [x * u + y * v for u, v in zip(hit, vec)]
                vec = [ag * v - bg * u for u, v in zip(hit, vec)]
        if count % 8 == 7:
            _reduce_above_pivots(echelon)
    _reduce_above_pivots(echelon)
    return [echelon[lead] for lead in sorted(echelon)]


def _reduce_above_pivots(echelon: dict[int, list[int]]) -> None:
    """Shrink every entry above a pivot modulo that pivot (unimodular).

    Ascending pivot order matters: reducing at a pivot only touches
    columns to its right, so previously normalized columns stay put and
    the result is the unique Hermite-reduced basis of the row lattice.
    """
    pivots = sorted(echelon)
    for t, p in enumerate(pivots):
        base = echelon[p]
        a = base[p]
        for u in pivots[:t]:
            row = echelon[u]
            qq = row[p] // a
            if qq:
                echelon[u] = [x - qq * y for x, y in zip(row, base)]


def quotient_structure(kernel_basis: list[list[int]],
                       image_columns: list[list[int]]) -> tuple[int, list[int]]:
    """Structure of (Z-span of kernel_basis) / (Z-span of image_columns).

    Both argument lists hold vectors in the same ambient Z^m, with the
    image contained in the kernel span.  Returns (free_rank, invariants)
    where invariants are the cyclic orders > 1, ascending.
    """
    r = len(kernel_basis)
    if r == 0:
        return 0, []
    image = lattice_span_basis(image_columns)
    if not image:
        return r, []
    m = len(kernel_basis[0])
    K = [[kernel_basis[j][i] for j in range(r)] for i in range(m)]
    B = [[col[i] for col in image] for i in range(m)]
    Y = solve_integer(K, B)
    invs = smith_invariants(Y, len(image))
    free = r - len(invs)
    torsion = [d for d in invs if d > 1]
    return free, torsion


def mat_mul(A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    n = len(B)
    q = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * q
        for k, a in enumerate(row):
            if a:
                bk = B[k]
                for j in range(q):
                    acc[j] += a * bk[j]
        out.append(acc)
    return out
