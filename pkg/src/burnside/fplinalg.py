"""Dense linear algebra over a prime field F_p.

Two representations coexist: generic vectors as lists of ints mod p (fine
for the small algebra dimensions), and a GF(2) fast path with whole rows
packed into Python ints, which the resolution machinery needs once free
ranks reach the thousands.
"""

from __future__ import annotations


def fp_inv(a: int, p: int) -> int:
    return pow(a, -1, p)


class FpEchelon:
    """Row space in echelon form over F_p; supports reduce/insert/dim."""

    def __init__(self, p: int):
        self.p = p
        self.rows: dict[int, list[int]] = {}

    def reduce(self, vec: list[int]) -> list[int]:
        p = self.p
        v = [x % p for x in vec]
        while True:
            lead = -1
            for j, x in enumerate(v):
                if x:
                    lead = j
                    break
            if lead < 0 or lead not in self.rows:
                return v
            c = v[lead]
            row = self.rows[lead]
            for j in range(lead, len(v)):
                v[j] = (v[j] - c * row[j]) % p

    def insert(self, vec: list[int]) -> bool:
        """Add vec to the span; True if the dimension grew."""
        v = self.reduce(vec)
        for j, x in enumerate(v):
            if x:
                inv = fp_inv(x, self.p)
                self.rows[j] = [(inv * y) % self.p for y in v]
                return True
        return False

    def contains(self, vec: list[int]) -> bool:
        return not any(self.reduce(vec))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis(self) -> list[list[int]]:
        return [self.rows[j] for j in sorted(self.rows)]


def fp_rank(rows: list[list[int]], p: int) -> int:
    ech = FpEchelon(p)
    for r in rows:
        ech.insert(r)
    return ech.dim


def fp_nullspace(rows: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of {x : A x = 0} for A given by rows."""
    combos = []
    ech: dict[int, tuple[list[int], list[int]]] = {}
    for j in range(ncols):
        v = [row[j] % p for row in rows]
        combo = [0] * ncols
        combo[j] = 1
        while True:
            lead = -1
            for i, x in enumerate(v):
                if x:
                    lead = i
                    break
            if lead < 0:
                combos.append(combo)
                break
            if lead not in ech:
                c = fp_inv(v[lead], p)
                ech[lead] = ([(c * y) % p for y in v],
                             [(c * y) % p for y in combo])
                break
            tv, tc = ech[lead]
            c = v[lead]
            v = [(a - c * b) % p for a, b in zip(v, tv)]
            combo = [(a - c * b) % p for a, b in zip(combo, tc)]
    return combos


def fp_solve(rows: list[list[int]], b: list[int], p: int) -> list[int] | None:
    """One solution of A x = b, or None if inconsistent."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [[rows[i][j] % p for j in range(n)] + [b[i] % p] for i in range(m)]
    pivots = []
    row = 0
    for col in range(n):
        sel = next((i for i in range(row, m) if aug[i][col]), None)
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        inv = fp_inv(aug[row][col], p)
        aug[row] = [(inv * x) % p for x in aug[row]]
        for i in range(m):
            if i != row and aug[i][col]:
                c = aug[i][col]
                aug[i] = [(x - c * y) % p for x, y in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for i in range(row, m):
        if aug[i][n]:
            return None
    x = [0] * n
    for i, col in enumerate(pivots):
        x[col] = aug[i][n]
    return x


# GF(2) fast path: a vector is an int, bit i <-> coordinate i.

class Gf2Echelon:
    """Echelon row space over GF(2) with int-packed rows (lowest bit pivots)."""

    __slots__ = ("rows",)

    def __init__(self):
        self.rows: dict[int, int] = {}

    def reduce(self, v: int) -> int:
        rows = self.rows
        while v:
            piv = v & -v
            row = rows.get(piv)
            if row is None:
                return v
            v ^= row
        return v

    def insert(self, v: int) -> bool:
        v = self.reduce(v)
        if v:
            self.rows[v & -v] = v
            return True
        return False

    @property
    def dim(self) -> int:
        return len(self.rows)


def gf2_kernel_of_columns(cols: list[int]) -> list[int]:
    """Combination masks c (bit j <-> column j) with XOR of chosen columns 0.

    The masks form a basis of the nullspace of the matrix whose columns
    are the given ints.
    """
    kernel = []
    ech: dict[int, tuple[int, int]] = {}
    for j, v in enumerate(cols):
        combo = 1 << j
        while v:
            piv = v & -v
            hit = ech.get(piv)
            if hit is None:
                ech[piv] = (v, combo)
                break
            v ^= hit[0]
            combo ^= hit[1]
        else:
            kernel.append(combo)
    return kernel
