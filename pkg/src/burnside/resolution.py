"""Minimal free resolutions of the residue field over a local block.

The Betti number b_l is the rank of the l-th free module, equivalently
dim Ext^l(k, k) = dim Tor_l(k, k).  Construction is the direct one: push a
minimal generating set of each kernel into the next free module, where
generators are kernel vectors reduced modulo (maximal ideal) * kernel.

Free ranks of unbounded blocks grow geometrically, so beyond a feasible
window the exact computation is supplemented by a growth certificate: for
any local block S with maximal ideal M, counting dimensions in one stage
of a minimal resolution gives

    b_{l+1} >= (dim S - dim M^2) * b_l - (dim M) * b_{l-1}      (l >= 1)

because b_{l+1} = dim K_l - dim M.K_l with M.K_l <= (M^2)^{b_l} and
dim K_l = (dim S) b_l - dim K_{l-1} with K_{l-1} <= M^{b_{l-1}}.  Once two
consecutive exact values have ratio at least a root r > 1 of
r^2 - A r + B <= 0 (A, B the two coefficients), every later ratio stays
at least r, certifying strictly increasing Betti numbers forever.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ResolutionTooLarge
from .fplinalg import FpEchelon, Gf2Echelon, fp_inv, gf2_kernel_of_columns
from .modp import LocalBlock, ModPAlgebra, blocks

DEFAULT_MATRIX_BITS = 1 << 30
DEFAULT_DEGREE_CAP = 12


class _Gf2Ops:
    """Flat vectors over GF(2) as ints; component i occupies bits [i*s, i*s+s)."""

    def __init__(self, block: LocalBlock):
        self.s = block.dim
        s = self.s
        self.table = [[_bits(block.mult[a][b]) for b in range(s)]
                      for a in range(s)]

    def column(self, gen: int, n_components: int, basis_idx: int) -> int:
        """The flat image of (basis element) * gen, componentwise."""
        s = self.s
        out = 0
        col = [self.table[a][basis_idx] for a in range(s)]
        for i in range(n_components):
            comp = (gen >> (i * s)) & ((1 << s) - 1)
            acc = 0
            while comp:
                a = (comp & -comp).bit_length() - 1
                acc ^= col[a]
                comp &= comp - 1
            out |= acc << (i * s)
        return out

    def kernel_of_columns(self, cols: list[int]) -> list[int]:
        return gf2_kernel_of_columns(cols)

    def echelon(self):
        return Gf2Echelon()

    def entries_in_maximal_ideal(self, flat: int, n_components: int) -> bool:
        s = self.s
        for i in range(n_components):
            if (flat >> (i * s)) & 1:
                return False
        return True

    def matrix_cost(self, rows_flat_dim: int, ncols: int) -> int:
        return rows_flat_dim * ncols


def _bits(coords: list[int]) -> int:
    out = 0
    for i, c in enumerate(coords):
        if c & 1:
            out |= 1 << i
    return out


class _FpOps:
    """Flat vectors over F_p as tuples of ints."""

    def __init__(self, block: LocalBlock):
        self.block = block
        self.p = block.p
        self.s = block.dim

    def column(self, gen: tuple, n_components: int, basis_idx: int) -> tuple:
        s = self.s
        eb = [1 if t == basis_idx else 0 for t in range(s)]
        out = []
        for i in range(n_components):
            comp = list(gen[i * s:(i + 1) * s])
            out.extend(self.block.mul_coords(comp, eb))
        return tuple(out)

    def kernel_of_columns(self, cols: list[tuple]) -> list[tuple]:
        p = self.p
        kernel = []
        ech: dict[int, tuple[list[int], list[int]]] = {}
        ncols = len(cols)
        for j, c in enumerate(cols):
            v = list(c)
            combo = [0] * ncols
            combo[j] = 1
            while True:
                lead = next((i for i, x in enumerate(v) if x), -1)
                if lead < 0:
                    kernel.append(tuple(combo))
                    break
                hit = ech.get(lead)
                if hit is None:
                    inv = fp_inv(v[lead], p)
                    ech[lead] = ([(inv * x) % p for x in v],
                                 [(inv * x) % p for x in combo])
                    break
                tv, tc = hit
                f = v[lead]
                v = [(a - f * b) % p for a, b in zip(v, tv)]
                combo = [(a - f * b) % p for a, b in zip(combo, tc)]
        return kernel

    def echelon(self):
        return _FpFlatEchelon(self.p)

    def entries_in_maximal_ideal(self, flat: tuple, n_components: int) -> bool:
        s = self.s
        return all(flat[i * s] == 0 for i in range(n_components))

    def matrix_cost(self, rows_flat_dim: int, ncols: int) -> int:
        return rows_flat_dim * ncols * 16


class _FpFlatEchelon:
    def __init__(self, p: int):
        self.p = p
        self.rows: dict[int, tuple] = {}

    def reduce(self, v):
        p = self.p
        v = list(v)
        while True:
            lead = next((i for i, x in enumerate(v) if x), -1)
            if lead < 0:
                return 0
            hit = self.rows.get(lead)
            if hit is None:
                return tuple(v)
            f = v[lead]
            v = [(a - f * b) % p for a, b in zip(v, hit)]

    def insert(self, v) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        lead = next(i for i, x in enumerate(v) if x)
        inv = fp_inv(v[lead], self.p)
        self.rows[lead] = tuple((inv * x) % self.p for x in v)
        return True

    @property
    def dim(self):
        return len(self.rows)


class MinimalResolution:
    """Incrementally extended minimal resolution of k over a local block.

    The kernel of the top differential is computed lazily: extending to
    degree L materializes the generator columns of d_1..d_L but only the
    kernels of d_1..d_{L-1}, which is what minimality of the first L
    stages actually requires.
    """

    def __init__(self, block: LocalBlock, max_matrix_bits: int = DEFAULT_MATRIX_BITS):
        self.block = block
        self.max_matrix_bits = max_matrix_bits
        self.ops = _Gf2Ops(block) if block.p == 2 else _FpOps(block)
        self.betti = [1]
        self.differentials: list[list] = []  # d_l as list of generator columns
        s = block.dim
        # kernel of the augmentation F_0 = S -> k is the maximal ideal
        if block.p == 2:
            kernel = [1 << a for a in range(1, s)]
        else:
            kernel = [tuple(1 if t == a else 0 for t in range(s))
                      for a in range(1, s)]
        self._kernel = kernel          # basis of ker d_(top computed stage)
        self.kernel_dims = [len(kernel)]

    @property
    def computed_degree(self) -> int:
        return len(self.betti) - 1

    def extend_to(self, degree: int) -> None:
        while self.computed_degree < degree:
            self._extend_once()

    def _extend_once(self) -> None:
        if self._kernel is None:
            self._compute_top_kernel()
        ops = self.ops
        s = self.block.dim
        n_prev = self.betti[-1]
        if ops.matrix_cost(n_prev * s, len(self._kernel) * s) > self.max_matrix_bits:
            raise ResolutionTooLarge(
                f"stage {len(self.betti)}: reducing a kernel of dimension "
                f"{len(self._kernel)} inside a space of dimension "
                f"{n_prev * s} exceeds the configured budget")
        # minimal generators: kernel basis reduced modulo M * kernel
        mspan = ops.echelon()
        for kappa in self._kernel:
            for a in range(1, s):
                mspan.insert(ops.column(kappa, n_prev, a))
        mk_dim = mspan.dim
        gens = []
        for kappa in self._kernel:
            residual = mspan.reduce(kappa)
            if residual:
                gens.append(residual)
                mspan.insert(residual)
        for g in gens:
            if not ops.entries_in_maximal_ideal(g, n_prev):
                raise AssertionError("differential entry outside the maximal ideal")
        n_new = len(gens)
        if n_new != len(self._kernel) - mk_dim or mspan.dim != len(self._kernel):
            raise AssertionError("minimal generator count mismatch")
        self.betti.append(n_new)
        self.differentials.append(gens)
        self.kernel_dims.append(n_new * s - self.kernel_dims[-1])
        self._kernel = None

    def _compute_top_kernel(self) -> None:
        ops = self.ops
        s = self.block.dim
        top = len(self.betti) - 1
        n_new = self.betti[top]
        n_prev = self.betti[top - 1]
        rows_dim = n_prev * s
        cols = n_new * s
        if ops.matrix_cost(rows_dim, cols) > self.max_matrix_bits:
            raise ResolutionTooLarge(
                f"stage {top}: matrix {rows_dim} x {cols} exceeds the "
                f"configured budget")
        columns = []
        for g in self.differentials[top - 1]:
            for a in range(s):
                columns.append(ops.column(g, n_prev, a))
        kernel = ops.kernel_of_columns(columns)
        # exactness bookkeeping: rank d_l equals dim ker d_{l-1}, so the
        # kernel dimension matches the rank-nullity recursion
        if len(kernel) != self.kernel_dims[top]:
            raise AssertionError(
                f"kernel dimension {len(kernel)} at stage {top} differs "
                f"from the exactness recursion {self.kernel_dims[top]}")
        self._kernel = kernel

    def reduced_differential(self, l: int) -> list[list[int]]:
        """d_l tensored with k: the matrix of residue-field entries."""
        s = self.block.dim
        gens = self.differentials[l - 1]
        n_prev = self.betti[l - 1]
        out = [[0] * len(gens) for _ in range(n_prev)]
        for t, g in enumerate(gens):
            for i in range(n_prev):
                if self.block.p == 2:
                    out[i][t] = (g >> (i * s)) & 1
                else:
                    out[i][t] = g[i * s]
        return out

    def reduced_rank(self, l: int) -> int:
        """Rank of d_l tensored with k (zero whenever minimality holds).

        Cached: the value depends on the resolution alone, and callers
        recheck it for every simple-module pair.
        """
        cache = getattr(self, "_reduced_rank_cache", None)
        if cache is None:
            cache = {}
            self._reduced_rank_cache = cache
        if l not in cache:
            s = self.block.dim
            gens = self.differentials[l - 1]
            n_prev = self.betti[l - 1]
            if self.block.p == 2:
                ech = Gf2Echelon()
                for i in range(n_prev):
                    row = 0
                    for t, g in enumerate(gens):
                        if (g >> (i * s)) & 1:
                            row |= 1 << t
                    ech.insert(row)
                cache[l] = ech.dim
            else:
                ech = FpEchelon(self.block.p)
                for row in self.reduced_differential(l):
                    ech.insert(row)
                cache[l] = ech.dim
        return cache[l]


def betti_sequence(block: LocalBlock, degree: int = DEFAULT_DEGREE_CAP,
                   max_matrix_bits: int = DEFAULT_MATRIX_BITS) -> list[int]:
    """(b_0, ..., b_degree) for the block's residue field."""
    if max_matrix_bits == DEFAULT_MATRIX_BITS:
        res = _resolution_cache(block)
    else:
        res = MinimalResolution(block, max_matrix_bits)
    res.extend_to(degree)
    return res.betti[:degree + 1]


@dataclass(frozen=True)
class GrowthCertificate:
    """Proof that b_{l+1} > b_l for every l >= start.

    Derived from the stage inequality in the module docstring with
    A = dim S - dim M^2 and B = dim M, witnessed by the exact values
    b_{start} and b_{start+1} whose ratio reaches r.
    """

    start: int
    ratio: Fraction
    A: int
    B: int
    b_lo: int
    b_hi: int


def betti_growth_certificate(block: LocalBlock, resolution: MinimalResolution,
                             probe_limit: int = 8) -> GrowthCertificate | None:
    """Certify strict Betti growth from exact low-degree values, if possible."""
    A = block.dim - block.m_squared_dim()
    B = block.dim - 1
    l = 1
    while True:
        if resolution.computed_degree < l:
            try:
                resolution.extend_to(l)
            except ResolutionTooLarge:
                return None
        b_lo, b_hi = resolution.betti[l - 1], resolution.betti[l]
        if b_lo > 0 and b_hi > 0:
            q = Fraction(b_hi, b_lo)
            for r in (q, Fraction(A, 2), (1 + q) / 2):
                if 1 < r <= q and r * r - A * r + B <= 0:
                    return GrowthCertificate(l - 1, r, A, B, b_lo, b_hi)
        if l >= probe_limit:
            return None
        l += 1


def _block_cache(algebra: ModPAlgebra) -> list[LocalBlock]:
    return blocks(algebra)


def _resolution_cache(block: LocalBlock) -> MinimalResolution:
    cached = getattr(block, "_resolution_cache", None)
    if cached is None:
        cached = MinimalResolution(block)
        block._resolution_cache = cached
    return cached


def shared_block(algebra: ModPAlgebra, i: int, j: int) -> LocalBlock | None:
    """The block whose simple both indices name, or None across blocks."""
    part = algebra.partition
    ci, cj = part.class_index_of(i), part.class_index_of(j)
    if ci != cj:
        return None
    return _block_cache(algebra)[ci]


def ext_dims_pair(algebra: ModPAlgebra, i: int, j: int,
                  degree: int) -> list[int]:
    """dim Ext^l between the simples of indices i and j, l = 0..degree."""
    block = shared_block(algebra, i, j)
    if block is None:
        return [0] * (degree + 1)
    res = _resolution_cache(block)
    res.extend_to(degree)
    return res.betti[:degree + 1]


def tor_dims_pair(algebra: ModPAlgebra, i: int, j: int,
                  degree: int) -> list[int]:
    """dim Tor_l between the simples, recomputed from the tensored complex.

    Taking ranks of the residue-reduced differentials recomputes the
    homology of F_* tensor k; minimality makes those ranks zero, and the
    result is asserted equal to the Betti numbers.
    """
    block = shared_block(algebra, i, j)
    if block is None:
        return [0] * (degree + 1)
    res = _resolution_cache(block)
    res.extend_to(degree + 1)
    ranks = [res.reduced_rank(l) for l in range(1, degree + 2)]
    dims = []
    for l in range(degree + 1):
        r_l = ranks[l - 1] if l >= 1 else 0
        dims.append(res.betti[l] - r_l - ranks[l])
    if dims != res.betti[:degree + 1]:
        raise AssertionError("tensored homology disagrees with Betti numbers")
    return dims
