"""Subrings of a ghost ring Z^I given by a Z-basis: the separation layer.

Everything downstream (congruence numbers, p-equivalence, blocks, Ext/Tor)
only sees this interface, so arbitrary bases can be tested without a group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidPrime, NonIntegralSolution, SeparationFailure
from .permgroup import is_prime
from .marks import MarksTable


class BRing:
    """A subring R of Z^I with pointwise operations, given by a Z-basis.

    The basis must be square (separation forces R to have full rank) and
    the all-ones vector must decompose integrally.  Pairwise basis
    products must decompose integrally as well; their coordinates are the
    integer structure constants reused by the mod-p and oracle layers.
    """

    def __init__(self, labels: list[str], basis: list[list[int]],
                 check: bool = True):
        self.labels = list(labels)
        self.n = len(labels)
        if len(basis) != self.n:
            raise ValueError("basis must have one vector per index")
        if any(len(v) != self.n for v in basis):
            raise ValueError("basis vectors must have one entry per index")
        self.basis = [list(v) for v in basis]
        self._inv = _rational_inverse(self.basis)
        self.unit_coeffs = self.decompose([1] * self.n)
        self._structure: list[list[list[int]]] | None = None
        self._witness: dict[tuple[int, int], list[int]] = {}
        if check:
            self._check_closure()
            for i in range(self.n):
                for j in range(self.n):
                    if i != j:
                        self.separation_witness(i, j)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown index label {label!r}") from None

    def decompose_rational(self, vector) -> list[Fraction]:
        if len(vector) != self.n:
            raise ValueError("vector has the wrong length")
        return [sum((Fraction(vector[j]) * self._inv[j][h] for j in range(self.n)),
                    Fraction(0)) for h in range(self.n)]

    def decompose(self, vector) -> list[int]:
        coeffs = self.decompose_rational(vector)
        for lab, c in zip(self.labels, coeffs):
            if c.denominator != 1:
                raise NonIntegralSolution(
                    f"coefficient {c} at index {lab}: vector lies outside R")
        return [int(c) for c in coeffs]

    def contains(self, vector) -> bool:
        try:
            self.decompose(vector)
            return True
        except NonIntegralSolution:
            return False

    def ghost_of(self, coeffs) -> list[int]:
        out = [0] * self.n
        for h, c in enumerate(coeffs):
            if c:
                row = self.basis[h]
                for j in range(self.n):
                    out[j] += c * row[j]
        return out

    def structure_constants(self) -> list[list[list[int]]]:
        """c[k][l] = coordinates of basis_k . basis_l (pointwise product)."""
        if self._structure is None:
            sc = []
            for k in range(self.n):
                row = []
                for l in range(self.n):
                    prod = [a * b for a, b in zip(self.basis[k], self.basis[l])]
                    row.append(self.decompose(prod))
                sc.append(row)
            self._structure = sc
        return self._structure

    def _check_closure(self) -> None:
        try:
            self.structure_constants()
        except NonIntegralSolution as exc:
            raise SeparationFailure(
                f"Z-span is not closed under products: {exc}") from exc

    def separation_witness(self, i: int, j: int) -> list[int]:
        """A ghost vector of an element r in R with r(i) != 0 and r(j) = 0.

        Preference order: a basis vector that already separates, then
        r(j) * unit - r built from a basis vector vanishing nowhere at i,
        then an integer combination found through the kernel lattice of
        the j-coordinate.
        """
        if i == j:
            raise ValueError("separation is only defined for distinct indices")
        cached = self._witness.get((i, j))
        if cached is not None:
            return cached
        witness = None
        for vec in self.basis:
            if vec[i] != 0 and vec[j] == 0:
                witness = list(vec)
                break
        if witness is None:
            for vec in self.basis:
                if vec[j] != vec[i]:
                    cand = [vec[j] * u - v for u, v in
                            zip([1] * self.n, vec)]
                    if cand[i] != 0 and cand[j] == 0:
                        witness = cand
                        break
        if witness is None:
            witness = self._kernel_witness(i, j)
        if witness is None:
            raise SeparationFailure(
                f"no element separates {self.labels[i]} from {self.labels[j]}")
        self._witness[(i, j)] = witness
        return witness

    def _kernel_witness(self, i: int, j: int) -> list[int] | None:
        # integer combinations with zero j-coordinate form a sublattice of
        # Z^n; spanning coefficient vectors: one per zero entry, plus pairs
        # cancelling two nonzero j-values through their gcd
        vals = [vec[j] for vec in self.basis]
        candidates: list[list[int]] = []
        nz = [k for k, v in enumerate(vals) if v]
        for k, v in enumerate(vals):
            if not v:
                coeff = [0] * self.n
                coeff[k] = 1
                candidates.append(coeff)
        for a in range(len(nz)):
            for b in range(a + 1, len(nz)):
                ka, kb = nz[a], nz[b]
                g = math.gcd(vals[ka], vals[kb])
                coeff = [0] * self.n
                coeff[ka] = vals[kb] // g
                coeff[kb] = -(vals[ka] // g)
                candidates.append(coeff)
        for coeff in candidates:
            vec = self.ghost_of(coeff)
            if vec[i] != 0 and vec[j] == 0:
                return vec
        return None

    def idempotent_denominator(self, i: int) -> int:
        """Smallest m > 0 with m . e_i in R (e_i the i-th ghost idempotent).

        Every element of R vanishing off i is an integer multiple of that
        minimal m . e_i, so m is the exact annihilator bound used for the
        diagonal Ext exponent.
        """
        target = [0] * self.n
        target[i] = 1
        coeffs = self.decompose_rational(target)
        return math.lcm(*(c.denominator for c in coeffs))


def _rational_inverse(matrix: list[list[int]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] +
           [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        sel = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if sel is None:
            raise ValueError("basis vectors are linearly dependent over Q")
        aug[col], aug[sel] = aug[sel], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def from_marks(table: MarksTable) -> BRing:
    """The Burnside ring as a subring of its ghost ring."""
    return BRing(table.labels(), [table.row(h) for h in range(table.size)])


class CongruenceMatrix:
    """d(i, j): the largest modulus with r(i) = r(j) mod d for all r in R."""

    def __init__(self, ring: BRing):
        self.ring = ring
        n = ring.n
        self._d = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                g = 0
                for vec in ring.basis:
                    g = math.gcd(g, abs(vec[i] - vec[j]))
                if g == 0:
                    raise SeparationFailure(
                        f"indices {ring.labels[i]} and {ring.labels[j]} are "
                        f"indistinguishable; not a B-ring basis")
                self._d[i][j] = self._d[j][i] = g

    def d(self, i: int, j: int) -> int:
        if i == j:
            raise ValueError("d(i, j) is only defined for distinct indices")
        return self._d[i][j]

    def d_by_label(self, a: str, b: str) -> int:
        return self.d(self.ring.index_of(a), self.ring.index_of(b))

    def to_json(self) -> dict:
        labels = self.ring.labels
        return {
            "labels": list(labels),
            "d": [
                {"i": labels[i], "j": labels[j], "d": self._d[i][j]}
                for i in range(self.ring.n)
                for j in range(i + 1, self.ring.n)
            ],
        }


def congruence_d(ring: BRing) -> CongruenceMatrix:
    """The gcd over the basis of |r(i) - r(j)| equals the gcd over all of R."""
    return CongruenceMatrix(ring)


@dataclass
class PrimeEquivalence:
    """Partition of the index set by p | d(i, j), reflexively closed."""

    p: int
    classes: list[list[int]]
    ring: BRing

    def class_index_of(self, i: int) -> int:
        for k, cls in enumerate(self.classes):
            if i in cls:
                return k
        raise ValueError(f"index {i} not in any class")

    def same_class(self, i: int, j: int) -> bool:
        return self.class_index_of(i) == self.class_index_of(j)

    def label_classes(self) -> list[list[str]]:
        return [[self.ring.labels[i] for i in cls] for cls in self.classes]

    def to_json(self) -> dict:
        return {"p": self.p, "classes": self.label_classes()}


def p_classes(ring: BRing, p: int,
              dmat: CongruenceMatrix | None = None) -> PrimeEquivalence:
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")
    if dmat is None:
        dmat = congruence_d(ring)
    n = ring.n
    assigned = [-1] * n
    classes: list[list[int]] = []
    for i in range(n):
        if assigned[i] >= 0:
            continue
        cls = [i]
        assigned[i] = len(classes)
        for j in range(i + 1, n):
            if assigned[j] < 0 and dmat.d(i, j) % p == 0:
                cls.append(j)
                assigned[j] = len(classes)
        classes.append(cls)
    # transitivity is guaranteed by the definition of d; assert anyway
    for i in range(n):
        for j in range(n):
            if i != j:
                same = assigned[i] == assigned[j]
                if same != (dmat.d(i, j) % p == 0):
                    raise AssertionError("p-divisibility of d is not transitive")
    return PrimeEquivalence(p, classes, ring)


@dataclass
class SeparatorSystem:
    """Elements s_i with ghost supported exactly at i, and the scale N.

    N . e_i lies in R for every i, exhibiting N . Z^I <= R <= Z^I.
    """

    ring: BRing
    ghosts: list[list[int]]
    coeffs: list[list[int]]
    N: int

    def value_at_index(self, i: int) -> int:
        return self.ghosts[i][i]


def separators(ring: BRing) -> SeparatorSystem:
    """s_i as the product of pairwise separation witnesses r_{i,j}."""
    n = ring.n
    ghosts = []
    coeffs = []
    for i in range(n):
        vec = [1] * n
        for j in range(n):
            if j != i:
                w = ring.separation_witness(i, j)
                vec = [a * b for a, b in zip(vec, w)]
        if any(vec[j] != 0 for j in range(n) if j != i) or vec[i] == 0:
            raise SeparationFailure("separator product has wrong support")
        ghosts.append(vec)
        coeffs.append(ring.decompose(vec))
    N = 1
    for i in range(n):
        N *= ghosts[i][i]
    N = abs(N)
    for i in range(n):
        scaled = [0] * n
        scaled[i] = N
        ring.decompose(scaled)
    return SeparatorSystem(ring, ghosts, coeffs, N)
