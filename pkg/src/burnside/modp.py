"""The algebra R/pR: evaluation map, radical, and local block summands."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bring import BRing, congruence_d, p_classes
from .errors import IdempotentLiftDivergence, InvalidPrime, NotLocal
from .fplinalg import FpEchelon, fp_nullspace, fp_solve
from .permgroup import is_prime


class ModPAlgebra:
    """R tensor F_p in the ghost basis, with the evaluation map theta.

    theta sends an element to its ghost values mod p, one coordinate per
    p-equivalence class; it is a surjective algebra map whose kernel is
    the radical.
    """

    def __init__(self, ring: BRing, p: int):
        if not is_prime(p):
            raise InvalidPrime(f"{p} is not prime")
        self.ring = ring
        self.p = p
        self.dim = ring.n
        sc = ring.structure_constants()
        self.sc = [[[c % p for c in sc[k][l]] for l in range(self.dim)]
                   for k in range(self.dim)]
        self.partition = p_classes(ring, p, congruence_d(ring))
        self.classes = self.partition.classes
        for cls in self.classes:
            for k in range(self.dim):
                if len({ring.basis[k][i] % p for i in cls}) != 1:
                    raise AssertionError(
                        "evaluation map is not constant on a p-class")
        reps = [cls[0] for cls in self.classes]
        self.theta = [[ring.basis[k][i] % p for k in range(self.dim)]
                      for i in reps]
        self.unit = [c % p for c in ring.unit_coeffs]
        self._check()

    def mul(self, x: list[int], y: list[int]) -> list[int]:
        p, n = self.p, self.dim
        out = [0] * n
        for k, a in enumerate(x):
            if a:
                row = self.sc[k]
                for l, b in enumerate(y):
                    if b:
                        cl = row[l]
                        ab = a * b
                        for m in range(n):
                            if cl[m]:
                                out[m] = (out[m] + ab * cl[m]) % p
        return out

    def theta_of(self, x: list[int]) -> list[int]:
        p = self.p
        return [sum(r * c for r, c in zip(row, x)) % p for row in self.theta]

    def power(self, x: list[int], e: int) -> list[int]:
        acc = list(self.unit)
        base = list(x)
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def _check(self) -> None:
        n, p = self.dim, self.p
        basis = [[1 if t == k else 0 for t in range(n)] for k in range(n)]
        for k in range(n):
            u = self.mul(self.unit, basis[k])
            if u != [c % p for c in basis[k]]:
                raise AssertionError("unit element fails on the basis")
            for l in range(k, n):
                if self.mul(basis[k], basis[l]) != self.mul(basis[l], basis[k]):
                    raise AssertionError("structure constants not commutative")
        for k in range(n):
            for l in range(n):
                for m in range(n):
                    left = self.mul(self.mul(basis[k], basis[l]), basis[m])
                    right = self.mul(basis[k], self.mul(basis[l], basis[m]))
                    if left != right:
                        raise AssertionError("structure constants not associative")
        ech = FpEchelon(p)
        for row in self.theta:
            ech.insert(row)
        if ech.dim != len(self.classes):
            raise AssertionError("theta is not surjective")


def build_modp(ring: BRing, p: int) -> ModPAlgebra:
    return ModPAlgebra(ring, p)


def radical(algebra: ModPAlgebra) -> list[list[int]]:
    """Basis of ker(theta); verified nilpotent by repeated squaring."""
    basis = fp_nullspace(algebra.theta, algebra.dim, algebra.p)
    current = list(basis)
    for _ in range(algebra.dim + 1):
        if not current:
            break
        ech = FpEchelon(algebra.p)
        nxt = []
        for x in current:
            for y in current:
                prod = algebra.mul(x, y)
                if ech.insert(prod):
                    nxt.append(prod)
        current = nxt
    else:
        raise AssertionError("kernel of theta is not nilpotent")
    if current:
        raise AssertionError("kernel of theta is not nilpotent")
    return basis


def nilpotent_span(algebra: ModPAlgebra) -> list[list[int]]:
    """Span of all nilpotent elements, by exhaustive scan (verify mode).

    Exponential in the dimension; intended for cross-checking the radical
    on small algebras only.
    """
    n, p = algebra.dim, algebra.p
    if p ** n > 1 << 16:
        raise ValueError("algebra too large for the exhaustive nilpotency scan")
    ech = FpEchelon(p)
    out = []
    coords = [0] * n
    while True:
        x = list(coords)
        y = list(x)
        for _ in range(n + 1):
            y = algebra.mul(y, y)
        if not any(y) and any(x) and ech.insert(x):
            out.append(x)
        k = 0
        while k < n and coords[k] == p - 1:
            coords[k] = 0
            k += 1
        if k == n:
            break
        coords[k] += 1
    return out


@dataclass
class LocalBlock:
    """One indecomposable summand of R/pR, a commutative local algebra.

    Internal coordinates put the block idempotent first, then a basis of
    the maximal ideal, so the residue map is projection on coordinate 0.
    """

    algebra: ModPAlgebra
    class_index: int
    idempotent: list[int]
    basis: list[list[int]] = field(repr=False)
    mult: list[list[list[int]]] = field(repr=False)

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def labels(self) -> list[str]:
        ring = self.algebra.ring
        return [ring.labels[i] for i in self.algebra.classes[self.class_index]]

    def mul_coords(self, x: list[int], y: list[int]) -> list[int]:
        p, s = self.p, self.dim
        out = [0] * s
        for a, ca in enumerate(x):
            if ca:
                row = self.mult[a]
                for b, cb in enumerate(y):
                    if cb:
                        cab = row[b]
                        f = ca * cb
                        for m in range(s):
                            if cab[m]:
                                out[m] = (out[m] + f * cab[m]) % p
        return out

    def maximal_ideal_dim(self) -> int:
        return self.dim - 1

    def m_squared_dim(self) -> int:
        ech = FpEchelon(self.p)
        s = self.dim
        for a in range(1, s):
            ea = [1 if t == a else 0 for t in range(s)]
            for b in range(a, s):
                eb = [1 if t == b else 0 for t in range(s)]
                ech.insert(self.mul_coords(ea, eb))
        return ech.dim

    def socle_dim(self) -> int:
        """dim of the annihilator of the maximal ideal inside the block."""
        s = self.dim
        if s == 1:
            return 1
        rows = []
        for a in range(1, s):
            ea = [1 if t == a else 0 for t in range(s)]
            cols = [self.mul_coords([1 if t == b else 0 for t in range(s)], ea)
                    for b in range(s)]
            for out_coord in range(s):
                rows.append([cols[b][out_coord] for b in range(s)])
        return len(fp_nullspace(rows, s, self.p))

    def invariants(self) -> dict:
        m_dim = self.maximal_ideal_dim()
        m2 = self.m_squared_dim()
        m_mod_m2 = m_dim - m2
        socle = self.socle_dim()
        return {
            "dim": self.dim,
            "m_mod_m2_dim": m_mod_m2,
            "socle_dim": socle,
            "is_symmetric": socle == 1,
            "tor_bounded": m_mod_m2 <= 1,
        }


def blocks(algebra: ModPAlgebra) -> list[LocalBlock]:
    """Block idempotents by p-th power lifting, one block per p-class.

    Memoized on the algebra: blocks are immutable and later layers hang
    resolution caches off them.
    """
    cached = getattr(algebra, "_blocks_cache", None)
    if cached is not None:
        return cached
    p, n = algebra.p, algebra.dim
    out = []
    idempotents = []
    for ci in range(len(algebra.classes)):
        target = [1 if k == ci else 0 for k in range(len(algebra.classes))]
        u = fp_solve(algebra.theta, target, p)
        assert u is not None, "theta must be surjective"
        e = u
        for _ in range(n + 1):
            if algebra.mul(e, e) == e:
                break
            e = algebra.power(e, p)
        else:
            raise IdempotentLiftDivergence(
                "p-th powering did not stabilize within the dimension bound")
        idempotents.append(e)
        out.append(_build_block(algebra, ci, e))
    total = [0] * n
    for e in idempotents:
        total = [(a + b) % p for a, b in zip(total, e)]
    if total != algebra.unit:
        raise AssertionError("block idempotents do not sum to the unit")
    for a in range(len(idempotents)):
        for b in range(a + 1, len(idempotents)):
            if any(algebra.mul(idempotents[a], idempotents[b])):
                raise AssertionError("block idempotents are not orthogonal")
    if sum(b.dim for b in out) != n:
        raise AssertionError("block dimensions do not add up to dim R/pR")
    algebra._blocks_cache = out
    return out


def _build_block(algebra: ModPAlgebra, class_index: int,
                 idem: list[int]) -> LocalBlock:
    p, n = algebra.p, algebra.dim
    ech = FpEchelon(p)
    span = []
    for k in range(n):
        ek = [1 if t == k else 0 for t in range(n)]
        v = algebra.mul(idem, ek)
        if ech.insert(v):
            span.append(v)
    expected = len(algebra.classes[class_index])
    if len(span) != expected:
        raise AssertionError(
            f"block dimension {len(span)} != class size {expected}")
    # the maximal ideal: block elements with zero theta at this class
    theta_row = algebra.theta[class_index]
    rows = [[sum(r * c for r, c in zip(theta_row, v)) % p for v in span]]
    m_coords = fp_nullspace(rows, len(span), p)
    if len(m_coords) != len(span) - 1:
        raise NotLocal("residue field is not one-dimensional")
    mbasis = []
    for coord in m_coords:
        vec = [0] * n
        for c, v in zip(coord, span):
            if c:
                vec = [(x + c * y) % p for x, y in zip(vec, v)]
        mbasis.append(vec)
    basis = [idem] + mbasis
    s = len(basis)
    mat = [list(v) for v in basis]
    mult = []
    for a in range(s):
        row = []
        for b in range(s):
            prod = algebra.mul(basis[a], basis[b])
            coords = fp_solve([[mat[k][t] for k in range(s)] for t in range(n)],
                              prod, p)
            if coords is None:
                raise AssertionError("block is not closed under products")
            row.append(coords)
        mult.append(row)
    return LocalBlock(algebra, class_index, idem, basis, mult)


def block_invariants(block: LocalBlock) -> dict:
    return block.invariants()


def blocks_report(algebra: ModPAlgebra) -> dict:
    out = {
        "p": algebra.p,
        "classes": algebra.partition.label_classes(),
        "blocks": [],
    }
    for b in blocks(algebra):
        inv = b.invariants()
        out["blocks"].append({
            "class": b.labels,
            "dim": inv["dim"],
            "m_mod_m2": inv["m_mod_m2_dim"],
            "socle": inv["socle_dim"],
            "symmetric": inv["is_symmetric"],
            "bounded": inv["tor_bounded"],
        })
    return out
