"""Integral Ext and Tor between the mark modules Z_i over a B-ring.

Degree 0 comes from closed formulas, higher degrees from the long exact
sequence recurrence a_{l+1} = b_l - a_l driven by the block Betti numbers,
with Tor obtained through z_l = a_{l+1}.  Exponent bounds come from the
congruence numbers d(i, j) and the minimal idempotent multiples; a p-part
is pinned down exactly as (Z/p)^rank whenever its bound has p-valuation 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bring import BRing, CongruenceMatrix, congruence_d, from_marks
from .errors import NegativeRank
from .marks import MarksTable
from .modp import ModPAlgebra, build_modp
from .permgroup import PermGroup
from .resolution import _block_cache, _resolution_cache, shared_block


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    n = abs(n)
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0 and n:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class ModuleType:
    """A finitely generated abelian group in invariant factor form."""

    free_rank: int
    invariants: tuple[int, ...]  # each > 1, ascending divisibility chain

    @classmethod
    def zero(cls) -> "ModuleType":
        return cls(0, ())

    @classmethod
    def free(cls, rank: int) -> "ModuleType":
        return cls(rank, ())

    @classmethod
    def cyclic(cls, n: int) -> "ModuleType":
        return cls(0, (n,)) if n > 1 else cls.zero()

    @classmethod
    def from_p_ranks(cls, p_ranks: dict[int, int]) -> "ModuleType":
        """Direct sum over p of (Z/p)^rank, combined into invariant factors."""
        height = max(p_ranks.values(), default=0)
        factors = []
        for t in range(height, 0, -1):
            m = 1
            for p, r in p_ranks.items():
                if r >= t:
                    m *= p
            if m > 1:
                factors.append(m)
        return cls(0, tuple(factors))

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.invariants

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariants)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class PPart:
    p: int
    rank: int
    exponent_bound: int  # a power of p dividing the annihilator
    exact: bool          # True when the part is (Z/p)^rank on the nose

    def to_json(self) -> dict:
        return {"p": self.p, "rank": self.rank,
                "exponent_bound": self.exponent_bound}


@dataclass(frozen=True)
class DegreeCell:
    l: int
    p_parts: tuple[PPart, ...]
    module: ModuleType | None
    provenance: str

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "p_parts": [pp.to_json() for pp in self.p_parts],
            "module": None if self.module is None else str(self.module),
            "provenance": self.provenance,
        }

    def same_value(self, other: "DegreeCell") -> bool:
        return (self.p_parts == other.p_parts
                and self.module == other.module)


@dataclass
class ExtTorReport:
    kind: str  # "ext" or "tor"
    group: str
    source: str
    target: str
    degrees: list[DegreeCell] = field(default_factory=list)

    def cell(self, l: int) -> DegreeCell:
        return self.degrees[l]

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "source": self.source,
            "target": self.target,
            "degrees": [c.to_json() for c in self.degrees],
        }


class ExtTorContext:
    """Shared caches for one B-ring: d-matrix, mod-p algebras, resolutions."""

    def __init__(self, ring: BRing, group_name: str = "",
                 group_order: int | None = None):
        self.ring = ring
        self.group_name = group_name
        self.group_order = group_order
        self.dmat: CongruenceMatrix = congruence_d(ring)
        self._algebras: dict[int, ModPAlgebra] = {}
        self._m0: dict[int, int] = {}

    @classmethod
    def from_marks(cls, table: MarksTable, group_name: str = "") -> "ExtTorContext":
        group: PermGroup = table.class_table.group
        return cls(from_marks(table), group_name, group.order)

    def primes(self) -> list[int]:
        """Primes dividing some d(i, j); all other p-parts vanish."""
        seen = set()
        n = self.ring.n
        for i in range(n):
            for j in range(i + 1, n):
                seen.update(prime_factors(self.dmat.d(i, j)))
        return sorted(seen)

    def algebra(self, p: int) -> ModPAlgebra:
        if p not in self._algebras:
            self._algebras[p] = build_modp(self.ring, p)
        return self._algebras[p]

    def m0(self, i: int) -> int:
        if i not in self._m0:
            self._m0[i] = self.ring.idempotent_denominator(i)
        return self._m0[i]

    def exponent_bound(self, i: int, j: int) -> int:
        """Annihilator of Ext^l (l >= 1): d(i, j) off the diagonal, else the
        minimal m with m.e_i in R (both act as zero on every Ext group)."""
        return self.m0(i) if i == j else self.dmat.d(i, j)

    def betti(self, p: int, i: int, j: int, degree: int) -> list[int]:
        block = shared_block(self.algebra(p), i, j)
        if block is None:
            return [0] * (degree + 1)
        res = _resolution_cache(block)
        res.extend_to(degree)
        return res.betti[:degree + 1]

    def block_of(self, p: int, i: int):
        algebra = self.algebra(p)
        ci = algebra.partition.class_index_of(i)
        return _block_cache(algebra)[ci]


def hom_base(i: int, j: int) -> ModuleType:
    """Hom(Z_i, Z_j): Z on the diagonal, zero otherwise."""
    return ModuleType.free(1) if i == j else ModuleType.zero()


def tensor_base(ctx: ExtTorContext, i: int, j: int) -> ModuleType:
    """Z_i tensor Z_j: Z on the diagonal, Z/d(i, j) otherwise."""
    if i == j:
        return ModuleType.free(1)
    return ModuleType.cyclic(ctx.dmat.d(i, j))


def ext_ranks(ctx: ExtTorContext, i: int, j: int, p: int, L: int) -> list[int]:
    """p-ranks a_1..a_L of Ext^l(Z_i, Z_j) via a_{l+1} = b_l - a_l."""
    algebra = ctx.algebra(p)
    if not algebra.partition.same_class(i, j):
        return [0] * L
    if L < 1:
        return []
    b = ctx.betti(p, i, j, max(L - 1, 1))
    a = [0 if i == j else 1]
    for l in range(1, L):
        nxt = b[l] - a[-1]
        if nxt < 0:
            raise NegativeRank(
                f"a_{l + 1} = {nxt} from b_{l} = {b[l]}, a_{l} = {a[-1]}")
        a.append(nxt)
    return a


def tor_ranks(ctx: ExtTorContext, i: int, j: int, p: int, L: int) -> list[int]:
    """p-ranks z_1..z_L of Tor_l(Z_i, Z_j) through z_l = a_{l+1}.

    The backward relation z_l = y_{l+1} - z_{l+1} runs against the degree
    direction, so it serves as a consistency assertion instead.
    """
    a = ext_ranks(ctx, i, j, p, L + 1)
    z = a[1:]
    algebra = ctx.algebra(p)
    if algebra.partition.same_class(i, j) and L >= 2:
        y = ctx.betti(p, i, j, L)
        for l in range(1, L):
            if z[l - 1] != y[l + 1] - z[l]:
                raise AssertionError(
                    f"backward Tor recurrence fails at degree {l}")
    return z


def _p_part_cells(ctx: ExtTorContext, i: int, j: int, L: int,
                  rank_fn) -> list[list[PPart]]:
    """Per-degree p-parts for degrees 1..L using the given rank sequence."""
    per_degree: list[list[PPart]] = [[] for _ in range(L)]
    for p in ctx.primes():
        algebra = ctx.algebra(p)
        if not algebra.partition.same_class(i, j):
            continue
        ranks = rank_fn(p)
        bound = ctx.exponent_bound(i, j)
        v = p_valuation(bound, p)
        exact = v == 1
        for l in range(1, L + 1):
            r = ranks[l - 1]
            if r < 0:
                raise NegativeRank(f"negative rank at degree {l}")
            if r > 0 and v == 0:
                raise AssertionError(
                    "nonzero p-rank with p-coprime annihilator")
            if r:
                per_degree[l - 1].append(PPart(p, r, p ** v, exact))
    return per_degree


def _assemble(cells: list[list[PPart]]) -> list[DegreeCell]:
    out = []
    for l0, parts in enumerate(cells):
        parts = tuple(sorted(parts, key=lambda pp: pp.p))
        if all(pp.exact for pp in parts):
            module = ModuleType.from_p_ranks({pp.p: pp.rank for pp in parts})
            provenance = "closed-form"
        else:
            module = None
            provenance = "recurrence"
        out.append(DegreeCell(l0 + 1, parts, module, provenance))
    return out


def ext_report(ctx: ExtTorContext, i: int, j: int, L: int) -> ExtTorReport:
    report = ExtTorReport("ext", ctx.group_name,
                          ctx.ring.labels[i], ctx.ring.labels[j])
    base = hom_base(i, j)
    report.degrees.append(DegreeCell(0, (), base, "closed-form"))
    cells = _p_part_cells(ctx, i, j, L,
                          lambda p: ext_ranks(ctx, i, j, p, L))
    report.degrees.extend(_assemble(cells))
    return report


def tor_report(ctx: ExtTorContext, i: int, j: int, L: int) -> ExtTorReport:
    report = ExtTorReport("tor", ctx.group_name,
                          ctx.ring.labels[i], ctx.ring.labels[j])
    base = tensor_base(ctx, i, j)
    parts = []
    if i != j:
        d = ctx.dmat.d(i, j)
        for p in prime_factors(d):
            v = p_valuation(d, p)
            parts.append(PPart(p, 1, p ** v, v == 1))
    report.degrees.append(
        DegreeCell(0, tuple(parts), base, "closed-form"))
    cells = _p_part_cells(ctx, i, j, L,
                          lambda p: tor_ranks(ctx, i, j, p, L))
    report.degrees.extend(_assemble(cells))
    return report


@dataclass
class SquarefreeResult:
    applicable: bool
    passed: bool
    counterexample: tuple[str, str, int] | None = None

    @property
    def verdict(self) -> str:
        if not self.applicable:
            return "not-applicable"
        return "pass" if self.passed else "fail"


def verify_squarefree(ctx: ExtTorContext, L: int) -> SquarefreeResult:
    """Check Ext^l = Ext^{l+2} exactly for 1 <= l <= L-2, all ordered pairs.

    Only applicable when the group order is square-free; degree 0 is a
    Hom group and stays outside the periodicity claim.
    """
    order = ctx.group_order
    if order is None or any(order % (p * p) == 0 for p in prime_factors(order)):
        return SquarefreeResult(False, False)
    n = ctx.ring.n
    for i in range(n):
        for j in range(n):
            report = ext_report(ctx, i, j, L)
            for l in range(1, L - 1):
                a, b = report.cell(l), report.cell(l + 2)
                if a.module is None or b.module is None:
                    return SquarefreeResult(
                        True, False, (ctx.ring.labels[i], ctx.ring.labels[j], l))
                if not a.same_value(b):
                    return SquarefreeResult(
                        True, False, (ctx.ring.labels[i], ctx.ring.labels[j], l))
    return SquarefreeResult(True, True)
