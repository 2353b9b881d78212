"""Table of marks and Burnside ring arithmetic in ghost coordinates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BasisMismatch, NonIntegralSolution
from .permgroup import PermGroup, SubgroupClassTable, coset_action, subgroup_classes


class MarksTable:
    """The square matrix M[h][j] = number of cosets in G/H_h fixed by J_j.

    Rows and columns are indexed by the subgroup classes in their fixed
    order, which makes M lower triangular with diagonal [N_G(H) : H].
    Row h is simultaneously the ghost vector of the basis element [G/H_h].
    """

    def __init__(self, class_table: SubgroupClassTable, matrix: list[list[int]]):
        self.class_table = class_table
        self.matrix = [list(row) for row in matrix]
        self.size = len(matrix)

    def labels(self) -> list[str]:
        return self.class_table.labels()

    def row(self, h: int) -> list[int]:
        return list(self.matrix[h])

    def basis_element(self, h: int) -> "BurnsideElement":
        coeffs = [0] * self.size
        coeffs[h] = 1
        return BurnsideElement(self, tuple(coeffs))

    def unit(self) -> "BurnsideElement":
        return self.basis_element(self.size - 1)

    def zero(self) -> "BurnsideElement":
        return BurnsideElement(self, (0,) * self.size)

    def element(self, coeffs) -> "BurnsideElement":
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != self.size:
            raise BasisMismatch("coefficient vector has the wrong length")
        return BurnsideElement(self, coeffs)

    def to_json(self, group_name: str) -> dict:
        return {
            "group": group_name,
            "classes": [
                {
                    "label": c.label,
                    "order": c.order,
                    "representative": [list(g.images) for g in c.representative.elements],
                }
                for c in self.class_table
            ],
            "matrix": [list(row) for row in self.matrix],
        }


@dataclass(frozen=True)
class BurnsideElement:
    """An element of the Burnside ring as coefficients over the [G/H] basis."""

    table: MarksTable
    coeffs: tuple[int, ...]

    def __add__(self, other: "BurnsideElement") -> "BurnsideElement":
        _same_basis(self, other)
        return BurnsideElement(self.table,
                               tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "BurnsideElement") -> "BurnsideElement":
        _same_basis(self, other)
        return BurnsideElement(self.table,
                               tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, k: int) -> "BurnsideElement":
        return BurnsideElement(self.table, tuple(k * a for a in self.coeffs))

    def __mul__(self, other: "BurnsideElement") -> "BurnsideElement":
        return multiply(self, other)

    def __eq__(self, other):
        return (isinstance(other, BurnsideElement)
                and self.table is other.table and self.coeffs == other.coeffs)


def _same_basis(x: BurnsideElement, y: BurnsideElement) -> None:
    if x.table is not y.table:
        raise BasisMismatch("elements come from different marks tables")


def table_of_marks(group: PermGroup,
                   class_table: SubgroupClassTable | None = None) -> MarksTable:
    """Compute all marks by counting fixed cosets of each coset action."""
    if class_table is None:
        class_table = subgroup_classes(group)
    n = len(class_table)
    matrix = []
    for h in range(n):
        action = coset_action(group, class_table[h].representative)
        row = [action.fixed_points(class_table[j].representative) for j in range(n)]
        matrix.append(row)
    return MarksTable(class_table, matrix)


def double_count_mark(group: PermGroup, class_table: SubgroupClassTable,
                      h: int, j: int) -> int:
    """Redundant cross-check: |{g : g^-1 J g <= H}| / |H|."""
    H = class_table[h].representative
    J = class_table[j].representative
    count = 0
    for g in group.elements:
        ginv = g.inverse()
        if all(ginv * x * g in H for x in J.elements):
            count += 1
    assert count % H.order == 0
    return count // H.order


def verify_marks(table: MarksTable) -> None:
    """Assert the structural invariants and the double-count formula."""
    group = table.class_table.group
    n = table.size
    for h in range(n):
        for j in range(n):
            expected = double_count_mark(group, table.class_table, h, j)
            if table.matrix[h][j] != expected:
                raise AssertionError(
                    f"mark ({h},{j}) fixed-coset count {table.matrix[h][j]} "
                    f"!= double count {expected}")
            if j > h and table.matrix[h][j] != 0:
                raise AssertionError("marks table is not lower triangular")


def ghost(x: BurnsideElement) -> list[int]:
    """Evaluate all marks of x: the row vector coeffs^T . M."""
    m = x.table.matrix
    n = x.table.size
    out = [0] * n
    for h, c in enumerate(x.coeffs):
        if c:
            row = m[h]
            for j in range(n):
                out[j] += c * row[j]
    return out


def decompose_rational(table: MarksTable, vector) -> list[Fraction]:
    """Solve coeffs^T . M = vector by back-substitution, over exact rationals."""
    n = table.size
    if len(vector) != n:
        raise BasisMismatch("ghost vector has the wrong length")
    m = table.matrix
    coeffs = [Fraction(0)] * n
    for j in range(n - 1, -1, -1):
        acc = Fraction(vector[j])
        for h in range(j + 1, n):
            if m[h][j]:
                acc -= coeffs[h] * m[h][j]
        coeffs[j] = acc / m[j][j]
    return coeffs


def decompose(table: MarksTable, vector) -> BurnsideElement:
    """Inverse of ghost on its image; NonIntegralSolution off the image."""
    coeffs = decompose_rational(table, vector)
    for label, c in zip(table.labels(), coeffs):
        if c.denominator != 1:
            raise NonIntegralSolution(
                f"coefficient {c} at class {label}: vector is in the ghost "
                f"ring but not in the Burnside ring")
    return BurnsideElement(table, tuple(int(c) for c in coeffs))


def multiply(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    """Product via the ghost embedding: decompose(ghost(x) . ghost(y))."""
    _same_basis(x, y)
    gx, gy = ghost(x), ghost(y)
    return decompose(x.table, [a * b for a, b in zip(gx, gy)])
