"""Finite permutation groups: closure, subgroup classes, normalizers, O^p."""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from math import gcd

from .errors import CapExceeded, DegreeMismatch, InvalidPrime, InvalidSubgroup
from .perm import Permutation

DEFAULT_ORDER_CAP = 200


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PermGroup:
    """A finite group of permutations with all elements enumerated.

    Element order is the breadth-first closure order from the identity,
    multiplying generators on the right in their given order; it is
    deterministic and reused everywhere downstream.
    """

    def __init__(self, degree: int, generators: list[Permutation],
                 elements: list[Permutation]):
        self.degree = degree
        self.generators = list(generators)
        self.elements = list(elements)
        self.order = len(elements)
        self._index = {g: i for i, g in enumerate(elements)}

    def __contains__(self, g: Permutation) -> bool:
        return g in self._index

    def __iter__(self):
        return iter(self.elements)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"


def enumerate_elements(generators: list[Permutation], degree: int | None = None,
                       cap: int = DEFAULT_ORDER_CAP) -> PermGroup:
    """Close a generator list under composition, breadth first from the identity.

    With no generators, `degree` must be given (the trivial group needs a
    point count). Raises CapExceeded once the closure grows past `cap`.
    """
    if generators:
        degrees = {g.degree for g in generators}
        if len(degrees) != 1:
            raise DegreeMismatch(f"generator degrees differ: {sorted(degrees)}")
        degree = degrees.pop()
    elif degree is None:
        degree = 1
    if degree < 1:
        raise ValueError("degree must be at least 1")

    identity = Permutation.identity(degree)
    elements = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in generators:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    elements.append(y)
                    new.append(y)
                    if len(elements) > cap:
                        raise CapExceeded(
                            f"group order exceeds cap {cap}")
        frontier = new
    return PermGroup(degree, generators, elements)


class Subgroup:
    """A subgroup given by its full element set, hashable by that set."""

    __slots__ = ("group", "elements", "element_set", "order")

    def __init__(self, group: PermGroup, elements):
        elems = sorted(set(elements))
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "elements", tuple(elems))
        object.__setattr__(self, "element_set", frozenset(elems))
        object.__setattr__(self, "order", len(elems))

    def __setattr__(self, name, value):
        raise AttributeError("Subgroup is immutable")

    def key(self) -> tuple:
        return tuple(g.images for g in self.elements)

    def __contains__(self, g: Permutation) -> bool:
        return g in self.element_set

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.element_set == other.element_set

    def __hash__(self):
        return hash(self.element_set)

    def __repr__(self):
        return f"Subgroup(order={self.order})"


def _closure_in(group: PermGroup, gens: set[Permutation]) -> frozenset[Permutation]:
    identity = group.identity()
    seen = {identity}
    frontier = [identity]
    gens = sorted(gens)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return frozenset(seen)


def check_subgroup(group: PermGroup, sub: Subgroup) -> None:
    if sub.group is not group or not sub.element_set <= set(group.elements):
        raise InvalidSubgroup("not a subgroup of the given group")


def conjugate_subgroup(group: PermGroup, sub: Subgroup, g: Permutation) -> Subgroup:
    ginv = g.inverse()
    return Subgroup(group, (g * h * ginv for h in sub.elements))


def are_conjugate(group: PermGroup, a: Subgroup, b: Subgroup) -> bool:
    if a.order != b.order:
        return False
    return any(conjugate_subgroup(group, a, g) == b for g in group.elements)


def all_subgroups(group: PermGroup) -> list[Subgroup]:
    """Every subgroup, by closing cyclic subgroups under pairwise joins.

    Adequate for the order cap: every subgroup is a join of cyclic ones.
    Output is sorted by (order, element key) and therefore deterministic.
    """
    subs: dict[frozenset, Subgroup] = {}
    for g in group.elements:
        cyc = Subgroup(group, _closure_in(group, {g}))
        subs.setdefault(cyc.element_set, cyc)
    while True:
        current = sorted(subs.values(), key=lambda s: (s.order, s.key()))
        added = False
        for i, a in enumerate(current):
            for b in current[i + 1:]:
                if a.element_set <= b.element_set or b.element_set <= a.element_set:
                    continue
                join = Subgroup(group, _closure_in(group, set(a.elements) | set(b.elements)))
                if join.element_set not in subs:
                    subs[join.element_set] = join
                    added = True
        if not added:
            break
    return sorted(subs.values(), key=lambda s: (s.order, s.key()))


@dataclass(frozen=True)
class SubgroupClass:
    """One conjugacy class of subgroups with a stable label."""

    label: str
    order: int
    representative: Subgroup
    members: tuple[Subgroup, ...] = field(repr=False)


class SubgroupClassTable:
    """Conjugacy classes of subgroups, ordered by non-decreasing order.

    Ties within one order are broken by the representative's element key,
    and labels follow that order: a bare order when the class is unique,
    otherwise order plus a letter ("2a", "2b", ...).
    """

    def __init__(self, group: PermGroup, classes: list[SubgroupClass]):
        self.group = group
        self.classes = classes
        self._by_label = {c.label: i for i, c in enumerate(classes)}

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, i: int) -> SubgroupClass:
        return self.classes[i]

    def labels(self) -> list[str]:
        return [c.label for c in self.classes]

    def index_of_label(self, label: str) -> int:
        if label not in self._by_label:
            raise KeyError(f"unknown class label {label!r}; "
                           f"known: {', '.join(self.labels())}")
        return self._by_label[label]

    def class_of(self, sub: Subgroup) -> int:
        """Index of the class containing the given subgroup."""
        for i, c in enumerate(self.classes):
            if c.order == sub.order and sub in c.members:
                return i
        raise InvalidSubgroup("subgroup not found in the class table")


def subgroup_classes(group: PermGroup) -> SubgroupClassTable:
    subs = all_subgroups(group)
    remaining = {s.element_set: s for s in subs}
    raw_classes: list[tuple[Subgroup, tuple[Subgroup, ...]]] = []
    for sub in subs:
        if sub.element_set not in remaining:
            continue
        members = {conjugate_subgroup(group, sub, g) for g in group.elements}
        for m in members:
            remaining.pop(m.element_set, None)
        ordered = sorted(members, key=lambda s: s.key())
        raw_classes.append((ordered[0], tuple(ordered)))
    raw_classes.sort(key=lambda rc: (rc[0].order, rc[0].key()))

    by_order: dict[int, int] = {}
    for rep, _ in raw_classes:
        by_order[rep.order] = by_order.get(rep.order, 0) + 1
    counter: dict[int, int] = {}
    classes = []
    for rep, members in raw_classes:
        k = counter.get(rep.order, 0)
        counter[rep.order] = k + 1
        if by_order[rep.order] == 1:
            label = str(rep.order)
        else:
            label = f"{rep.order}{string.ascii_lowercase[k]}"
        classes.append(SubgroupClass(label, rep.order, rep, members))
    return SubgroupClassTable(group, classes)


def normalizer(group: PermGroup, sub: Subgroup) -> Subgroup:
    """N_G(H) = {g : gHg^-1 = H}, by direct conjugation test over all g."""
    check_subgroup(group, sub)
    return Subgroup(group, (g for g in group.elements
                            if conjugate_subgroup(group, sub, g) == sub))


def o_p(sub: Subgroup, p: int) -> Subgroup:
    """Smallest normal subgroup of H with p-group quotient.

    Equals the subgroup generated by all elements of H of order coprime
    to p: every such element dies in any p-group quotient, and the
    quotient by their closure has p-power order by Cauchy.
    """
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")
    gens = {h for h in sub.elements if gcd(h.order(), p) == 1}
    return Subgroup(sub.group, _closure_in(sub.group, gens))


class CosetAction:
    """The action of G on the left cosets of H, as permutations of coset indices.

    Cosets are indexed in order of first appearance while scanning the
    group's element list, so the action is deterministic.
    """

    def __init__(self, group: PermGroup, sub: Subgroup):
        check_subgroup(group, sub)
        self.group = group
        self.subgroup = sub
        cosets: list[frozenset[Permutation]] = []
        coset_index: dict[Permutation, int] = {}
        for g in group.elements:
            if g in coset_index:
                continue
            coset = frozenset(g * h for h in sub.elements)
            idx = len(cosets)
            cosets.append(coset)
            for x in coset:
                coset_index[x] = idx
        self.cosets = cosets
        self._coset_index = coset_index
        self.points = len(cosets)
        self._reps = [min(c) for c in cosets]

    def permutation_of(self, g: Permutation) -> Permutation:
        return Permutation(self._coset_index[g * r] for r in self._reps)

    def fixed_points(self, sub: Subgroup) -> int:
        """Number of cosets fixed by every element of the given subgroup."""
        gens = sub.elements
        count = 0
        for t, r in enumerate(self._reps):
            if all(self._coset_index[j * r] == t for j in gens):
                count += 1
        return count

    def kernel(self) -> Subgroup:
        return Subgroup(self.group,
                        (g for g in self.group.elements
                         if self.permutation_of(g).is_identity()))


def coset_action(group: PermGroup, sub: Subgroup) -> CosetAction:
    return CosetAction(group, sub)
