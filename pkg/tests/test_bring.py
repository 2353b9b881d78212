import pytest

from burnside.bring import (BRing, congruence_d, from_marks, p_classes,
                            separators)
from burnside.errors import (InvalidPrime, NonIntegralSolution,
                             SeparationFailure)
from burnside.exttor import prime_factors
from burnside.permgroup import are_conjugate, o_p
from util import get_classes, get_context, get_group, get_marks

CORPUS = ["S3", "C4", "C6", "V4", "D4", "Q8", "S4"]


def test_from_marks_s3():
    ring = from_marks(get_marks("S3"))
    assert ring.labels == ["1", "2", "3", "6"]
    assert ring.unit_coeffs == [0, 0, 0, 1]


def test_trivial_group_ring():
    ring = from_marks(get_marks("C1"))
    assert ring.n == 1
    assert ring.basis == [[1]]
    sep = separators(ring)
    assert sep.N == 1
    assert sep.ghosts == [[1]]


def test_congruence_examples():
    d3 = get_context("S3").dmat
    assert d3.d_by_label("1", "2") == 2
    assert d3.d_by_label("1", "3") == 3
    assert d3.d_by_label("3", "6") == 2
    assert d3.d_by_label("1", "6") == 1
    d4 = get_context("C4").dmat
    assert d4.d_by_label("1", "2") == 4
    assert d4.d_by_label("1", "4") == 2
    assert d4.d_by_label("2", "4") == 2
    with pytest.raises(ValueError):
        d3.d(1, 1)


@pytest.mark.parametrize("name", CORPUS)
def test_d_divides_group_order(name):
    ctx = get_context(name)
    n = ctx.ring.n
    for i in range(n):
        for j in range(i + 1, n):
            assert ctx.group_order % ctx.dmat.d(i, j) == 0


def test_p_classes_examples():
    ctx = get_context("S3")
    assert p_classes(ctx.ring, 2, ctx.dmat).label_classes() == [["1", "2"], ["3", "6"]]
    assert p_classes(ctx.ring, 3, ctx.dmat).label_classes() == [["1", "3"], ["2"], ["6"]]
    assert p_classes(ctx.ring, 5, ctx.dmat).label_classes() == [["1"], ["2"], ["3"], ["6"]]
    ctx4 = get_context("C4")
    assert p_classes(ctx4.ring, 2, ctx4.dmat).label_classes() == [["1", "2", "4"]]
    with pytest.raises(InvalidPrime):
        p_classes(ctx.ring, 6)


@pytest.mark.parametrize("name", CORPUS)
def test_p_discrete_off_group_order(name):
    ctx = get_context(name)
    for p in (11, 13):
        if ctx.group_order % p:
            part = p_classes(ctx.ring, p, ctx.dmat)
            assert all(len(c) == 1 for c in part.classes)


@pytest.mark.parametrize("name", CORPUS)
def test_dress_congruence(name):
    group = get_group(name)
    table = get_classes(name)
    ctx = get_context(name)
    for p in prime_factors(group.order):
        ops = [o_p(c.representative, p) for c in table]
        for i in range(len(table)):
            for j in range(i + 1, len(table)):
                assert (ctx.dmat.d(i, j) % p == 0) == are_conjugate(
                    group, ops[i], ops[j])


@pytest.mark.parametrize("name", ["S3", "C4", "V4", "D4", "Q8", "S4", "C30"])
def test_separators(name):
    ctx = get_context(name)
    ring = ctx.ring
    sep = separators(ring)
    n = ring.n
    for i in range(n):
        for j in range(n):
            if i == j:
                assert sep.ghosts[i][j] != 0
            else:
                assert sep.ghosts[i][j] == 0
        scaled = [0] * n
        scaled[i] = sep.N
        ring.decompose(scaled)  # must stay integral
        # the optimal annihilator divides the constructed separator value
        assert sep.value_at_index(i) % ring.idempotent_denominator(i) == 0


def test_separator_annihilates_off_support():
    # s_i . x = 0 whenever the ghost of x vanishes at i
    ring = get_context("S3").ring
    sep = separators(ring)
    kernel_vec = [0, 2, 0, 0]  # vanishes away from index 1
    prod = [a * b for a, b in zip(sep.ghosts[0], kernel_vec)]
    assert prod == [0, 0, 0, 0]


def test_idempotent_denominators_s3():
    ring = get_context("S3").ring
    assert [ring.idempotent_denominator(i) for i in range(4)] == [6, 2, 6, 2]


def test_generic_basis_accepted():
    ring = BRing(["a", "b"], [[1, 1], [0, 2]])
    d = congruence_d(ring)
    assert d.d(0, 1) == 2
    assert p_classes(ring, 2, d).classes == [[0, 1]]
    assert p_classes(ring, 3, d).classes == [[0], [1]]
    sep = separators(ring)
    assert sep.ghosts[0][1] == 0 and sep.ghosts[0][0] != 0


def test_generic_basis_rejections():
    with pytest.raises(ValueError):
        BRing(["a", "b"], [[1, 1]])  # not square
    with pytest.raises(ValueError):
        BRing(["a", "b"], [[1, 1], [2, 2]])  # dependent
    with pytest.raises(NonIntegralSolution):
        BRing(["a", "b"], [[2, 0], [0, 3]])  # unit not in the span
    with pytest.raises(SeparationFailure):
        BRing(["a", "b", "c"],
              [[1, 1, 1], [0, 2, 1], [0, 0, 3]])  # products escape the span


def test_ghost_of_matches_marks_rows():
    ring = get_context("D4").ring
    for h in range(ring.n):
        coeffs = [0] * ring.n
        coeffs[h] = 1
        assert ring.ghost_of(coeffs) == ring.basis[h]
