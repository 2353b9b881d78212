import pytest

from burnside.errors import ResolutionTooLarge
from burnside.exttor import (ModuleType, ext_report, prime_factors, tor_report)
from burnside.oracle import (IntegralResolution, oracle_ext,
                             oracle_ext_simple_dims, oracle_tor)
from burnside.intlinalg import mat_mul
from burnside.resolution import ext_dims_pair
from util import get_context


def test_integral_resolution_is_exact_complex():
    ctx = get_context("S3")
    res = IntegralResolution(ctx.ring, 1)
    res.extend_to(3)
    n = ctx.ring.n
    # d_1 columns kill the target mark, and consecutive evaluations compose
    # to zero at every index
    for col in res.diffs[0]:
        assert sum(c * ctx.ring.basis[w][1] for w, c in enumerate(col[0])) == 0
    for i in range(n):
        for l in range(1, 3):
            below = res.evaluation_matrix(l, i)
            above = res.evaluation_matrix(l + 1, i)
            prod = mat_mul(above, below)
            assert all(all(x == 0 for x in row) for row in prod)


def test_oracle_hom_and_tensor_base():
    ctx = get_context("S3")
    n = ctx.ring.n
    for i in range(n):
        for j in range(n):
            ext0 = oracle_ext(ctx, i, j, 0)[0]
            assert ext0 == (ModuleType.free(1) if i == j else ModuleType.zero())
            tor0 = oracle_tor(ctx, i, j, 0)[0]
            if i == j:
                assert tor0 == ModuleType.free(1)
            else:
                assert tor0 == ModuleType.cyclic(ctx.dmat.d(i, j))


def test_oracle_examples():
    ctx = get_context("S3")
    assert [str(m) for m in oracle_ext(ctx, 0, 1, 3)] == ["0", "Z/2", "0", "Z/2"]
    assert [str(m) for m in oracle_ext(ctx, 0, 3, 3)] == ["0", "0", "0", "0"]
    assert [str(m) for m in oracle_tor(ctx, 0, 0, 3)] == ["Z", "Z/6", "0", "Z/6"]
    assert [str(m) for m in oracle_tor(ctx, 0, 1, 1)][0] == "Z/2"


def test_ext1_diagonal_has_no_torsion():
    for name in ("S3", "C4", "V4"):
        ctx = get_context(name)
        for i in range(ctx.ring.n):
            assert oracle_ext(ctx, i, i, 1)[1] == ModuleType.zero()


def _p_ranks(module: ModuleType) -> dict:
    out = {}
    for d in module.invariants:
        for p in prime_factors(d):
            out[p] = out.get(p, 0) + 1
    return out


@pytest.mark.parametrize("name", ["S3", "C4"])
def test_oracle_matches_reports(name):
    ctx = get_context(name)
    n = ctx.ring.n
    for i in range(n):
        for j in range(n):
            er = ext_report(ctx, i, j, 3)
            tr = tor_report(ctx, i, j, 3)
            oe = oracle_ext(ctx, i, j, 3)
            ot = oracle_tor(ctx, i, j, 3)
            for l in range(4):
                assert {pp.p: pp.rank for pp in er.cell(l).p_parts} == _p_ranks(oe[l])
                if er.cell(l).module is not None and l >= 1:
                    assert er.cell(l).module == oe[l]
                assert {pp.p: pp.rank for pp in tr.cell(l).p_parts} == _p_ranks(ot[l])
                if tr.cell(l).module is not None:
                    assert tr.cell(l).module == ot[l]
            assert oe[0].free_rank == (1 if i == j else 0)
            for l in range(1, 4):
                assert oe[l].free_rank == 0 and ot[l].free_rank == 0


@pytest.mark.parametrize("name", ["S3", "C4"])
def test_elementary_divisors_divide_bounds(name):
    ctx = get_context(name)
    n = ctx.ring.n
    for i in range(n):
        for j in range(n):
            bound = ctx.exponent_bound(i, j)
            for l in range(1, 4):
                for module in (oracle_ext(ctx, i, j, 3)[l],
                               oracle_tor(ctx, i, j, 3)[l]):
                    for d in module.invariants:
                        assert bound % d == 0


@pytest.mark.parametrize("name,primes", [("S3", (2, 3)), ("C4", (2,)),
                                         ("V4", (2,)), ("C6", (2, 3))])
def test_replace_lemma_dims(name, primes):
    ctx = get_context(name)
    n = ctx.ring.n
    for p in primes:
        algebra = ctx.algebra(p)
        for i in range(n):
            for j in range(n):
                dims = oracle_ext_simple_dims(ctx, i, j, p, 3)
                assert dims == ext_dims_pair(algebra, i, j, 3)


def test_oracle_degree_cap():
    ctx = get_context("S3")
    with pytest.raises(ValueError):
        oracle_ext(ctx, 0, 0, 4)


def test_oracle_budget_guard():
    ctx = get_context("S3")
    res = IntegralResolution(ctx.ring, 0, max_cells=100)
    with pytest.raises(ResolutionTooLarge):
        res.extend_to(4)
