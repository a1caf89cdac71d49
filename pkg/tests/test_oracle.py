import pytest

from hopfcleft.braided import classical_hopf, trivial_measuring
from hopfcleft.errors import NotInvertible, SearchSpaceTooLarge
from hopfcleft.fields import FieldSpec
from hopfcleft.fixtures import classical_cyclic, cyclic_group_hopf, non_hopf_bialgebra
from hopfcleft.hopf import convolution_inverse
from hopfcleft.linalg import LinearMap
from hopfcleft.oracle import (
    SearchSpace,
    enumerate_cocycles,
    enumerate_zprime,
    oracle_convolution_inverse,
)


def test_antipode_matches_exhaustive_inverse(kc2_f3):
    ident = LinearMap.identity(kc2_f3.space)
    found = oracle_convolution_inverse(ident, kc2_f3.coalg, kc2_f3.alg)
    assert found == kc2_f3.antipode


def test_solver_matches_exhaustive_inverse(f5):
    h = cyclic_group_hopf(f5, 2)
    solved = convolution_inverse(h.antipode, h.coalg, h.alg)
    assert oracle_convolution_inverse(h.antipode, h.coalg, h.alg) == solved


def test_exhaustive_search_confirms_non_invertibility(f3):
    b = non_hopf_bialgebra(f3)
    with pytest.raises(NotInvertible):
        oracle_convolution_inverse(LinearMap.identity(b.space), b.coalg, b.alg)


def test_classical_cocycle_count_kc2_f3(f3):
    found = enumerate_cocycles(trivial_measuring(classical_cyclic(f3, 2)))
    # sigma(g, g) must be a nonzero scalar; two choices in F_3
    assert len(found) == 2
    target = found[0].sigma.target
    gg = found[0].sigma.source.index("g.g")
    values = [int(c.sigma[(0, gg)].value) for c in found]
    assert values == [1, 2]


def test_braided_cocycle_count_and_equivariance(qline_f3, qline_f5):
    from hopfcleft.lifting import check_equivariant_pair

    for g, expected in ((qline_f3, 3), (qline_f5, 5)):
        found = enumerate_cocycles(trivial_measuring(g.hopf))
        assert len(found) == expected
        for c in found:
            assert check_equivariant_pair(g, c.sigma).ok


def test_restricted_sweep_counts(boson4, boson8):
    assert len(enumerate_zprime(boson4)) == 3
    assert len(enumerate_zprime(boson8)) == 5


def test_enumeration_order_is_deterministic(qline_f3):
    m = trivial_measuring(qline_f3.hopf)
    first = [c.sigma for c in enumerate_cocycles(m)]
    second = [c.sigma for c in enumerate_cocycles(m)]
    assert first == second
    # lexicographic order over the slot values: the trivial cocycle comes first
    from hopfcleft.cocycle import trivial_sigma

    assert first[0] == trivial_sigma(m)


def test_support_restriction(qline_f3):
    m = trivial_measuring(qline_f3.hopf)
    full = enumerate_cocycles(m)
    restricted = enumerate_cocycles(
        m, support=[("1", "1.1"), ("1", "x.x")])
    assert [c.sigma for c in restricted] == [c.sigma for c in full]


def test_search_space_requires_prime_field():
    with pytest.raises(SearchSpaceTooLarge):
        SearchSpace(((0, 0),), FieldSpec.rationals())
    with pytest.raises(SearchSpaceTooLarge):
        SearchSpace(((0, 0),), FieldSpec.cyclotomic(4))


def test_search_space_bound(f5):
    with pytest.raises(SearchSpaceTooLarge):
        SearchSpace(tuple((0, j) for j in range(4)), f5, bound=100)
    h = cyclic_group_hopf(f5, 4)
    with pytest.raises(SearchSpaceTooLarge):
        oracle_convolution_inverse(h.antipode, h.coalg, h.alg, bound=1000)


def test_non_prime_field_rejected_by_enumeration(kc2_q):
    with pytest.raises(SearchSpaceTooLarge):
        enumerate_cocycles(trivial_measuring(classical_hopf(kc2_q)))


def test_search_space_assignment_order(f3):
    space = SearchSpace(((0, 0), (0, 1)), f3)
    assert list(space.assignments()) == [
        (0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)]
    assert space.count() == 9
