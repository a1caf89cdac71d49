import pytest

from hopfcleft.braided import check_comodule_algebra, trivial_measuring
from hopfcleft.cocycle import (
    check_cocycle,
    check_mu_sigma_associativity,
    crossed_product,
    mu_sigma,
    pair_coalgebra,
    sigma_recovery,
    smash_product,
    trivial_sigma,
)
from hopfcleft.errors import ShapeMismatch
from hopfcleft.fixtures import classical_cyclic
from hopfcleft.hopf import convolution_inverse_or_none
from hopfcleft.linalg import LinearMap, tensor_space
from hopfcleft.oracle import enumerate_cocycles


@pytest.fixture(scope="module")
def braided_measuring(qline_f3):
    return trivial_measuring(qline_f3.hopf)


@pytest.fixture(scope="module")
def braided_cocycles(braided_measuring):
    return enumerate_cocycles(braided_measuring)


def test_trivial_sigma_is_a_cocycle(braided_measuring):
    cocycle, report = check_cocycle(braided_measuring, trivial_sigma(braided_measuring))
    assert cocycle is not None and report.ok, str(report)


def test_braided_cocycle_count_is_frozen(braided_cocycles):
    # sigma is determined by sigma(x, x) = lambda in F_3; all three work
    assert len(braided_cocycles) == 3


def test_classical_cocycle_count_is_frozen(f3):
    m = trivial_measuring(classical_cyclic(f3, 2))
    cocycles = enumerate_cocycles(m)
    # sigma(g, g) = lambda must be nonzero for convolution invertibility
    assert len(cocycles) == 2


def _all_candidates(m):
    from hopfcleft.oracle import SearchSpace, _candidate_maps

    source = tensor_space(m.hopf.space, m.hopf.space)
    slots = tuple((0, j) for j in range(source.dim))
    return _candidate_maps(source, m.space, SearchSpace(slots, m.space.field))


def test_cocycle_iff_crossed_product_associative(braided_measuring):
    """Over the 81-candidate sweep, the cocycle relations hold exactly when
    mu_sigma is associative and unital (given convolution invertibility)."""
    m = braided_measuring
    disagreements = []
    for sigma in _all_candidates(m):
        invertible = convolution_inverse_or_none(
            sigma, pair_coalgebra(m.hopf), m.algebra) is not None
        cocycle, _ = check_cocycle(m, sigma)
        direct = invertible and check_mu_sigma_associativity(m, sigma).ok
        if (cocycle is not None) != direct:
            disagreements.append(sigma)
    assert not disagreements


def test_sigma_recovery(braided_measuring, braided_cocycles):
    for c in braided_cocycles:
        assert sigma_recovery(braided_measuring, c.sigma) == c.sigma


def test_crossed_product_is_comodule_algebra(braided_cocycles):
    for c in braided_cocycles:
        cp = crossed_product(c)
        report = check_comodule_algebra(cp.comodule_algebra)
        assert report.ok, str(report)


def test_smash_product_multiplication(qline_f3, braided_measuring):
    cp = smash_product(braided_measuring)
    m = braided_measuring
    assert cp.algebra.mul == mu_sigma(m, trivial_sigma(m))


def test_unverified_cocycle_rejected(braided_measuring, braided_cocycles):
    from dataclasses import replace

    stale = replace(braided_cocycles[0], verified=False)
    with pytest.raises(ValueError):
        crossed_product(stale)


def test_shape_mismatch_rejected(braided_measuring, kc2_f3):
    bad = LinearMap.identity(kc2_f3.space)
    with pytest.raises(ShapeMismatch):
        check_cocycle(braided_measuring, bad)


def test_derived_relations_reported(braided_cocycles):
    # names of the redundant consequences appear in every passing report
    from hopfcleft.cocycle import check_derived_relations

    report = check_derived_relations(braided_cocycles[1])
    assert report.ok, str(report)
    names = [item.name for item in report.items]
    assert any("unital" in n for n in names)
