import pytest

from hopfcleft.braided import (
    braiding,
    braiding_inverse,
    check_braiding_axioms,
    check_comodule_algebra,
    check_measuring,
    check_yd,
    classical_hopf,
    coinvariants,
    trivial_ambient,
    trivial_measuring,
    trivial_module,
    trivial_yd,
    yd_tensor,
)
from hopfcleft.errors import BaseMismatch
from hopfcleft.fixtures import cyclic_group_hopf
from hopfcleft.linalg import LinearMap, based_space, compose, flip_map, tensor_space


def test_quantum_line_is_yetter_drinfeld(qline_f5):
    report = check_yd(qline_f5.hopf.yd)
    assert report.ok, str(report)


def test_braiding_axioms_on_quantum_line(qline_f5):
    yd = qline_f5.hopf.yd
    v = yd.module
    report = check_braiding_axioms(
        yd, yd, v, v,
        LinearMap.identity(yd.space), LinearMap.identity(v.space))
    assert report.ok, str(report)


def test_braiding_on_quantum_line_is_a_sign(qline_f5):
    yd = qline_f5.hopf.yd
    c = braiding(yd, yd.module)
    sq = tensor_space(yd.space, yd.space)
    # c(x (x) x) = g.x (x) x = -x (x) x; all other basis tensors flip plainly
    minus = yd.space.field.scalar(-1)
    xx = sq.index("x.x")
    assert c[(xx, xx)] == minus
    assert c[(sq.index("1.x"), sq.index("x.1"))] == yd.space.field.one()


def test_braiding_inverse(qline_f5):
    yd = qline_f5.hopf.yd
    c = braiding(yd, yd.module)
    c_inv = braiding_inverse(yd, yd.module)
    assert compose(c_inv, c) == LinearMap.identity(c.source)


def test_trivial_ambient_braiding_is_flip(kc2_f3):
    b = classical_hopf(kc2_f3)
    assert b.bialg.self_braiding == flip_map(kc2_f3.space, kc2_f3.space)


def test_unit_object_braids_trivially(qline_f5, kc4_f5):
    from hopfcleft.linalg import unit_space

    yd = qline_f5.hopf.yd
    one = unit_space(kc4_f5.space.field)
    v1 = trivial_module(kc4_f5, one)
    # c_{X, 1} = id
    assert braiding(yd, v1) == LinearMap.identity(yd.space)
    # c_{1, V} = id
    triv = trivial_yd(kc4_f5, one)
    assert braiding(triv, yd.module) == LinearMap.identity(yd.space)


def test_yd_tensor_is_yetter_drinfeld(qline_f5):
    yd = qline_f5.hopf.yd
    report = check_yd(yd_tensor(yd, yd))
    assert report.ok, str(report)


def test_braiding_requires_common_ambient(qline_f5, kc2_f3):
    other = trivial_module(kc2_f3, based_space("M", ["m"], kc2_f3.space.field))
    with pytest.raises(BaseMismatch):
        braiding(qline_f5.hopf.yd, other)


def test_trivial_measuring_passes(qline_f5):
    report = check_measuring(trivial_measuring(qline_f5.hopf))
    assert report.ok, str(report)


def test_classical_trivial_measuring_passes(kc4_f5):
    report = check_measuring(trivial_measuring(classical_hopf(kc4_f5)))
    assert report.ok, str(report)


def test_trivial_ambient_is_hopf(f3):
    from hopfcleft.hopf import check_hopf

    assert check_hopf(trivial_ambient(f3)).ok


def test_regular_comodule_algebra_and_coinvariants(kc4_f5):
    # H coacting on itself by comultiplication: coinvariants are the scalars
    from hopfcleft.braided import ComoduleAlgebra

    b = classical_hopf(kc4_f5)
    carrier = trivial_module(b.ambient, b.space)
    comod = ComoduleAlgebra(b, kc4_f5.alg, carrier, kc4_f5.comul)
    report = check_comodule_algebra(comod)
    assert report.ok, str(report)
    coinv = coinvariants(comod)
    assert coinv.algebra.space.dim == 1


def test_group_like_coaction_coinvariants(kc2_f3):
    # kC4-style span: coaction with two group-like components has 1-dim coinvariants
    from hopfcleft.braided import ComoduleAlgebra

    h = cyclic_group_hopf(kc2_f3.space.field, 2)
    b = classical_hopf(h)
    carrier = trivial_module(b.ambient, h.space)
    comod = ComoduleAlgebra(b, h.alg, carrier, h.comul)
    assert coinvariants(comod).algebra.space.dim == 1
