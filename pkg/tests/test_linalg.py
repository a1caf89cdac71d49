import pytest
from hypothesis import given, settings, strategies as st

from hopfcleft.errors import NoSolution, ShapeMismatch
from hopfcleft.fields import FieldSpec
from hopfcleft.linalg import (
    BasedSpace,
    LinearMap,
    based_space,
    compose,
    equalizer,
    factor_through_injection,
    flip_map,
    invert,
    kernel_basis,
    nullity,
    permutation_map,
    solve_linear,
    tensor_map,
    tensor_space,
    unit_space,
)

F5 = FieldSpec.prime_field(5)

U = based_space("U", ["u0", "u1"], F5)
V = based_space("V", ["v0", "v1", "v2"], F5)
W = based_space("W", ["w0", "w1"], F5)


def maps_between(source, target):
    n = source.dim * target.dim
    return st.lists(
        st.integers(min_value=0, max_value=4), min_size=n, max_size=n,
    ).map(lambda vals: LinearMap(source, target, {
        (i, j): F5.scalar(v)
        for k, v in enumerate(vals)
        for i, j in [divmod(k, source.dim)]
        if v
    }))


@settings(max_examples=40)
@given(maps_between(U, V), maps_between(V, W), maps_between(W, U))
def test_compose_associativity(f, g, h):
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)


@settings(max_examples=40)
@given(maps_between(U, V))
def test_identity_laws(f):
    assert compose(LinearMap.identity(V), f) == f
    assert compose(f, LinearMap.identity(U)) == f


@settings(max_examples=25)
@given(maps_between(U, V), maps_between(V, W), maps_between(U, W), maps_between(W, U))
def test_tensor_functoriality(f, g, h, k):
    # (g . f) (x) (k ... ) interchange: tensor of composites = composite of tensors
    lhs = tensor_map(compose(g, f), compose(h, k))
    rhs = compose(tensor_map(g, h), tensor_map(f, k))
    assert lhs == rhs


@settings(max_examples=25)
@given(maps_between(U, V), maps_between(W, U))
def test_flip_naturality(f, g):
    lhs = compose(flip_map(V, U), tensor_map(f, g))
    rhs = compose(tensor_map(g, f), flip_map(U, W))
    assert lhs == rhs


def test_tensor_space_is_strict_monoidal():
    one = unit_space(F5)
    assert tensor_space(one, V).same_basis(V)
    assert tensor_space(V, one).same_basis(V)
    uvw = tensor_space(tensor_space(U, V), W)
    assert uvw.same_basis(tensor_space(U, tensor_space(V, W)))
    assert uvw.labels[0] == "u0.v0.w0"


def test_permutation_map_composes_to_identity():
    factors = [U, V, W]
    forward = permutation_map(factors, [2, 0, 1])
    back = permutation_map([W, U, V], [1, 2, 0])
    assert compose(back, forward) == LinearMap.identity(tensor_space(U, V, W))


def test_permutation_map_matches_flip():
    assert permutation_map([U, V], [1, 0]) == flip_map(U, V)


@settings(max_examples=40)
@given(maps_between(V, W))
def test_rank_nullity(f):
    assert nullity(f) + (V.dim - nullity(f)) == V.dim
    ker = kernel_basis(f)
    assert len(ker) == nullity(f)
    for vec in ker:
        image = {
            i: sum((f[(i, j)] * vec[j] for j in range(V.dim)), F5.zero())
            for i in range(W.dim)
        }
        assert all(v.is_zero() for v in image.values())


@settings(max_examples=40)
@given(maps_between(V, V))
def test_invert_round_trip(f):
    try:
        g = invert(f)
    except NoSolution:
        assert nullity(f) > 0
        return
    assert compose(g, f) == LinearMap.identity(V)
    assert compose(f, g) == LinearMap.identity(V)


@settings(max_examples=40)
@given(maps_between(V, W), maps_between(V, W))
def test_equalizer_property(f, g):
    space, iota = equalizer(f, g)
    assert compose(f, iota) == compose(g, iota)
    assert space.dim == nullity(f - g)


@settings(max_examples=40)
@given(maps_between(V, W), maps_between(U, V))
def test_solve_linear(a, x):
    b = compose(a, x)
    sol = solve_linear(a, b)
    assert compose(a, sol) == b


def test_solve_linear_no_solution():
    a = LinearMap(V, W, {(0, 0): F5.one()})
    b = LinearMap(U, W, {(1, 0): F5.one()})
    with pytest.raises(NoSolution):
        solve_linear(a, b)


def test_factor_through_injection():
    iota = LinearMap(U, V, {(0, 0): F5.one(), (2, 1): F5.scalar(2)})
    g = LinearMap(W, V, {(0, 0): F5.scalar(3), (2, 1): F5.scalar(4)})
    h = factor_through_injection(iota, g)
    assert compose(iota, h) == g


def test_shape_mismatch_rejected():
    f = LinearMap(U, V, {})
    g = LinearMap(U, V, {})
    with pytest.raises(ShapeMismatch):
        compose(f, g)
    with pytest.raises(ShapeMismatch):
        LinearMap(U, V, {(5, 0): F5.one()})


def test_entries_drop_zeros():
    f = LinearMap(U, V, {(0, 0): F5.zero(), (1, 1): F5.one()})
    assert (0, 0) not in f.entries
    assert not f.is_zero()


def test_from_labels_sums_duplicates():
    triples = [("v0", "u0", F5.scalar(2)), ("v0", "u0", F5.scalar(3))]
    assert LinearMap.from_labels(U, V, triples).is_zero()


def test_based_space_requires_distinct_labels():
    with pytest.raises(Exception):
        BasedSpace("bad", ("a", "a"), F5)
