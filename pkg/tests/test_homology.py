"""The table-algebra homology engine: construction-time validation, radical
methods, minimal resolutions, Ext tables, and the closed-form chain-algebra
oracle.

The smallest endomorphism algebra (2,1) is resolved by hand; the local
monomial algebras act as the infinite-global-dimension control; the
randomized checks compare the two radical methods and confirm the Euler
characteristic and the projective-dimension recurrence on endomorphism
algebras of short chains.
"""

import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from knoerrer.endomorphism import end_algebra, expected_hom_dims
from knoerrer.fractions import CoprimePair, expand
from knoerrer.homology import (
    TRACE_LIMIT,
    LeftModule,
    TableAlgebra,
    chain_algebra_ext,
    ext_table,
    global_dimension,
    kappa_table_algebra,
    minimal_resolution,
    projective_dims,
    radical,
    simples,
)
from knoerrer.monomial import KappaAlgebra

pairs = st.integers(min_value=2, max_value=30).flatmap(
    lambda r: st.sampled_from(
        [
            (r, a)
            for a in range(1, r)
            if math.gcd(r, a) == 1 and len(expand(CoprimePair(r, a))) <= 8
        ]
    )
)

tiny_pairs = st.integers(min_value=2, max_value=12).flatmap(
    lambda r: st.sampled_from(
        [(r, a) for a in range(1, r) if math.gcd(r, a) == 1]
    )
)


def end_of(r, a):
    return end_algebra(KappaAlgebra.from_pair(CoprimePair(r, a)))


def two_points():
    """The semisimple algebra k x k."""
    return TableAlgebra(
        ("e0", "e1"),
        {(0, 0): {0: 1}, (1, 1): {1: 1}},
        idempotent_indices=(0, 1),
    )


def group_algebra_z2():
    """k[Z/2]: semisimple in characteristic zero but not semigroup-shaped
    (the non-identity element squares to the identity)."""
    return TableAlgebra(
        ("1", "g"),
        {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 1}},
        idempotent_indices=(0,),
    )


# ---------------------------------------------------------------------------
# Construction-time validation
# ---------------------------------------------------------------------------


def unit_rows(size):
    table = {(0, 0): {0: 1}}
    for b in range(1, size):
        table[(0, b)] = {b: 1}
        table[(b, 0)] = {b: 1}
    return table


def test_rejects_non_idempotent():
    with pytest.raises(ValueError, match="is not idempotent"):
        TableAlgebra(("e",), {(0, 0): {0: 2}}, idempotent_indices=(0,))


def test_rejects_non_orthogonal_idempotents():
    table = {(0, 0): {0: 1}, (1, 1): {1: 1}, (0, 1): {1: 1}}
    with pytest.raises(ValueError, match="not orthogonal"):
        TableAlgebra(("e0", "e1"), table, idempotent_indices=(0, 1))


def test_rejects_idempotents_that_do_not_sum_to_a_unit():
    table = {(0, 0): {0: 1}}  # the second basis element is killed by e
    with pytest.raises(ValueError, match="not a unit on basis element 1"):
        TableAlgebra(("e", "x"), table, idempotent_indices=(0,))


def test_rejects_non_associative_table():
    # (x x) x = y x = x but x (x x) = x y = 0
    table = unit_rows(3)
    table[(1, 1)] = {2: 1}
    table[(2, 1)] = {1: 1}
    with pytest.raises(ValueError, match="associativity fails"):
        TableAlgebra(("e", "x", "y"), table, idempotent_indices=(0,))


def test_check_off_skips_validation():
    table = unit_rows(3)
    table[(1, 1)] = {2: 1}
    table[(2, 1)] = {1: 1}
    algebra = TableAlgebra(("e", "x", "y"), table, idempotent_indices=(0,), check="off")
    assert algebra.size == 3
    assert algebra.product(1, 1) == {2: 1}
    assert algebra.product(2, 2) == {}


def test_kappa_table_matches_the_monomial_algebra():
    kappa = KappaAlgebra.from_pair(CoprimePair(5, 2))
    algebra = kappa_table_algebra(kappa)
    assert algebra.labels == ("1", "z1", "z2", "z2z1", "z2^2")
    assert algebra.semigroup_certified
    basis = kappa.basis
    index = kappa.basis_index
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            prod = kappa.multiply(x, y)
            expected = {} if prod.is_zero else {index[prod]: 1}
            assert algebra.product(i, j) == expected


# ---------------------------------------------------------------------------
# Radical
# ---------------------------------------------------------------------------


def test_radical_of_semisimple_is_zero():
    assert radical(two_points()).dim == 0
    assert radical(group_algebra_z2()).dim == 0  # trace form, char 0


def test_radical_method_errors():
    with pytest.raises(ValueError, match="does not certify"):
        radical(group_algebra_z2(), method="semigroup")
    with pytest.raises(ValueError, match="unknown radical method"):
        radical(two_points(), method="determinant")


def test_radical_trace_refuses_large_uncertified_sizes():
    size = TRACE_LIMIT + 1
    table = unit_rows(size)  # local square-zero algebra
    algebra = TableAlgebra(
        tuple(f"x{i}" for i in range(size)),
        table,
        idempotent_indices=(0,),
        check="off",
    )
    with pytest.raises(ValueError, match="trace-form radical limited"):
        radical(algebra, method="trace")
    # the certified path is still available at this size
    assert radical(algebra, method="semigroup").dim == size - 1


def test_radical_methods_agree_on_17_5():
    end = end_of(17, 5)
    fast = radical(end, method="semigroup")
    slow = radical(end, method="trace")
    assert fast.dim == slow.dim == 84
    assert set(fast.basis_subset) == set(slow.basis_subset)


@given(tiny_pairs)
@settings(deadline=None, max_examples=10)
def test_radical_methods_agree_on_endomorphism_algebras(pair):
    # the trace form is cubic in the basis, so stay well under its limit
    size = sum(map(sum, expected_hom_dims(expand(CoprimePair(*pair)))))
    assume(size <= 60)
    end = end_of(*pair)
    fast = radical(end, method="semigroup")
    slow = radical(end, method="trace")
    assert fast.dim == slow.dim == end.size - (end.n + 1)
    assert set(fast.basis_subset) == set(slow.basis_subset)


@given(tiny_pairs)
@settings(deadline=None, max_examples=12)
def test_radical_methods_agree_on_monomial_algebras(pair):
    algebra = kappa_table_algebra(KappaAlgebra.from_pair(CoprimePair(*pair)))
    fast = radical(algebra, method="semigroup")
    slow = radical(algebra, method="trace")
    assert fast.dim == slow.dim == algebra.size - 1
    assert set(fast.basis_subset) == set(slow.basis_subset)


# ---------------------------------------------------------------------------
# Simples
# ---------------------------------------------------------------------------


def test_simples_of_the_smallest_endomorphism_algebra():
    end = end_of(2, 1)
    sims = simples(end)
    assert [s.name for s in sims] == ["simple_0", "simple_1"]
    assert all(s.dimension == 1 for s in sims)
    e0, e1 = end.idempotent_indices
    assert sims[0].action(e0) == ((Fraction(1),),)
    assert sims[0].action(e1) == ((Fraction(0),),)
    for b in range(end.size):
        if b not in (e0, e1):
            assert sims[0].action(b) == ((Fraction(0),),)


def test_simples_requires_a_basic_algebra():
    with pytest.raises(ValueError, match="not basic"):
        simples(group_algebra_z2())


# ---------------------------------------------------------------------------
# Minimal resolutions and Ext
# ---------------------------------------------------------------------------


def test_resolutions_of_the_smallest_endomorphism_algebra():
    end = end_of(2, 1)
    res0 = minimal_resolution(0, end)
    assert res0.pd == 1
    assert res0.steps == ({0: 1}, {1: 1})
    res1 = minimal_resolution(1, end)
    assert res1.pd == 2
    assert res1.steps == ({1: 1}, {0: 1}, {1: 1})
    assert projective_dims(end) == (3, 2)
    assert global_dimension(end) == 2


def test_minimal_resolution_accepts_vertex_or_module():
    end = end_of(5, 2)
    for vertex, module in enumerate(simples(end)):
        assert isinstance(module, LeftModule)
        by_vertex = minimal_resolution(vertex, end)
        by_module = minimal_resolution(module, end)
        assert by_vertex == by_module


def test_local_monomial_algebra_exceeds_any_probe_depth():
    algebra = kappa_table_algebra(KappaAlgebra.from_pair(CoprimePair(5, 2)))
    assert global_dimension(algebra) == "exceeds probe depth 8"
    assert global_dimension(algebra, probe_depth=3) == "exceeds probe depth 3"
    res = minimal_resolution(0, algebra, depth=4)
    assert res.pd is None
    # the syzygies of the unique simple double at every step
    assert res.steps == ({0: 1}, {0: 2}, {0: 4}, {0: 8}, {0: 16})
    table = ext_table(algebra, depth=3)
    assert table.global_dimension == "exceeds probe depth 3"


def test_ext_lookup_beyond_probe_depth():
    shallow = ext_table(kappa_table_algebra(KappaAlgebra.from_pair(CoprimePair(5, 2))), depth=1)
    with pytest.raises(ValueError, match="beyond probe depth 1"):
        shallow.ext(2, 0, 0)
    finite = ext_table(end_of(2, 1), depth=2)
    assert finite.ext(9, 0, 0) == 0  # past the projective dimension
    assert finite.global_dimension == 2


def test_semisimple_homology():
    algebra = two_points()
    assert global_dimension(algebra) == 0
    assert projective_dims(algebra) == (1, 1)
    table = ext_table(algebra, depth=2)
    for i in range(2):
        for j in range(2):
            assert table.ext(0, i, j) == (1 if i == j else 0)
            assert table.ext(1, i, j) == 0
            assert table.ext(2, i, j) == 0


# ---------------------------------------------------------------------------
# The closed-form oracle and the generic laws
# ---------------------------------------------------------------------------


def test_chain_algebra_ext_closed_form_cells():
    alpha = [4, 2, 3]
    assert chain_algebra_ext(alpha, 1, 0, 1) == 3
    assert chain_algebra_ext(alpha, 1, 0, 2) == 0
    assert chain_algebra_ext(alpha, 1, 0, 3) == 1
    assert chain_algebra_ext(alpha, 1, 1, 0) == 1
    assert chain_algebra_ext(alpha, 1, 2, 1) == 1
    assert chain_algebra_ext(alpha, 1, 1, 3) == 0
    assert chain_algebra_ext(alpha, 2, 1, 1) == 3
    assert chain_algebra_ext(alpha, 2, 2, 2) == 1
    assert chain_algebra_ext(alpha, 2, 3, 3) == 2
    assert chain_algebra_ext(alpha, 2, 0, 0) == 0
    assert chain_algebra_ext(alpha, 2, 1, 2) == 0
    for k in (0, 3, 4):
        for i in range(4):
            for j in range(4):
                expected = 1 if k == 0 and i == j else 0
                assert chain_algebra_ext(alpha, k, i, j) == expected
    with pytest.raises(ValueError, match="vertex out of range"):
        chain_algebra_ext(alpha, 1, 0, 4)


def test_computed_ext_matches_closed_form_17_5():
    end = end_of(17, 5)
    alpha = end.kappa.alpha
    table = ext_table(end, depth=4)
    for k in range(5):
        for i in range(end.n + 1):
            for j in range(end.n + 1):
                assert table.ext(k, i, j) == chain_algebra_ext(alpha, k, i, j), (
                    k,
                    i,
                    j,
                )
    assert table.global_dimension == 2


@given(pairs)
@settings(deadline=None, max_examples=10)
def test_computed_ext_matches_closed_form(pair):
    end = end_of(*pair)
    alpha = end.kappa.alpha
    table = ext_table(end, depth=4)
    for k in range(5):
        for i in range(end.n + 1):
            for j in range(end.n + 1):
                assert table.ext(k, i, j) == chain_algebra_ext(alpha, k, i, j)


@given(pairs)
@settings(deadline=None, max_examples=12)
def test_projective_dims_satisfy_the_alpha_recurrence(pair):
    end = end_of(*pair)
    alpha = end.kappa.alpha
    n = len(alpha)
    dims = projective_dims(end)
    for i in range(1, n + 1):
        rhs = sum((alpha[j - 1] - 2) * dims[j] for j in range(i, n + 1)) + dims[i] + i
        assert dims[i - 1] == rhs


@given(pairs)
@settings(deadline=None, max_examples=10)
def test_resolutions_have_euler_characteristic_one(pair):
    # alternating sum over a finite resolution of projective dims recovers
    # the simple's dimension
    end = end_of(*pair)
    dims = projective_dims(end)
    for vertex in range(end.n + 1):
        res = minimal_resolution(vertex, end)
        assert res.pd is not None
        euler = sum(
            (-1) ** k * sum(mult * dims[j] for j, mult in step.items())
            for k, step in enumerate(res.steps)
        )
        assert euler == 1
