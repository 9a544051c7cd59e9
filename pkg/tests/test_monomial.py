"""The one-vertex monomial algebra: normal forms, basis combinatorics,
ideal classification, and the monomial diagram.

The (17,5) instance is pinned against a complete hand enumeration; the
generic laws (dimension r, tree structure, written-order multiplication,
annihilator classification) are exercised with hypothesis over coprime
pairs and over raw entry sequences.
"""

import math

import pytest
from hypothesis import given, settings, strategies as st

from knoerrer.fractions import dual, expand, lambda_seq, subfraction
from knoerrer.monomial import (
    ZERO,
    KappaAlgebra,
    basis,
    classify_ideal,
    ideal_dims,
    ideals,
    kappa_dims_by_recurrence,
    module_of,
    monomial_diagram,
    multiply,
    normal_form,
)

pairs = st.integers(min_value=2, max_value=60).flatmap(
    lambda r: st.sampled_from(
        [(r, a) for a in range(1, r) if math.gcd(r, a) == 1]
    )
)

betas = st.lists(st.integers(min_value=2, max_value=6), min_size=1, max_size=6)


@pytest.fixture(scope="module")
def k17():
    return KappaAlgebra.from_pair((17, 5))


@pytest.fixture(scope="module")
def k52():
    return KappaAlgebra.from_pair((5, 2))


# (17,5) hand enumeration -----------------------------------------------------


def test_17_5_basis_is_the_hand_enumeration(k17):
    expected = [
        "1",
        "z1", "z2", "z3", "z4",
        "z3z1", "z3z2", "z3^2", "z4z1", "z4z2", "z4z3",
        "z3^2z1", "z3^2z2", "z3^3", "z4z3z1", "z4z3z2", "z4z3^2",
    ]
    assert sorted(str(m) for m in k17.basis) == sorted(expected)
    assert [m.degree for m in k17.basis] == sorted(m.degree for m in k17.basis)
    assert k17.basis[0] is k17.one


def test_17_5_sizes(k17):
    assert k17.dim == 17
    assert k17.max_degree == 3  # n = len(alpha)
    assert k17.largest_proper_ideal_dim() == 5  # a
    assert k17.l == 4  # generator count = embedding dimension - 2


def test_17_5_normal_forms(k17):
    # written order: the word (4, 3, 1) is z4 z3 z1
    assert str(k17.normal_form((4, 3, 1))) == "z4z3z1"
    # staircase vanishing: z3^3 z1 = 0, z4 z3^2 z2 = 0, z2 z1 = 0
    assert k17.normal_form((3, 3, 3, 1)) is ZERO
    assert k17.normal_form((4, 3, 3, 2)) is ZERO
    assert k17.normal_form((2, 1)) is ZERO
    # written-order vanishing for ascending pairs
    assert k17.normal_form((1, 2)) is ZERO
    assert k17.normal_form((3, 4)) is ZERO
    # powers at the caps
    assert str(k17.normal_form((3, 3, 3))) == "z3^3"
    assert k17.normal_form((3, 3, 3, 3)) is ZERO
    assert k17.normal_form(()) is k17.one


def test_5_2_basis(k52):
    assert sorted(str(m) for m in k52.basis) == ["1", "z1", "z2", "z2^2", "z2z1"]
    assert str(k52.normal_form((2, 1))) == "z2z1"
    assert k52.normal_form((1, 2)) is ZERO
    assert k52.normal_form((2, 2, 1)) is ZERO


def test_normal_form_range_check(k52):
    with pytest.raises(ValueError):
        k52.normal_form((3,))
    with pytest.raises(ValueError):
        k52.normal_form((0,))


# Generic laws ----------------------------------------------------------------


@given(pairs)
def test_dimension_is_r(pair):
    r, a = pair
    algebra = KappaAlgebra.from_pair(pair)
    assert algebra.dim == r
    assert algebra.max_degree == len(expand(pair))
    assert algebra.largest_proper_ideal_dim() == a
    assert algebra.l == len(dual(expand(pair)))


@given(betas)
def test_dimension_matches_recurrence_oracle(beta):
    """Independent counting oracle for arbitrary entry sequences, not just
    duals of expansions."""
    algebra = KappaAlgebra(beta)
    assert algebra.dim == kappa_dims_by_recurrence(beta)


@settings(deadline=None, max_examples=40)
@given(betas)
def test_basis_normal_form_constraints(beta):
    """Every basis monomial satisfies the cap and gap constraints, and the
    count of constraint-satisfying exponent vectors equals the dimension."""
    algebra = KappaAlgebra(beta)
    l = len(beta)

    def admissible(exps) -> bool:
        if any(not 0 <= exps[i] <= beta[i] - 1 for i in range(l)):
            return False
        for i in range(l):
            if exps[i] != beta[i] - 1:
                continue
            for j in range(i - 1, -1, -1):
                if exps[j] == beta[j] - 1:
                    return False  # maximal pair with exact beta-2 gap
                if exps[j] != beta[j] - 2:
                    break
        return True

    seen = {m.exps for m in algebra.basis}
    for m in algebra.basis:
        assert admissible(m.exps), m

    import itertools

    count = sum(
        1
        for exps in itertools.product(*(range(b) for b in beta))
        if admissible(exps)
    )
    assert count == len(seen) == algebra.dim


@settings(max_examples=25)
@given(pairs, st.data())
def test_multiplication_associative_on_samples(pair, data):
    algebra = KappaAlgebra.from_pair(pair)
    elems = data.draw(
        st.lists(st.sampled_from(algebra.basis), min_size=3, max_size=3)
    )
    x, y, z = elems
    left = algebra.multiply(algebra.multiply(x, y), z)
    right = algebra.multiply(x, algebra.multiply(y, z))
    assert left == right or (left.is_zero and right.is_zero)


@given(pairs)
def test_identity_and_zero(pair):
    algebra = KappaAlgebra.from_pair(pair)
    for m in algebra.basis[: min(8, algebra.dim)]:
        assert algebra.multiply(algebra.one, m) == m
        assert algebra.multiply(m, algebra.one) == m
    assert algebra.multiply(ZERO, algebra.one) is ZERO


@given(pairs)
def test_words_multiply_by_concatenation(pair):
    """normal_form(w1 + w2) = normal_form(w1) * normal_form(w2)."""
    algebra = KappaAlgebra.from_pair(pair)
    letters = algebra.ideal_letters()
    # m_n is built by prepending letters left to right, so its written word
    # is the letters reversed; every split of it is a nonzero product.
    word = tuple(reversed(letters))
    full = algebra.normal_form(word)
    assert not full.is_zero
    for cut in range(len(word) + 1):
        left = algebra.normal_form(word[:cut])
        right = algebra.normal_form(word[cut:])
        assert algebra.multiply(left, right) == full


# Ideals ----------------------------------------------------------------------


def test_17_5_ideals(k17):
    got = [(i.index, str(i.generator), i.dim) for i in k17.ideals]
    assert got == [
        (0, "1", 17),
        (1, "z1", 5),
        (2, "z3z1", 3),
        (3, "z3^2z1", 1),
    ]


@given(pairs)
def test_ideal_dims_are_lambda(pair):
    algebra = KappaAlgebra.from_pair(pair)
    lam = tuple(lambda_seq(expand(pair)))
    assert tuple(i.dim for i in algebra.ideals) == lam
    assert ideal_dims(pair) == lam
    assert len(algebra.ideals) == len(expand(pair)) + 1


@given(pairs)
def test_ideal_generators_divide_chainwise(pair):
    """m_i = z_{s_i} m_{i-1}: each generator is a one-letter extension."""
    algebra = KappaAlgebra.from_pair(pair)
    letters = algebra.ideal_letters()
    gens = [i.generator for i in algebra.ideals]
    assert gens[0] is algebra.one
    for i, letter in enumerate(letters, start=1):
        assert algebra.prepend(letter, gens[i - 1]) == gens[i]


@settings(max_examples=20, deadline=None)
@given(pairs)
def test_classification_covers_basis(pair):
    """Every nonzero principal ideal is isomorphic to exactly one I_i, and
    dimension counts per class are consistent."""
    algebra = KappaAlgebra.from_pair(pair)
    dims_by_class = {i.index: i.dim for i in algebra.ideals}
    for m in algebra.basis:
        cls = algebra.classify_ideal(m)
        assert len(algebra.ideal_monomials(m)) == dims_by_class[cls]


def test_classify_against_annihilator_oracle(k17):
    """classify_ideal agrees with direct annihilator-set comparison."""
    for m in k17.basis:
        ann = frozenset(
            q for q in k17.basis if k17.multiply(q, m).is_zero
        )
        expected = [
            i.index for i in k17.ideals
            if k17.annihilator_set(i.generator) == ann
        ]
        assert expected == [k17.classify_ideal(m)]


@given(pairs)
def test_module_presentations(pair):
    """M_i = algebra/J_i: the annihilator generators generate exactly the
    annihilator, and the module is the tail subfraction algebra in size."""
    algebra = KappaAlgebra.from_pair(pair)
    alpha = expand(pair)
    lam = lambda_seq(alpha)
    for ideal in algebra.ideals:
        module = algebra.module_of(ideal)
        assert module.dim == ideal.dim == lam[ideal.index]
        closure = algebra.left_ideal_closure(module.ann_generators)
        assert closure == algebra.annihilator_set(ideal.generator)
        assert module.subfraction == subfraction(alpha, ideal.index + 1, len(alpha))


def test_module_ann_generators_17_5(k17):
    """The documented J_2 generating set for (17,5)."""
    module = k17.module_of(k17.ideals[2])
    assert sorted(str(g) for g in module.ann_generators) == [
        "z1", "z2", "z3^2", "z4z3"
    ]


# Diagram ---------------------------------------------------------------------


@given(pairs)
def test_diagram_is_a_tree(pair):
    algebra = KappaAlgebra.from_pair(pair)
    edges = algebra.diagram_edges()
    assert len(edges) == algebra.dim - 1
    targets = [t for _, _, t in edges]
    assert len(set(targets)) == len(targets)  # unique parent
    assert algebra.one not in targets
    root_out = sum(1 for s, _, _ in edges if s is algebra.one)
    assert root_out == algebra.l


def test_diagram_text_17_5(k17):
    text = monomial_diagram(k17, "text")
    lines = text.splitlines()
    assert lines[0] == "monomial-diagram (17,5)"
    assert lines[1] == "nodes 17"
    assert lines[2] == "edges 16"
    assert lines[3] == "root-out-degree 4"


def test_diagram_dot_17_5(k17):
    dot = monomial_diagram(k17, "dot")
    assert dot.startswith("digraph kappa_17_5 {")
    assert '"1" -> "z1^1" [label="1"];' in dot
    assert dot.count("->") == 16
    with pytest.raises(ValueError):
        monomial_diagram(k17, "svg")


# Wrapper functions -----------------------------------------------------------


def test_module_level_wrappers(k52):
    assert normal_form((2, 1), k52) == k52.normal_form((2, 1))
    assert basis(k52) == k52.basis
    assert multiply(k52.one, k52.one, k52) == k52.one
    assert ideals(k52) == k52.ideals
    assert module_of(k52.ideals[1], k52).dim == 2
    assert classify_ideal(k52.one, k52) == 0
