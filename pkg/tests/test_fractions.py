"""Continued-fraction arithmetic: worked examples and algebraic laws.

The laws checked here are the load-bearing ones for everything downstream:
round-trip expand/evaluate, duality as an involution realised by the point
diagram transpose, the index identities relating the two expansions, the
rank sequence recurrence, and the tail-map formula.
"""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from knoerrer.fractions import (
    MAX_R,
    SMOOTH,
    CoprimePair,
    HJSeq,
    coprime_pairs,
    dual,
    dual_data,
    evaluate,
    expand,
    lambda_seq,
    point_diagram,
    subfraction,
    t_map,
)

# Strategies ----------------------------------------------------------------

pairs = st.integers(min_value=2, max_value=600).flatmap(
    lambda r: st.sampled_from(
        [(r, a) for a in range(1, r) if math.gcd(r, a) == 1]
    )
)

seqs = st.lists(st.integers(min_value=2, max_value=9), min_size=1, max_size=9)


def continued_fraction_value(entries) -> Fraction:
    """Independent evaluator: fold the minus-fraction from the right."""
    value = Fraction(entries[-1])
    for e in reversed(entries[:-1]):
        value = e - 1 / value
    return value


# Worked examples -----------------------------------------------------------


def test_expand_17_5():
    assert list(expand((17, 5))) == [4, 2, 3]


def test_expand_18_5_and_dual():
    assert list(expand((18, 5))) == [4, 3, 2]
    assert list(dual(expand((18, 5)))) == [2, 2, 3, 3]


def test_dual_17_5():
    data = dual_data(expand((17, 5)))
    assert list(data.beta) == [2, 2, 4, 2]
    assert (data.n, data.l) == (3, 4)
    assert evaluate(data.beta) == CoprimePair(17, 12)


def test_lambda_17_5():
    lam = lambda_seq(expand((17, 5)))
    assert list(lam) == [17, 5, 3, 1]
    assert lam[0] == 17 and lam[3] == 1 and lam[4] == 0  # sentinel


def test_t_map_17_5():
    t = t_map(expand((17, 5)))
    assert [t[j] for j in range(1, 5)] == [1, 1, 1, 3]
    assert t[5] == 3  # convention index l+1 gives n


def test_point_diagram_18_5():
    diagram = point_diagram(expand((18, 5)))
    assert [count for _, count in diagram.rows] == [3, 2, 1]
    assert diagram.column_counts() == (1, 1, 2, 2)
    assert diagram.ascii() == "***\n  **\n   *"


def test_smooth_marker():
    assert evaluate(()) is SMOOTH
    assert list(dual(())) == []
    assert not SMOOTH
    assert subfraction([4, 2, 3], 2, 1) is SMOOTH


def test_subfraction_17_5():
    assert subfraction([4, 2, 3], 1, 3) == CoprimePair(17, 5)
    assert subfraction([4, 2, 3], 2, 3) == CoprimePair(5, 3)
    assert subfraction([4, 2, 3], 3, 3) == CoprimePair(3, 1)


# Validation ----------------------------------------------------------------


def test_pair_validation():
    with pytest.raises(ValueError):
        CoprimePair(4, 2)
    with pytest.raises(ValueError):
        CoprimePair(5, 0)
    with pytest.raises(ValueError):
        CoprimePair(5, 5)
    with pytest.raises(OverflowError):
        CoprimePair(MAX_R * 2 + 1, 2)


def test_seq_validation():
    with pytest.raises(ValueError):
        HJSeq((3, 1))
    with pytest.raises(ValueError):
        lambda_seq(())
    with pytest.raises(ValueError):
        point_diagram(())
    with pytest.raises(ValueError):
        subfraction([4, 2, 3], 0, 2)


# Laws ----------------------------------------------------------------------


@given(pairs)
def test_round_trip(pair):
    r, a = pair
    seq = expand((r, a))
    assert all(e >= 2 for e in seq)
    assert evaluate(seq) == CoprimePair(r, a)
    assert continued_fraction_value(list(seq)) == Fraction(r, a)


@given(pairs)
def test_dual_involution_and_complement(pair):
    r, a = pair
    alpha = expand((r, a))
    beta = dual(alpha)
    assert dual(beta) == alpha
    assert beta == expand((r, r - a))
    assert evaluate(beta) == CoprimePair(r, r - a)


@given(seqs)
def test_expand_of_evaluate(entries):
    value = evaluate(entries)
    assert expand(value) == HJSeq(tuple(entries))


@given(pairs)
def test_index_identities(pair):
    alpha = expand(pair)
    beta = dual(alpha)
    assert sum(e - 1 for e in alpha) == sum(e - 1 for e in beta)
    assert sum(e - 2 for e in alpha) + 1 == len(beta)
    assert sum(e - 2 for e in beta) + 1 == len(alpha)


@given(pairs)
def test_diagram_transpose(pair):
    alpha = expand(pair)
    diagram = point_diagram(alpha)
    assert [count for _, count in diagram.rows] == [e - 1 for e in alpha]
    assert list(diagram.column_counts()) == [e - 1 for e in dual(alpha)]


@given(pairs)
def test_lambda_recurrence(pair):
    r, a = pair
    alpha = expand(pair)
    lam = lambda_seq(alpha)
    n = len(alpha)
    assert lam[0] == r and lam[1] == a and lam[n] == 1
    for i in range(1, n + 1):
        assert lam[i - 1] == alpha[i - 1] * lam[i] - lam[i + 1]
    values = list(lam)
    assert values == sorted(values, reverse=True)
    assert all(v > 0 for v in values)


@given(pairs)
def test_lambda_tails_are_subfractions(pair):
    """The tail [alpha_{i+1} .. alpha_n] evaluates to (lambda_i, lambda_{i+1})."""
    alpha = expand(pair)
    lam = lambda_seq(alpha)
    for i in range(len(alpha)):
        tail = subfraction(alpha, i + 1, len(alpha))
        assert tail == CoprimePair(lam[i], lam[i + 1])


@given(pairs)
def test_t_map_formula(pair):
    alpha = expand(pair)
    beta = dual(alpha)
    t = t_map(alpha)
    for j in range(1, len(beta) + 1):
        assert t[j] == sum(b - 2 for b in beta[: j - 1]) + 1
    assert t[len(beta) + 1] == len(alpha)
    with pytest.raises(IndexError):
        t[0]


@given(seqs, st.integers(min_value=2, max_value=9))
def test_append_entry_transforms_dual(entries, extra):
    """Appending alpha_{n+1} increments the last dual entry and appends
    extra-2 twos."""
    alpha = list(entries)
    beta = list(dual(alpha))
    appended = dual(alpha + [extra])
    expected = beta[:-1] + [beta[-1] + 1] + [2] * (extra - 2)
    assert list(appended) == expected


@given(seqs, st.integers(min_value=2, max_value=9))
def test_prepend_entry_transforms_dual(entries, extra):
    """Prepending alpha_0 prepends extra-2 twos and increments the first
    dual entry."""
    alpha = list(entries)
    beta = list(dual(alpha))
    prepended = dual([extra] + alpha)
    expected = [2] * (extra - 2) + [beta[0] + 1] + beta[1:]
    assert list(prepended) == expected


@given(pairs)
def test_reversal_inverts_a(pair):
    """Reversing the expansion gives the expansion of r over the inverse of
    a modulo r."""
    r, a = pair
    reversed_seq = HJSeq(tuple(reversed(expand((r, a)).entries)))
    value = evaluate(reversed_seq)
    assert value.r == r
    assert (value.a * a) % r == 1


@settings(max_examples=30)
@given(st.integers(min_value=2, max_value=40))
def test_coprime_pairs_enumeration(rmax):
    listed = list(coprime_pairs(rmax))
    assert len(listed) == sum(
        1 for r in range(2, rmax + 1) for a in range(1, r) if math.gcd(r, a) == 1
    )
    assert listed == sorted(listed)
    assert all(math.gcd(p.r, p.a) == 1 for p in listed)
