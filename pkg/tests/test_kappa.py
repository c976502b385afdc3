import itertools

import pytest
from hypothesis import given, strategies as st

from thompson31.errors import NotInSubgroup
from thompson31.genwords import PHI_NOT, make_adjacent_transposition
from thompson31.kappa import (
    K321,
    gamma_apply,
    gamma_is_identity,
    gamma_word_apply,
    kappa_apply,
    kappa_conjugate,
    kappa_invert,
    kappa_is_identity,
    kappa_position_perm,
)
from thompson31.samples import random_element
from thompson31.tables import IDENTITY, GroupTag, apply, make_table, member_of

letters = st.tuples(st.integers(0, 3), st.sampled_from([1, -1]))
kappa_words = st.lists(letters, max_size=5).map(tuple)


def test_gamma_cycles():
    assert gamma_apply(0, 1, 0) == 1
    assert gamma_apply(1, 1, 0) == 0
    assert gamma_apply(2, 1, 5) == 6


def test_gamma_words():
    assert gamma_word_apply((), 7) == 7
    assert gamma_word_apply(((0, 1),) * 3, 1) == 1
    assert gamma_word_apply(((1, -1), (1, 1)), 4) == 4
    assert gamma_is_identity(())
    assert not gamma_is_identity(((0, 1),))
    assert not gamma_is_identity(((3, -1), (0, 1)))


@given(kappa_words, st.integers(0, 60))
def test_gamma_inverse(word, n):
    assert gamma_word_apply(kappa_invert(word), gamma_word_apply(word, n)) == n


def test_kappa_apply_examples():
    assert kappa_apply(((0, 1),), "100#") == "010#"
    for a, b, c in itertools.product("01", repeat=3):
        assert kappa_apply(((0, 1),), a + b + c + "#") == c + a + b + "#"
    for a, b in itertools.product("01", repeat=2):
        assert kappa_apply(((0, 1),), a + b + "#") == a + b + "#"
    assert kappa_apply(((1, 1),), "#01") == "#01"
    assert kappa_apply(((0, 1),), "010") is None


def test_k321_layout():
    labels = list(range(10))
    out = kappa_apply(K321, "0110100110#")
    # the one-hot inputs show where each position lands
    for k in range(10):
        onehot = "".join("1" if j == k else "0" for j in range(10)) + "#"
        labels[kappa_apply(K321, onehot).index("1")] = k
    assert labels[:7] == [0, 4, 5, 1, 7, 8, 2]
    assert out is not None and len(out) == 11


def test_position_perm():
    assert kappa_position_perm(((0, 1),), 3) == (1, 2, 0)
    assert kappa_position_perm((), 5) == tuple(range(5))
    assert kappa_position_perm(((0, 1),) * 3, 3) == (0, 1, 2)


def test_kappa_is_identity_examples():
    assert kappa_is_identity(((1, 1), (1, -1)))
    assert not kappa_is_identity(((0, 1),))
    word = ((3, -1), (2, -1), (1, -1), (1, 1), (2, 1), (3, 1))
    assert kappa_is_identity(word)


@given(kappa_words, st.randoms(use_true_random=False))
def test_kappa_action_invariants(word, rng):
    n = rng.randint(0, 20)
    x = "".join(rng.choice("01") for _ in range(n))
    tail = "".join(rng.choice("01#") for _ in range(3))
    out = kappa_apply(word, x + "#" + tail)
    assert out is not None
    assert len(out) == n + 4
    assert out[n:] == "#" + tail
    assert sorted(out[:n]) == sorted(x)
    if all(i != 0 for i, _ in word) and n:
        assert out[0] == x[0]
    assert kappa_apply(kappa_invert(word), out) == x + "#" + tail


def test_conjugate_identity_and_tau():
    assert kappa_conjugate(IDENTITY, K321) == IDENTITY
    assert kappa_conjugate(make_adjacent_transposition(1), kappa_invert(K321)) == make_adjacent_transposition(4)


def test_conjugate_rejects_non_members():
    outside = make_table([("0", "00"), ("10", "01"), ("11", "1"), ("1#", "0#"), ("#", "#")])
    with pytest.raises(NotInSubgroup):
        kappa_conjugate(outside, K321)


@given(st.randoms(use_true_random=False), st.sampled_from([((1, 1),), ((2, -1),), ((3, 1),), K321, kappa_invert(K321)]))
def test_conjugate_round_trip_and_pointwise(rng, word):
    phi = random_element(rng, 13, mod3=True)
    conj = kappa_conjugate(phi, word)
    assert member_of(conj, GroupTag.G31_MOD3_01_SHARP)
    assert kappa_conjugate(conj, kappa_invert(word)) == phi
    for _ in range(30):
        x = "".join(rng.choice("01") for _ in range(rng.randint(0, 12))) + "#"
        assert apply(conj, x) == kappa_apply(word, apply(phi, kappa_apply(kappa_invert(word), x)))


def test_not_commutes_with_k321():
    assert kappa_conjugate(PHI_NOT, K321) == PHI_NOT
