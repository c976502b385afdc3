import itertools

import pytest
from hypothesis import given, strategies as st

from thompson31.errors import EmptyRange, KappaPresent, ParseError
from thompson31.genwords import (
    AND,
    F4,
    K,
    K1,
    K2,
    KAPPA_TOKEN,
    NOT,
    OR,
    PHI_NOT,
    TAU,
    eval_word,
    format_genword,
    invert_word,
    make_adjacent_transposition,
    make_transposition,
    materialize,
    parse_genword,
    sigma_word,
    tau_apply,
    tau_word_over_finite_gens,
    token_table,
    transposition_word,
    unary_length,
)
from thompson31.samples import SIGNED_ALPHABET
from thompson31.tables import apply, is_identity, table_size


def bit_strings(n):
    return ("".join(b) for b in itertools.product("01", repeat=n))


def test_adjacent_transposition_examples():
    assert apply(make_adjacent_transposition(1), "010") == "001"
    assert apply(make_adjacent_transposition(0), "0#") == "0#"
    t4 = make_adjacent_transposition(4)
    for x in bit_strings(6):
        assert apply(t4, x) == x[:4] + x[5] + x[4]


@pytest.mark.parametrize("i", range(8))
def test_transposition_table_size(i):
    assert table_size(make_adjacent_transposition(i)) == 2 ** (i + 3) - 1


def test_general_transposition():
    t02 = make_transposition(0, 2)
    for x in bit_strings(3):
        assert apply(t02, x) == x[2] + x[1] + x[0]
    assert is_identity(make_transposition(3, 3))
    assert make_transposition(1, 2) == make_adjacent_transposition(1)


def test_token_tables():
    assert apply(token_table(OR), "101") == "001"
    assert apply(token_table(F4), "10") == "01"
    assert token_table(K) is KAPPA_TOKEN


def test_eval_examples():
    onehots = {}
    for k in range(10):
        w = "".join("1" if j == k else "0" for j in range(10)) + "#"
        onehots[eval_word([K], w).index("1")] = k
    assert [onehots[p] for p in range(7)] == [0, 4, 5, 1, 7, 8, 2]
    assert eval_word([NOT, NOT], "0110#") == "0110#"


def test_tau_words_base_and_stable_letter_form():
    assert tau_word_over_finite_gens(1) == (TAU(1),)
    assert tau_word_over_finite_gens(4) == (K.inverse(), TAU(1), K)
    assert tau_word_over_finite_gens(2) == (K1, TAU(1), K1.inverse())


def test_mirrored_conjugation_is_not_tau_2_3():
    mirrored = (K1.inverse(), TAU(1), K1)
    assert any(
        eval_word(mirrored, x + "#") != tau_apply(2, x + "#") for n in range(4, 9) for x in bit_strings(n)
    )


@pytest.mark.parametrize("i", range(12))
def test_tau_words_act_like_transpositions(i):
    word = tau_word_over_finite_gens(i)
    assert len(word) <= max(1, 2 * i)
    for n in range(i + 2, i + 6):
        for x in bit_strings(n):
            assert eval_word(word, x + "#") == tau_apply(i, x + "#")


def test_tau_word_matches_table_on_short_inputs():
    word = tau_word_over_finite_gens(4)
    table = make_adjacent_transposition(4)
    for n in range(9):
        for x in bit_strings(n):
            assert eval_word(word, x + "#") == apply(table, x + "#")


def test_transposition_word_conjugation_identity():
    # τ_{i,j} = τ_{i,k} τ_{k,j} τ_{i,k} on long arguments
    i, k, j = 1, 3, 6
    lhs = transposition_word(i, j)
    rhs = transposition_word(i, k) + transposition_word(k, j) + transposition_word(i, k)
    for x in bit_strings(9):
        assert eval_word(lhs, x) == eval_word(rhs, x)


def test_sigma_words():
    assert sigma_word(0, 1) == (TAU(0),)
    assert sigma_word(0, 2) == (TAU(1), TAU(0))
    for x in bit_strings(4):
        assert eval_word(sigma_word(0, 3), x) == x[1:] + x[0]
    with pytest.raises(EmptyRange):
        sigma_word(2, 2)


def test_materialize_examples():
    assert materialize([NOT]) == PHI_NOT
    assert is_identity(materialize([TAU(0), TAU(0)]))
    assert materialize([K.inverse(), TAU(1), K]) == make_adjacent_transposition(4)
    with pytest.raises(KappaPresent):
        materialize([K, NOT])


def test_parse_and_format():
    word = parse_genword("not or' t3 K' k2  # trailing comment\nf4\n")
    assert word == (NOT, OR.inverse(), TAU(3), K.inverse(), K2, F4)
    assert parse_genword(format_genword(word)) == word
    assert parse_genword("s0_2") == sigma_word(0, 2)
    assert parse_genword("K321''") == (K,)
    with pytest.raises(ParseError):
        parse_genword("nand")


def test_unary_length():
    assert unary_length([TAU(3), NOT]) == 5


words = st.lists(st.sampled_from(SIGNED_ALPHABET + (AND,)), max_size=8).map(tuple)


@given(words, st.text("01", max_size=12))
def test_inverse_word_undoes_word(word, x):
    out = eval_word(word, x + "#")
    assert out is not None
    assert eval_word(invert_word(word), out) == x + "#"


@given(words)
def test_format_round_trip(word):
    assert parse_genword(format_genword(word)) == word
