import itertools

import pytest
from hypothesis import given, strategies as st

from thompson31.codes import (
    PrefixRelation,
    comparable,
    complete_with_endmarkers,
    endmarker_decompose,
    extend_to_maximal,
    format_word,
    inner_leaves,
    is_endmarker_code,
    is_maximal_binary_code,
    is_maximal_prefix_code,
    mod3_cardinality,
    parse_word,
    prefix_compare,
    rearrange_leaves_mod3,
)
from thompson31.errors import HypothesisFail, ParseError, PinConflict, ShapeError
from thompson31.samples import random_binary_code


def test_prefix_compare_cases():
    assert prefix_compare("01", "011") is PrefixRelation.STRICT_PREFIX
    assert prefix_compare("011", "01") is PrefixRelation.STRICT_EXTENSION
    assert prefix_compare("0", "1") is PrefixRelation.INCOMPARABLE
    assert prefix_compare("01#", "01#") is PrefixRelation.EQUAL


def test_maximal_prefix_code_examples():
    assert is_maximal_prefix_code({"0", "1", "#"})
    assert not is_maximal_prefix_code({"0", "1"})
    assert is_maximal_prefix_code({"0", "10", "11", "1#", "#"})


def test_maximality_matches_brute_force_on_short_words():
    code = {"0", "10", "11", "1#", "#"}
    for n in range(4):
        for w in itertools.product("01#", repeat=n):
            assert any(comparable("".join(w), p) for p in code)


def test_endmarker_decompose():
    assert endmarker_decompose({"0", "1", "#"}) == (("0", "1"), ("",))
    assert endmarker_decompose({"00", "01", "10", "11", "0#", "1#", "#"}) == (
        ("00", "01", "10", "11"),
        ("", "0", "1"),
    )
    with pytest.raises(ShapeError):
        endmarker_decompose({"0", "1#", "#"})


def test_complete_with_endmarkers():
    assert set(complete_with_endmarkers({"0", "1"})) == {"0", "1", "#"}
    assert set(complete_with_endmarkers({"00", "01", "1"})) == {"00", "01", "1", "#", "0#"}
    assert set(complete_with_endmarkers({"0", "10", "11"})) == {"0", "10", "11", "#", "1#"}


@given(st.integers(1, 12), st.randoms(use_true_random=False))
def test_completion_is_an_endmarker_code(leaves, rng):
    p1 = random_binary_code(rng, leaves)
    assert is_maximal_binary_code(p1)
    code = complete_with_endmarkers(p1)
    assert len(code) == 2 * leaves - 1
    if leaves > 1:
        assert is_maximal_prefix_code(code)
        assert is_endmarker_code(code)


def test_extend_to_maximal():
    assert extend_to_maximal(["0"], ["1", "#"]) == ()
    q = extend_to_maximal(["00", "01#"], ["1", "#"])
    assert is_maximal_prefix_code(set(q) | {"00", "01#", "1", "#"})
    assert extend_to_maximal(["0", "1"]) == ("#",)
    with pytest.raises(PinConflict):
        extend_to_maximal(["0", "01"])


def test_extend_to_maximal_target_size():
    q = extend_to_maximal(["0"], ["1"], target_size=3)
    assert len(q) == 3
    assert is_maximal_prefix_code(set(q) | {"0", "1"})


def test_mod3_cardinality():
    assert tuple(mod3_cardinality({"0", "1", "#"})) == (0, 3, 0)
    assert tuple(mod3_cardinality({"00", "01", "1"})) == (0, 1, 2)
    assert tuple(mod3_cardinality(set())) == (0, 0, 0)


def test_rearrange_trivial_and_impossible():
    assert rearrange_leaves_mod3(["0", "1"], [0]) == ("0", "1")
    with pytest.raises(HypothesisFail):
        rearrange_leaves_mod3(["0", "1"], [2])


def test_rearrange_path_code():
    # inner leaves 00 and 10000 (depths ≡ 2); one-child vertices 0, 1, 10, 100, 1000
    path = ["01", "000", "001", "11", "101", "1001", "10001", "100000", "100001"]
    assert not any(len(u) % 3 == 1 for u in inner_leaves(path))
    out = rearrange_leaves_mod3(path, [1])
    assert is_maximal_binary_code(out)
    assert mod3_cardinality(out) == mod3_cardinality(path)
    assert any(len(u) % 3 == 1 for u in inner_leaves(out))


@given(st.integers(4, 30), st.lists(st.integers(0, 2), min_size=1, max_size=2), st.randoms(use_true_random=False))
def test_rearrange_preserves_mod3_cardinality(leaves, residues, rng):
    code = random_binary_code(rng, leaves)
    try:
        out = rearrange_leaves_mod3(code, residues)
    except HypothesisFail:
        return
    assert mod3_cardinality(out) == mod3_cardinality(code)
    found = [len(u) % 3 for u in inner_leaves(out)]
    for r in set(residues):
        assert found.count(r) >= residues.count(r)


def test_word_serialization():
    assert format_word("") == "@"
    assert parse_word("@") == ""
    assert parse_word(format_word("01#")) == "01#"
    with pytest.raises(ParseError):
        parse_word("012")
