import itertools

from hypothesis import given, settings, strategies as st

from thompson31.genwords import AND, F4, K, K0, K1, K2, NOT, OR, TAU, eval_word
from thompson31.symbolic import probe

ALPHABET = [NOT, OR, AND, F4, TAU(0), TAU(1), TAU(3), K, K0, K1, K2]
ALPHABET += [t.inverse() for t in ALPHABET]


@settings(max_examples=150, deadline=None)
@given(st.lists(st.sampled_from(ALPHABET), max_size=6), st.integers(0, 7), st.sampled_from(["", "0", "1"]))
def test_probe_matches_brute_force(word, length, prefix):
    moved = [
        prefix + "".join(x) + "#"
        for x in itertools.product("01", repeat=length)
        if eval_word(word, prefix + "".join(x) + "#") != prefix + "".join(x) + "#"
    ]
    result = probe(word, prefix, length)
    assert (result.witness is None) == (not moved)
    if result.witness is not None:
        assert result.witness in moved


def test_probe_reports_touched_positions():
    result = probe([TAU(3)], "", 6)
    assert result.witness is not None and result.max_touched == 4
    quiet = probe([NOT, NOT], "", 5)
    assert quiet.witness is None and not quiet.irregular
