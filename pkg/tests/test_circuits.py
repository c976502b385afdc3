import itertools

import pytest
from hypothesis import given, settings, strategies as st

from thompson31.circuits import (
    Gate,
    GateKind,
    compile,
    compile_slice,
    compile_strong,
    eval_circuit,
    format_circuit,
    length_pad,
    make_circuit,
    max_tau_index,
    pad,
    parse_circuit,
    strictify,
    truth_table,
)
from thompson31.errors import ArityError, CycleError, FanoutError, NotDepthOne, ParseError
from thompson31.genwords import F4, NOT, OR, TAU, eval_word, materialize
from thompson31.samples import equivalent_variant, random_small_circuit
from thompson31.tables import GroupTag, apply, member_of

OR_CKT = "inputs 2\ngate g1 OR in.0 in.1\noutputs g1\n"
NOT_CKT = "inputs 1\ngate n NOT in.0\noutputs n\n"
FORK_CKT = "inputs 1\ngate f FORK in.0\noutputs f.0 f.1\n"


def bits(m):
    return ["".join(b) for b in itertools.product("01", repeat=m)]


def expected(c, x, s=""):
    f = "".join(map(str, eval_circuit(c, [int(b) for b in x])))
    return "0" * (1 + length_pad(c.n)) + f + x + s + "#"


def test_parse_examples():
    c = parse_circuit(OR_CKT)
    assert (c.m, c.n, c.size) == (2, 1, 3)
    wire = parse_circuit("inputs 1\noutputs in.0\n")
    assert wire.size == 1
    with pytest.raises(FanoutError):
        parse_circuit("inputs 1\ngate a NOT in.0\ngate b NOT in.0\noutputs a b\n")


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_circuit("inputs 2\ngate g XOR in.0 in.1\noutputs g\n")
    with pytest.raises(ParseError):
        parse_circuit("gate g NOT in.0\noutputs g\n")
    with pytest.raises(CycleError):
        make_circuit(1, [Gate("a", GateKind.AND, ("in.0", "b.0")), Gate("b", GateKind.FORK, ("a",))], ["b.1"])


def test_eval_examples():
    assert eval_circuit(parse_circuit(OR_CKT), [0, 1]) == (1,)
    assert eval_circuit(parse_circuit(NOT_CKT), [1]) == (0,)
    assert eval_circuit(parse_circuit(FORK_CKT), [1]) == (1, 1)
    with pytest.raises(ArityError):
        eval_circuit(parse_circuit(OR_CKT), [1])


def test_format_round_trip():
    c = parse_circuit("# comment\ninputs 2\ngate n NOT in.1\ngate g AND in.0 n\noutputs g\n")
    assert parse_circuit(format_circuit(c)) == c


def test_strictify_examples():
    strict = strictify(parse_circuit(OR_CKT))
    assert strict.identities == 0 and strict.depth == 1
    layered = strictify(parse_circuit("inputs 2\ngate n NOT in.1\ngate g OR in.0 n\noutputs g\n"))
    assert layered.identities == 1 and layered.depth == 2


@given(st.randoms(use_true_random=False))
def test_strictify_preserves_function(rng):
    c = random_small_circuit(rng)
    assert truth_table(strictify(c).circuit) == truth_table(c)


def test_pad_values():
    assert (pad(2), pad(1), pad(3)) == (0, 1, 2)
    assert (length_pad(1), length_pad(2), length_pad(3)) == (2, 1, 0)


def test_generators_preserve_bit_length_mod_3():
    # F4 changes lengths by multiples of 3 and every other letter keeps them,
    # so |0·x·s| and |output bits| must agree mod 3
    for w in [s + "#" for n in range(7) for s in bits(n)]:
        for token in (F4, NOT, OR, TAU(2)):
            out = eval_word([token], w)
            assert (len(out) - len(w)) % 3 == 0


def test_slice_examples():
    c = parse_circuit(OR_CKT)
    w = compile_slice(c)
    for x in bits(2):
        for s in ("", "0", "1", "01", "11"):
            assert eval_word(w, "0" + x + s + "#") == "000" + str(int("1" in x)) + x + s + "#"
    w = compile_slice(parse_circuit(NOT_CKT))
    for x in "01":
        assert eval_word(w, "0" + x + "#") == "000" + str(1 - int(x)) + x + "#"
    w = compile_slice(parse_circuit(FORK_CKT))
    for x in "01":
        assert eval_word(w, "0" + x + "#") == "00" + x + x + x + "#"
    with pytest.raises(NotDepthOne):
        compile_slice(parse_circuit("inputs 2\ngate n NOT in.1\ngate g OR in.0 n\noutputs g\n"))


def test_compile_examples():
    c = parse_circuit("inputs 2\ngate g OR in.0 in.1\ngate n NOT g\noutputs n\n")
    w = compile(c)
    for x in bits(2):
        assert eval_word(w, "0" + x + "#") == "000" + str(int("1" not in x)) + x + "#"
    wire = parse_circuit("inputs 1\noutputs in.0\n")
    for x in "01":
        assert eval_word(compile(wire), "0" + x + "#") == "000" + x + x + "#"


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_compile_simulates(rng):
    c = random_small_circuit(rng)
    w = compile(c)
    assert max_tau_index(w) <= 3 * strictify(c).size ** 2
    for x in bits(c.m):
        for s in ("", "0", "11"):
            assert eval_word(w, "0" + x + s + "#") == expected(c, x, s)


def test_compiled_word_is_in_the_mod3_subgroup():
    c = parse_circuit(OR_CKT)
    phi = materialize(compile(c))
    assert member_of(phi, GroupTag.G31_MOD3_01_SHARP)
    for x in bits(5):
        assert apply(phi, "0" + x).startswith("0")


def test_strong_examples():
    c = parse_circuit(OR_CKT)
    strong, plain = compile_strong(c), compile(c)
    for x in bits(2):
        for s in ("", "01"):
            assert eval_word(strong, "0" + x + s + "#") == eval_word(plain, "0" + x + s + "#")
    assert eval_word(strong, "#") is not None
    swapped = parse_circuit("inputs 2\ngate g1 OR in.1 in.0\noutputs g1\n")
    for x in ("", "0", "1"):
        assert eval_word(strong, "0" + x + "#") == eval_word(compile_strong(swapped), "0" + x + "#")


@settings(max_examples=20, deadline=None)
@given(st.randoms(use_true_random=False))
def test_strong_simulation_ignores_the_circuit(rng):
    c1 = random_small_circuit(rng)
    c2 = equivalent_variant(rng, c1)
    w1, w2 = compile_strong(c1), compile_strong(c2)
    for k in range(c1.m):
        for x in bits(k):
            assert eval_word(w1, "0" + x + "#") == eval_word(w2, "0" + x + "#")
