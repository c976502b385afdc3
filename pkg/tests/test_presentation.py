import itertools

import pytest
from hypothesis import given, settings, strategies as st

from thompson31.codes import complete_with_endmarkers
from thompson31.errors import NotInGroup, SizeError, UnsupportedTag
from thompson31.genwords import PHI_NOT, PHI_OR
from thompson31.presentation import (
    GeneratorSet,
    MOD3_THRESHOLD,
    binary_codes,
    enumerate_generators,
    factor,
    factor_traced,
)
from thompson31.samples import random_binary_code, random_element, table_from_codes
from thompson31.tables import IDENTITY, GroupTag, apply, compose_all, make_table, member_of


@pytest.fixture(scope="module")
def gens7():
    return enumerate_generators(GroupTag.G31_01_SHARP, 7)


def test_small_bounds():
    assert [str(m) for m in enumerate_generators(GroupTag.G31_01_SHARP, 1).members] == [str(IDENTITY)]
    assert enumerate_generators(GroupTag.G31_01_SHARP, 3).members == [IDENTITY, PHI_NOT]


def test_tree_shapes_are_catalan():
    assert [len(binary_codes(k)) for k in range(1, 6)] == [1, 1, 2, 5, 14]


def fingerprint(phi):
    probes = ["".join(b) + "#" for n in range(6) for b in itertools.product("01", repeat=n)]
    return tuple(apply(phi, w) for w in probes)


def sharp_words(bits):
    return [w for w in complete_with_endmarkers(bits) if w.endswith("#")] if len(bits) > 1 else []


def test_bound_7_count_matches_pointwise_enumeration(gens7):
    # count by action on probe words instead of by canonical tables
    seen = set()
    for leaves in range(1, 5):
        for dom in binary_codes(leaves):
            for img in binary_codes(leaves):
                dsharp = sharp_words(dom)
                isharp = sharp_words(img)
                for bits in itertools.permutations(img):
                    for sharps in itertools.permutations(isharp):
                        phi = make_table(list(zip(dom, bits)) + list(zip(dsharp, sharps)))
                        seen.add(fingerprint(phi))
    assert len(seen) == len(gens7)
    assert all(len(g) <= 7 and member_of(g, GroupTag.G31_01_SHARP) for g in gens7.members)


def test_generator_set_is_closed_under_inverse(gens7):
    for i, g in enumerate(gens7.members):
        j = gens7.inverse_of[i]
        assert compose_all([g, gens7[j]]) == IDENTITY


def test_enumeration_errors():
    with pytest.raises(UnsupportedTag):
        enumerate_generators(GroupTag.G31, 3)
    with pytest.raises(SizeError):
        enumerate_generators(GroupTag.G31_01_SHARP, 11)


def test_factor_base_cases(gens7):
    assert factor(IDENTITY, gens7) == []
    for g in gens7.members[1:50]:
        assert factor(g, gens7) == [gens7.id_of(g)]


def test_factor_rejects_outsiders(gens7):
    with pytest.raises(NotInGroup):
        factor(make_table([("0", "#"), ("1", "1"), ("#", "0")]), gens7)


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_factor_round_trip(gens7, rng):
    phi = random_element(rng, 21)
    ids, trace = factor_traced(phi, gens7)
    assert gens7.compose_ids(ids) == phi
    assert trace.max_intermediate <= len(phi)


def test_gadget_factorization(gens7):
    ids = factor(PHI_OR, gens7)
    assert gens7.compose_ids(ids) == PHI_OR


@settings(max_examples=5, deadline=None)
@given(st.randoms(use_true_random=False))
def test_mod3_factor_above_threshold(rng):
    leaves = rng.randint(32, 36)
    dom = random_binary_code(rng, leaves)
    phi = table_from_codes(rng, dom, dom, mod3=True)
    if len(phi) < MOD3_THRESHOLD:
        return
    gens = GeneratorSet(GroupTag.G31_MOD3_01_SHARP, MOD3_THRESHOLD - 2)
    ids, trace = factor_traced(phi, gens)
    assert gens.compose_ids(ids) == phi
    assert trace.max_intermediate <= len(phi)
    assert all(member_of(gens[i], GroupTag.G31_MOD3_01_SHARP) for i in ids)
    assert all(len(gens[i]) < MOD3_THRESHOLD for i in ids)
