"""Words over ``{0, 1, #}`` and finite prefix codes.

Words are plain Python strings over the characters ``'0'``, ``'1'`` and
``'#'``.  The empty word is the empty string; in text files it is written
``@``.  Codes are finite sets of words; every set-valued result of this
module is returned as a sorted tuple in canonical order (``0 < 1 < #``,
shorter words first among prefixes), which keeps equality checks and
serialized output deterministic.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable
from typing import NamedTuple

from .errors import HypothesisFail, ParseError, PinConflict, ShapeError, SizeError

ALPHABET = "01#"
BITS = "01"
EMPTY_TOKEN = "@"

_ORDER = str.maketrans("01#", "012")


def word_key(w: str) -> str:
    """Sort key realising the canonical order ``0 < 1 < #``."""
    return w.translate(_ORDER)


def sort_words(words: Iterable[str]) -> tuple[str, ...]:
    """Return *words* deduplicated and in canonical order."""
    return tuple(sorted(set(words), key=word_key))


def format_word(w: str) -> str:
    """Serialize a word, writing the empty word as ``@``."""
    return w if w else EMPTY_TOKEN


def parse_word(text: str) -> str:
    """Inverse of :func:`format_word`; validates the alphabet."""
    text = text.strip()
    if text == EMPTY_TOKEN:
        return ""
    if any(c not in ALPHABET for c in text):
        raise ParseError(f"not a word over {{0,1,#}}: {text!r}")
    return text


def is_bit_word(w: str) -> bool:
    return "#" not in w


def is_sharp_word(w: str) -> bool:
    """True for words in ``{0,1}*`` or ``{0,1}*#``."""
    i = w.find("#")
    return i == -1 or i == len(w) - 1


class PrefixRelation(enum.Enum):
    STRICT_PREFIX = "strict-prefix"
    EQUAL = "equal"
    STRICT_EXTENSION = "strict-extension"
    INCOMPARABLE = "incomparable"


def prefix_compare(u: str, v: str) -> PrefixRelation:
    """Classify how *u* relates to *v* under the prefix order."""
    if u == v:
        return PrefixRelation.EQUAL
    if v.startswith(u):
        return PrefixRelation.STRICT_PREFIX
    if u.startswith(v):
        return PrefixRelation.STRICT_EXTENSION
    return PrefixRelation.INCOMPARABLE


def comparable(u: str, v: str) -> bool:
    return u.startswith(v) or v.startswith(u)


def strict_prefixes(words: Iterable[str]) -> set[str]:
    """All strict prefixes of members of *words* (the inner vertices)."""
    out: set[str] = set()
    for w in words:
        for k in range(len(w)):
            out.add(w[:k])
    return out


def is_prefix_code(words: Iterable[str]) -> bool:
    ws = set(words)
    inner = strict_prefixes(ws)
    return not (ws & inner)


def _is_complete(words: Iterable[str], alphabet: str) -> bool:
    ws = set(words)
    if not ws:
        return False
    inner = strict_prefixes(ws)
    if ws & inner:
        return False
    return all(p + a in ws or p + a in inner for p in inner for a in alphabet)


def is_maximal_prefix_code(words: Iterable[str]) -> bool:
    """Prefix code over ``{0,1,#}`` whose prefix tree is complete."""
    return _is_complete(words, ALPHABET)


def is_maximal_binary_code(words: Iterable[str]) -> bool:
    """Maximal prefix code over the two-letter alphabet ``{0,1}``."""
    ws = set(words)
    return all(is_bit_word(w) for w in ws) and _is_complete(ws, BITS)


def endmarker_decompose(code: Iterable[str]) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Split a code of shape ``P1 ∪ P2#`` into ``(P1, P2)``.

    Raises :class:`ShapeError` if some word carries a non-final ``#`` or
    if ``P2`` is not exactly the set of strict prefixes of ``P1``.
    """
    p1: list[str] = []
    p2: list[str] = []
    for w in code:
        if not is_sharp_word(w):
            raise ShapeError(f"word {format_word(w)} has a non-final #")
        if w.endswith("#"):
            p2.append(w[:-1])
        else:
            p1.append(w)
    if not is_maximal_binary_code(p1):
        raise ShapeError("bit part is not a maximal prefix code over {0,1}")
    if set(p2) != strict_prefixes(p1) or len(p2) != len(set(p2)):
        raise ShapeError("endmarker part is not the set of strict prefixes of the bit part")
    return sort_words(p1), sort_words(p2)


def is_endmarker_code(code: Iterable[str]) -> bool:
    try:
        endmarker_decompose(code)
    except ShapeError:
        return False
    return True


def complete_with_endmarkers(p1: Iterable[str]) -> tuple[str, ...]:
    """Return ``P1 ∪ {p# : p a strict prefix of a member of P1}``."""
    bits = set(p1)
    if not is_maximal_binary_code(bits):
        raise ShapeError("input is not a maximal prefix code over {0,1}")
    return sort_words(bits | {p + "#" for p in strict_prefixes(bits)})


def extend_to_maximal(
    pins: Iterable[str],
    complement: Iterable[str] = (),
    target_size: int | None = None,
    *,
    split_bits_only: bool = False,
) -> tuple[str, ...]:
    """Fill the gaps next to *pins* so the union becomes a maximal code.

    Returns a prefix code ``Q`` such that ``Q ∪ pins ∪ complement`` is a
    maximal prefix code over ``{0,1,#}``.  The fill consists of the missing
    children of every vertex that lies strictly above a pin or a
    complement word.  With *target_size* the least leaf of ``Q`` (in
    canonical order) is split repeatedly until ``|Q|`` reaches the target;
    with *split_bits_only* only bit-word leaves are split, which keeps the
    result inside ``{0,1}* ∪ {0,1}*#``.
    """
    pins = list(pins)
    comp = set(complement)
    fixed = set(pins) | comp
    if len(fixed) != len(pins) + len(comp) or not is_prefix_code(fixed):
        raise PinConflict("pins and complement must be pairwise prefix-incomparable")
    inner = strict_prefixes(fixed)
    fill = {p + a for p in inner for a in ALPHABET} - inner - fixed
    if not fixed:
        fill = {""}
    if target_size is not None:
        if target_size < len(fill) or (target_size - len(fill)) % 2:
            raise SizeError(f"cannot reach |Q| = {target_size} from {len(fill)}")
        while len(fill) < target_size:
            candidates = [q for q in fill if not split_bits_only or is_bit_word(q)]
            if not candidates:
                raise SizeError("no splittable leaf available")
            leaf = min(candidates, key=word_key)
            fill.remove(leaf)
            fill.update(leaf + a for a in ALPHABET)
    return sort_words(fill)


class Mod3Card(NamedTuple):
    n0: int
    n1: int
    n2: int


def mod3_cardinality(words: Iterable[str]) -> Mod3Card:
    """Count members by length modulo 3."""
    counts = [0, 0, 0]
    for w in words:
        counts[len(w) % 3] += 1
    return Mod3Card(*counts)


def inner_tree(p1: Iterable[str]) -> set[str]:
    """Inner vertices of the prefix tree of a binary code."""
    return strict_prefixes(p1)


def inner_leaves(p1: Iterable[str]) -> list[str]:
    """Inner vertices whose two children are both code words, sorted."""
    ws = set(p1)
    return sorted((u for u in inner_tree(ws) if u + "0" in ws and u + "1" in ws), key=word_key)


def _one_child_vertices(ws: set[str]) -> list[tuple[str, str]]:
    """Pairs ``(vertex, free letter)`` for inner vertices with one inner child."""
    inner = inner_tree(ws)
    out = []
    for u in sorted(inner, key=word_key):
        kids = [a for a in BITS if u + a in inner]
        if len(kids) == 1:
            out.append((u, "1" if kids[0] == "0" else "0"))
    return out


def _relocate(ws: set[str], a: str, b: str, slot: str) -> set[str]:
    """Move the inner subtree below the one-child vertex *a* under ``b+slot``.

    The code word ``b+slot`` becomes an inner vertex and the inner child of
    *a* becomes a code word, so *a* turns into a leaf of the inner tree.
    """
    inner = inner_tree(ws)
    child = next(a + c for c in BITS if a + c in inner)
    target = b + slot
    moved = {target + w[len(child):] for w in ws if w.startswith(child)}
    kept = {w for w in ws if not w.startswith(child) and w != target}
    return kept | moved | {child}


def rearrange_leaves_mod3(q1: Iterable[str], residues: Iterable[int]) -> tuple[str, ...]:
    """Rearrange a binary code so its inner tree has leaves at given depths.

    For each requested residue ``r`` (with multiplicity) the result has a
    distinct inner-tree leaf ``u`` with ``|u| ≡ r (mod 3)``.  Missing leaves
    are produced by moving the subtree hanging below one one-child vertex
    into the free slot of another one-child vertex at a congruent depth;
    both moves preserve the mod-3 cardinality of the code.
    """
    ws = set(q1)
    if not is_maximal_binary_code(ws):
        raise ShapeError("input is not a maximal prefix code over {0,1}")
    wanted = [r % 3 for r in residues]
    for k, r in enumerate(wanted):
        need = wanted[: k + 1].count(r)
        have = sum(1 for u in inner_leaves(ws) if len(u) % 3 == r)
        if have >= need:
            continue
        singles = [(u, s) for u, s in _one_child_vertices(ws) if len(u) % 3 == r]
        pair = None
        for i, (u, _) in enumerate(singles):
            for v, slot in singles[i + 1:] + singles[:i]:
                if v == u:
                    continue
                if v.startswith(u):
                    # u is an ancestor of v: the deeper vertex becomes the leaf
                    continue
                pair = (u, v, slot)
                break
            if pair:
                break
        if pair is None:
            raise HypothesisFail(f"no inner leaf or congruent one-child pair at residue {r}")
        ws = _relocate(ws, *pair)
    return sort_words(ws)
