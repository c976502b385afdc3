"""The position permutations γ₀..γ₃ and the infinite-table elements κ₀..κ₃.

``γ_i`` permutes the natural numbers by disjoint 3-cycles
``(3k+i → 3k+i+1 → 3k+i+2 → 3k+i)``; ``γ₁`` fixes 0, ``γ₂`` fixes 0 and 1,
and ``γ₃`` is ``γ₀`` with 0, 1, 2 fixed.  ``κ_i`` acts on a word
``x·#·tail`` (``x`` a bit word) by moving the bit at position ``k`` of the
longest block of ``x`` that ends on a cycle boundary to position ``γ_i(k)``;
left-over bits, the ``#`` and the tail are untouched.  Words without a ``#``
are outside the domain.

Kappa words are sequences of ``(index, sign)`` pairs, written like
function composition: the rightmost token acts first.  The composite
``K321`` is a single stable letter used throughout; as a kappa word it is
``κ₁⁻¹ κ₂⁻¹ κ₃⁻¹``, the permutation that sends ``x₀x₁x₂x₃…`` to
``x₀x₄x₅x₁x₇x₈x₂…``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from functools import lru_cache

from .codes import is_bit_word, strict_prefixes
from .errors import NotInSubgroup
from .tables import (
    IDENTITY,
    GroupTag,
    TableElement,
    apply,
    is_identity,
    make_table,
    member_of,
)

KappaToken = tuple[int, int]
KappaWord = tuple[KappaToken, ...]
GammaWord = tuple[KappaToken, ...]

K321: KappaWord = ((1, -1), (2, -1), (3, -1))


def _offset(i: int) -> int:
    """First position moved by γ_i."""
    return (0, 1, 2, 3)[i]


def _residue(i: int) -> int:
    return i % 3


def gamma_apply(i: int, sign: int, n: int) -> int:
    """Image of *n* under ``γ_i`` (``sign=+1``) or ``γ_i⁻¹`` (``sign=-1``)."""
    if i not in (0, 1, 2, 3):
        raise ValueError(f"gamma index must be 0..3, got {i}")
    if n < _offset(i):
        return n
    base = _residue(i)
    k, r = divmod(n - base, 3)
    return base + 3 * k + (r + sign) % 3


def gamma_word_apply(word: Iterable[KappaToken], n: int) -> int:
    for i, sign in reversed(tuple(word)):
        n = gamma_apply(i, sign, n)
    return n


def gamma_is_identity(word: Iterable[KappaToken]) -> bool:
    """Decide whether a γ-word is the identity permutation of ℕ.

    Each letter moves a point by at most 2 and commutes with the shift
    ``n ↦ n+3`` beyond position 3, so agreement on an initial segment of
    length ``3 + 2|π| + 3`` settles the question.
    """
    word = tuple(word)
    bound = 3 + 2 * len(word) + 3
    return all(gamma_word_apply(word, n) == n for n in range(bound))


def block_length(i: int, bits: int) -> int:
    """Length of the prefix permuted by ``κ_i`` on a bit block of length *bits*."""
    r = _residue(i)
    if bits < r:
        return 0
    return bits - (bits - r) % 3


@lru_cache(maxsize=None)
def token_position_map(i: int, sign: int, bits: int) -> tuple[int, ...]:
    """``src`` with ``out[k] = in[src[k]]`` for one κ letter on *bits* bits."""
    b = block_length(i, bits)
    src = list(range(bits))
    for k in range(b):
        src[gamma_apply(i, sign, k)] = k
    return tuple(src)


def kappa_apply(word: Iterable[KappaToken], w: str) -> str | None:
    """Apply a kappa word to *w*; ``None`` if *w* contains no ``#``."""
    cut = w.find("#")
    if cut < 0:
        return None
    bits, tail = list(w[:cut]), w[cut:]
    for i, sign in reversed(tuple(word)):
        src = token_position_map(i, sign, len(bits))
        bits = [bits[s] for s in src]
    return "".join(bits) + tail


def permute_symbols(word: Iterable[KappaToken], symbols: Sequence) -> list:
    """Apply a kappa word positionally to an arbitrary symbol list."""
    out = list(symbols)
    for i, sign in reversed(tuple(word)):
        src = token_position_map(i, sign, len(out))
        out = [out[s] for s in src]
    return out


def kappa_position_perm(word: Iterable[KappaToken], length: int) -> tuple[int, ...]:
    """Where each bit position of an ``x#`` argument with ``|x| = length`` ends up.

    The result ``p`` satisfies ``y[p[k]] = x[k]``.  Every kappa word acts on
    a fixed length by a position permutation, so the answer is always a
    permutation.
    """
    moved = permute_symbols(word, range(length))
    perm = [0] * length
    for pos, k in enumerate(moved):
        perm[k] = pos
    return tuple(perm)


def kappa_invert(word: Iterable[KappaToken]) -> KappaWord:
    return tuple((i, -s) for i, s in reversed(tuple(word)))


def kappa_is_identity(word: Iterable[KappaToken]) -> bool:
    """Decide whether a kappa word acts as the identity on every ``x#``.

    Each letter moves bits by at most two places and, away from the ends of
    the block, commutes with shifting the block by three, so probing all
    bit lengths up to ``6|K| + 3`` is complete.
    """
    word = tuple(word)
    bound = 6 * len(word) + 3
    for length in range(bound + 1):
        if permute_symbols(word, range(length)) != list(range(length)):
            return False
    return True


def _prefix_action(token: KappaToken, w: str) -> str:
    """Action of one letter on a bit word whose length ends on a cycle boundary."""
    out = kappa_apply((token,), w + "#")
    assert out is not None
    return out[:-1]


def _conjugate_token(phi: TableElement, token: KappaToken) -> TableElement:
    """``t φ t⁻¹`` for a single kappa letter ``t``."""
    i, sign = token
    r = _residue(i)
    inv = (i, -sign)
    bit_entries: dict[str, str] = {}
    for p, q in phi.entries:
        if not is_bit_word(p):
            continue
        pad = (r - len(p)) % 3
        if len(p) + pad < _offset(i):
            pad += 3
        for n in range(1 << pad):
            ext = format(n, f"0{pad}b") if pad else ""
            bit_entries[_prefix_action(token, p + ext)] = _prefix_action(token, q + ext)
    pairs = list(bit_entries.items())
    for z in strict_prefixes(bit_entries):
        pre = kappa_apply((inv,), z + "#")
        mid = apply(phi, pre)
        out = kappa_apply((token,), mid)
        pairs.append((z + "#", out))
    return make_table(pairs)


def kappa_conjugate(phi: TableElement, word: Iterable[KappaToken]) -> TableElement:
    """The finite table of ``K φ K⁻¹`` for ``φ`` in the mod-3 bit/endmarker subgroup."""
    if not member_of(phi, GroupTag.G31_MOD3_01_SHARP):
        raise NotInSubgroup("kappa conjugation needs a mod-3 endmarker-shaped table")
    if is_identity(phi):
        return IDENTITY
    for token in reversed(tuple(word)):
        phi = _conjugate_token(phi, token)
    return phi
