"""Named generators, generator words and their interpretation.

A generator word is a sequence of :class:`Token` values written in
function order: the leftmost token acts last.  The alphabet consists of
the gadget tables ``NOT`` (flip the first bit), ``OR`` and ``AND`` (the
reversible three-bit gates ``a·x·y ↦ (a ⊕ (x op y))·x·y``), ``F4`` (the
padding element that turns a leading ``0`` into ``0000``), the adjacent
transpositions ``TAU(i)`` of bit positions ``i`` and ``i+1`` and the kappa
letters ``K0..K3`` and ``K321``.
"""

from __future__ import annotations

import enum
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import EmptyRange, KappaPresent, ParseError
from .kappa import K321 as K321_LETTERS
from .kappa import KappaWord, kappa_apply, kappa_invert, permute_symbols
from .tables import IDENTITY, TableElement, apply, compose, invert, make_table


class Kind(enum.Enum):
    NOT = "not"
    OR = "or"
    AND = "and"
    F4 = "f4"
    TAU = "t"
    K0 = "k0"
    K1 = "k1"
    K2 = "k2"
    K3 = "k3"
    K321 = "K"


KAPPA_KINDS = frozenset({Kind.K0, Kind.K1, Kind.K2, Kind.K3, Kind.K321})
GADGET_KINDS = frozenset({Kind.NOT, Kind.OR, Kind.AND, Kind.F4})


@dataclass(frozen=True)
class Token:
    kind: Kind
    sign: int = 1
    index: int = 0

    @property
    def is_kappa(self) -> bool:
        return self.kind in KAPPA_KINDS

    def inverse(self) -> "Token":
        if self.kind is Kind.TAU:
            return self  # transpositions are involutions
        return Token(self.kind, -self.sign, self.index)

    def __str__(self) -> str:
        name = f"t{self.index}" if self.kind is Kind.TAU else self.kind.value
        return name + ("'" if self.sign < 0 else "")


GenWord = tuple[Token, ...]

NOT = Token(Kind.NOT)
OR = Token(Kind.OR)
AND = Token(Kind.AND)
F4 = Token(Kind.F4)
K0 = Token(Kind.K0)
K1 = Token(Kind.K1)
K2 = Token(Kind.K2)
K3 = Token(Kind.K3)
K = Token(Kind.K321)


def TAU(i: int, sign: int = 1) -> Token:
    if i < 0:
        raise ValueError("transposition index must be non-negative")
    return Token(Kind.TAU, sign, i)


class KappaTokenMarker(enum.Enum):
    """Returned by :func:`token_table` for letters without a finite table."""

    KAPPA_TOKEN = "KAPPA_TOKEN"


KAPPA_TOKEN = KappaTokenMarker.KAPPA_TOKEN


def invert_word(word: Iterable[Token]) -> GenWord:
    return tuple(t.inverse() for t in reversed(tuple(word)))


def kappa_letters(token: Token) -> KappaWord:
    """The kappa word denoted by a kappa token (with its sign applied)."""
    if token.kind is Kind.K321:
        return K321_LETTERS if token.sign > 0 else kappa_invert(K321_LETTERS)
    index = {Kind.K0: 0, Kind.K1: 1, Kind.K2: 2, Kind.K3: 3}[token.kind]
    return ((index, token.sign),)


def _gate_table(op) -> TableElement:
    pairs = []
    for a, x, y in product((0, 1), repeat=3):
        out = a ^ op(x, y)
        pairs.append((f"{a}{x}{y}", f"{out}{x}{y}"))
    for n in range(3):
        for bits in product("01", repeat=n):
            w = "".join(bits) + "#"
            pairs.append((w, w))
    return make_table(pairs)


PHI_NOT = make_table([("0", "1"), ("1", "0"), ("#", "#")])
PHI_OR = _gate_table(lambda x, y: x | y)
PHI_AND = _gate_table(lambda x, y: x & y)
PHI_F4 = make_table(
    [
        ("0", "0000"),
        ("#", "000#"),
        ("10", "01"),
        ("1#", "0#"),
        ("110", "001"),
        ("11#", "00#"),
        ("1110", "0001"),
        ("111#", "#"),
        ("1111", "1"),
    ]
)

_GADGETS = {Kind.NOT: PHI_NOT, Kind.OR: PHI_OR, Kind.AND: PHI_AND, Kind.F4: PHI_F4}
_GADGETS_INV = {k: invert(v) for k, v in _GADGETS.items()}


def gadget_table(token: Token) -> TableElement:
    return (_GADGETS if token.sign > 0 else _GADGETS_INV)[token.kind]


def tau_word_over_finite_gens(i: int) -> GenWord:
    """A word for ``τ_{i,i+1}`` over ``TAU(0)``, ``TAU(1)``, ``K1``, ``K2`` and ``K321``.

    ``K321⁻ⁿ τ_{1,2} K321ⁿ`` swaps positions ``3n+1, 3n+2``; conjugating
    by ``K1`` and then ``K2`` shifts the swapped pair one and two places to
    the right, since those letters move position ``3n+1`` to ``3n+2`` and
    ``3n+2`` to ``3n+3``.  The length is at most ``2⌈i/3⌉ + 5``.
    """
    if i < 0:
        raise ValueError("transposition index must be non-negative")
    if i <= 1:
        return (TAU(i),)
    n, r = divmod(i - 1, 3)
    core = (K.inverse(),) * n + (TAU(1),) + (K,) * n
    if r == 0:
        return core
    if r == 1:
        return (K1,) + core + (K1.inverse(),)
    return (K2, K1) + core + (K1.inverse(), K2.inverse())


def _positional(word: Sequence[Token], symbols: list) -> list:
    """Apply a word of TAU and kappa tokens to a symbol list by positions."""
    out = list(symbols)
    for t in reversed(word):
        if t.kind is Kind.TAU:
            if len(out) >= t.index + 2:
                out[t.index], out[t.index + 1] = out[t.index + 1], out[t.index]
            elif t.index >= 2:
                out = [out[s] for s in tau_short_map(t.index, len(out))]
        else:
            out = permute_symbols(kappa_letters(t), out)
    return out


@lru_cache(maxsize=None)
def tau_short_map(i: int, bits: int) -> tuple[int, ...]:
    """Source map of ``τ_{i,i+1}`` on ``x#`` with ``|x| = bits < i+2``."""
    if i <= 1 or bits >= i + 2:
        raise ValueError("only short arguments of τ_{i,i+1} with i ≥ 2 have a separate rule")
    return tuple(_positional(tau_word_over_finite_gens(i), list(range(bits))))


def tau_apply(i: int, w: str) -> str | None:
    """``τ_{i,i+1}`` applied to a word."""
    cut = w.find("#")
    bits = len(w) if cut < 0 else cut
    if bits >= i + 2:
        return w[:i] + w[i + 1] + w[i] + w[i + 2:]
    if cut < 0:
        return None
    if i <= 1:
        return w
    src = tau_short_map(i, bits)
    return "".join(w[s] for s in src) + w[cut:]


@lru_cache(maxsize=32)
def make_adjacent_transposition(i: int) -> TableElement:
    """Table of ``τ_{i,i+1}`` on ``{0,1}^{i+2} ∪ {0,1}^{≤i+1}#``."""
    if i < 0:
        raise ValueError("transposition index must be non-negative")
    words = ["".join(b) for b in product("01", repeat=i + 2)]
    for n in range(i + 2):
        words.extend("".join(b) + "#" for b in product("01", repeat=n))
    return make_table((w, tau_apply(i, w)) for w in words)


def transposition_word(i: int, j: int) -> GenWord:
    """``τ_{i,j}`` as ``τ_{i,i+1} … τ_{j-1,j} … τ_{i,i+1}``; empty when ``i = j``."""
    if i == j:
        return ()
    i, j = min(i, j), max(i, j)
    up = tuple(TAU(k) for k in range(i, j))
    return up + tuple(reversed(up[:-1]))


def make_transposition(i: int, j: int) -> TableElement:
    return materialize(transposition_word(i, j))


def sigma_word(i: int, j: int) -> GenWord:
    """``σ_{i,j} = τ_{j-1,j} … τ_{i,i+1}``: the bit at ``i`` moves to ``j``."""
    if i >= j:
        raise EmptyRange(f"sigma needs i < j, got ({i}, {j})")
    return tuple(TAU(k) for k in range(j - 1, i - 1, -1))


def token_table(token: Token) -> TableElement | KappaTokenMarker:
    if token.is_kappa:
        return KAPPA_TOKEN
    if token.kind is Kind.TAU:
        return make_adjacent_transposition(token.index)
    return gadget_table(token)


def code_depth(token: Token) -> int:
    """Longest domain or image code word of a table token."""
    if token.kind is Kind.TAU:
        return token.index + 2
    return gadget_table(token).depth


def eval_word(word: Iterable[Token], x: str) -> str | None:
    """Apply a generator word to *x*; ``None`` once any stage is undefined."""
    w: str | None = x
    for t in reversed(tuple(word)):
        if t.kind is Kind.TAU:
            w = tau_apply(t.index, w)
        elif t.is_kappa:
            w = kappa_apply(kappa_letters(t), w)
        else:
            w = apply(gadget_table(t), w)
        if w is None:
            return None
    return w


def has_kappa(word: Iterable[Token]) -> bool:
    return any(t.is_kappa for t in word)


def materialize(word: Iterable[Token]) -> TableElement:
    """Canonical table of a generator word.

    Words with kappa letters are accepted when their kappa letters multiply
    to the identity permutation (for ``K321`` alone: when the exponent sum
    vanishes); table letters are then conjugated past the kappa letters.
    """
    word = tuple(word)
    if has_kappa(word):
        from .kappa import kappa_is_identity
        from .wordproblem import fold_kappa

        g, rest = fold_kappa(word)
        if not kappa_is_identity(rest):
            raise KappaPresent("the kappa letters of the word do not cancel")
        return g
    result = IDENTITY
    for t in reversed(word):
        result = compose(token_table(t), result)
    return result


_TOKEN_RE = re.compile(r"^(not|or|and|f4|t(\d+)|s(\d+)_(\d+)|k[0-3]|K|K321)('*)$", re.IGNORECASE)


def parse_genword(text: str) -> GenWord:
    """Parse the whitespace-separated token syntax; ``#`` starts a comment."""
    out: list[Token] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        for item in line.split():
            m = _TOKEN_RE.match(item)
            if not m:
                raise ParseError(f"line {lineno}: unknown token {item!r}")
            name, primes = m.group(1), m.group(5)
            sign = -1 if len(primes) % 2 else 1
            low = name.lower()
            if m.group(2) is not None:
                out.append(TAU(int(m.group(2)), sign))
            elif m.group(3) is not None:
                i, j = int(m.group(3)), int(m.group(4))
                sig = sigma_word(i, j)
                out.extend(sig if sign > 0 else invert_word(sig))
            elif name in ("K", "K321"):
                out.append(Token(Kind.K321, sign))
            elif low in ("k0", "k1", "k2", "k3"):
                out.append(Token(Kind(low), sign))
            else:
                out.append(Token(Kind(low), sign))
    return tuple(out)


def format_genword(word: Iterable[Token]) -> str:
    return " ".join(str(t) for t in word)


def unary_length(word: Iterable[Token]) -> int:
    """Length with every ``TAU(i)`` index written in unary."""
    return sum(1 + (t.index if t.kind is Kind.TAU else 0) for t in word)
