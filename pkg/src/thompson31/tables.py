"""Finite-table elements of the Thompson–Higman group on ``{0, 1, #}``.

An element is a bijection between two finite maximal prefix codes acting
on words by prefix replacement (``p·s ↦ φ(p)·s``).  Tables are always kept
in canonical form: maximally extended (no sibling triple ``u0, u1, u#``
mapped to a sibling triple ``v0, v1, v#``) and sorted by domain word.
Products are written in function order: ``compose(φ, ψ)`` applies ``ψ``
first.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property

from .codes import (
    ALPHABET,
    comparable,
    format_word,
    is_bit_word,
    is_endmarker_code,
    is_maximal_prefix_code,
    parse_word,
    word_key,
)
from .errors import NotACode, NotBijective, ParseError

Pair = tuple[str, str]


@dataclass(frozen=True)
class TableElement:
    """Canonical table; construct through :func:`make_table`."""

    entries: tuple[Pair, ...]
    _map: dict[str, str] = field(default=None, compare=False, hash=False, repr=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_map", dict(self.entries))

    @property
    def domain(self) -> tuple[str, ...]:
        return tuple(d for d, _ in self.entries)

    @property
    def image(self) -> tuple[str, ...]:
        return tuple(sorted((i for _, i in self.entries), key=word_key))

    @cached_property
    def inverse_map(self) -> dict[str, str]:
        return {i: d for d, i in self.entries}

    @cached_property
    def depth(self) -> int:
        """Length of the longest domain or image word."""
        return max(max(len(d), len(i)) for d, i in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.entries)

    def __call__(self, w: str) -> str | None:
        return apply(self, w)

    def __str__(self) -> str:
        return format_table(self)


def _collapse(mapping: dict[str, str]) -> dict[str, str]:
    """Merge sibling triples ``u{0,1,#} → v{0,1,#}`` until none remain."""
    pending = {d[:-1] for d in mapping if d}
    while pending:
        u = pending.pop()
        kids = [u + a for a in ALPHABET]
        if not all(k in mapping for k in kids):
            continue
        imgs = [mapping[k] for k in kids]
        v = imgs[0][:-1]
        if all(img and img[:-1] == v and img[-1] == a for img, a in zip(imgs, ALPHABET)):
            for k in kids:
                del mapping[k]
            mapping[u] = v
            if u:
                pending.add(u[:-1])
    return mapping


def _canonical(mapping: dict[str, str]) -> TableElement:
    mapping = _collapse(mapping)
    return TableElement(tuple(sorted(mapping.items(), key=lambda p: word_key(p[0]))))


def make_table(pairs: Iterable[Pair]) -> TableElement:
    """Validate a table and return its canonical (maximally extended) form."""
    pairs = list(pairs)
    doms = [d for d, _ in pairs]
    imgs = [i for _, i in pairs]
    if len(set(doms)) != len(doms) or len(set(imgs)) != len(imgs):
        raise NotBijective("a domain or image word occurs twice")
    if not is_maximal_prefix_code(doms):
        raise NotACode("domain column is not a maximal prefix code")
    if not is_maximal_prefix_code(imgs):
        raise NotACode("image column is not a maximal prefix code")
    return _canonical(dict(pairs))


def identity() -> TableElement:
    return TableElement((("", ""),))


IDENTITY = identity()


def is_identity(phi: TableElement) -> bool:
    return phi.entries == IDENTITY.entries


def _lookup(mapping: dict[str, str], w: str, depth: int) -> tuple[str, str] | None:
    for k in range(min(len(w), depth) + 1):
        p = w[:k]
        if p in mapping:
            return p, mapping[p]
    return None


def apply(phi: TableElement, w: str) -> str | None:
    """Apply *phi* to *w*; ``None`` when no domain word is a prefix of *w*."""
    hit = _lookup(phi._map, w, phi.depth)
    if hit is None:
        return None
    p, q = hit
    return q + w[len(p):]


def apply_inverse(phi: TableElement, w: str) -> str | None:
    hit = _lookup(phi.inverse_map, w, phi.depth)
    if hit is None:
        return None
    q, p = hit
    return p + w[len(q):]


def compose(phi: TableElement, psi: TableElement) -> TableElement:
    """The product ``φ∘ψ`` (``ψ`` applied first), maximally extended."""
    out: dict[str, str] = {}
    fmap, fdepth = phi._map, phi.depth
    work = list(psi.entries)
    while work:
        x, y = work.pop()
        hit = _lookup(fmap, y, fdepth)
        if hit is not None:
            p, q = hit
            out[x] = q + y[len(p):]
        else:
            work.extend((x + a, y + a) for a in ALPHABET)
    return _canonical(out)


def compose_all(elements: Iterable[TableElement]) -> TableElement:
    """Compose in written order: ``compose_all([a, b, c]) = a∘b∘c``."""
    result = IDENTITY
    for e in reversed(list(elements)):
        result = compose(e, result)
    return result


def invert(phi: TableElement) -> TableElement:
    return TableElement(tuple(sorted(((i, d) for d, i in phi.entries), key=lambda p: word_key(p[0]))))


def equals(phi: TableElement, psi: TableElement) -> bool:
    return phi.entries == psi.entries


def table_size(phi: TableElement) -> int:
    return len(phi.entries)


def refine(phi: TableElement, depth: int) -> list[Pair]:
    """Split entries until every bit-only domain and image word has length ≥ *depth*.

    Entries ending in ``#`` are left alone.  The result describes the same
    element by a (non-canonical) larger table.
    """
    out: list[Pair] = []
    work = list(phi.entries)
    while work:
        x, y = work.pop()
        if "#" not in x and "#" not in y and (len(x) < depth or len(y) < depth):
            work.extend((x + a, y + a) for a in ALPHABET)
        else:
            out.append((x, y))
    return sorted(out, key=lambda p: word_key(p[0]))


class GroupTag(enum.Enum):
    G31 = "G31"
    G31_01 = "G31_01"
    G31_01_SHARP = "G31_01_SHARP"
    G31_MOD3 = "G31_MOD3"
    G31_MOD3_01 = "G31_MOD3_01"
    G31_MOD3_01_SHARP = "G31_MOD3_01_SHARP"


def member_of(phi: TableElement, tag: GroupTag) -> bool:
    """Decide membership of *phi* in the subgroup named by *tag* from its table shape."""
    if tag is GroupTag.G31:
        return True
    if tag is GroupTag.G31_MOD3:
        return all(len(x) % 3 == len(y) % 3 for x, y in phi.entries)
    bit_preserving = all(is_bit_word(x) == is_bit_word(y) for x, y in phi.entries)
    if not bit_preserving:
        return False
    if tag in (GroupTag.G31_01_SHARP, GroupTag.G31_MOD3_01_SHARP):
        if not (is_endmarker_code(phi.domain) and is_endmarker_code(phi.image)):
            return False
    if tag in (GroupTag.G31_MOD3_01, GroupTag.G31_MOD3_01_SHARP):
        return all(len(x) % 3 == len(y) % 3 for x, y in phi.entries if is_bit_word(x))
    return True


class StabMode(enum.Enum):
    PSTAB = "pstab"
    TSTAB = "tstab"
    PFIX = "pfix"
    TFIX = "tfix"


def _in_ideal(w: str, gens: tuple[str, ...]) -> bool:
    return any(w.startswith(s) for s in gens)


def _refine_against(phi: TableElement, gens: tuple[str, ...]) -> list[Pair]:
    out: list[Pair] = []
    work = list(phi.entries)
    while work:
        x, y = work.pop()
        if any(len(s) > len(x) and s.startswith(x) for s in gens) or any(
            len(s) > len(y) and s.startswith(y) for s in gens
        ):
            work.extend((x + a, y + a) for a in ALPHABET)
        else:
            out.append((x, y))
    return out


def stab_fix_predicate(phi: TableElement, ideal: Iterable[str], mode: StabMode) -> bool:
    """Stabilizer / fixator predicates for the right ideal generated by *ideal*."""
    gens = tuple(ideal)
    rows = _refine_against(phi, gens)
    if mode in (StabMode.PSTAB, StabMode.TSTAB):
        ok = all(_in_ideal(x, gens) == _in_ideal(y, gens) for x, y in rows)
    else:
        ok = all(x == y for x, y in rows if _in_ideal(x, gens) or _in_ideal(y, gens))
    if ok and mode in (StabMode.TSTAB, StabMode.TFIX):
        doms = [x for x, _ in rows]
        imgs = [y for _, y in rows]
        ok = all(any(s.startswith(d) for d in doms) and any(s.startswith(i) for i in imgs) for s in gens)
    return ok


def noncomparable_witness(phi: TableElement) -> Pair | None:
    """First canonical entry whose domain and image words are prefix-incomparable."""
    for x, y in phi.entries:
        if not comparable(x, y):
            return x, y
    if is_identity(phi):
        return None
    # a non-identity element always has such an entry after enough refinement
    for x, y in refine(phi, phi.depth + 3):
        if not comparable(x, y):
            return x, y
    raise AssertionError("non-identity table without an incomparable entry")


def format_table(phi: TableElement) -> str:
    return "".join(f"{format_word(d)} -> {format_word(i)}\n" for d, i in phi.entries)


def parse_table(text: str) -> TableElement:
    """Parse ``dom -> img`` lines; lines without an arrow starting with ``#`` are comments."""
    pairs: list[Pair] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if "->" not in line:
            if line.startswith("#"):
                continue
            raise ParseError(f"line {lineno}: expected 'dom -> img'")
        left, right = (part.strip() for part in line.split("->", 1))
        try:
            pairs.append((parse_word(left), parse_word(right)))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if not pairs:
        raise ParseError("empty table")
    return make_table(pairs)


def swap_table(a: str, b: str) -> TableElement:
    """Element exchanging the cones below two incomparable words *a* and *b*.

    Both words must be bit words or both must end in ``#``.  The domain code
    is the smallest code of endmarker shape containing *a* and *b*; every
    other code word is fixed.
    """
    if comparable(a, b):
        raise ValueError("swap_table needs prefix-incomparable words")
    inner: set[str] = set()
    for w in (a, b):
        stem = w[:-1] if w.endswith("#") else w
        bound = len(stem) + 1 if w.endswith("#") else len(stem)
        inner.update(stem[:k] for k in range(bound))
    code = {p + c for p in inner for c in "01" if p + c not in inner}
    code |= {p + "#" for p in inner}
    if not inner:
        code = {""}
    if a not in code or b not in code:
        raise ValueError("words do not fit into an endmarker-shaped code")
    mapping = {w: w for w in code}
    mapping[a], mapping[b] = b, a
    return make_table(mapping.items())
