"""Bounded-size generating sets and factorization by row insertion.

An element of ``G_{3,1}(0,1;#)`` is written as two aligned rows, the
domain code and the image code.  If it is too large to be a generator we
insert intermediate rows — further endmarker-shaped codes, column-aligned
with the first two — chosen so that every pair of consecutive rows, once
maximally extended, collapses at least one sibling triple and is therefore
strictly smaller.  Recursing on consecutive pairs ends at generators.

The row inserted between the domain and the image carries a triple
``u0, u1, u#`` under the columns of a domain triple ``x0, x1, x#`` and a
triple ``v0, v1, v#`` under the columns of an image triple.  When those
columns overlap, one or two extra rows route through free columns.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .codes import (
    complete_with_endmarkers,
    endmarker_decompose,
    inner_leaves,
    is_bit_word,
    rearrange_leaves_mod3,
    sort_words,
    word_key,
)
from .errors import HypothesisFail, NotInGroup, SizeError, UnsupportedTag
from .tables import GroupTag, TableElement, compose_all, format_table, invert, is_identity, make_table, member_of

MOD3_THRESHOLD = 63
ENUMERATION_CAP = 9
SUPPORTED_TAGS = (GroupTag.G31_01_SHARP, GroupTag.G31_MOD3_01_SHARP)

Triple = tuple[int, int, int]


@dataclass
class GeneratorSet:
    """Generators with stable integer ids; :meth:`intern` adds new ones."""

    tag: GroupTag
    bound: int
    members: list[TableElement] = field(default_factory=list)
    inverse_of: list[int] = field(default_factory=list)
    _index: dict[tuple, int] = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, i: int) -> TableElement:
        return self.members[i]

    def id_of(self, phi: TableElement) -> int | None:
        return self._index.get(phi.entries)

    def _add(self, phi: TableElement) -> int:
        i = len(self.members)
        self.members.append(phi)
        self.inverse_of.append(-1)
        self._index[phi.entries] = i
        return i

    def intern(self, phi: TableElement) -> int:
        """Id of *phi*, adding it (and its inverse) if it is new."""
        found = self.id_of(phi)
        if found is not None:
            return found
        i = self._add(phi)
        inv = invert(phi)
        j = self.id_of(inv)
        if j is None:
            j = self._add(inv)
        self.inverse_of[i], self.inverse_of[j] = j, i
        return i

    def compose_ids(self, ids: Sequence[int]) -> TableElement:
        return compose_all(self.members[i] for i in ids)

    def to_text(self) -> str:
        out = [f"# tag {self.tag.value} bound {self.bound}\n"]
        for i, phi in enumerate(self.members):
            out.append(f"# generator {i} inverse {self.inverse_of[i]}\n")
            out.append(format_table(phi))
        return "".join(out)


def binary_codes(leaves: int) -> list[tuple[str, ...]]:
    """All maximal prefix codes over ``{0,1}`` with *leaves* members."""
    if leaves < 1:
        return []
    if leaves == 1:
        return [("",)]
    out = []
    for left in range(1, leaves):
        for a in binary_codes(left):
            for b in binary_codes(leaves - left):
                out.append(sort_words(["0" + w for w in a] + ["1" + w for w in b]))
    return out


def _shape_tables(tag: GroupTag, leaves: int) -> Iterator[TableElement]:
    codes = binary_codes(leaves)
    for dom in codes:
        dom_sharp = sorted(complete_with_endmarkers(dom) if leaves > 1 else (), key=word_key)
        dom_sharp = [w for w in dom_sharp if w.endswith("#")]
        for img in codes:
            img_sharp = [w for w in (complete_with_endmarkers(img) if leaves > 1 else ()) if w.endswith("#")]
            for bits in permutations(img):
                if tag is GroupTag.G31_MOD3_01_SHARP and any(
                    len(a) % 3 != len(b) % 3 for a, b in zip(dom, bits)
                ):
                    continue
                for sharps in permutations(img_sharp):
                    yield make_table(list(zip(dom, bits)) + list(zip(dom_sharp, sharps)))


def enumerate_generators(tag: GroupTag, bound: int) -> GeneratorSet:
    """Every element of the tagged subgroup with table-size at most *bound*."""
    if tag not in SUPPORTED_TAGS:
        raise UnsupportedTag(f"no generator enumeration for {tag.value}")
    if bound < 1:
        raise SizeError("bound must be at least 1")
    if bound > ENUMERATION_CAP:
        raise SizeError(f"enumeration is limited to table-size {ENUMERATION_CAP}")
    found: dict[tuple, TableElement] = {}
    for leaves in range(1, (bound + 1) // 2 + 1):
        for phi in _shape_tables(tag, leaves):
            if len(phi) <= bound:
                found.setdefault(phi.entries, phi)
    gens = GeneratorSet(tag, bound)
    for phi in sorted(found.values(), key=lambda p: (len(p), [(word_key(a), word_key(b)) for a, b in p.entries])):
        gens.intern(phi)
    return gens


@dataclass
class FactorTrace:
    """Largest table-size among all row-pair elements met during factorization."""

    max_intermediate: int = 0
    pieces: int = 0


def _residue(words: Sequence[str], col: int) -> int:
    return len(words[col]) % 3


def _triple(row: Sequence[str], stem: str) -> Triple:
    col = {w: j for j, w in enumerate(row)}
    return col[stem + "0"], col[stem + "1"], col[stem + "#"]


def _caterpillar(leaves: int) -> tuple[str, ...]:
    """Binary code whose inner tree is the path ``ε, 1, …, 1^k`` plus ``0`` (``k = leaves - 3``)."""
    k = leaves - 3
    words = ["00", "01"] + ["1" * j + "0" for j in range(1, k + 1)] + ["1" * (k + 1)]
    return sort_words(words)


def _fill_row(
    dom: Sequence[str], bits_code: Sequence[str], pinned: Sequence[tuple[Triple, str]], mod3: bool
) -> list[str]:
    """Lay the endmarker completion of *bits_code* under the columns of *dom*.

    Each pinned ``(triple, stem)`` puts ``stem0, stem1, stem#`` under the
    given columns; the remaining words fill the remaining columns of the
    same kind (and, with *mod3*, the same length residue) in canonical
    order.
    """
    code = complete_with_endmarkers(bits_code)
    row: list[str | None] = [None] * len(dom)
    used: set[str] = set()
    for (c0, c1, cs), stem in pinned:
        for c, w in ((c0, stem + "0"), (c1, stem + "1"), (cs, stem + "#")):
            row[c] = w
            used.add(w)
    rest = [w for w in code if w not in used]
    free_cols = [j for j in range(len(dom)) if row[j] is None]

    def key(word: str) -> tuple:
        return (is_bit_word(word), len(word) % 3 if mod3 and is_bit_word(word) else 0)

    buckets: dict[tuple, deque[str]] = {}
    for w in rest:
        buckets.setdefault(key(w), deque()).append(w)
    for j in free_cols:
        bucket = buckets.get(key(dom[j]))
        if not bucket:
            raise HypothesisFail("row words do not line up with the columns")
        row[j] = bucket.popleft()
    return row  # type: ignore[return-value]


def _build_row(dom: Sequence[str], img: Sequence[str], a: Triple, b: Triple, mod3: bool) -> list[str]:
    bit_count = sum(1 for w in dom if is_bit_word(w))
    if not mod3:
        code = _caterpillar(bit_count)
        return _fill_row(dom, code, [(a, "0"), (b, "1" * (bit_count - 3))], mod3)
    ra = (_residue(dom, a[0]) - 1) % 3
    rb = (_residue(dom, b[0]) - 1) % 3
    last: HypothesisFail | None = None
    for source in (dom, img):
        q1 = [w for w in source if is_bit_word(w)]
        try:
            code = rearrange_leaves_mod3(q1, [ra, rb])
        except HypothesisFail as exc:
            last = exc
            continue
        leaves = inner_leaves(code)
        u = next(v for v in leaves if len(v) % 3 == ra)
        v = next(w for w in leaves if len(w) % 3 == rb and w != u)
        return _fill_row(dom, code, [(a, u), (b, v)], mod3)
    raise last or HypothesisFail("no row with the required inner leaves")


def _free_triples(dom: Sequence[str], taken: set[int], mod3: bool) -> Iterator[Triple]:
    bits = [j for j, w in enumerate(dom) if is_bit_word(w) and j not in taken]
    sharps = [j for j, w in enumerate(dom) if not is_bit_word(w) and j not in taken]
    for b0, b1 in combinations(bits, 2):
        if mod3 and _residue(dom, b0) != _residue(dom, b1):
            continue
        for s in sharps:
            yield b0, b1, s


def _route(dom: Sequence[str], tx: Triple, ty: Triple, mod3: bool) -> list[Triple]:
    """Chain of pairwise-disjoint consecutive triples from *tx* to *ty* (at most 4 long)."""
    if not set(tx) & set(ty):
        return [tx, ty]
    for t in _free_triples(dom, set(tx) | set(ty), mod3):
        return [tx, t, ty]
    for t1 in _free_triples(dom, set(tx), mod3):
        for t2 in _free_triples(dom, set(t1) | set(ty), mod3):
            return [tx, t1, t2, ty]
    raise HypothesisFail("no chain of disjoint column triples")


def _insert_rows(dom: Sequence[str], img: Sequence[str], mod3: bool) -> list[list[str]]:
    dom_bits, _ = endmarker_decompose(dom)
    img_bits, _ = endmarker_decompose(img)
    x = inner_leaves(dom_bits)[0]
    y = inner_leaves(img_bits)[0]
    chain = _route(dom, _triple(dom, x), _triple(img, y), mod3)
    return [_build_row(dom, img, a, b, mod3) for a, b in zip(chain, chain[1:])]


def factor_traced(phi: TableElement, gens: GeneratorSet) -> tuple[list[int], FactorTrace]:
    """Factor *phi* over *gens*; ids are in written order (leftmost applied last)."""
    if not member_of(phi, gens.tag):
        raise NotInGroup(f"element is not in {gens.tag.value}")
    mod3 = gens.tag is GroupTag.G31_MOD3_01_SHARP
    trace = FactorTrace(max_intermediate=len(phi))

    def base(psi: TableElement) -> int | None:
        found = gens.id_of(psi)
        if found is not None:
            return found
        if mod3 and len(psi) < MOD3_THRESHOLD:
            return gens.intern(psi)
        if not mod3 and len(psi) <= gens.bound:
            raise NotInGroup("generator set does not contain all elements up to its bound")
        return None

    def run(psi: TableElement) -> list[int]:
        if is_identity(psi):
            return []
        found = base(psi)
        if found is not None:
            return [found]
        dom = [a for a, _ in psi.entries]
        img = [b for _, b in psi.entries]
        rows = [dom, *_insert_rows(dom, img, mod3), img]
        pieces = [make_table(zip(r, s)) for r, s in zip(rows, rows[1:])]
        for p in pieces:
            trace.pieces += 1
            trace.max_intermediate = max(trace.max_intermediate, len(p))
            if len(p) >= len(psi) or not member_of(p, gens.tag):
                raise AssertionError("row insertion did not shrink the table")
        out: list[int] = []
        for p in reversed(pieces):
            out += run(p)
        return out

    return run(phi), trace


def factor(phi: TableElement, gens: GeneratorSet) -> list[int]:
    return factor_traced(phi, gens)[0]
