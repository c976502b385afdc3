"""Word-problem deciders, the fixator test and circuit equivalence.

Three deciders for generator words:

* :func:`wp_table` multiplies the tables out (kappa-free words only);
* :func:`wp_normal_form` rewrites a word over the table generators and the
  stable letter ``K321`` into ``g·K321^e`` by pushing every ``K321`` to
  the right through conjugation;
* :func:`wp_bounded_witness` searches for a moved point ``x#`` with ``|x|``
  up to the linear bound ``3N + 1`` that suffices for words over the table
  generators and kappa letters.

The fixator ``pFix(0·A*)`` is tested directly on tables and, for a table
``g``, is certified by an element ``h`` that fixes ``{1,#}·A*`` pointwise
but does not commute with ``g``.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .circuits import Circuit, compile_strong, truth_table
from .codes import comparable
from .errors import ArityMismatch, ComparableInput, KappaPresent, NotInSubgroup, PreconditionError
from .genwords import (
    GenWord,
    Kind,
    Token,
    code_depth,
    has_kappa,
    invert_word,
    kappa_letters,
    materialize,
    token_table,
)
from .kappa import K321 as K321_WORD
from .kappa import KappaWord, kappa_conjugate, kappa_invert
from .symbolic import probe
from .tables import (
    IDENTITY,
    GroupTag,
    StabMode,
    TableElement,
    _refine_against,
    compose,
    is_identity,
    member_of,
    refine,
    stab_fix_predicate,
    swap_table,
)

DEFAULT_ELL = 4
DEFAULT_CAP = 21


def wp_table(word: Iterable[Token]) -> bool:
    """True iff a kappa-free word multiplies out to the identity table."""
    word = tuple(word)
    if has_kappa(word):
        raise KappaPresent("wp_table needs a kappa-free word")
    return is_identity(materialize(word))


def wp_normal_form(word: Iterable[Token]) -> tuple[TableElement, int]:
    """``(g, e)`` with ``word = g·K321^e``, scanning from the right."""
    g = IDENTITY
    e = 0
    for t in reversed(tuple(word)):
        if t.kind is Kind.K321:
            g = kappa_conjugate(g, kappa_letters(t))
            e += t.sign
        elif t.is_kappa:
            raise NotInSubgroup(f"letter {t} is outside the table generators and K321")
        else:
            a = token_table(t)
            if not member_of(a, GroupTag.G31_MOD3_01_SHARP):  # type: ignore[arg-type]
                raise NotInSubgroup(f"token {t} is outside the mod-3 endmarker subgroup")
            g = compose(a, g)  # type: ignore[arg-type]
    return g, e


def fold_kappa(word: Iterable[Token]) -> tuple[TableElement, KappaWord]:
    """``(g, K)`` with ``word = g·K`` for words over table letters and any kappa letters.

    Same right-to-left scan as :func:`wp_normal_form`, but the kappa part
    is kept as a word instead of a single exponent.
    """
    g = IDENTITY
    kappa: list = []
    for t in reversed(tuple(word)):
        if t.is_kappa:
            letters = kappa_letters(t)
            g = kappa_conjugate(g, letters)
            kappa[:0] = letters
        else:
            a = token_table(t)
            if not member_of(a, GroupTag.G31_MOD3_01_SHARP):  # type: ignore[arg-type]
                raise NotInSubgroup(f"token {t} is outside the mod-3 endmarker subgroup")
            g = compose(a, g)  # type: ignore[arg-type]
    return g, tuple(kappa)


def _conjugation_cost(d: int) -> int:
    # depth added by conjugating with K321^d: about 6 per step for d > 0, 3 for d < 0
    return 6 * d if d > 0 else -3 * d


def wp_is_identity_normal_form(word: Iterable[Token]) -> bool:
    """Identity test through the semidirect-product normal form.

    The stable-letter exponent ``e`` is read off first; a non-zero ``e``
    settles the question.  Otherwise the table part is ``K^b·h·K^{-b}`` for
    any base ``b``, where ``h`` is the product of the table letters each
    conjugated by ``K321^{b-r}`` (``r`` the exponent to its right).  ``g``
    is the identity iff ``h`` is, and ``b`` is chosen to keep the
    conjugated letters shallow.
    """
    word = tuple(word)
    letters: list[tuple[Token, int]] = []
    r = 0
    for t in reversed(word):
        if t.kind is Kind.K321:
            r += t.sign
        elif t.is_kappa:
            raise NotInSubgroup(f"letter {t} is outside the table generators and K321")
        else:
            letters.append((t, r))
    if r != 0:
        return False
    if not letters:
        return True
    levels = [lv for _, lv in letters]
    base = min(
        range(min(levels), max(levels) + 1),
        key=lambda b: (max(_conjugation_cost(b - lv) for lv in levels), abs(b)),
    )
    h = IDENTITY
    for t, lv in letters:
        a = token_table(t)
        if not member_of(a, GroupTag.G31_MOD3_01_SHARP):  # type: ignore[arg-type]
            raise NotInSubgroup(f"token {t} is outside the mod-3 endmarker subgroup")
        d = base - lv
        conj = K321_WORD * d if d > 0 else kappa_invert(K321_WORD) * (-d)
        h = compose(kappa_conjugate(a, conj), h)  # type: ignore[arg-type]
    return is_identity(h)


@dataclass(frozen=True)
class WitnessConfig:
    ell: int = DEFAULT_ELL
    cap: int = DEFAULT_CAP

    def __post_init__(self) -> None:
        if self.ell < 1 or self.cap < 1:
            raise ValueError("ell and cap must be positive")


class VerdictKind(enum.Enum):
    IDENTITY_PROVEN = "identity-proven"
    NOT_IDENTITY = "not-identity"
    IDENTITY_UP_TO = "identity-up-to"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    witness: str | None = None
    length: int | None = None

    @property
    def is_identity(self) -> bool | None:
        if self.kind is VerdictKind.IDENTITY_UP_TO:
            return None
        return self.kind is VerdictKind.IDENTITY_PROVEN

    def __str__(self) -> str:
        if self.kind is VerdictKind.NOT_IDENTITY:
            return f"not-identity {self.witness}"
        if self.kind is VerdictKind.IDENTITY_UP_TO:
            return f"identity-up-to {self.length}"
        return "identity-proven"


def witness_bound(word: Iterable[Token], cfg: WitnessConfig = WitnessConfig()) -> int:
    """``L* = 3N + 1`` with ``N = ℓ·#(table letters) + 6·#(kappa letters)``."""
    word = tuple(word)
    tables = [t for t in word if not t.is_kappa]
    ell = max([cfg.ell] + [code_depth(t) for t in tables])
    kappas = sum(len(kappa_letters(t)) for t in word if t.is_kappa)
    n = ell * len(tables) + 6 * kappas
    return 3 * n + 1


def wp_bounded_witness(word: Iterable[Token], cfg: WitnessConfig = WitnessConfig()) -> Verdict:
    """Search all ``x#`` with ``|x| ≤ min(L*, cap)`` for a point the word moves.

    Inputs of one length are explored symbolically (see
    :mod:`thompson31.symbolic`); every reported witness is re-checked by
    direct evaluation.  Lengths are tried in increasing order, so the
    witness is a shortest one.
    """
    word = tuple(word)
    bound = witness_bound(word, cfg)
    top = min(bound, cfg.cap)
    for length in range(top + 1):
        found = probe(word, "", length).witness
        if found is not None:
            return Verdict(VerdictKind.NOT_IDENTITY, witness=found)
    if bound <= cfg.cap:
        return Verdict(VerdictKind.IDENTITY_PROVEN)
    return Verdict(VerdictKind.IDENTITY_UP_TO, length=cfg.cap)


ZERO_IDEAL = ("0",)
OUTSIDE_IDEAL = ("1", "#")


def is_pfix_zero(phi: TableElement) -> bool:
    """True iff *phi* fixes every point of ``0·{0,1,#}*`` where it is defined."""
    return stab_fix_predicate(phi, ZERO_IDEAL, StabMode.PFIX)


def _in_zero_region(w: str) -> bool:
    return w.startswith("0")


def build_separator(x: str, y: str) -> TableElement:
    """``h`` fixing ``{1,#}·A*`` pointwise and ``x`` (with ``x·0``), but moving ``y``.

    For a bit word ``y`` the cones ``y0`` and ``y1`` are exchanged.  For
    ``y = v#`` the point ``y`` is exchanged with ``v0#`` or ``v1#``,
    whichever is not comparable with *x*.
    """
    if comparable(x, y):
        raise ComparableInput(f"{x!r} and {y!r} are prefix-comparable")
    if not (_in_zero_region(x) and _in_zero_region(y)):
        raise PreconditionError("both words must lie in 0·A*")
    if "#" in y[:-1] or "#" in x[:-1]:
        raise PreconditionError("words must lie in {0,1}* or {0,1}*#")
    if not y.endswith("#"):
        return swap_table(y + "0", y + "1")
    v = y[:-1]
    # x is comparable with at most one of v0# and v1#
    z = v + "0" if not comparable(v + "0#", x) else v + "1"
    return swap_table(y, z + "#")


def _mover(x: str) -> TableElement:
    """An element of ``pFix({1,#}·A*)`` that moves the point *x* of ``0·A*``."""
    if x.endswith("#"):
        v = x[:-1]
        return swap_table(x, v + "0#")
    return swap_table(x + "0", x + "1")


def _rows(g: TableElement) -> Iterator[list[tuple[str, str]]]:
    yield list(g.entries)
    yield _refine_against(g, ZERO_IDEAL)
    for extra in range(1, 4):
        yield refine(g, g.depth + extra)


def _candidates(g: TableElement) -> Iterator[TableElement]:
    for rows in _rows(g):
        for x, y in rows:
            xin, yin = _in_zero_region(x), _in_zero_region(y)
            if xin and not yin:
                yield _mover(x)
            elif yin and not xin:
                yield _mover(y)
        for x, y in rows:
            if _in_zero_region(x) and _in_zero_region(y) and not comparable(x, y):
                yield build_separator(x, y)
                yield build_separator(y, x)


def find_noncommuting_witness(g: TableElement) -> TableElement | None:
    """``None`` iff ``g ∈ pFix(0·A*)``; otherwise some ``h ∈ pFix({1,#}·A*)`` with ``gh ≠ hg``."""
    if not member_of(g, GroupTag.G31_MOD3_01_SHARP):
        raise NotInSubgroup("commutation test needs a mod-3 endmarker-shaped table")
    if is_pfix_zero(g):
        return None
    for h in _candidates(g):
        if compose(g, h) != compose(h, g):
            return h
    raise AssertionError("no separating element found for an element outside pFix(0·A*)")


class EquivMode(enum.Enum):
    ORACLE = "oracle"
    GROUP = "group"
    BOTH = "both"


@dataclass(frozen=True)
class EquivReport:
    equivalent: bool
    oracle_input: str | None = None
    group_witness: str | None = None


def _bits(x: int, m: int) -> str:
    return format(x, f"0{m}b") if m else ""


def _oracle(c1: Circuit, c2: Circuit) -> str | None:
    for x, (a, b) in enumerate(zip(truth_table(c1), truth_table(c2))):
        if a != b:
            return _bits(x, c1.m)
    return None


def fixes_zero_region(word: GenWord, max_length: int | None = None) -> str | None:
    """A point of ``0·{0,1}*·#`` moved by *word*, or ``None`` if it fixes ``0·A*``.

    Inputs ``0·u·#`` are probed symbolically for ``|u| = 0, 1, 2, …`` until
    a length is reached at which no run inspected the last bit of ``u``
    (nor the ``#``) and no length-dependent operation occurred; beyond it
    every longer input follows the same runs on an untouched tail.
    """
    if max_length is None:
        max_length = 3 * (max((t.index for t in word if t.kind is Kind.TAU), default=0) + 2) + 60
    for k in range(max_length + 1):
        result = probe(word, "0", k)
        if result.witness is not None:
            return result.witness
        if not result.irregular and result.max_touched < k:
            return None
    raise AssertionError("zero-region probe did not stabilise")


def circuit_equiv_report(c1: Circuit, c2: Circuit, mode: EquivMode = EquivMode.BOTH) -> EquivReport:
    if c1.m != c2.m or c1.n != c2.n:
        raise ArityMismatch(f"interfaces differ: ({c1.m},{c1.n}) vs ({c2.m},{c2.n})")
    oracle_input = group_witness = None
    oracle_ok = group_ok = None
    if mode in (EquivMode.ORACLE, EquivMode.BOTH):
        oracle_input = _oracle(c1, c2)
        oracle_ok = oracle_input is None
    if mode in (EquivMode.GROUP, EquivMode.BOTH):
        word = invert_word(compile_strong(c2)) + compile_strong(c1)
        group_witness = fixes_zero_region(word)
        group_ok = group_witness is None
    if mode is EquivMode.BOTH and oracle_ok != group_ok:
        raise AssertionError("oracle and group verdicts disagree")
    verdict = oracle_ok if oracle_ok is not None else group_ok
    return EquivReport(bool(verdict), oracle_input, group_witness)


def circuit_equiv(c1: Circuit, c2: Circuit, mode: EquivMode = EquivMode.BOTH) -> bool:
    """Decide ``f_{C1} = f_{C2}`` by truth tables, by the fixator test, or both."""
    return circuit_equiv_report(c1, c2, mode).equivalent
