"""Symbolic evaluation of generator words on whole families of inputs at once.

A state is the bit block of an input ``x#``: a list whose entries are the
constants ``'0'`` / ``'1'`` or integer variables standing for unknown bits;
the ``#`` after the block is implicit.  Transpositions and kappa letters
permute positions without looking at the bits, so variables just move.
Table tokens look at a prefix of the state; when the lookup needs the value
of a variable the evaluation forks into one branch per bit value.  A search
over all inputs of a fixed length therefore costs one run per *distinct
control path* instead of one run per input.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

from .genwords import Kind, Token, eval_word, gadget_table, kappa_letters, tau_short_map
from .kappa import token_position_map
from .tables import TableElement

Symbol = str | int


@lru_cache(maxsize=None)
def _trie(phi: TableElement) -> dict:
    root: dict = {}
    for p, q in phi.entries:
        node = root
        for a in p:
            node = node.setdefault(a, {})
        node[None] = q
    return root


@dataclass
class Probe:
    """Outcome of probing every input of one length."""

    witness: str | None
    max_touched: int
    irregular: bool


def _letters_for(token: Token) -> tuple:
    return kappa_letters(token)


def probe(word: Sequence[Token], prefix: str, length: int) -> Probe:
    """Evaluate *word* on every ``prefix·u·#`` with ``|u| = length``.

    Returns the first moved input found (inputs whose image is undefined
    cannot occur: every token is total on words containing ``#``), the
    largest state position any token inspected or moved, and whether a
    length-dependent operation (a kappa letter or a transposition on a too
    short block) took place.
    """
    ops = list(reversed(word))
    base = len(prefix)
    init: list[Symbol] = list(prefix) + list(range(length))
    max_touched = -1
    irregular = False
    stack: list[tuple[int, list[Symbol], dict[int, str]]] = [(0, list(init), {})]
    while stack:
        k, state, assign = stack.pop()
        forked = False
        while k < len(ops):
            t = ops[k]
            size = len(state)
            if t.kind is Kind.TAU:
                i = t.index
                if size >= i + 2:
                    state[i], state[i + 1] = state[i + 1], state[i]
                    if i + 1 > max_touched:
                        max_touched = i + 1
                else:
                    irregular = True
                    max_touched = max(max_touched, size)
                    if i >= 2:
                        src = tau_short_map(i, size)
                        state = [state[s] for s in src]
            elif t.is_kappa:
                irregular = True
                max_touched = max(max_touched, size)
                for idx, sign in reversed(_letters_for(t)):
                    src = token_position_map(idx, sign, len(state))
                    state = [state[s] for s in src]
            else:
                node = _trie(gadget_table(t))
                pos = 0
                while None not in node:
                    sym: Symbol = state[pos] if pos < size else "#"
                    if isinstance(sym, int):
                        for bit in "10":
                            branch = list(state)
                            branch[pos] = bit
                            sub = dict(assign)
                            sub[sym] = bit
                            stack.append((k, branch, sub))
                        forked = True
                        break
                    node = node[sym]
                    pos += 1
                if forked:
                    break
                q = node[None]
                if pos - 1 > max_touched:
                    max_touched = pos - 1
                if q.endswith("#"):
                    state = list(q[:-1])
                else:
                    state = list(q) + state[pos:]
            k += 1
        if forked:
            continue
        witness = _compare(init, state, assign, base, prefix)
        if witness is not None:
            if eval_word(word, witness) == witness:
                raise AssertionError(f"symbolic witness {witness} failed re-verification")
            return Probe(witness, max_touched, irregular)
    return Probe(None, max_touched, irregular)


def _compare(init: list[Symbol], final: list[Symbol], assign: dict[int, str], base: int, prefix: str) -> str | None:
    """A concrete moved input for this branch, or ``None`` if the branch is fixed."""
    want = [assign.get(s, s) if isinstance(s, int) else s for s in init]
    choice = dict(assign)
    moved = len(want) != len(final)
    if not moved:
        for a, b in zip(want, final):
            if a == b:
                continue
            moved = True
            if isinstance(a, int) and isinstance(b, int):
                choice.setdefault(a, "0")
                choice.setdefault(b, "1" if choice[a] == "0" else "0")
            elif isinstance(a, int):
                choice.setdefault(a, "1" if b == "0" else "0")
            elif isinstance(b, int):
                choice.setdefault(b, "1" if a == "0" else "0")
            break
    if not moved:
        return None
    bits = [choice.get(s, "0") if isinstance(s, int) else s for s in init[base:]]
    return prefix + "".join(bits) + "#"
