"""Acyclic boolean circuits and their compilation into generator words.

Circuits use NOT, AND, OR (fan-in at most two), FORK (explicit fan-out) and
ID gates.  Every source (an input ``in.k``, a gate ``g`` or a fork half
``f.0`` / ``f.1``) feeds exactly one consumer.

The compiler works on a *layout*: the list of labels carried by the bit
positions of ``0·x·s·#``, where position 0 holds the leading ``0``.  Gates
are evaluated in the first three positions by the gadget tables, variables
are moved there and back with adjacent transpositions, and fresh zeros are
obtained from ``F4`` (``0w ↦ 0000w``).  Every emitted ``TAU(k)`` satisfies
``k + 1 < len(layout)``, so all transpositions act on long arguments and the
compiled word never looks at the suffix ``s``.
"""

from __future__ import annotations

import enum
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import ArityError, CycleError, FanoutError, NotDepthOne, ParseError
from .genwords import AND, F4, NOT, OR, TAU, GenWord, Token, invert_word, transposition_word


class GateKind(enum.Enum):
    NOT = "NOT"
    AND = "AND"
    OR = "OR"
    FORK = "FORK"
    ID = "ID"

    @property
    def arity(self) -> int:
        return 2 if self in (GateKind.AND, GateKind.OR) else 1


@dataclass(frozen=True)
class Gate:
    id: str
    kind: GateKind
    sources: tuple[str, ...]

    @property
    def produces(self) -> tuple[str, ...]:
        if self.kind is GateKind.FORK:
            return (f"{self.id}.0", f"{self.id}.1")
        return (self.id,)


def input_ref(k: int) -> str:
    return f"in.{k}"


@dataclass(frozen=True)
class Circuit:
    """A validated circuit; gates are stored in topological order."""

    m: int
    gates: tuple[Gate, ...]
    outputs: tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.outputs)

    @property
    def size(self) -> int:
        """``k1 + 2·k2 + n`` with ``k1`` one-input gates and ``k2`` two-input gates."""
        k1 = sum(1 for g in self.gates if g.kind.arity == 1)
        k2 = sum(1 for g in self.gates if g.kind.arity == 2)
        return k1 + 2 * k2 + self.n

    @cached_property
    def producer(self) -> dict[str, Gate]:
        return {ref: g for g in self.gates for ref in g.produces}


def make_circuit(m: int, gates: Iterable[Gate], outputs: Iterable[str]) -> Circuit:
    """Validate references, arities, single use and acyclicity."""
    gates = list(gates)
    outputs = tuple(outputs)
    if m < 1 or not outputs:
        raise ParseError("a circuit needs at least one input and one output")
    ids = [g.id for g in gates]
    if len(set(ids)) != len(ids):
        raise ParseError("duplicate gate id")
    for g in gates:
        if not g.id or "." in g.id or g.id == "in":
            raise ParseError(f"bad gate id {g.id!r}")
        if len(g.sources) != g.kind.arity:
            raise ParseError(f"gate {g.id}: {g.kind.value} takes {g.kind.arity} source(s)")
    producer: dict[str, Gate | None] = {input_ref(k): None for k in range(m)}
    for g in gates:
        for ref in g.produces:
            producer[ref] = g
    uses: dict[str, int] = {ref: 0 for ref in producer}
    for ref in [s for g in gates for s in g.sources] + list(outputs):
        if ref not in producer:
            raise ParseError(f"unknown source {ref!r}")
        uses[ref] += 1
    bad = sorted(ref for ref, k in uses.items() if k != 1)
    if bad:
        raise FanoutError(f"sources not used exactly once: {', '.join(bad)}")
    order: list[Gate] = []
    state: dict[str, int] = {}

    def visit(g: Gate) -> None:
        stack = [(g, iter(g.sources))]
        state[g.id] = 1
        while stack:
            gate, it = stack[-1]
            for ref in it:
                dep = producer[ref]
                if dep is None:
                    continue
                mark = state.get(dep.id, 0)
                if mark == 1:
                    raise CycleError(f"cycle through gate {dep.id}")
                if mark == 0:
                    state[dep.id] = 1
                    stack.append((dep, iter(dep.sources)))
                    break
            else:
                stack.pop()
                state[gate.id] = 2
                order.append(gate)

    for g in gates:
        if state.get(g.id, 0) == 0:
            visit(g)
    return Circuit(m, tuple(order), outputs)


_GATE_LINE = re.compile(r"^gate\s+(\S+)\s+(\S+)((?:\s+\S+)*)$")


def parse_circuit(text: str) -> Circuit:
    """Parse the line format ``inputs <m>`` / ``gate <id> <KIND> <src>...`` / ``outputs <src>...``."""
    m: int | None = None
    gates: list[Gate] = []
    outputs: list[str] | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head = line.split()[0].lower()
        if head == "inputs":
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(f"line {lineno}: expected 'inputs <m>'")
            m = int(parts[1])
        elif head == "gate":
            match = _GATE_LINE.match(line)
            if not match:
                raise ParseError(f"line {lineno}: expected 'gate <id> <KIND> <src>...'")
            try:
                kind = GateKind(match.group(2).upper())
            except ValueError:
                raise ParseError(f"line {lineno}: unknown gate kind {match.group(2)!r}") from None
            gates.append(Gate(match.group(1), kind, tuple(match.group(3).split())))
        elif head == "outputs":
            outputs = line.split()[1:]
        else:
            raise ParseError(f"line {lineno}: unknown directive {head!r}")
    if m is None or outputs is None:
        raise ParseError("missing 'inputs' or 'outputs' line")
    return make_circuit(m, gates, outputs)


def format_circuit(c: Circuit) -> str:
    lines = [f"inputs {c.m}"]
    lines += [f"gate {g.id} {g.kind.value} {' '.join(g.sources)}" for g in c.gates]
    lines.append("outputs " + " ".join(c.outputs))
    return "\n".join(lines) + "\n"


def eval_circuit(c: Circuit, bits: Sequence[int]) -> tuple[int, ...]:
    """Evaluate gate by gate in topological order."""
    if len(bits) != c.m:
        raise ArityError(f"circuit has {c.m} inputs, got {len(bits)} bits")
    val: dict[str, int] = {input_ref(k): int(b) & 1 for k, b in enumerate(bits)}
    for g in c.gates:
        args = [val[s] for s in g.sources]
        if g.kind is GateKind.NOT:
            val[g.id] = 1 - args[0]
        elif g.kind is GateKind.AND:
            val[g.id] = args[0] & args[1]
        elif g.kind is GateKind.OR:
            val[g.id] = args[0] | args[1]
        elif g.kind is GateKind.ID:
            val[g.id] = args[0]
        else:
            val[f"{g.id}.0"] = val[f"{g.id}.1"] = args[0]
    return tuple(val[o] for o in c.outputs)


def truth_table(c: Circuit) -> list[tuple[int, ...]]:
    return [eval_circuit(c, [(x >> (c.m - 1 - k)) & 1 for k in range(c.m)]) for x in range(1 << c.m)]


@dataclass(frozen=True)
class Slice:
    """One layer: reads ``inputs`` (the previous layer) and produces ``outputs``."""

    inputs: tuple[str, ...]
    gates: tuple[Gate, ...]
    outputs: tuple[str, ...]


@dataclass(frozen=True)
class LayeredCircuit:
    circuit: Circuit
    slices: tuple[Slice, ...]
    identities: int

    @property
    def depth(self) -> int:
        return len(self.slices)

    @property
    def size(self) -> int:
        return self.circuit.size


def strictify(c: Circuit) -> LayeredCircuit:
    """Insert ID gates so every gate reads only the layer directly below it."""
    level: dict[str, int] = {input_ref(k): 0 for k in range(c.m)}
    for g in c.gates:
        lv = 1 + max(level[s] for s in g.sources)
        for ref in g.produces:
            level[ref] = lv
    depth = max([1] + [level[o] for o in c.outputs])
    taken = {g.id for g in c.gates}
    counter = 0
    new_gates: list[tuple[int, Gate]] = []

    def lift(ref: str, target: int) -> str:
        nonlocal counter
        while level[ref] < target:
            while f"id{counter}" in taken:
                counter += 1
            gid = f"id{counter}"
            taken.add(gid)
            lv = level[ref] + 1
            new_gates.append((lv, Gate(gid, GateKind.ID, (ref,))))
            level[gid] = lv
            ref = gid
        return ref

    for g in c.gates:
        lv = level[g.produces[0]]
        srcs = tuple(lift(s, lv - 1) for s in g.sources)
        new_gates.append((lv, Gate(g.id, g.kind, srcs)))
    outputs = tuple(lift(o, depth) for o in c.outputs)
    strict = Circuit(c.m, tuple(g for _, g in new_gates), outputs)
    consumed_at = {s: lv for lv, g in new_gates for s in g.sources}
    slices = []
    prev = tuple(input_ref(k) for k in range(c.m))
    for lv in range(1, depth + 1):
        gates = tuple(g for gl, g in new_gates if gl == lv)
        if lv == depth:
            outs = outputs
        else:
            outs = tuple(r for g in gates for r in g.produces if consumed_at.get(r) == lv + 1)
        slices.append(Slice(prev, gates, outs))
        prev = outs
    n_ids = sum(1 for _, g in new_gates if g.kind is GateKind.ID) - sum(
        1 for g in c.gates if g.kind is GateKind.ID
    )
    return LayeredCircuit(strict, tuple(slices), n_ids)


def pad(n: int) -> int:
    """The residue ``i(n) ≡ -(1+n) (mod 3)`` making ``1 + n + i(n)`` divisible by 3."""
    return (-(1 + n)) % 3


def length_pad(n: int) -> int:
    """Extra leading zeros that keep ``|0^{1+i}·y·x| ≡ |0·x| (mod 3)`` for ``|y| = n``.

    This is the padding the compiler actually uses; see the README for why
    it differs from :func:`pad`.
    """
    return (-n) % 3


ZERO = None  # layout label of a known zero bit


class _Layout:
    """A label list plus the tokens (in application order) that produced it."""

    def __init__(self, labels: Iterable[str | None]):
        self.labels: list[str | None] = list(labels)
        self.applied: list[Token] = []

    def tau(self, k: int) -> None:
        if k + 1 >= len(self.labels):
            raise AssertionError("transposition would act on a short argument")
        lab = self.labels
        lab[k], lab[k + 1] = lab[k + 1], lab[k]
        self.applied.append(TAU(k))

    def swap(self, i: int, j: int) -> None:
        for t in transposition_word(i, j):
            self.tau(t.index)

    def gate(self, token: Token, result: str) -> None:
        """Apply a three-bit gadget whose outcome lands in position 0."""
        if len(self.labels) < 3:
            raise AssertionError("gadget needs three known positions")
        self.labels[0] = result
        self.applied.append(token)

    def f4(self) -> None:
        if self.labels[0] is not ZERO:
            raise AssertionError("F4 needs a leading zero")
        self.labels[0:0] = [ZERO] * 3
        self.applied.append(F4)

    def zeros(self) -> list[int]:
        return [p for p, lab in enumerate(self.labels) if lab is ZERO]

    def route(self, target: Sequence[str | None]) -> None:
        """Rearrange to *target* by adjacent transpositions (selection by bubbling)."""
        if sorted(map(str, self.labels)) != sorted(map(str, target)):
            raise AssertionError("route target is not a rearrangement")
        for pos, want in enumerate(target):
            j = pos
            while self.labels[j] != want:
                j += 1
            for k in range(j - 1, pos - 1, -1):
                self.tau(k)

    def word(self) -> GenWord:
        return tuple(reversed(self.applied))


def _ensure_zeros(lay: _Layout, count: int, front: int) -> None:
    """Make at least *count* zeros available and put zeros at positions ``0..front-1``."""
    if len(lay.zeros()) < count:
        lay.f4()
    for p in range(front):
        if lay.labels[p] is not ZERO:
            z = next(q for q in lay.zeros() if q > p)
            lay.swap(p, z)


def _park(lay: _Layout, avoid: int) -> None:
    """Move the result sitting at position 0 onto a zero at a position ≥ *avoid*."""
    z = next(q for q in lay.zeros() if q >= avoid)
    lay.swap(0, z)


def _compile_gates(lay: _Layout, gates: Iterable[Gate]) -> None:
    for g in gates:
        if g.kind in (GateKind.NOT, GateKind.ID):
            _ensure_zeros(lay, 2, 2)
            p = lay.labels.index(g.sources[0])
            if p != 2:
                lay.swap(2, p)
            lay.gate(OR, g.id)
            if g.kind is GateKind.NOT:
                lay.gate(NOT, g.id)
            if p != 2:
                lay.swap(2, p)
            _park(lay, 1)
        elif g.kind in (GateKind.AND, GateKind.OR):
            _ensure_zeros(lay, 2, 1)
            a, b = g.sources
            undo = []
            pa = lay.labels.index(a)
            if pa != 1:
                lay.swap(1, pa)
                undo.append((1, pa))
            pb = lay.labels.index(b)
            if pb != 2:
                lay.swap(2, pb)
                undo.append((2, pb))
            lay.gate(OR if g.kind is GateKind.OR else AND, g.id)
            for i, j in reversed(undo):
                lay.swap(i, j)
            _park(lay, 1)
        else:
            _ensure_zeros(lay, 3, 2)
            p = lay.labels.index(g.sources[0])
            if p != 2:
                lay.swap(2, p)
            lay.gate(OR, f"{g.id}.0")
            lay.tau(0)
            lay.gate(OR, f"{g.id}.1")
            if p != 2:
                lay.swap(2, p)
            _park(lay, 2)


def _slice_layout(inputs: Sequence[str], gates: Sequence[Gate], outputs: Sequence[str]) -> _Layout:
    """Layout run mapping ``0·Y·s`` to ``0^{1+i}·f(Y)·Y·s``."""
    lay = _Layout([ZERO, *inputs])
    _compile_gates(lay, gates)
    zeros = 1 + length_pad(len(outputs))
    if len(lay.zeros()) != zeros:
        raise AssertionError("zero bookkeeping out of step")
    lay.route([ZERO] * zeros + list(outputs) + list(inputs))
    return lay


def _is_depth_one(c: Circuit) -> bool:
    inputs = {input_ref(k) for k in range(c.m)}
    return all(s in inputs for g in c.gates for s in g.sources) and not any(o in inputs for o in c.outputs)


def compile_slice(s: Circuit) -> GenWord:
    """Word mapping ``0·x·s`` to ``0^{1+i}·f(x)·x·s`` for a depth-one circuit."""
    if not _is_depth_one(s):
        raise NotDepthOne("every gate must read inputs only and every output must be a gate")
    inputs = [input_ref(k) for k in range(s.m)]
    return _slice_layout(inputs, s.gates, s.outputs).word()


def compile(c: Circuit) -> GenWord:  # noqa: A001 - name mirrors the operation it performs
    """Word ``w_C`` with ``w_C(0·x·s·#) = 0^{1+i(n)}·f_C(x)·x·s·#``, ``i(n) = length_pad(n)``.

    Layers are computed one after another, each leaving its outputs in
    front followed by its padding zeros; the last layer's outputs are then
    parked at the far end, the earlier layers are undone in reverse order
    and a final routing brings the outputs to the front.
    """
    lc = strictify(c)
    inputs = [input_ref(k) for k in range(c.m)]
    if lc.depth == 1:
        sl = lc.slices[0]
        return _slice_layout(sl.inputs, sl.gates, sl.outputs).word()
    full = _Layout([ZERO, *inputs])
    segments: list[tuple[Token, ...]] = []
    for depth, sl in enumerate(lc.slices, 1):
        part = _slice_layout(sl.inputs, sl.gates, sl.outputs)
        tail = full.labels[1 + len(sl.inputs):]
        full.applied += part.applied
        full.labels = part.labels + tail
        if depth == lc.depth:
            break
        n, i = len(sl.outputs), length_pad(len(sl.outputs))
        rot = _Layout(full.labels[: 1 + i + n])
        rot.route([ZERO, *sl.outputs] + [ZERO] * i)
        full.applied += rot.applied
        full.labels = rot.labels + full.labels[1 + i + n:]
        segments.append(tuple(part.applied) + tuple(rot.applied))
    last = lc.slices[-1]
    n_out, i_out = len(last.outputs), length_pad(len(last.outputs))
    rest = full.labels[1 + i_out + n_out:]
    full.route([ZERO, *rest, *last.outputs] + [ZERO] * i_out)
    for sl, seg in zip(reversed(lc.slices[:-1]), reversed(segments)):
        k = 1 + len(sl.outputs) + length_pad(len(sl.outputs))
        if full.labels[1:1 + len(sl.outputs)] != list(sl.outputs):
            raise AssertionError("layer outputs not in front during replay")
        full.applied += list(invert_word(seg))
        full.labels = [ZERO] + full.labels[k:]
    full.route([ZERO] * (1 + i_out) + list(last.outputs) + inputs)
    return full.word()


def preprocess_word(n: int, m: int) -> GenWord:
    """``w₀``: ``0·x·s ↦ 0·x·0^{3(n+m)}·s`` for ``|x| = m`` via ``F4^{n+m}`` and a τ-chain."""
    shift = 3 * (n + m)
    chain: list[Token] = []
    for j in range(m, 0, -1):
        chain.extend(transposition_word(j, shift + j))
    return tuple(chain) + (F4,) * (n + m)


def postprocess_word(n: int, m: int) -> GenWord:
    """``w_{L+1}``: ``0^{1+i}·y·x·0^{3(n+m)}·s ↦ 0^{1+i}·y·x·s``."""
    shift = 3 * (n + m)
    lead = 1 + length_pad(n)
    labels = [ZERO] * lead + [f"y{k}" for k in range(n)] + [f"x{k}" for k in range(m)] + [ZERO] * shift
    lay = _Layout(labels)
    lay.route([ZERO] * (lead + shift) + labels[lead:lead + n + m])
    return (F4.inverse(),) * (n + m) + lay.word()


def compile_strong(c: Circuit) -> GenWord:
    """``W_C = w_{L+1}·w_C·w₀``: on too-short inputs the result depends only on ``f_C``."""
    return postprocess_word(c.n, c.m) + compile(c) + preprocess_word(c.n, c.m)


def max_tau_index(word: Iterable[Token]) -> int:
    from .genwords import Kind

    return max((t.index for t in word if t.kind is Kind.TAU), default=-1)
