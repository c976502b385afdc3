"""Seeded random instances used by the acceptance suite, tests and the CLI."""

from __future__ import annotations

import random
from collections.abc import Sequence

from .circuits import Circuit, Gate, GateKind, input_ref, make_circuit, truth_table
from .codes import complete_with_endmarkers, mod3_cardinality, sort_words
from .genwords import AND, F4, K, NOT, OR, TAU, GenWord, Kind, Token
from .tables import TableElement, make_table

WORD_ALPHABET: tuple[Token, ...] = (NOT, OR, AND, F4, TAU(0), TAU(1), K)
SIGNED_ALPHABET: tuple[Token, ...] = WORD_ALPHABET + tuple(
    t.inverse() for t in WORD_ALPHABET if t.kind is not Kind.TAU
)


def random_binary_code(rng: random.Random, leaves: int) -> tuple[str, ...]:
    """A maximal binary prefix code grown by splitting random leaves."""
    code = [""]
    while len(code) < leaves:
        w = code.pop(rng.randrange(len(code)))
        code += [w + "0", w + "1"]
    return sort_words(code)


def _sharp_part(bits: Sequence[str]) -> list[str]:
    return [w for w in complete_with_endmarkers(bits) if w.endswith("#")] if len(bits) > 1 else []


def table_from_codes(
    rng: random.Random, dom_bits: Sequence[str], img_bits: Sequence[str], mod3: bool = False
) -> TableElement:
    """Random shape-respecting bijection between two endmarker completions."""
    if mod3:
        pool: dict[int, list[str]] = {}
        for w in img_bits:
            pool.setdefault(len(w) % 3, []).append(w)
        for ws in pool.values():
            rng.shuffle(ws)
        targets = [pool[len(w) % 3].pop() for w in dom_bits]
    else:
        targets = list(img_bits)
        rng.shuffle(targets)
    dom_sharp = _sharp_part(dom_bits)
    img_sharp = _sharp_part(img_bits)
    rng.shuffle(img_sharp)
    return make_table(list(zip(dom_bits, targets)) + list(zip(dom_sharp, img_sharp)))


def random_element(rng: random.Random, max_size: int, mod3: bool = False, tries: int = 40) -> TableElement:
    """Random element of ``G_{3,1}(0,1;#)`` (or its mod-3 subgroup) of table-size ≤ *max_size*."""
    leaves = rng.randint(1, (max_size + 1) // 2)
    dom = random_binary_code(rng, leaves)
    img = random_binary_code(rng, leaves)
    if mod3:
        want = mod3_cardinality(dom)
        for _ in range(tries):
            if mod3_cardinality(img) == want:
                break
            img = random_binary_code(rng, leaves)
        else:
            img = dom
    return table_from_codes(rng, dom, img, mod3)


def random_zero_fixing_element(rng: random.Random, max_size: int) -> TableElement:
    """Random mod-3 element mapping ``0 ↦ 0``, so it fixes the cone ``0·A*`` pointwise."""
    leaves = rng.randint(1, max(1, (max_size + 1) // 2 - 1))
    dom = random_binary_code(rng, leaves)
    img = dom
    want = mod3_cardinality(dom)
    for _ in range(40):
        cand = random_binary_code(rng, leaves)
        if mod3_cardinality(cand) == want:
            img = cand
            break
    pool: dict[int, list[str]] = {}
    for w in img:
        pool.setdefault(len(w) % 3, []).append("1" + w)
    for ws in pool.values():
        rng.shuffle(ws)
    bits = [("0", "0")] + [("1" + w, pool[len(w) % 3].pop()) for w in dom]
    dom_sharp = _sharp_part(["0"] + ["1" + w for w in dom])
    img_sharp = _sharp_part(["0"] + ["1" + w for w in img])
    rng.shuffle(img_sharp)
    return make_table(bits + list(zip(dom_sharp, img_sharp)))


def random_commutation_instance(rng: random.Random, max_size: int = 21) -> TableElement:
    """Mixes generic mod-3 elements with ones fixing ``0·A*``."""
    if rng.random() < 0.3:
        return random_zero_fixing_element(rng, max_size)
    return random_element(rng, max_size, mod3=True)


def random_genword(rng: random.Random, length: int, alphabet: Sequence[Token] = SIGNED_ALPHABET) -> GenWord:
    return tuple(rng.choice(alphabet) for _ in range(length))


def random_circuit(rng: random.Random, m: int, gates: int) -> Circuit:
    """Random circuit on *m* inputs; every wire is consumed once, leftovers become outputs."""
    avail = [input_ref(k) for k in range(m)]
    out: list[Gate] = []
    for k in range(gates):
        kind = rng.choice(list(GateKind))
        if kind.arity == 2 and len(avail) < 2:
            kind = GateKind.NOT
        srcs = tuple(avail.pop(rng.randrange(len(avail))) for _ in range(kind.arity))
        g = Gate(f"g{k}", kind, srcs)
        out.append(g)
        avail += list(g.produces)
    rng.shuffle(avail)
    return make_circuit(m, out, avail)


def random_small_circuit(rng: random.Random, max_size: int = 10, max_inputs: int = 4) -> Circuit:
    while True:
        c = random_circuit(rng, rng.randint(1, max_inputs), rng.randint(1, 5))
        if c.size <= max_size:
            return c


def _fresh(c: Circuit, stem: str) -> str:
    taken = {g.id for g in c.gates}
    k = 0
    while f"{stem}{k}" in taken:
        k += 1
    return f"{stem}{k}"


def _rewire(c: Circuit, ref: str, new_ref: str) -> tuple[list[Gate], list[str]]:
    gates = [Gate(g.id, g.kind, tuple(new_ref if s == ref else s for s in g.sources)) for g in c.gates]
    outputs = [new_ref if o == ref else o for o in c.outputs]
    return gates, outputs


def _wires(c: Circuit) -> list[str]:
    return [input_ref(k) for k in range(c.m)] + [r for g in c.gates for r in g.produces]


def equivalent_variant(rng: random.Random, c: Circuit) -> Circuit:
    """A different circuit with the same truth table (double negation, ID or operand swap)."""
    choice = rng.randrange(3)
    binary = [g for g in c.gates if g.kind.arity == 2]
    if choice == 2 and binary:
        g = rng.choice(binary)
        gates = [Gate(h.id, h.kind, h.sources[::-1]) if h is g else h for h in c.gates]
        return make_circuit(c.m, gates, c.outputs)
    ref = rng.choice(_wires(c))
    a = _fresh(c, "eq")
    if choice == 1:
        gates, outputs = _rewire(c, ref, a)
        return make_circuit(c.m, gates + [Gate(a, GateKind.ID, (ref,))], outputs)
    b = a + "n"
    gates, outputs = _rewire(c, ref, b)
    extra = [Gate(a, GateKind.NOT, (ref,)), Gate(b, GateKind.NOT, (a,))]
    return make_circuit(c.m, gates + extra, outputs)


def mutated_variant(rng: random.Random, c: Circuit, tries: int = 50) -> Circuit:
    """A circuit with the same interface but a different truth table."""
    base = truth_table(c)
    for _ in range(tries):
        binary = [g for g in c.gates if g.kind.arity == 2]
        if binary and rng.random() < 0.5:
            g = rng.choice(binary)
            flip = GateKind.OR if g.kind is GateKind.AND else GateKind.AND
            gates = [Gate(h.id, flip, h.sources) if h is g else h for h in c.gates]
            cand = make_circuit(c.m, gates, c.outputs)
        else:
            ref = rng.choice(_wires(c))
            a = _fresh(c, "mut")
            gates, outputs = _rewire(c, ref, a)
            cand = make_circuit(c.m, gates + [Gate(a, GateKind.NOT, (ref,))], outputs)
        if truth_table(cand) != base:
            return cand
    raise ValueError("could not mutate the circuit's function")


def circuit_pairs(rng: random.Random, count: int = 30) -> list[tuple[Circuit, Circuit, bool]]:
    """Half equivalent-by-construction pairs, half mutated pairs."""
    out = []
    for k in range(count):
        c = random_small_circuit(rng)
        if k % 2 == 0:
            out.append((c, equivalent_variant(rng, c), True))
        else:
            out.append((c, mutated_variant(rng, c), False))
    return out
