"""The ten end-to-end acceptance checks.

Each check returns a :class:`CheckResult`; a check passes only if its
property holds *and* it finished inside its time budget.  The same
functions back ``tests/test_acceptance.py`` and ``thompson31 selftest``.
"""

from __future__ import annotations

import itertools
import math
import random
import statistics
import time
from collections.abc import Callable
from dataclasses import dataclass

from .circuits import compile, compile_strong, eval_circuit, max_tau_index, pad, strictify
from .genwords import eval_word, has_kappa, make_adjacent_transposition
from .kappa import K321, kappa_apply, kappa_conjugate, kappa_invert, kappa_is_identity
from .presentation import enumerate_generators, factor_traced
from .samples import (
    SIGNED_ALPHABET,
    circuit_pairs,
    equivalent_variant,
    random_commutation_instance,
    random_element,
    random_genword,
    random_small_circuit,
)
from .tables import GroupTag, StabMode, apply, compose, member_of, stab_fix_predicate, table_size
from .wordproblem import (
    EquivMode,
    WitnessConfig,
    circuit_equiv_report,
    find_noncommuting_witness,
    is_pfix_zero,
    witness_bound,
    wp_bounded_witness,
    wp_is_identity_normal_form,
    wp_table,
)

DEFAULT_SEED = 20240601


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    ok: bool
    detail: str
    seconds: float
    budget: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} criterion {self.number} ({self.name}): {self.detail} [{self.seconds:.1f}s / {self.budget:.0f}s]"


def _timed(number: int, name: str, budget: float, body: Callable[[], tuple[bool, str]]) -> CheckResult:
    start = time.perf_counter()
    ok, detail = body()
    spent = time.perf_counter() - start
    if spent > budget:
        ok = False
        detail += "; over time budget"
    return CheckResult(number, name, ok, detail, spent, budget)


def _bits(x: int, m: int) -> str:
    return format(x, f"0{m}b")


def _criterion_circuits(seed: int, count: int = 50):
    rng = random.Random(seed)
    return [random_small_circuit(rng) for _ in range(count)]


def check_transposition_sizes(seed: int = DEFAULT_SEED) -> CheckResult:
    def body() -> tuple[bool, str]:
        bad = [i for i in range(8) if table_size(make_adjacent_transposition(i)) != 2 ** (i + 3) - 1]
        return not bad, "all eight sizes equal 2^(i+3)-1" if not bad else f"mismatch at i={bad}"

    return _timed(1, "transposition table sizes", 5, body)


def check_simulation(seed: int = DEFAULT_SEED) -> CheckResult:
    def body() -> tuple[bool, str]:
        failures = 0
        first = ""
        circuits = _criterion_circuits(seed)
        for c in circuits:
            word = compile(c)
            for x in range(2 ** c.m):
                xs = _bits(x, c.m)
                f = "".join(map(str, eval_circuit(c, [int(b) for b in xs])))
                for s in ("", "0", "11"):
                    got = eval_word(word, "0" + xs + s + "#")
                    want = "0" * (1 + pad(c.n)) + f + xs + s + "#"
                    if got != want:
                        failures += 1
                        if not first:
                            first = f"e.g. input 0{xs}{s}# gave {got}, expected {want}"
        total = sum(3 * 2**c.m for c in circuits)
        if failures:
            return False, f"{failures}/{total} outputs differ from the stated layout; {first}"
        return True, f"{total} outputs over {len(circuits)} circuits match"

    return _timed(2, "simulation correctness", 60, body)


def check_strong_independence(seed: int = DEFAULT_SEED) -> CheckResult:
    def body() -> tuple[bool, str]:
        rng = random.Random(seed + 3)
        pairs = 0
        inputs = 0
        while pairs < 10:
            c1 = random_small_circuit(rng)
            if c1.m < 2:
                continue
            c2 = equivalent_variant(rng, c1)
            w1, w2 = compile_strong(c1), compile_strong(c2)
            for k in range(c1.m):
                for x in range(2**k):
                    inp = "0" + (_bits(x, k) if k else "") + "#"
                    inputs += 1
                    if eval_word(w1, inp) != eval_word(w2, inp):
                        return False, f"short input {inp} separates two equivalent circuits"
            pairs += 1
        return True, f"{pairs} pairs agree on all {inputs} short inputs"

    return _timed(3, "strong simulation independence", 60, body)


def check_compiler_bounds(seed: int = DEFAULT_SEED) -> CheckResult:
    def body() -> tuple[bool, str]:
        xs, ys = [], []
        for c in _criterion_circuits(seed):
            word = compile(c)
            size = strictify(c).size
            if max_tau_index(word) > 3 * size**2:
                return False, f"TAU index {max_tau_index(word)} exceeds 3*{size}^2"
            xs.append(math.log(size))
            ys.append(math.log(len(word)))
        slope, _ = statistics.linear_regression(xs, ys)
        return slope <= 4, f"TAU bound holds; log-log token-count slope {slope:.2f}"

    return _timed(4, "compiler bounds", 10, body)


def check_decider_agreement(seed: int = DEFAULT_SEED) -> CheckResult:
    def body() -> tuple[bool, str]:
        rng = random.Random(seed + 5)
        identities = 0
        for _ in range(500):
            word = random_genword(rng, rng.randint(0, 8), SIGNED_ALPHABET)
            nf = wp_is_identity_normal_form(word)
            witness = wp_bounded_witness(word, WitnessConfig(cap=witness_bound(word)))
            if witness.is_identity != nf:
                return False, f"normal form says {nf}, witness search says {witness}"
            if not has_kappa(word) and wp_table(word) != nf:
                return False, "table decider disagrees"
            identities += nf
        return True, f"500 words agree ({identities} identities)"

    return _timed(5, "decider agreement", 120, body)


def check_commutation(seed: int = DEFAULT_SEED) -> CheckResult:
    def body() -> tuple[bool, str]:
        rng = random.Random(seed + 6)
        fixed = 0
        for _ in range(200):
            g = random_commutation_instance(rng, 21)
            h = find_noncommuting_witness(g)
            in_fix = is_pfix_zero(g)
            if (h is None) != in_fix:
                return False, "verdict disagrees with the fixator predicate"
            if h is not None:
                if compose(g, h) == compose(h, g):
                    return False, "returned element commutes"
                if not (stab_fix_predicate(h, ("1", "#"), StabMode.PFIX) and member_of(h, GroupTag.G31_MOD3_01_SHARP)):
                    return False, "returned element is not in the outside fixator"
            fixed += in_fix
        return True, f"200 tables, {fixed} in the zero-region fixator"

    return _timed(6, "commutation test", 60, body)


def _kappa_words(max_len: int):
    letters = [(i, s) for i in (0, 1, 2) for s in (1, -1)]
    for n in range(max_len + 1):
        yield from itertools.product(letters, repeat=n)


def check_kappa_word_problem(seed: int = DEFAULT_SEED, full_length: int = 16) -> CheckResult:
    """Exhaustive evaluation on every ``x#`` up to *full_length*; beyond it
    the images of the unit vectors (which determine a position permutation)
    are evaluated instead of all ``2^|x|`` inputs."""

    def body() -> tuple[bool, str]:
        words = list(_kappa_words(3))
        for word in words:
            limit = 6 * len(word) + 3
            moved = False
            for n in range(limit + 1):
                if n <= full_length:
                    points = (_bits(x, n) if n else "" for x in range(2**n))
                else:
                    points = ("0" * k + "1" + "0" * (n - k - 1) for k in range(n))
                if any(kappa_apply(word, p + "#") != p + "#" for p in points):
                    moved = True
                    break
            if kappa_is_identity(word) == moved:
                return False, f"mismatch on {word}"
        return True, f"{len(words)} kappa words agree with evaluation"

    return _timed(7, "kappa word problem", 120, body)


def check_conjugation(seed: int = DEFAULT_SEED) -> CheckResult:
    def body() -> tuple[bool, str]:
        rng = random.Random(seed + 8)
        base = [((1, 1),), ((2, 1),), ((3, 1),), K321]
        conjugators = base + [kappa_invert(k) for k in base]
        for _ in range(100):
            phi = random_element(rng, 15, mod3=True)
            k = rng.choice(conjugators)
            conj = kappa_conjugate(phi, k)
            if not member_of(conj, GroupTag.G31_MOD3_01_SHARP):
                return False, "conjugate left the subgroup"
            if kappa_conjugate(conj, kappa_invert(k)) != phi:
                return False, "conjugation does not round-trip"
            for _ in range(5):
                n = rng.randint(0, 14)
                x = "".join(rng.choice("01") for _ in range(n)) + "#" + "".join(rng.choice("01#") for _ in range(rng.randint(0, 2)))
                inner = kappa_apply(kappa_invert(k), x)
                want = kappa_apply(k, apply(phi, inner))  # type: ignore[arg-type]
                if apply(conj, x) != want:
                    return False, f"pointwise mismatch at {x}"
        tau = kappa_conjugate(make_adjacent_transposition(1), kappa_invert(K321))
        if tau != make_adjacent_transposition(4):
            return False, "conjugating τ_{1,2} by K321^-1 does not give τ_{4,5}"
        return True, "100 conjugations coherent; τ_{1,2} ↦ τ_{4,5}"

    return _timed(8, "conjugation coherence", 60, body)


def check_factorization(seed: int = DEFAULT_SEED) -> CheckResult:
    def body() -> tuple[bool, str]:
        rng = random.Random(seed + 9)
        gens = enumerate_generators(GroupTag.G31_01_SHARP, 7)
        longest = 0
        for _ in range(100):
            phi = random_element(rng, 21)
            ids, trace = factor_traced(phi, gens)
            if gens.compose_ids(ids) != phi:
                return False, "composite differs from the element"
            if trace.max_intermediate > len(phi):
                return False, "an intermediate table is larger than the element"
            longest = max(longest, len(ids))
        return True, f"100 elements round-trip; longest factorization {longest}"

    return _timed(9, "factorization round trip", 60, body)


def check_equivalence_pipeline(seed: int = DEFAULT_SEED) -> CheckResult:
    def body() -> tuple[bool, str]:
        rng = random.Random(seed + 10)
        for c1, c2, same in circuit_pairs(rng, 30):
            oracle = circuit_equiv_report(c1, c2, EquivMode.ORACLE).equivalent
            group = circuit_equiv_report(c1, c2, EquivMode.GROUP).equivalent
            if oracle != group or oracle != same:
                return False, f"oracle={oracle} group={group} expected={same}"
        return True, "30 pairs: group and oracle verdicts agree"

    return _timed(10, "group/oracle equivalence", 120, body)


CHECKS: tuple[Callable[[int], CheckResult], ...] = (
    check_transposition_sizes,
    check_simulation,
    check_strong_independence,
    check_compiler_bounds,
    check_decider_agreement,
    check_commutation,
    check_kappa_word_problem,
    check_conjugation,
    check_factorization,
    check_equivalence_pipeline,
)


def run_all(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    return [check(seed) for check in CHECKS]
