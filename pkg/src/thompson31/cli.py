"""Command-line entry point: ``thompson31 <command> ...``.

Exit codes: 0 on success (or a positive verdict), 1 on a negative verdict
(inequivalent circuits, a non-identity word, a failed self-test), 2 on
usage, parse or precondition errors.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from . import acceptance
from .circuits import Circuit, compile, compile_strong, max_tau_index, parse_circuit
from .codes import parse_word
from .errors import ThompsonError
from .genwords import GenWord, eval_word, format_genword, has_kappa, materialize, parse_genword, unary_length
from .presentation import GeneratorSet, enumerate_generators, factor_traced
from .tables import GroupTag, format_table, parse_table
from .wordproblem import (
    EquivMode,
    Verdict,
    VerdictKind,
    WitnessConfig,
    circuit_equiv_report,
    wp_bounded_witness,
    wp_is_identity_normal_form,
    wp_table,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ThompsonError(f"cannot read {path}: {exc.strerror}") from None


def _load_word(path: str) -> GenWord:
    return parse_genword(_read(path))


def _load_circuit(path: str) -> Circuit:
    return parse_circuit(_read(path))


def _word_for_metrics(path: str, kind: str, strong: bool) -> GenWord:
    if kind == "auto":
        kind = "circuit" if path.endswith(".ckt") else "word"
    if kind == "word":
        return _load_word(path)
    c = _load_circuit(path)
    return compile_strong(c) if strong else compile(c)


def cmd_apply(args: argparse.Namespace) -> int:
    word = _load_word(args.word_file)
    out = eval_word(word, parse_word(args.input))
    print("undefined" if out is None else (out or "@"))
    return EXIT_OK


def cmd_compile(args: argparse.Namespace) -> int:
    c = _load_circuit(args.circuit)
    word = compile_strong(c) if args.strong else compile(c)
    text = format_genword(word) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_equiv(args: argparse.Namespace) -> int:
    report = circuit_equiv_report(_load_circuit(args.first), _load_circuit(args.second), EquivMode(args.mode))
    print("equivalent" if report.equivalent else "inequivalent")
    if report.oracle_input is not None:
        print(f"oracle-input {report.oracle_input}")
    if report.group_witness is not None:
        print(f"group-witness {report.group_witness}")
    return EXIT_OK if report.equivalent else EXIT_NEGATIVE


def _decided(identity: bool, word: GenWord, cfg: WitnessConfig) -> Verdict:
    if identity:
        return Verdict(VerdictKind.IDENTITY_PROVEN)
    search = wp_bounded_witness(word, cfg)
    return Verdict(VerdictKind.NOT_IDENTITY, witness=search.witness)


def cmd_wp(args: argparse.Namespace) -> int:
    word = _load_word(args.word_file)
    cfg = WitnessConfig(ell=args.ell, cap=args.cap)
    if args.method == "witness":
        verdict = wp_bounded_witness(word, cfg)
    elif args.method == "table":
        if has_kappa(word):
            raise ThompsonError("the table method needs a word without kappa letters")
        verdict = _decided(wp_table(word), word, cfg)
    else:
        verdict = _decided(wp_is_identity_normal_form(word), word, cfg)
    if verdict.kind is VerdictKind.NOT_IDENTITY and verdict.witness is None:
        print("not-identity")
    else:
        print(verdict)
    return EXIT_NEGATIVE if verdict.is_identity is False else EXIT_OK


def cmd_factor(args: argparse.Namespace) -> int:
    phi = parse_table(_read(args.table))
    tag = GroupTag(args.tag)
    if tag is GroupTag.G31_MOD3_01_SHARP and args.bound > 9:
        gens = GeneratorSet(tag, args.bound)
    else:
        gens = enumerate_generators(tag, args.bound)
    ids, trace = factor_traced(phi, gens)
    print("factor " + " ".join(map(str, ids)))
    print(f"# table-size {len(phi)}, largest intermediate {trace.max_intermediate}")
    if args.show:
        for i in sorted(set(ids)):
            print(f"# generator {i}")
            sys.stdout.write(format_table(gens[i]))
    return EXIT_OK


def cmd_metrics(args: argparse.Namespace) -> int:
    word = _word_for_metrics(args.file, args.kind, args.strong)
    print(f"tokens {len(word)}")
    if args.unary:
        print(f"unary-length {unary_length(word)}")
    print(f"max-tau {max_tau_index(word)}")
    try:
        print(f"table-size {len(materialize(word))}")
    except ThompsonError as exc:
        print(f"table-size n/a ({exc})")
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    ok = True
    for check in acceptance.CHECKS:
        result = check(args.seed)
        print(result.line(), flush=True)
        ok &= result.ok
    return EXIT_OK if ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thompson31", description="Thompson-Higman G_{3,1} toolkit")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED, help="seed for randomized steps")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apply", parents=[common], help="apply a generator word to an input word")
    p.add_argument("word_file", help="generator word file (.gw)")
    p.add_argument("input", help="word over 0, 1, # ('@' for the empty word)")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("compile", parents=[common], help="compile a circuit into a generator word")
    p.add_argument("circuit", help="circuit file (.ckt)")
    p.add_argument("--strong", action="store_true", help="add the pre/post-processing for strong simulation")
    p.add_argument("-o", "--output", help="write the word here instead of stdout")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("equiv", parents=[common], help="decide whether two circuits compute the same function")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--mode", choices=[m.value for m in EquivMode], default="both")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("wp", parents=[common], help="decide whether a generator word is the identity")
    p.add_argument("word_file")
    p.add_argument("--method", choices=["table", "normal-form", "witness"], default="normal-form")
    p.add_argument("--cap", type=int, default=WitnessConfig.cap, help="largest probed bit length")
    p.add_argument("--ell", type=int, default=WitnessConfig.ell, help="code-depth floor in the witness bound")
    p.set_defaults(func=cmd_wp)

    p = sub.add_parser("factor", parents=[common], help="factor a table over a bounded generating set")
    p.add_argument("table", help="table file with 'domain -> image' lines")
    p.add_argument("--tag", choices=[GroupTag.G31_01_SHARP.value, GroupTag.G31_MOD3_01_SHARP.value],
                   default=GroupTag.G31_01_SHARP.value)
    p.add_argument("--bound", type=int, default=7, help="largest generator table-size")
    p.add_argument("--show", action="store_true", help="print the tables of the generators used")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("metrics", parents=[common], help="size measures of a compiled circuit or a word")
    p.add_argument("file", help=".ckt circuit or generator word file")
    p.add_argument("--kind", choices=["auto", "circuit", "word"], default="auto")
    p.add_argument("--strong", action="store_true", help="measure the strong-simulation word of a circuit")
    p.add_argument("--unary", action="store_true", help="also report the length with unary TAU indices")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ThompsonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
