"""Tables, generator words, circuit compilation and word problems for the
Thompson-Higman group G_{3,1} and its kappa extension."""

from .circuits import Circuit, Gate, GateKind, compile, compile_strong, eval_circuit, parse_circuit, strictify
from .codes import complete_with_endmarkers, extend_to_maximal, is_maximal_prefix_code, mod3_cardinality
from .errors import ThompsonError
from .genwords import TAU, Token, eval_word, materialize, parse_genword, tau_word_over_finite_gens
from .kappa import K321, kappa_apply, kappa_conjugate, kappa_is_identity
from .presentation import GeneratorSet, enumerate_generators, factor
from .tables import GroupTag, TableElement, apply, compose, invert, make_table, member_of, table_size
from .wordproblem import (
    EquivMode,
    Verdict,
    circuit_equiv,
    find_noncommuting_witness,
    is_pfix_zero,
    wp_bounded_witness,
    wp_normal_form,
    wp_table,
)

__all__ = [
    "Circuit", "Gate", "GateKind", "compile", "compile_strong", "eval_circuit", "parse_circuit", "strictify",
    "complete_with_endmarkers", "extend_to_maximal", "is_maximal_prefix_code", "mod3_cardinality",
    "ThompsonError",
    "TAU", "Token", "eval_word", "materialize", "parse_genword", "tau_word_over_finite_gens",
    "K321", "kappa_apply", "kappa_conjugate", "kappa_is_identity",
    "GeneratorSet", "enumerate_generators", "factor",
    "GroupTag", "TableElement", "apply", "compose", "invert", "make_table", "member_of", "table_size",
    "EquivMode", "Verdict", "circuit_equiv", "find_noncommuting_witness", "is_pfix_zero",
    "wp_bounded_witness", "wp_normal_form", "wp_table",
]
