"""Model checking of tense logics on automaton-presented infinite-state models.

State spaces are regular languages, transition relations are given by
rational transducers, and valuations are regular; every formula compiles to
a finite automaton recognizing its extension.
"""

from .automata import (
    EPSILON,
    Alphabet,
    Cardinality,
    Nfa,
    complement,
    concatenate,
    count_words,
    determinize,
    eliminate_epsilon,
    empty_language,
    gamma_reduction,
    has_at_least,
    has_at_most,
    has_exactly,
    intersection,
    is_empty,
    is_equivalent,
    language_membership,
    literal,
    shortest_word,
    trim,
    union,
    universal,
)
from .checker import (
    CheckContext,
    NodeStats,
    eval_program,
    global_check,
    local_check,
    regex_equiv,
    sat_check,
)
from .errors import (
    CountingScopeError,
    FormatError,
    FormulaSyntaxError,
    InputError,
    RatmcError,
    UndecidableConstructError,
)
from .logic import (
    Formula,
    Program,
    StarFreeRegex,
    alternating_ranks,
    alternation_rank,
    format_formula,
    modal_rank,
    nnf,
    parse_formula,
    parse_regex,
    translate_regex,
)
from .model import (
    Diagnostic,
    RationalKripkeModel,
    free_word_model,
    load_model,
    save_model,
    validate,
)
from .transducers import (
    Transducer,
    arrow_relation,
    compose,
    difference_relation,
    eraser_relation,
    identity_relation,
    inverse,
    normalize,
    relation_membership,
    synchronized_product,
    t_union,
    test_relation,
)

__version__ = "0.1.0"
