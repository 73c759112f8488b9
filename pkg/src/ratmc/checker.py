"""Compilation of formulae to extension automata and the three query modes.

Every sub-formula is compiled bottom-up to an automaton whose language is its
extension within the model's state space; results are epsilon-free, trimmed,
and cached per structurally-equal sub-formula.  Universal modalities are
reduced to diamonds by double complementation relative to the state space.

Counting modalities have no known extension automaton, so they are accepted
only in local checking and only when no counting modality sits under another
modal operator; elsewhere they raise `CountingScopeError`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import (
    Alphabet,
    Nfa,
    complement,
    count_words,
    eliminate_epsilon,
    empty_language,
    intersection,
    is_empty,
    is_equivalent,
    language_membership,
    literal,
    shortest_word,
    trim,
    union,
)
from .errors import CountingScopeError, InputError
from .logic import (
    And,
    Arrow,
    At,
    Atom,
    AtomicProgram,
    Bottom,
    Box,
    Converse,
    Count,
    Diamond,
    DiffBox,
    DiffDiamond,
    Formula,
    Implies,
    LetterLit,
    Nominal,
    Not,
    Or,
    ProgBox,
    ProgDiamond,
    Program,
    ProgramCompose,
    ProgramUnion,
    StarFreeRegex,
    Test,
    Top,
    UnivBox,
    UnivDiamond,
    contains_counting,
    in_counting_skeleton_fragment,
    translate_regex,
)
from .model import RationalKripkeModel, free_word_model
from .transducers import (
    Transducer,
    arrow_relation,
    compose,
    difference_relation,
    inverse,
    synchronized_product,
    t_union,
    test_relation,
)


@dataclass
class NodeStats:
    """Sizes recorded while compiling one AST node.

    The product fields hold the synchronized product's size before epsilon
    reduction, for nodes that build one.
    """

    kind: str
    states: int
    transitions: int
    product_states: int | None = None
    product_transitions: int | None = None


class CheckContext:
    """Per-query evaluation state: the model, the sub-formula cache, and stats."""

    def __init__(self, model: RationalKripkeModel, use_cache: bool = True):
        self.model = model
        self.use_cache = use_cache
        self.cache: dict[Formula, Nfa] = {}
        self.stats: list[NodeStats] = []
        self.space = trim(eliminate_epsilon(model.states))

    def resolve(self, name: str, inverted: bool) -> Transducer:
        try:
            t = self.model.relations[name]
        except KeyError:
            raise InputError(f"unknown relation {name!r}")
        return inverse(t) if inverted else t


def _finish(a: Nfa) -> Nfa:
    return trim(eliminate_epsilon(a))


def global_check(
    m: RationalKripkeModel, f: Formula, ctx: CheckContext | None = None
) -> Nfa:
    """Automaton for the set of states satisfying f; rejects counting modalities."""
    if contains_counting(f):
        raise CountingScopeError(
            "counting modalities support local checking only; whether their "
            "extensions stay regular is an open problem"
        )
    if ctx is None:
        ctx = CheckContext(m)
    return _compile(ctx, f)


def _diamond_product(ctx: CheckContext, t: Transducer, arg: Nfa, kind: str) -> Nfa:
    """<relation> arg: epsilon-reduce the synchronized product, restrict to states."""
    product = synchronized_product(t, arg)
    result = _finish(intersection(_finish(product), ctx.space))
    ctx.stats.append(
        NodeStats(
            kind,
            result.num_states,
            result.num_transitions,
            product_states=product.num_states,
            product_transitions=product.num_transitions,
        )
    )
    return result


def _record(ctx: CheckContext, kind: str, a: Nfa) -> Nfa:
    ctx.stats.append(NodeStats(kind, a.num_states, a.num_transitions))
    return a


def _compile(ctx: CheckContext, f: Formula) -> Nfa:
    if ctx.use_cache and f in ctx.cache:
        return ctx.cache[f]
    result = _compile_node(ctx, f)
    if ctx.use_cache:
        ctx.cache[f] = result
    return result


def _compile_node(ctx: CheckContext, f: Formula) -> Nfa:
    space = ctx.space
    if isinstance(f, Top):
        return _record(ctx, "top", space)
    if isinstance(f, Bottom):
        return _record(ctx, "bottom", empty_language(ctx.model.alphabet))
    if isinstance(f, Atom):
        if f.name not in ctx.model.valuation:
            raise InputError(f"unknown proposition {f.name!r}")
        ext = _finish(intersection(ctx.model.valuation[f.name], space))
        return _record(ctx, f"atom:{f.name}", ext)
    if isinstance(f, Nominal):
        if f.name not in ctx.model.nominals:
            raise InputError(f"unknown nominal {f.name!r}")
        word = ctx.model.nominals[f.name]
        return _record(ctx, f"nominal:{f.name}", literal(ctx.model.alphabet, word))
    if isinstance(f, LetterLit):
        ext = _finish(intersection(literal(ctx.model.alphabet, f.symbol), space))
        return _record(ctx, f"letter:{f.symbol}", ext)
    if isinstance(f, Not):
        inner = _compile(ctx, f.operand)
        return _record(ctx, "not", _finish(complement(inner, space)))
    if isinstance(f, And):
        ext = intersection(_compile(ctx, f.left), _compile(ctx, f.right))
        return _record(ctx, "and", _finish(ext))
    if isinstance(f, Or):
        ext = union(_compile(ctx, f.left), _compile(ctx, f.right))
        return _record(ctx, "or", _finish(ext))
    if isinstance(f, Implies):
        left = _compile(ctx, f.left)
        right = _compile(ctx, f.right)
        ext = union(complement(left, space), right)
        return _record(ctx, "implies", _finish(ext))
    if isinstance(f, Diamond):
        t = ctx.resolve(f.rel.name, f.rel.inverted)
        arg = _compile(ctx, f.operand)
        return _diamond_product(ctx, t, arg, f"diamond:{_rel_tag(f)}")
    if isinstance(f, Box):
        t = ctx.resolve(f.rel.name, f.rel.inverted)
        arg = _compile(ctx, f.operand)
        return _box_via_duality(ctx, t, arg, f"box:{_rel_tag(f)}")
    if isinstance(f, UnivDiamond):
        arg = _compile(ctx, f.operand)
        ext = space if not is_empty(arg) else _empty(ctx)
        return _record(ctx, "univ-diamond", ext)
    if isinstance(f, UnivBox):
        arg = _compile(ctx, f.operand)
        ext = space if is_equivalent(arg, space) else _empty(ctx)
        return _record(ctx, "univ-box", ext)
    if isinstance(f, DiffDiamond):
        arg = _compile(ctx, f.operand)
        return _diamond_product(
            ctx, difference_relation(ctx.model.alphabet), arg, "diff-diamond"
        )
    if isinstance(f, DiffBox):
        arg = _compile(ctx, f.operand)
        return _box_via_duality(
            ctx, difference_relation(ctx.model.alphabet), arg, "diff-box"
        )
    if isinstance(f, At):
        if f.nominal not in ctx.model.nominals:
            raise InputError(f"unknown nominal {f.nominal!r}")
        rewritten = UnivBox(Implies(Nominal(f.nominal), f.operand))
        ext = _compile(ctx, rewritten)
        return _record(ctx, f"at:{f.nominal}", ext)
    if isinstance(f, ProgDiamond):
        t = eval_program(ctx.model, f.program, ctx)
        arg = _compile(ctx, f.operand)
        return _diamond_product(ctx, t, arg, "prog-diamond")
    if isinstance(f, ProgBox):
        t = eval_program(ctx.model, f.program, ctx)
        arg = _compile(ctx, f.operand)
        return _box_via_duality(ctx, t, arg, "prog-box")
    if isinstance(f, Count):
        raise CountingScopeError(
            "counting modalities support local checking only; whether their "
            "extensions stay regular is an open problem"
        )
    raise InputError(f"cannot compile {type(f).__name__}")


def _rel_tag(f: Diamond | Box) -> str:
    return f.rel.name + ("~" if f.rel.inverted else "")


def _empty(ctx: CheckContext) -> Nfa:
    return empty_language(ctx.model.alphabet)


def _box_via_duality(ctx: CheckContext, t: Transducer, arg: Nfa, kind: str) -> Nfa:
    """[rel] arg as the complement of <rel> applied to the complement of arg."""
    negated = _finish(complement(arg, ctx.space))
    product = synchronized_product(t, negated)
    diamond = _finish(intersection(_finish(product), ctx.space))
    result = _finish(complement(diamond, ctx.space))
    ctx.stats.append(
        NodeStats(
            kind,
            result.num_states,
            result.num_transitions,
            product_states=product.num_states,
            product_transitions=product.num_transitions,
        )
    )
    return result


def eval_program(
    m: RationalKripkeModel, program: Program, ctx: CheckContext | None = None
) -> Transducer:
    """Compile a program to the transducer for its relation."""
    if ctx is None:
        ctx = CheckContext(m)
    if isinstance(program, AtomicProgram):
        return ctx.resolve(program.rel.name, program.rel.inverted)
    if isinstance(program, Converse):
        return inverse(eval_program(m, program.inner, ctx))
    if isinstance(program, ProgramUnion):
        return t_union(eval_program(m, program.left, ctx), eval_program(m, program.right, ctx))
    if isinstance(program, ProgramCompose):
        return compose(eval_program(m, program.left, ctx), eval_program(m, program.right, ctx))
    if isinstance(program, Test):
        return test_relation(_compile(ctx, program.formula))
    if isinstance(program, Arrow):
        return arrow_relation(_compile(ctx, program.formula))
    raise InputError(f"cannot evaluate {type(program).__name__}")


def local_check(
    m: RationalKripkeModel, state: str, f: Formula, ctx: CheckContext | None = None
) -> bool:
    """Truth of f at one state; counting atoms are decided by counting the
    successor set intersected with the argument's extension."""
    if ctx is None:
        ctx = CheckContext(m)
    for ch in state:
        if ch not in m.alphabet:
            raise InputError(f"state {state!r} contains characters outside the alphabet")
    if not language_membership(ctx.space, state):
        raise InputError(f"{state!r} is not a state of the model")
    if contains_counting(f) and not in_counting_skeleton_fragment(f):
        raise CountingScopeError(
            "counting modalities may not occur under another modal operator "
            "in local checking"
        )
    return _local_eval(ctx, state, f)


def _local_eval(ctx: CheckContext, state: str, f: Formula) -> bool:
    if isinstance(f, Not):
        return not _local_eval(ctx, state, f.operand)
    if isinstance(f, And):
        return _local_eval(ctx, state, f.left) and _local_eval(ctx, state, f.right)
    if isinstance(f, Or):
        return _local_eval(ctx, state, f.left) or _local_eval(ctx, state, f.right)
    if isinstance(f, Implies):
        return (not _local_eval(ctx, state, f.left)) or _local_eval(ctx, state, f.right)
    if isinstance(f, Count):
        return _count_at(ctx, state, f)
    return language_membership(_compile(ctx, f), state)


def _count_at(ctx: CheckContext, state: str, f: Count) -> bool:
    # successors of `state` are the pre-image of {state} under the inverse relation
    t = ctx.resolve(f.rel.name, not f.rel.inverted)
    here = literal(ctx.model.alphabet, state)
    successors = _finish(synchronized_product(t, here))
    satisfying = intersection(successors, _compile(ctx, f.operand))
    card = count_words(satisfying)
    cmp = f.cmp
    if cmp.kind == "at_least":
        return card.at_least(cmp.bound)
    if cmp.kind == "at_most":
        return card.at_most(cmp.bound)
    if cmp.kind == "exactly":
        return (not card.is_infinite) and card.count == cmp.bound
    return card.is_infinite


def sat_check(
    m: RationalKripkeModel, f: Formula, ctx: CheckContext | None = None
) -> tuple[bool, str | None]:
    """Whether f holds somewhere in the model; returns a shortest witness state."""
    if contains_counting(f):
        raise CountingScopeError(
            "satisfiability checking does not support counting modalities"
        )
    ext = global_check(m, f, ctx)
    witness = shortest_word(ext)
    return (witness is not None, witness)


def regex_equiv(e1: StarFreeRegex, e2: StarFreeRegex, alphabet: Alphabet) -> bool:
    """Language equality of two star-free regexes, decided over the free word model."""
    m = free_word_model(alphabet)
    a1 = global_check(m, translate_regex(e1))
    a2 = global_check(m, translate_regex(e2))
    return is_equivalent(a1, a2)
