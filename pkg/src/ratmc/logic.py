"""Formula and program ASTs, the concrete-syntax parser, negation normal
form, rank measures, and the star-free-regex translation.

Concrete grammar (precedence low to high: ->, |, &, prefix operators):

    f := 'true' | 'false' | IDENT | '#'IDENT | 'lit(' CHAR ')'
       | '~' f | f '&' f | f '|' f | f '->' f
       | '<' relref '>' f | '[' relref ']' f        (U and D are reserved)
       | '@' IDENT '.' f
       | 'count(' relref ',' cmp ')' f              cmp := '>=' NAT | '<=' NAT | '=' NAT | 'inf'
       | '<<' prog '>>' f | '[[' prog ']]' f
    relref := IDENT | IDENT '~'
    prog := relref | prog "'" | prog '+' prog | prog ';' prog | f '?' | 'arrow(' f ')'
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import Alphabet
from .errors import FormulaSyntaxError, InputError, UndecidableConstructError


class Formula:
    """Marker base class; all nodes are frozen dataclasses and hashable."""


class Program:
    pass


class StarFreeRegex:
    pass


@dataclass(frozen=True)
class RelRef:
    name: str
    inverted: bool = False


@dataclass(frozen=True)
class Comparison:
    kind: str  # 'at_least' | 'at_most' | 'exactly' | 'infinite'
    bound: int = 0

    def __post_init__(self):
        if self.kind not in ("at_least", "at_most", "exactly", "infinite"):
            raise InputError(f"unknown comparison kind {self.kind!r}")
        if self.bound < 0:
            raise InputError("comparison bound must be non-negative")

    @classmethod
    def at_least(cls, k: int) -> "Comparison":
        return cls("at_least", k)

    @classmethod
    def at_most(cls, k: int) -> "Comparison":
        return cls("at_most", k)

    @classmethod
    def exactly(cls, k: int) -> "Comparison":
        return cls("exactly", k)

    @classmethod
    def infinite(cls) -> "Comparison":
        return cls("infinite")


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Nominal(Formula):
    name: str


@dataclass(frozen=True)
class LetterLit(Formula):
    symbol: str


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Diamond(Formula):
    rel: RelRef
    operand: Formula


@dataclass(frozen=True)
class Box(Formula):
    rel: RelRef
    operand: Formula


@dataclass(frozen=True)
class UnivDiamond(Formula):
    operand: Formula


@dataclass(frozen=True)
class UnivBox(Formula):
    operand: Formula


@dataclass(frozen=True)
class DiffDiamond(Formula):
    operand: Formula


@dataclass(frozen=True)
class DiffBox(Formula):
    operand: Formula


@dataclass(frozen=True)
class At(Formula):
    nominal: str
    operand: Formula


@dataclass(frozen=True)
class Count(Formula):
    rel: RelRef
    cmp: Comparison
    operand: Formula


@dataclass(frozen=True)
class ProgDiamond(Formula):
    program: Program
    operand: Formula


@dataclass(frozen=True)
class ProgBox(Formula):
    program: Program
    operand: Formula


@dataclass(frozen=True)
class AtomicProgram(Program):
    rel: RelRef


@dataclass(frozen=True)
class Converse(Program):
    inner: Program


@dataclass(frozen=True)
class ProgramUnion(Program):
    left: Program
    right: Program


@dataclass(frozen=True)
class ProgramCompose(Program):
    left: Program
    right: Program


@dataclass(frozen=True)
class Test(Program):
    formula: Formula

    __test__ = False  # keep pytest from collecting this class


@dataclass(frozen=True)
class Arrow(Program):
    formula: Formula


@dataclass(frozen=True)
class Letter(StarFreeRegex):
    symbol: str


@dataclass(frozen=True)
class RegexNot(StarFreeRegex):
    inner: StarFreeRegex


@dataclass(frozen=True)
class RegexUnion(StarFreeRegex):
    left: StarFreeRegex
    right: StarFreeRegex


@dataclass(frozen=True)
class RegexConcat(StarFreeRegex):
    left: StarFreeRegex
    right: StarFreeRegex


# ---------------------------------------------------------------------------
# Tokenizer

_TWO_CHAR = ("<<", ">>", "[[", "]]", "->", ">=", "<=")
_ONE_CHAR = "~&|<>[]()@.,#?+;'=!"

_RESERVED = {"true", "false", "down", "count", "lit", "arrow", "inf"}


@dataclass(frozen=True)
class _Token:
    kind: str  # 'ident' | 'nat' | symbol text | 'end'
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    toks: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        two = text[i : i + 2]
        if two in _TWO_CHAR:
            toks.append(_Token(two, two, i))
            i += 2
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Token("ident", text[i:j], i))
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Token("nat", text[i:j], i))
            i = j
            continue
        if ch in _ONE_CHAR:
            toks.append(_Token(ch, ch, i))
            i += 1
            continue
        raise FormulaSyntaxError(f"unexpected character {ch!r}", i)
    toks.append(_Token("end", "", n))
    return toks


class _FormulaParser:
    def __init__(
        self,
        text: str,
        alphabet: Alphabet,
        relations: set[str],
        props: set[str],
        nominals: set[str],
    ):
        clash = _RESERVED & (relations | props | nominals)
        if clash:
            raise InputError(f"declared names collide with reserved words: {sorted(clash)}")
        if {"U", "D"} & relations:
            raise InputError(
                "relation names 'U' and 'D' are reserved for the universal "
                "and difference modalities"
            )
        self.toks = _tokenize(text)
        self.i = 0
        self.alphabet = alphabet
        self.relations = relations
        self.props = props
        self.nominals = nominals

    def peek(self) -> _Token:
        return self.toks[self.i]

    def next(self) -> _Token:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.next()
        if tok.kind != kind:
            raise FormulaSyntaxError(f"expected {kind!r}, found {tok.text!r}", tok.pos)
        return tok

    def parse(self) -> Formula:
        f = self.formula()
        tok = self.peek()
        if tok.kind != "end":
            raise FormulaSyntaxError(f"unexpected trailing input {tok.text!r}", tok.pos)
        return f

    # precedence: -> (right associative), |, &, prefix operators
    def formula(self) -> Formula:
        left = self.disjunction()
        if self.peek().kind == "->":
            self.next()
            return Implies(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.peek().kind == "|":
            self.next()
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.prefixed()
        while self.peek().kind == "&":
            self.next()
            left = And(left, self.prefixed())
        return left

    def prefixed(self) -> Formula:
        tok = self.peek()
        if tok.kind == "~":
            self.next()
            return Not(self.prefixed())
        if tok.kind == "<":
            self.next()
            kind, rel = self.modal_ref(">")
            operand = self.prefixed()
            if kind == "U":
                return UnivDiamond(operand)
            if kind == "D":
                return DiffDiamond(operand)
            return Diamond(rel, operand)
        if tok.kind == "[":
            self.next()
            kind, rel = self.modal_ref("]")
            operand = self.prefixed()
            if kind == "U":
                return UnivBox(operand)
            if kind == "D":
                return DiffBox(operand)
            return Box(rel, operand)
        if tok.kind == "@":
            self.next()
            name = self.expect("ident")
            if name.text not in self.nominals:
                raise FormulaSyntaxError(f"unknown nominal {name.text!r}", name.pos)
            self.expect(".")
            return At(name.text, self.prefixed())
        if tok.kind == "<<":
            self.next()
            prog = self.program()
            self.expect(">>")
            return ProgDiamond(prog, self.prefixed())
        if tok.kind == "[[":
            self.next()
            prog = self.program()
            self.expect("]]")
            return ProgBox(prog, self.prefixed())
        if tok.kind == "ident" and tok.text == "count":
            self.next()
            self.expect("(")
            rel = self.relref()
            self.expect(",")
            cmp = self.comparison()
            self.expect(")")
            return Count(rel, cmp, self.prefixed())
        return self.primary()

    def primary(self) -> Formula:
        tok = self.next()
        if tok.kind == "ident":
            if tok.text == "true":
                return Top()
            if tok.text == "false":
                return Bottom()
            if tok.text == "down":
                raise UndecidableConstructError(
                    "the state-variable binder 'down' is rejected: model checking "
                    "formulae that bind the current state is undecidable on these models"
                )
            if tok.text == "lit":
                self.expect("(")
                sym = self.next()
                if len(sym.text) != 1 or sym.text not in self.alphabet:
                    raise FormulaSyntaxError(
                        f"{sym.text!r} is not an alphabet symbol", sym.pos
                    )
                self.expect(")")
                return LetterLit(sym.text)
            if tok.text in self.props:
                return Atom(tok.text)
            raise FormulaSyntaxError(f"unknown proposition {tok.text!r}", tok.pos)
        if tok.kind == "#":
            name = self.expect("ident")
            if name.text not in self.nominals:
                raise FormulaSyntaxError(f"unknown nominal {name.text!r}", name.pos)
            return Nominal(name.text)
        if tok.kind == "(":
            f = self.formula()
            self.expect(")")
            return f
        raise FormulaSyntaxError(f"unexpected {tok.text!r}", tok.pos)

    def modal_ref(self, closing: str) -> tuple[str, RelRef | None]:
        """Relation reference inside <...> or [...]; 'U' and 'D' are reserved."""
        name = self.expect("ident")
        if name.text in ("U", "D"):
            self.expect(closing)
            return name.text, None
        inverted = False
        if self.peek().kind == "~":
            self.next()
            inverted = True
        if name.text not in self.relations:
            raise FormulaSyntaxError(f"unknown relation {name.text!r}", name.pos)
        self.expect(closing)
        return "rel", RelRef(name.text, inverted)

    def relref(self) -> RelRef:
        name = self.expect("ident")
        if name.text not in self.relations:
            raise FormulaSyntaxError(f"unknown relation {name.text!r}", name.pos)
        inverted = False
        if self.peek().kind == "~":
            self.next()
            inverted = True
        return RelRef(name.text, inverted)

    def comparison(self) -> Comparison:
        tok = self.next()
        if tok.kind == ">=":
            return Comparison.at_least(int(self.expect("nat").text))
        if tok.kind == "<=":
            return Comparison.at_most(int(self.expect("nat").text))
        if tok.kind == "=":
            return Comparison.exactly(int(self.expect("nat").text))
        if tok.kind == "ident" and tok.text == "inf":
            return Comparison.infinite()
        raise FormulaSyntaxError(f"expected a comparison, found {tok.text!r}", tok.pos)

    # programs: union, then composition, then postfix converse
    def program(self) -> Program:
        left = self.program_term()
        while self.peek().kind == "+":
            self.next()
            left = ProgramUnion(left, self.program_term())
        return left

    def program_term(self) -> Program:
        left = self.program_factor()
        while self.peek().kind == ";":
            self.next()
            left = ProgramCompose(left, self.program_factor())
        return left

    def program_factor(self) -> Program:
        prog = self.program_atom()
        while self.peek().kind == "'":
            self.next()
            prog = Converse(prog)
        return prog

    def program_atom(self) -> Program:
        tok = self.peek()
        if tok.kind == "ident" and tok.text == "arrow":
            self.next()
            self.expect("(")
            f = self.formula()
            self.expect(")")
            return Arrow(f)
        if tok.kind == "ident" and tok.text in self.relations:
            # a test of a proposition shadowed by a relation name needs parentheses
            rel = self.relref()
            return AtomicProgram(rel)
        if tok.kind == "(":
            mark = self.i
            try:
                self.next()
                prog = self.program()
                self.expect(")")
                return prog
            except FormulaSyntaxError:
                self.i = mark
        f = self.prefixed()
        self.expect("?")
        return Test(f)

    def regex(self) -> StarFreeRegex:
        left = self.regex_term()
        while self.peek().kind == "+":
            self.next()
            left = RegexUnion(left, self.regex_term())
        return left

    def regex_term(self) -> StarFreeRegex:
        left = self.regex_atom()
        while self.peek().kind == ";":
            self.next()
            left = RegexConcat(left, self.regex_atom())
        return left

    def regex_atom(self) -> StarFreeRegex:
        tok = self.next()
        if tok.kind == "(":
            inner = self.regex()
            self.expect(")")
            return inner
        if tok.kind == "!":
            return RegexNot(self.regex_atom())
        if tok.kind in ("ident", "nat") and len(tok.text) == 1 and tok.text in self.alphabet:
            return Letter(tok.text)
        raise FormulaSyntaxError(f"unexpected {tok.text!r} in regex", tok.pos)


def parse_formula(
    text: str,
    alphabet: Alphabet,
    relations: set[str],
    props: set[str],
    nominals: set[str] | None = None,
) -> Formula:
    """Parse the concrete formula grammar against the declared vocabulary."""
    return _FormulaParser(text, alphabet, relations, props, nominals or set()).parse()


def parse_regex(text: str, alphabet: Alphabet) -> StarFreeRegex:
    """Parse an extended star-free regex: CHAR, '!'E, E '+' E, E ';' E, '(' E ')'."""
    parser = _FormulaParser(text, alphabet, set(), set(), set())
    e = parser.regex()
    tok = parser.peek()
    if tok.kind != "end":
        raise FormulaSyntaxError(f"unexpected trailing input {tok.text!r}", tok.pos)
    return e


# ---------------------------------------------------------------------------
# Printing (kept in sync with the parser; parse(format_formula(f)) == f)

_PREC_IMPLIES, _PREC_OR, _PREC_AND, _PREC_PREFIX = 0, 1, 2, 3


def format_formula(f: Formula) -> str:
    return _fmt(f, 0)


def _paren(s: str, prec: int, level: int) -> str:
    return f"({s})" if prec < level else s


def _fmt_rel(rel: RelRef) -> str:
    return rel.name + ("~" if rel.inverted else "")


def _fmt(f: Formula, level: int) -> str:
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Bottom):
        return "false"
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Nominal):
        return f"#{f.name}"
    if isinstance(f, LetterLit):
        return f"lit({f.symbol})"
    if isinstance(f, Not):
        return f"~{_fmt(f.operand, _PREC_PREFIX)}"
    if isinstance(f, And):
        s = f"{_fmt(f.left, _PREC_AND)} & {_fmt(f.right, _PREC_PREFIX)}"
        return _paren(s, _PREC_AND, level)
    if isinstance(f, Or):
        s = f"{_fmt(f.left, _PREC_OR)} | {_fmt(f.right, _PREC_AND)}"
        return _paren(s, _PREC_OR, level)
    if isinstance(f, Implies):
        s = f"{_fmt(f.left, _PREC_OR)} -> {_fmt(f.right, _PREC_IMPLIES)}"
        return _paren(s, _PREC_IMPLIES, level)
    if isinstance(f, Diamond):
        return f"<{_fmt_rel(f.rel)}> {_fmt(f.operand, _PREC_PREFIX)}"
    if isinstance(f, Box):
        return f"[{_fmt_rel(f.rel)}] {_fmt(f.operand, _PREC_PREFIX)}"
    if isinstance(f, UnivDiamond):
        return f"<U> {_fmt(f.operand, _PREC_PREFIX)}"
    if isinstance(f, UnivBox):
        return f"[U] {_fmt(f.operand, _PREC_PREFIX)}"
    if isinstance(f, DiffDiamond):
        return f"<D> {_fmt(f.operand, _PREC_PREFIX)}"
    if isinstance(f, DiffBox):
        return f"[D] {_fmt(f.operand, _PREC_PREFIX)}"
    if isinstance(f, At):
        return f"@{f.nominal}. {_fmt(f.operand, _PREC_PREFIX)}"
    if isinstance(f, Count):
        return f"count({_fmt_rel(f.rel)},{_fmt_cmp(f.cmp)}) {_fmt(f.operand, _PREC_PREFIX)}"
    if isinstance(f, ProgDiamond):
        return f"<<{format_program(f.program)}>> {_fmt(f.operand, _PREC_PREFIX)}"
    if isinstance(f, ProgBox):
        return f"[[{format_program(f.program)}]] {_fmt(f.operand, _PREC_PREFIX)}"
    raise InputError(f"cannot print {type(f).__name__}")


def _fmt_cmp(cmp: Comparison) -> str:
    if cmp.kind == "at_least":
        return f">={cmp.bound}"
    if cmp.kind == "at_most":
        return f"<={cmp.bound}"
    if cmp.kind == "exactly":
        return f"={cmp.bound}"
    return "inf"


_PPREC_UNION, _PPREC_COMPOSE, _PPREC_POSTFIX = 0, 1, 2


def format_program(p: Program) -> str:
    return _fmt_prog(p, 0)


def _fmt_prog(p: Program, level: int) -> str:
    if isinstance(p, AtomicProgram):
        return _fmt_rel(p.rel)
    if isinstance(p, Converse):
        return f"{_fmt_prog(p.inner, _PPREC_POSTFIX)}'"
    if isinstance(p, ProgramUnion):
        s = f"{_fmt_prog(p.left, _PPREC_UNION)} + {_fmt_prog(p.right, _PPREC_COMPOSE)}"
        return f"({s})" if level > _PPREC_UNION else s
    if isinstance(p, ProgramCompose):
        s = f"{_fmt_prog(p.left, _PPREC_COMPOSE)} ; {_fmt_prog(p.right, _PPREC_POSTFIX)}"
        return f"({s})" if level > _PPREC_COMPOSE else s
    if isinstance(p, Test):
        return f"{_fmt(p.formula, _PREC_PREFIX)}?"
    if isinstance(p, Arrow):
        return f"arrow({_fmt(p.formula, 0)})"
    raise InputError(f"cannot print {type(p).__name__}")


# ---------------------------------------------------------------------------
# Negation normal form

def nnf(f: Formula) -> Formula:
    """Push negations onto atomic formulae through the boolean and modal
    dualities; counting and program modalities are kept as opaque leaves,
    except that negated at-least/at-most counts flip into each other."""
    return _nnf_pos(f)


def _nnf_pos(f: Formula) -> Formula:
    if isinstance(f, (Atom, Nominal, LetterLit, Top, Bottom, Count, ProgDiamond, ProgBox)):
        return f
    if isinstance(f, Not):
        return _nnf_neg(f.operand)
    if isinstance(f, And):
        return And(_nnf_pos(f.left), _nnf_pos(f.right))
    if isinstance(f, Or):
        return Or(_nnf_pos(f.left), _nnf_pos(f.right))
    if isinstance(f, Implies):
        return Or(_nnf_neg(f.left), _nnf_pos(f.right))
    if isinstance(f, Diamond):
        return Diamond(f.rel, _nnf_pos(f.operand))
    if isinstance(f, Box):
        return Box(f.rel, _nnf_pos(f.operand))
    if isinstance(f, UnivDiamond):
        return UnivDiamond(_nnf_pos(f.operand))
    if isinstance(f, UnivBox):
        return UnivBox(_nnf_pos(f.operand))
    if isinstance(f, DiffDiamond):
        return DiffDiamond(_nnf_pos(f.operand))
    if isinstance(f, DiffBox):
        return DiffBox(_nnf_pos(f.operand))
    if isinstance(f, At):
        return At(f.nominal, _nnf_pos(f.operand))
    raise InputError(f"cannot normalize {type(f).__name__}")


def _nnf_neg(f: Formula) -> Formula:
    if isinstance(f, (Atom, Nominal, LetterLit)):
        return Not(f)
    if isinstance(f, Top):
        return Bottom()
    if isinstance(f, Bottom):
        return Top()
    if isinstance(f, Not):
        return _nnf_pos(f.operand)
    if isinstance(f, And):
        return Or(_nnf_neg(f.left), _nnf_neg(f.right))
    if isinstance(f, Or):
        return And(_nnf_neg(f.left), _nnf_neg(f.right))
    if isinstance(f, Implies):
        return And(_nnf_pos(f.left), _nnf_neg(f.right))
    if isinstance(f, Diamond):
        return Box(f.rel, _nnf_neg(f.operand))
    if isinstance(f, Box):
        return Diamond(f.rel, _nnf_neg(f.operand))
    if isinstance(f, UnivDiamond):
        return UnivBox(_nnf_neg(f.operand))
    if isinstance(f, UnivBox):
        return UnivDiamond(_nnf_neg(f.operand))
    if isinstance(f, DiffDiamond):
        return DiffBox(_nnf_neg(f.operand))
    if isinstance(f, DiffBox):
        return DiffDiamond(_nnf_neg(f.operand))
    if isinstance(f, At):
        return At(f.nominal, _nnf_neg(f.operand))
    if isinstance(f, Count):
        if f.cmp.kind == "at_least":
            if f.cmp.bound == 0:
                return Bottom()
            return Count(f.rel, Comparison.at_most(f.cmp.bound - 1), f.operand)
        if f.cmp.kind == "at_most":
            return Count(f.rel, Comparison.at_least(f.cmp.bound + 1), f.operand)
        return Not(f)
    if isinstance(f, (ProgDiamond, ProgBox)):
        return Not(f)
    raise InputError(f"cannot normalize {type(f).__name__}")


# ---------------------------------------------------------------------------
# Rank measures

_DIAMOND_LIKE = (Diamond, UnivDiamond, DiffDiamond, ProgDiamond, Count)
_BOX_LIKE = (Box, UnivBox, DiffBox, ProgBox, At)


def modal_rank(f: Formula) -> int:
    """Deepest nesting of modal operators; the formula is normalized first."""
    return _mr(nnf(f))


def _mr(f: Formula) -> int:
    if isinstance(f, (Atom, Nominal, LetterLit, Top, Bottom)):
        return 0
    if isinstance(f, Not):
        return _mr(f.operand)
    if isinstance(f, (And, Or, Implies)):
        return max(_mr(f.left), _mr(f.right))
    if isinstance(f, _DIAMOND_LIKE) or isinstance(f, _BOX_LIKE):
        return _mr(f.operand) + 1
    raise InputError(f"no modal rank for {type(f).__name__}")


def alternating_ranks(f: Formula) -> tuple[int, int]:
    """(alternating box rank, alternating diamond rank), computed on the NNF."""
    return _ar(nnf(f))


def _ar(f: Formula) -> tuple[int, int]:
    if isinstance(f, (Atom, Nominal, LetterLit, Top, Bottom)):
        return (0, 0)
    if isinstance(f, Not):
        return _ar(f.operand)
    if isinstance(f, (And, Or, Implies)):
        bl, dl = _ar(f.left)
        br, dr = _ar(f.right)
        return (max(bl, br), max(dl, dr))
    if isinstance(f, _DIAMOND_LIKE):
        b, _ = _ar(f.operand)
        return (b, b + 1)
    if isinstance(f, _BOX_LIKE):
        _, d = _ar(f.operand)
        return (d + 1, d)
    raise InputError(f"no alternation rank for {type(f).__name__}")


def alternation_rank(f: Formula) -> int:
    return max(alternating_ranks(f))


def formula_size(f: Formula) -> int:
    """Node count of the formula tree (programs and their formulae included)."""
    if isinstance(f, (Atom, Nominal, LetterLit, Top, Bottom)):
        return 1
    if isinstance(f, Not):
        return 1 + formula_size(f.operand)
    if isinstance(f, (And, Or, Implies)):
        return 1 + formula_size(f.left) + formula_size(f.right)
    if isinstance(f, (Diamond, Box, UnivDiamond, UnivBox, DiffDiamond, DiffBox, At, Count)):
        return 1 + formula_size(f.operand)
    if isinstance(f, (ProgDiamond, ProgBox)):
        return 1 + program_size(f.program) + formula_size(f.operand)
    raise InputError(f"no size for {type(f).__name__}")


def program_size(p: Program) -> int:
    if isinstance(p, AtomicProgram):
        return 1
    if isinstance(p, Converse):
        return 1 + program_size(p.inner)
    if isinstance(p, (ProgramUnion, ProgramCompose)):
        return 1 + program_size(p.left) + program_size(p.right)
    if isinstance(p, (Test, Arrow)):
        return 1 + formula_size(p.formula)
    raise InputError(f"no size for {type(p).__name__}")


def regex_size(e: StarFreeRegex) -> int:
    if isinstance(e, Letter):
        return 1
    if isinstance(e, RegexNot):
        return 1 + regex_size(e.inner)
    if isinstance(e, (RegexUnion, RegexConcat)):
        return 1 + regex_size(e.left) + regex_size(e.right)
    raise InputError(f"no size for {type(e).__name__}")


# ---------------------------------------------------------------------------
# Fragment predicates

def contains_counting(f: Formula) -> bool:
    if isinstance(f, Count):
        return True
    if isinstance(f, (Atom, Nominal, LetterLit, Top, Bottom)):
        return False
    if isinstance(f, Not):
        return contains_counting(f.operand)
    if isinstance(f, (And, Or, Implies)):
        return contains_counting(f.left) or contains_counting(f.right)
    if isinstance(f, (Diamond, Box, UnivDiamond, UnivBox, DiffDiamond, DiffBox, At)):
        return contains_counting(f.operand)
    if isinstance(f, (ProgDiamond, ProgBox)):
        return _program_contains_counting(f.program) or contains_counting(f.operand)
    raise InputError(f"cannot inspect {type(f).__name__}")


def _program_contains_counting(p: Program) -> bool:
    if isinstance(p, AtomicProgram):
        return False
    if isinstance(p, Converse):
        return _program_contains_counting(p.inner)
    if isinstance(p, (ProgramUnion, ProgramCompose)):
        return _program_contains_counting(p.left) or _program_contains_counting(p.right)
    if isinstance(p, (Test, Arrow)):
        return contains_counting(p.formula)
    raise InputError(f"cannot inspect {type(p).__name__}")


def in_counting_skeleton_fragment(f: Formula) -> bool:
    """True when no counting modality sits under any modal operator, i.e. the
    formula is a boolean combination of counting atoms over counting-free cores."""
    if isinstance(f, Count):
        return not contains_counting(f.operand)
    if isinstance(f, (Atom, Nominal, LetterLit, Top, Bottom)):
        return True
    if isinstance(f, Not):
        return in_counting_skeleton_fragment(f.operand)
    if isinstance(f, (And, Or, Implies)):
        return in_counting_skeleton_fragment(f.left) and in_counting_skeleton_fragment(f.right)
    # any modal operator: its scope must be counting-free
    return not contains_counting(f)


# ---------------------------------------------------------------------------
# Star-free regex translation

def translate_regex(e: StarFreeRegex) -> Formula:
    """Map a star-free regex to a formula whose extension over the free word
    model is the regex language: letters to letter literals, complement to
    negation, union to disjunction, concatenation to a prefix-erase diamond."""
    if isinstance(e, Letter):
        return LetterLit(e.symbol)
    if isinstance(e, RegexNot):
        return Not(translate_regex(e.inner))
    if isinstance(e, RegexUnion):
        return Or(translate_regex(e.left), translate_regex(e.right))
    if isinstance(e, RegexConcat):
        return ProgDiamond(Arrow(translate_regex(e.left)), translate_regex(e.right))
    raise InputError(f"cannot translate {type(e).__name__}")
