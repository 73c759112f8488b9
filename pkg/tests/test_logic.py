import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratmc.automata import Alphabet
from ratmc.errors import FormulaSyntaxError, InputError, UndecidableConstructError
from ratmc.logic import (
    And,
    Arrow,
    At,
    Atom,
    AtomicProgram,
    Bottom,
    Box,
    Comparison,
    Converse,
    Count,
    Diamond,
    DiffBox,
    DiffDiamond,
    Implies,
    Letter,
    LetterLit,
    Nominal,
    Not,
    Or,
    ProgBox,
    ProgDiamond,
    ProgramCompose,
    ProgramUnion,
    RegexConcat,
    RegexNot,
    RegexUnion,
    RelRef,
    Test,
    Top,
    UnivBox,
    UnivDiamond,
    alternating_ranks,
    alternation_rank,
    contains_counting,
    format_formula,
    formula_size,
    in_counting_skeleton_fragment,
    modal_rank,
    nnf,
    parse_formula,
    parse_regex,
    regex_size,
    translate_regex,
)

AB = Alphabet("01")
RELS = {"R", "S"}
PROPS = {"p", "q"}
NOMS = {"i"}


def parse(text):
    return parse_formula(text, AB, RELS, PROPS, NOMS)


# ---------------------------------------------------------------------------
# parsing


def test_parse_atom():
    assert parse("p") == Atom("p")


def test_parse_rank_example_structure():
    f = parse("[R](<R>[R]p | [R][R~](~q))")
    r = RelRef("R")
    ri = RelRef("R", inverted=True)
    expected = Box(
        r, Or(Diamond(r, Box(r, Atom("p"))), Box(r, Box(ri, Not(Atom("q")))))
    )
    assert f == expected


def test_parse_rejects_down_binder():
    with pytest.raises(UndecidableConstructError):
        parse("down x. <R> x")


def test_parse_reports_unknown_names():
    with pytest.raises(FormulaSyntaxError):
        parse("unknown_prop")
    with pytest.raises(FormulaSyntaxError):
        parse("<T> p")
    with pytest.raises(FormulaSyntaxError):
        parse("#j")
    with pytest.raises(FormulaSyntaxError):
        parse("@j. p")


def test_parse_syntax_error_carries_position():
    with pytest.raises(FormulaSyntaxError) as exc:
        parse("p & & q")
    assert exc.value.position == 4


def test_parse_precedence():
    assert parse("p -> q | p & q") == Implies(Atom("p"), Or(Atom("q"), And(Atom("p"), Atom("q"))))
    assert parse("~p & q") == And(Not(Atom("p")), Atom("q"))
    assert parse("<R> p & q") == And(Diamond(RelRef("R"), Atom("p")), Atom("q"))
    assert parse("p -> q -> p") == Implies(Atom("p"), Implies(Atom("q"), Atom("p")))


def test_parse_universal_and_difference_modalities():
    assert parse("<U> p") == UnivDiamond(Atom("p"))
    assert parse("[U] p") == UnivBox(Atom("p"))
    assert parse("<D> p") == DiffDiamond(Atom("p"))
    assert parse("[D] p") == DiffBox(Atom("p"))


def test_parse_hybrid_atoms():
    assert parse("#i") == Nominal("i")
    assert parse("@i. p") == At("i", Atom("p"))
    assert parse("lit(0)") == LetterLit("0")
    with pytest.raises(FormulaSyntaxError):
        parse("lit(2)")


def test_parse_counting():
    assert parse("count(R,>=2) p") == Count(RelRef("R"), Comparison.at_least(2), Atom("p"))
    assert parse("count(R~,<=0) p") == Count(
        RelRef("R", True), Comparison.at_most(0), Atom("p")
    )
    assert parse("count(S,=3) q") == Count(RelRef("S"), Comparison.exactly(3), Atom("q"))
    assert parse("count(R,inf) p") == Count(RelRef("R"), Comparison.infinite(), Atom("p"))


def test_parse_programs():
    f = parse("<<R ; S' + p?>> q")
    expected = ProgDiamond(
        ProgramUnion(
            ProgramCompose(AtomicProgram(RelRef("R")), Converse(AtomicProgram(RelRef("S")))),
            Test(Atom("p")),
        ),
        Atom("q"),
    )
    assert f == expected
    assert parse("[[arrow(p)]] q") == ProgBox(Arrow(Atom("p")), Atom("q"))
    assert parse("<<R~>> p") == ProgDiamond(AtomicProgram(RelRef("R", True)), Atom("p"))
    assert parse("<<(p | q)?>> p") == ProgDiamond(Test(Or(Atom("p"), Atom("q"))), Atom("p"))


def test_parse_rejects_reserved_declared_names():
    with pytest.raises(InputError):
        parse_formula("p", AB, {"count"}, PROPS, set())
    with pytest.raises(InputError):
        parse_formula("p", AB, {"U"}, PROPS, set())


def test_parse_rejects_trailing_input():
    with pytest.raises(FormulaSyntaxError):
        parse("p q")


# ---------------------------------------------------------------------------
# printing round-trip


def formulas(depth=4):
    atoms = st.sampled_from(
        [Atom("p"), Atom("q"), Nominal("i"), LetterLit("0"), LetterLit("1"), Top(), Bottom()]
    )
    rels = st.sampled_from([RelRef("R"), RelRef("R", True), RelRef("S")])
    cmps = st.sampled_from(
        [Comparison.at_least(2), Comparison.at_most(1), Comparison.exactly(0), Comparison.infinite()]
    )

    def extend(children):
        programs = st.one_of(
            rels.map(AtomicProgram),
            st.builds(Converse, rels.map(AtomicProgram)),
            st.builds(ProgramUnion, rels.map(AtomicProgram), rels.map(AtomicProgram)),
            st.builds(ProgramCompose, rels.map(AtomicProgram), rels.map(AtomicProgram)),
            st.builds(Test, children),
            st.builds(Arrow, children),
        )
        return st.one_of(
            st.builds(Not, children),
            st.builds(And, children, children),
            st.builds(Or, children, children),
            st.builds(Implies, children, children),
            st.builds(Diamond, rels, children),
            st.builds(Box, rels, children),
            st.builds(UnivDiamond, children),
            st.builds(UnivBox, children),
            st.builds(DiffDiamond, children),
            st.builds(DiffBox, children),
            st.builds(At, st.just("i"), children),
            st.builds(Count, rels, cmps, children),
            st.builds(ProgDiamond, programs, children),
            st.builds(ProgBox, programs, children),
        )

    return st.recursive(atoms, extend, max_leaves=depth * 4)


@given(formulas())
@settings(max_examples=200, deadline=None)
def test_print_parse_round_trip(f):
    assert parse(format_formula(f)) == f


# ---------------------------------------------------------------------------
# negation normal form


def test_nnf_modal_dualities():
    assert nnf(parse("~<R>p")) == Box(RelRef("R"), Not(Atom("p")))
    assert nnf(parse("~[R]p")) == Diamond(RelRef("R"), Not(Atom("p")))
    assert nnf(parse("~(p & ~q)")) == Or(Not(Atom("p")), Atom("q"))
    assert nnf(parse("~[R~](p|q)")) == Diamond(
        RelRef("R", True), And(Not(Atom("p")), Not(Atom("q")))
    )
    assert nnf(parse("~<U>p")) == UnivBox(Not(Atom("p")))
    assert nnf(parse("~[D]p")) == DiffDiamond(Not(Atom("p")))
    assert nnf(parse("~true")) == Bottom()


def test_nnf_counting_flips():
    assert nnf(parse("~count(R,>=2) p")) == Count(
        RelRef("R"), Comparison.at_most(1), Atom("p")
    )
    assert nnf(parse("~count(R,<=1) p")) == Count(
        RelRef("R"), Comparison.at_least(2), Atom("p")
    )
    assert nnf(parse("~count(R,>=0) p")) == Bottom()
    # exact and infinite counts keep their negation outside
    assert nnf(parse("~count(R,=2) p")) == Not(parse("count(R,=2) p"))
    assert nnf(parse("~count(R,inf) p")) == Not(parse("count(R,inf) p"))


def _negations_only_on_leaves(f) -> bool:
    if isinstance(f, Not):
        return isinstance(f.operand, (Atom, Nominal, LetterLit, Count, ProgDiamond, ProgBox))
    if isinstance(f, (Atom, Nominal, LetterLit, Top, Bottom, Count, ProgDiamond, ProgBox)):
        return True
    if isinstance(f, (And, Or, Implies)):
        return _negations_only_on_leaves(f.left) and _negations_only_on_leaves(f.right)
    return _negations_only_on_leaves(f.operand)


@given(formulas())
@settings(max_examples=200, deadline=None)
def test_nnf_shape_and_size(f):
    g = nnf(f)
    assert _negations_only_on_leaves(g)
    assert formula_size(g) <= 2 * formula_size(f)
    assert nnf(g) == g


# ---------------------------------------------------------------------------
# ranks


def test_modal_rank_examples():
    assert modal_rank(parse("p")) == 0
    assert modal_rank(parse("~p")) == 0
    assert modal_rank(parse("<R><R>p")) == 2
    assert modal_rank(parse("[R](<R>[R]p | [R][R~](~q))")) == 3


def test_alternating_ranks_of_worked_example():
    f = parse("[R](<R>[R]p | [R][R~](~q))")
    assert alternating_ranks(f) == (3, 2)
    assert alternation_rank(f) == 3


def test_alternating_ranks_basics():
    assert alternating_ranks(parse("p")) == (0, 0)
    # nesting same-polarity diamonds does not increase alternation
    assert alternating_ranks(parse("<R><R>p")) == (0, 1)
    assert alternation_rank(parse("<R><R>p")) == 1


@given(formulas())
@settings(max_examples=200, deadline=None)
def test_alternation_rank_bounded_by_modal_rank(f):
    assert alternation_rank(f) <= modal_rank(f)


# ---------------------------------------------------------------------------
# fragments


def test_counting_fragment_predicates():
    assert not contains_counting(parse("<R>p"))
    assert contains_counting(parse("count(R,>=1) p"))
    assert in_counting_skeleton_fragment(parse("count(R,>=1) p & ~count(R,=2) q"))
    assert not in_counting_skeleton_fragment(parse("<R> count(R,=1) p"))
    assert not in_counting_skeleton_fragment(parse("count(R,>=1) count(R,>=1) p"))
    assert not in_counting_skeleton_fragment(parse("@i. count(R,>=1) p"))


# ---------------------------------------------------------------------------
# star-free regexes


def test_parse_regex():
    assert parse_regex("0", AB) == Letter("0")
    assert parse_regex("0;(1+0)", AB) == RegexConcat(
        Letter("0"), RegexUnion(Letter("1"), Letter("0"))
    )
    assert parse_regex("!(0+1);1", AB) == RegexConcat(
        RegexNot(RegexUnion(Letter("0"), Letter("1"))), Letter("1")
    )
    with pytest.raises(FormulaSyntaxError):
        parse_regex("01", AB)
    with pytest.raises(FormulaSyntaxError):
        parse_regex("2", AB)


def test_translate_regex_rules():
    assert translate_regex(Letter("0")) == LetterLit("0")
    assert translate_regex(parse_regex("0;1", AB)) == ProgDiamond(
        Arrow(LetterLit("0")), LetterLit("1")
    )
    assert translate_regex(parse_regex("!(0+1)", AB)) == Not(
        Or(LetterLit("0"), LetterLit("1"))
    )


def regexes():
    letters = st.sampled_from([Letter("0"), Letter("1")])

    def extend(children):
        return st.one_of(
            st.builds(RegexNot, children),
            st.builds(RegexUnion, children, children),
            st.builds(RegexConcat, children, children),
        )

    return st.recursive(letters, extend, max_leaves=8)


@given(regexes())
@settings(max_examples=200, deadline=None)
def test_translate_regex_size_bound(e):
    assert formula_size(translate_regex(e)) <= 2 * regex_size(e)
