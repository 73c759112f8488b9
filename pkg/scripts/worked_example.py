"""Walk through the synchronized-product construction on a small example.

Builds the acceptor of X = 1*(1+00*) and a looping rewriter relation R,
computes the automaton for the states with an R-successor in X, and checks
it against the closed form 0* + 0*1+.
"""

from ratmc.automata import (
    Alphabet,
    Nfa,
    concatenate,
    eliminate_epsilon,
    is_equivalent,
    literal,
    trim,
    union,
)
from ratmc.checker import CheckContext, global_check
from ratmc.logic import parse_formula
from ratmc.model import RationalKripkeModel
from ratmc.textio import automaton_dot, format_automaton
from ratmc.transducers import Transducer, synchronized_product

AB = Alphabet("01")


def build_model() -> RationalKripkeModel:
    x = Nfa(AB, 3, 0, {1, 2}, [(0, "1", 0), (0, "0", 1), (0, "1", 2), (1, "0", 1)])
    r = Transducer(
        AB,
        3,
        0,
        {1, 2},
        [
            (0, "", "1", 1),
            (1, "0", "1", 0),
            (0, "0", "1", 2),
            (1, "1", "0", 1),
            (2, "1", "1", 2),
        ],
    )
    states = Nfa(AB, 1, 0, {0}, [(0, "0", 0), (0, "1", 0)])
    return RationalKripkeModel(AB, states, {"R": r}, {"x": x}, {}, "worked")


def main() -> None:
    m = build_model()
    raw = synchronized_product(m.relations["R"], m.valuation["x"])
    print(f"raw product: {raw.num_states} states, {raw.num_transitions} transitions")
    reduced = trim(eliminate_epsilon(raw))
    print(f"after epsilon reduction and trimming: {reduced.num_states} states, "
          f"{reduced.num_transitions} transitions")

    ctx = CheckContext(m)
    f = parse_formula("<R> x", AB, {"R"}, {"x"}, set())
    ext = global_check(m, f, ctx)

    zeros = Nfa(AB, 1, 0, {0}, [(0, "0", 0)])
    ones = Nfa(AB, 1, 0, {0}, [(0, "1", 0)])
    closed_form = union(zeros, concatenate(zeros, concatenate(literal(AB, "1"), ones)))
    print("matches 0* + 0*1+ :", is_equivalent(ext, closed_form))

    print()
    print(format_automaton(ext))
    print(automaton_dot(ext, "diamond_x"))


if __name__ == "__main__":
    main()
