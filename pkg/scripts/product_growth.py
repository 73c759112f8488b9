"""Measure automaton growth along nested diamond chains.

For <R>^m x the m-th product should stay within |T| * (|A| + states(A)) of
the previous step's result, where sizes count transition edges.  Trimming
between steps keeps the intermediate automata small in practice; the table
shows both the measured product size and the bound.
"""

import argparse

from ratmc.checker import CheckContext, global_check
from ratmc.logic import Atom, Diamond, RelRef

from worked_example import build_model


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--depth", type=int, default=6, help="deepest chain to measure")
    args = parser.parse_args()

    m = build_model()
    t_edges = m.relations["R"].num_transitions
    print(f"transducer size: {t_edges} edges")
    print(f"{'m':>2}  {'arg states':>10}  {'arg trans':>9}  {'product trans':>13}  {'bound':>6}")

    f = Atom("x")
    for depth in range(1, args.depth + 1):
        f = Diamond(RelRef("R"), f)
        ctx = CheckContext(m)
        global_check(m, f, ctx)
        arg, node = ctx.stats[-2], ctx.stats[-1]
        bound = t_edges * (arg.transitions + arg.states)
        print(
            f"{depth:>2}  {arg.states:>10}  {arg.transitions:>9}  "
            f"{node.product_transitions:>13}  {bound:>6}"
        )
        assert node.product_transitions <= bound


if __name__ == "__main__":
    main()
