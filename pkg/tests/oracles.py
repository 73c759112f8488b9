"""Independent oracles used to cross-check the library.

Everything here decides properties by direct search on the raw transition
data, deliberately avoiding the constructions under test (epsilon reduction,
synchronized products, determinization).
"""

from __future__ import annotations

import random

from ratmc.automata import EPSILON, Alphabet, Nfa
from ratmc.transducers import Transducer


def all_words(alphabet: Alphabet, max_len: int) -> list[str]:
    out = [""]
    frontier = [""]
    for _ in range(max_len):
        frontier = [w + s for w in frontier for s in alphabet]
        out += frontier
    return out


def accepts_by_path_search(a: Nfa, word: str) -> bool:
    """Membership decided by saturating (state, position) pairs."""
    seen = {(a.initial, 0)}
    todo = [(a.initial, 0)]
    while todo:
        (q, i) = todo.pop()
        if i == len(word) and q in a.accepting:
            return True
        for (p, x, r) in a.transitions:
            if p != q:
                continue
            if x == EPSILON:
                nxt = (r, i)
            elif i < len(word) and word[i] == x:
                nxt = (r, i + 1)
            else:
                continue
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return False


def enumerate_language(a: Nfa, max_len: int) -> set[str]:
    return {w for w in all_words(a.alphabet, max_len) if accepts_by_path_search(a, w)}


def erases_to(a: Nfa, gamma: str, word: str) -> bool:
    """Does some u in L(a) erase to `word` when gamma is deleted?

    Saturates (state, position) pairs; gamma-steps and epsilon-steps leave the
    position fixed, which makes the search finite without a length bound.
    """
    seen = {(a.initial, 0)}
    todo = [(a.initial, 0)]
    while todo:
        (q, i) = todo.pop()
        if i == len(word) and q in a.accepting:
            return True
        for (p, x, r) in a.transitions:
            if p != q:
                continue
            if x == EPSILON or x == gamma:
                nxt = (r, i)
            elif i < len(word) and word[i] == x:
                nxt = (r, i + 1)
            else:
                continue
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return False


def enumerate_pairs(t: Transducer, max_steps: int) -> set[tuple[str, str]]:
    """All pairs with an accepting run of at most max_steps transitions."""
    out: set[tuple[str, str]] = set()
    frontier = {(t.initial, "", "")}
    for step in range(max_steps + 1):
        for (q, u, v) in frontier:
            if q in t.accepting:
                out.add((u, v))
        if step == max_steps:
            break
        nxt = set()
        for (q, u, v) in frontier:
            for (p, x, y, r) in t.transitions:
                if p == q:
                    nxt.add((r, u + x, v + y))
        frontier = nxt | frontier
    for (q, u, v) in frontier:
        if q in t.accepting:
            out.add((u, v))
    return out


def relates_by_run_search(t: Transducer, u: str, v: str) -> bool:
    """Membership of (u, v) in the relation, by (state, i, j) saturation."""
    seen = {(t.initial, 0, 0)}
    todo = [(t.initial, 0, 0)]
    while todo:
        (q, i, j) = todo.pop()
        if q in t.accepting and i == len(u) and j == len(v):
            return True
        for (p, x, y, r) in t.transitions:
            if p != q:
                continue
            ni, nj = i, j
            if x != EPSILON:
                if i >= len(u) or u[i] != x:
                    continue
                ni = i + 1
            if y != EPSILON:
                if j >= len(v) or v[j] != y:
                    continue
                nj = j + 1
            if (r, ni, nj) not in seen:
                seen.add((r, ni, nj))
                todo.append((r, ni, nj))
    return False


def has_companion_in(t: Transducer, u: str, lang: Nfa) -> bool:
    """Does some accepting run of t spell input u with output in L(lang)?

    The witness search runs over (transducer state, input position, set of
    automaton states); deduplicating configurations is what the pumping bound
    on run length justifies.  `lang` must be epsilon-free.
    """
    assert all(x != EPSILON for (_, x, _) in lang.transitions)
    start = (t.initial, 0, frozenset({lang.initial}))
    seen = {start}
    todo = [start]
    while todo:
        (q, i, states) = todo.pop()
        if q in t.accepting and i == len(u) and states & lang.accepting:
            return True
        for (p, x, y, r) in t.transitions:
            if p != q:
                continue
            ni = i
            if x != EPSILON:
                if i >= len(u) or u[i] != x:
                    continue
                ni = i + 1
            if y == EPSILON:
                nstates = states
            else:
                nstates = frozenset(
                    s2 for s in states for (s1, lab, s2) in lang.transitions
                    if s1 == s and lab == y
                )
                if not nstates:
                    continue
            nxt = (r, ni, nstates)
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return False


def successors_by_runs(t: Transducer, state: str, max_steps: int) -> set[str]:
    """Outputs of accepting runs reading exactly `state`, up to max_steps steps."""
    out: set[str] = set()
    frontier = {(t.initial, 0, "")}
    for step in range(max_steps + 1):
        for (q, i, v) in frontier:
            if q in t.accepting and i == len(state):
                out.add(v)
        if step == max_steps:
            break
        nxt = set(frontier)
        for (q, i, v) in frontier:
            for (p, x, y, r) in t.transitions:
                if p != q:
                    continue
                ni = i
                if x != EPSILON:
                    if i >= len(state) or state[i] != x:
                        continue
                    ni = i + 1
                nxt.add((r, ni, v + y))
        frontier = nxt
    return out


# ---------------------------------------------------------------------------
# The recursive remove-one-word counting procedure


def _find_any_word(a: Nfa) -> str | None:
    """Some accepted word, by breadth-first path search.

    A minimal-step accepting path never revisits a state, so paths of up to
    num_states transitions are enough to find a word iff one exists.
    """
    frontier = {(a.initial, "")}
    for _ in range(a.num_states + 1):
        for (q, w) in sorted(frontier):
            if q in a.accepting:
                return w
        frontier = {
            (r, w + x)
            for (q, w) in frontier
            for (p, x, r) in a.transitions
            if p == q
        }
    return None


def at_least_by_word_removal(a: Nfa, k: int) -> bool:
    """At-least-k-words decided by repeatedly removing one found word."""
    from ratmc.automata import complement, intersection, literal, universal

    if k <= 0:
        return True
    current = a
    for _ in range(k):
        w = _find_any_word(current)
        if w is None:
            return False
        without = complement(literal(a.alphabet, w), universal(a.alphabet))
        current = intersection(current, without)
    return True


# ---------------------------------------------------------------------------
# Brute-force star-free regex semantics


def regex_language(e, alphabet: Alphabet, max_len: int) -> set[str]:
    """Words of length <= max_len in the regex language (exact on that range)."""
    from ratmc.logic import Letter, RegexConcat, RegexNot, RegexUnion

    universe = set(all_words(alphabet, max_len))
    if isinstance(e, Letter):
        return {e.symbol} & universe
    if isinstance(e, RegexNot):
        return universe - regex_language(e.inner, alphabet, max_len)
    if isinstance(e, RegexUnion):
        return regex_language(e.left, alphabet, max_len) | regex_language(
            e.right, alphabet, max_len
        )
    if isinstance(e, RegexConcat):
        left = regex_language(e.left, alphabet, max_len)
        right = regex_language(e.right, alphabet, max_len)
        return {u + v for u in left for v in right if len(u) + len(v) <= max_len}
    raise TypeError(type(e).__name__)


# ---------------------------------------------------------------------------
# Random instance generators (seeded by the caller)


def random_nfa(
    rng: random.Random,
    alphabet: Alphabet,
    max_states: int,
    allow_epsilon: bool = True,
    density: float = 1.5,
) -> Nfa:
    n = rng.randint(1, max_states)
    labels = list(alphabet.symbols) + ([EPSILON] if allow_epsilon else [])
    num_edges = rng.randint(0, max(1, int(density * n * len(labels)) // 2))
    trans = [
        (rng.randrange(n), rng.choice(labels), rng.randrange(n)) for _ in range(num_edges)
    ]
    accepting = frozenset(q for q in range(n) if rng.random() < 0.4)
    return Nfa(alphabet, n, rng.randrange(n), accepting, tuple(trans))


def random_transducer(
    rng: random.Random, alphabet: Alphabet, max_states: int, density: float = 1.5
) -> Transducer:
    n = rng.randint(1, max_states)
    labels = list(alphabet.symbols) + [EPSILON]
    num_edges = rng.randint(1, max(2, int(density * n * len(labels)) // 2))
    trans = [
        (rng.randrange(n), rng.choice(labels), rng.choice(labels), rng.randrange(n))
        for _ in range(num_edges)
    ]
    accepting = frozenset(q for q in range(n) if rng.random() < 0.4)
    return Transducer(alphabet, n, rng.randrange(n), accepting, tuple(trans))


def random_regex(rng: random.Random, alphabet: Alphabet, depth: int):
    from ratmc.logic import Letter, RegexConcat, RegexNot, RegexUnion

    if depth <= 0 or rng.random() < 0.3:
        return Letter(rng.choice(alphabet.symbols))
    pick = rng.random()
    if pick < 0.3:
        return RegexNot(random_regex(rng, alphabet, depth - 1))
    if pick < 0.65:
        return RegexUnion(
            random_regex(rng, alphabet, depth - 1), random_regex(rng, alphabet, depth - 1)
        )
    return RegexConcat(
        random_regex(rng, alphabet, depth - 1), random_regex(rng, alphabet, depth - 1)
    )
