"""Nondeterministic finite automata over character alphabets.

States are small integers 0..num_states-1; optional textual names are kept
only for file round-trips.  The empty string stands for the epsilon label.
All operations are pure and return fresh automata.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .errors import InputError

EPSILON = ""


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of single-character symbols."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise InputError("alphabet must not be empty")
        seen = set()
        for sym in self.symbols:
            if not isinstance(sym, str) or len(sym) != 1:
                raise InputError(f"alphabet symbol {sym!r} is not a single character")
            if sym in seen:
                raise InputError(f"duplicate alphabet symbol {sym!r}")
            seen.add(sym)

    def __contains__(self, sym: object) -> bool:
        return sym in self.symbols

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def without(self, sym: str) -> "Alphabet":
        return Alphabet(tuple(s for s in self.symbols if s != sym))


@dataclass(frozen=True)
class Nfa:
    """Finite automaton with a single initial state and optional epsilon moves."""

    alphabet: Alphabet
    num_states: int
    initial: int
    accepting: frozenset[int]
    transitions: tuple[tuple[int, str, int], ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(
            self, "transitions", tuple(sorted({(q, x, r) for (q, x, r) in self.transitions}))
        )
        if self.num_states <= 0:
            raise InputError("automaton needs at least one state")
        if not 0 <= self.initial < self.num_states:
            raise InputError(f"initial state {self.initial} out of range")
        for q in self.accepting:
            if not 0 <= q < self.num_states:
                raise InputError(f"accepting state {q} out of range")
        for (q, x, r) in self.transitions:
            if not (0 <= q < self.num_states and 0 <= r < self.num_states):
                raise InputError(f"transition ({q},{x!r},{r}) endpoint out of range")
            if x != EPSILON and x not in self.alphabet:
                raise InputError(f"transition label {x!r} outside the alphabet")
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
            if len(self.names) != self.num_states:
                raise InputError("state name list does not match the state count")

    @property
    def num_transitions(self) -> int:
        return len(self.transitions)


@dataclass(frozen=True)
class Cardinality:
    """Number of words in a regular language: an exact natural or infinite."""

    count: int | None  # None encodes an infinite language

    def __post_init__(self):
        if self.count is not None and self.count < 0:
            raise InputError("cardinality must be non-negative")

    @classmethod
    def exact(cls, n: int) -> "Cardinality":
        return cls(n)

    @classmethod
    def infinite(cls) -> "Cardinality":
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.count is None

    def at_least(self, k: int) -> bool:
        return True if self.is_infinite else self.count >= k

    def at_most(self, k: int) -> bool:
        return False if self.is_infinite else self.count <= k

    def __str__(self) -> str:
        return "infinite" if self.is_infinite else str(self.count)


def _check_same_alphabet(a: Nfa, b: Nfa) -> None:
    if a.alphabet.symbols != b.alphabet.symbols:
        raise InputError("automata are over different alphabets")


def _adjacency(a: Nfa) -> dict[int, list[tuple[str, int]]]:
    adj: dict[int, list[tuple[str, int]]] = {q: [] for q in range(a.num_states)}
    for (q, x, r) in a.transitions:
        adj[q].append((x, r))
    return adj


def _label_closure(a: Nfa, label: str) -> list[set[int]]:
    """For each state, the set of states reachable by label-only paths (reflexive)."""
    step: dict[int, list[int]] = {q: [] for q in range(a.num_states)}
    for (q, x, r) in a.transitions:
        if x == label:
            step[q].append(r)
    closures = []
    for start in range(a.num_states):
        seen = {start}
        todo = [start]
        while todo:
            q = todo.pop()
            for r in step[q]:
                if r not in seen:
                    seen.add(r)
                    todo.append(r)
        closures.append(seen)
    return closures


def _eps_closure(a: Nfa, states: set[int], closures: list[set[int]]) -> set[int]:
    out: set[int] = set()
    for q in states:
        out |= closures[q]
    return out


# ---------------------------------------------------------------------------
# Constructors for common languages


def empty_language(alphabet: Alphabet) -> Nfa:
    return Nfa(alphabet, 1, 0, frozenset(), ())


def universal(alphabet: Alphabet) -> Nfa:
    """Acceptor of every word over the alphabet."""
    return Nfa(alphabet, 1, 0, frozenset({0}), tuple((0, s, 0) for s in alphabet))


def literal(alphabet: Alphabet, word: str) -> Nfa:
    """Acceptor of exactly one word (the empty word is allowed)."""
    for ch in word:
        if ch not in alphabet:
            raise InputError(f"character {ch!r} outside the alphabet")
    n = len(word) + 1
    trans = tuple((i, word[i], i + 1) for i in range(len(word)))
    return Nfa(alphabet, n, 0, frozenset({n - 1}), trans)


# ---------------------------------------------------------------------------
# Decision procedures


def language_membership(a: Nfa, word: str) -> bool:
    """Epsilon-closure-aware state-set simulation."""
    for ch in word:
        if ch not in a.alphabet:
            raise InputError(f"character {ch!r} outside the alphabet")
    closures = _label_closure(a, EPSILON)
    current = _eps_closure(a, {a.initial}, closures)
    adj = _adjacency(a)
    for ch in word:
        moved = {r for q in current for (x, r) in adj[q] if x == ch}
        current = _eps_closure(a, moved, closures)
        if not current:
            return False
    return bool(current & a.accepting)


def is_empty(a: Nfa) -> bool:
    """True iff no accepting state is reachable from the initial state."""
    adj = _adjacency(a)
    seen = {a.initial}
    todo = [a.initial]
    while todo:
        q = todo.pop()
        if q in a.accepting:
            return False
        for (_, r) in adj[q]:
            if r not in seen:
                seen.add(r)
                todo.append(r)
    return True


def shortest_word(a: Nfa) -> str | None:
    """Shortest accepted word; ties broken by alphabet order. None if empty.

    Runs a best-first search where a word is encoded by the indices of its
    symbols, so the heap order is (length, alphabet-lexicographic).
    """
    b = trim(eliminate_epsilon(a))
    if not b.accepting:
        return None
    order = {s: i for i, s in enumerate(b.alphabet)}
    adj = _adjacency(b)
    heap: list[tuple[int, tuple[int, ...], int]] = [(0, (), b.initial)]
    settled: set[int] = set()
    while heap:
        length, idxs, q = heapq.heappop(heap)
        if q in settled:
            continue
        settled.add(q)
        if q in b.accepting:
            return "".join(b.alphabet.symbols[i] for i in idxs)
        for (x, r) in adj[q]:
            if r not in settled:
                heapq.heappush(heap, (length + 1, idxs + (order[x],), r))
    return None


# ---------------------------------------------------------------------------
# Reductions and normal forms


def gamma_reduction(a: Nfa, gamma: str) -> Nfa:
    """Automaton for the language of `a` with every occurrence of `gamma` erased.

    Drops gamma-transitions, re-targets every non-gamma transition reachable
    through a gamma-path (the bypass step closed transitively), and extends
    acceptance to states with a gamma-path into an accepting state.  When
    gamma is a proper letter it is removed from the result alphabet.
    """
    if gamma != EPSILON and gamma not in a.alphabet:
        raise InputError(f"{gamma!r} is not epsilon or an alphabet symbol")
    closures = _label_closure(a, gamma)
    adj = _adjacency(a)
    new_trans = set()
    for q in range(a.num_states):
        for p in closures[q]:
            for (x, r) in adj[p]:
                if x != gamma:
                    new_trans.add((q, x, r))
    new_accepting = frozenset(
        q for q in range(a.num_states) if closures[q] & a.accepting
    )
    if gamma == EPSILON:
        new_alphabet = a.alphabet
    else:
        if len(a.alphabet) == 1:
            raise InputError("reducing the only symbol would empty the alphabet")
        new_alphabet = a.alphabet.without(gamma)
    return Nfa(new_alphabet, a.num_states, a.initial, new_accepting, tuple(new_trans), a.names)


def eliminate_epsilon(a: Nfa) -> Nfa:
    return gamma_reduction(a, EPSILON)


def trim(a: Nfa) -> Nfa:
    """Keep only states that are reachable and co-reachable; language preserved.

    Returns the canonical one-state empty automaton when nothing useful is left.
    """
    adj = _adjacency(a)
    reach = {a.initial}
    todo = [a.initial]
    while todo:
        q = todo.pop()
        for (_, r) in adj[q]:
            if r not in reach:
                reach.add(r)
                todo.append(r)
    back: dict[int, list[int]] = {q: [] for q in range(a.num_states)}
    for (q, _, r) in a.transitions:
        back[r].append(q)
    coreach = set(a.accepting)
    todo = list(a.accepting)
    while todo:
        q = todo.pop()
        for p in back[q]:
            if p not in coreach:
                coreach.add(p)
                todo.append(p)
    keep = reach & coreach
    if a.initial not in keep:
        return empty_language(a.alphabet)
    remap = {old: new for new, old in enumerate(sorted(keep))}
    trans = tuple(
        (remap[q], x, remap[r]) for (q, x, r) in a.transitions if q in keep and r in keep
    )
    accepting = frozenset(remap[q] for q in a.accepting if q in keep)
    names = None
    if a.names is not None:
        names = tuple(a.names[old] for old in sorted(keep))
    return Nfa(a.alphabet, len(keep), remap[a.initial], accepting, trans, names)


def determinize(a: Nfa) -> Nfa:
    """Complete DFA via the subset construction (epsilon eliminated first)."""
    b = eliminate_epsilon(a)
    adj = _adjacency(b)
    start = frozenset({b.initial})
    ids: dict[frozenset[int], int] = {start: 0}
    queue: deque[frozenset[int]] = deque([start])
    trans: list[tuple[int, str, int]] = []
    accepting: set[int] = set()
    while queue:
        subset = queue.popleft()
        sid = ids[subset]
        if subset & b.accepting:
            accepting.add(sid)
        for sym in b.alphabet:
            target = frozenset(r for q in subset for (x, r) in adj[q] if x == sym)
            if target not in ids:
                ids[target] = len(ids)
                queue.append(target)
            trans.append((sid, sym, ids[target]))
    return Nfa(b.alphabet, len(ids), 0, frozenset(accepting), tuple(trans))


# ---------------------------------------------------------------------------
# Boolean combinations


def union(a: Nfa, b: Nfa) -> Nfa:
    _check_same_alphabet(a, b)
    off_a, off_b = 1, 1 + a.num_states
    trans = [(0, EPSILON, a.initial + off_a), (0, EPSILON, b.initial + off_b)]
    trans += [(q + off_a, x, r + off_a) for (q, x, r) in a.transitions]
    trans += [(q + off_b, x, r + off_b) for (q, x, r) in b.transitions]
    accepting = frozenset({q + off_a for q in a.accepting} | {q + off_b for q in b.accepting})
    return Nfa(a.alphabet, 1 + a.num_states + b.num_states, 0, accepting, tuple(trans))


def intersection(a: Nfa, b: Nfa) -> Nfa:
    """Product construction over the reachable pair states."""
    _check_same_alphabet(a, b)
    a2, b2 = eliminate_epsilon(a), eliminate_epsilon(b)
    adj_a, adj_b = _adjacency(a2), _adjacency(b2)
    start = (a2.initial, b2.initial)
    ids: dict[tuple[int, int], int] = {start: 0}
    queue: deque[tuple[int, int]] = deque([start])
    trans: list[tuple[int, str, int]] = []
    accepting: set[int] = set()
    while queue:
        (p, q) = queue.popleft()
        sid = ids[(p, q)]
        if p in a2.accepting and q in b2.accepting:
            accepting.add(sid)
        moves_b: dict[str, list[int]] = {}
        for (x, r) in adj_b[q]:
            moves_b.setdefault(x, []).append(r)
        for (x, r) in adj_a[p]:
            for s in moves_b.get(x, ()):
                if (r, s) not in ids:
                    ids[(r, s)] = len(ids)
                    queue.append((r, s))
                trans.append((sid, x, ids[(r, s)]))
    return Nfa(a.alphabet, len(ids), 0, frozenset(accepting), tuple(trans))


def complement(a: Nfa, universe: Nfa) -> Nfa:
    """Words of `universe` not accepted by `a`."""
    _check_same_alphabet(a, universe)
    d = determinize(a)
    flipped = Nfa(
        d.alphabet,
        d.num_states,
        d.initial,
        frozenset(range(d.num_states)) - d.accepting,
        d.transitions,
    )
    return intersection(flipped, universe)


def concatenate(a: Nfa, b: Nfa) -> Nfa:
    """Acceptor of L(a);L(b)."""
    _check_same_alphabet(a, b)
    off_b = a.num_states
    trans = list(a.transitions)
    trans += [(q + off_b, x, r + off_b) for (q, x, r) in b.transitions]
    trans += [(q, EPSILON, b.initial + off_b) for q in sorted(a.accepting)]
    accepting = frozenset(q + off_b for q in b.accepting)
    return Nfa(a.alphabet, a.num_states + b.num_states, a.initial, accepting, tuple(trans))


def is_equivalent(a: Nfa, b: Nfa) -> bool:
    """Language equality via emptiness of the symmetric difference."""
    _check_same_alphabet(a, b)
    sigma = universal(a.alphabet)
    return is_empty(intersection(a, complement(b, sigma))) and is_empty(
        intersection(b, complement(a, sigma))
    )


# ---------------------------------------------------------------------------
# Cardinality analysis


def count_words(a: Nfa) -> Cardinality:
    """Exact size of the language, or infinite.

    Determinizes first so distinct accepting paths spell distinct words, trims,
    then either finds a cycle (infinite) or counts accepting paths in the DAG.
    """
    d = trim(determinize(a))
    if not d.accepting:
        return Cardinality.exact(0)
    adj = _adjacency(d)
    # iterative three-color DFS; every state in a trim automaton is useful,
    # so any cycle pumps infinitely many distinct words
    WHITE, GREY, BLACK = 0, 1, 2
    color = [WHITE] * d.num_states
    stack: list[tuple[int, int]] = [(d.initial, 0)]
    color[d.initial] = GREY
    order: list[int] = []
    while stack:
        q, i = stack.pop()
        succs = adj[q]
        if i < len(succs):
            stack.append((q, i + 1))
            r = succs[i][1]
            if color[r] == GREY:
                return Cardinality.infinite()
            if color[r] == WHITE:
                color[r] = GREY
                stack.append((r, 0))
        else:
            color[q] = BLACK
            order.append(q)
    paths = [0] * d.num_states
    for q in order:  # reverse topological order
        total = 1 if q in d.accepting else 0
        for (_, r) in adj[q]:
            total += paths[r]
        paths[q] = total
    return Cardinality.exact(paths[d.initial])


def has_at_least(a: Nfa, k: int) -> bool:
    if k <= 0:
        return True
    return count_words(a).at_least(k)


def has_at_most(a: Nfa, k: int) -> bool:
    return not has_at_least(a, k + 1)


def has_exactly(a: Nfa, k: int) -> bool:
    return has_at_least(a, k) and has_at_most(a, k)
