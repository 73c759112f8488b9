"""Rational transducers: asynchronous two-track automata over one alphabet.

Transitions carry an input label and an output label, each a single letter or
epsilon (the empty string).  Word-labelled machines are brought into this
letter-level normal form by `normalize`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .automata import EPSILON, Alphabet, Nfa, _adjacency
from .errors import InputError


@dataclass(frozen=True)
class Transducer:
    alphabet: Alphabet
    num_states: int
    initial: int
    accepting: frozenset[int]
    transitions: tuple[tuple[int, str, str, int], ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(
            self,
            "transitions",
            tuple(sorted({(q, x, y, r) for (q, x, y, r) in self.transitions})),
        )
        if self.num_states <= 0:
            raise InputError("transducer needs at least one state")
        if not 0 <= self.initial < self.num_states:
            raise InputError(f"initial state {self.initial} out of range")
        for q in self.accepting:
            if not 0 <= q < self.num_states:
                raise InputError(f"accepting state {q} out of range")
        for (q, x, y, r) in self.transitions:
            if not (0 <= q < self.num_states and 0 <= r < self.num_states):
                raise InputError(f"transition endpoint out of range in ({q},{x!r},{y!r},{r})")
            for lab in (x, y):
                if lab != EPSILON and lab not in self.alphabet:
                    raise InputError(f"transition label {lab!r} outside the alphabet")
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
            if len(self.names) != self.num_states:
                raise InputError("state name list does not match the state count")

    @property
    def num_transitions(self) -> int:
        return len(self.transitions)


def normalize(
    alphabet: Alphabet,
    num_states: int,
    initial: int,
    accepting: Iterable[int],
    word_transitions: Iterable[tuple[int, str, str, int]],
    names: tuple[str, ...] | None = None,
) -> Transducer:
    """Split word-labelled transitions into chains of letter-level steps.

    A transition reading u and writing v becomes a chain through fresh states:
    paired letter/letter steps while both words have letters left, then the
    longer side drained against epsilon.  The recognized relation is unchanged.
    """
    for (_, u, v, _) in word_transitions:
        for word in (u, v):
            for ch in word:
                if ch not in alphabet:
                    raise InputError(f"label character {ch!r} outside the alphabet")
    fresh = num_states
    out: list[tuple[int, str, str, int]] = []
    extra_names: list[str] = []
    taken = set(names) if names is not None else set()
    for (q, u, v, r) in word_transitions:
        steps: list[tuple[str, str]] = []
        k = min(len(u), len(v))
        steps += [(u[i], v[i]) for i in range(k)]
        steps += [(ch, EPSILON) for ch in u[k:]]
        steps += [(EPSILON, ch) for ch in v[k:]]
        if not steps:
            steps = [(EPSILON, EPSILON)]
        here = q
        for i, (x, y) in enumerate(steps):
            last = i == len(steps) - 1
            target = r if last else fresh
            if not last:
                fresh += 1
                if names is not None:
                    name = f"_n{fresh - 1}"
                    while name in taken:
                        name += "_"
                    taken.add(name)
                    extra_names.append(name)
            out.append((here, x, y, target))
            here = target
    all_names = None
    if names is not None:
        all_names = tuple(names) + tuple(extra_names)
    return Transducer(alphabet, fresh, initial, frozenset(accepting), tuple(out), all_names)


def relation_membership(t: Transducer, u: str, v: str) -> bool:
    """Whether the pair (u, v) is recognized; search over (state, i, j) triples."""
    if any(ch not in t.alphabet for ch in u) or any(ch not in t.alphabet for ch in v):
        return False
    start = (t.initial, 0, 0)
    seen = {start}
    todo = [start]
    while todo:
        (q, i, j) = todo.pop()
        if q in t.accepting and i == len(u) and j == len(v):
            return True
        for (p, x, y, r) in t.transitions:
            if p != q:
                continue
            ni = i + len(x)
            nj = j + len(y)
            if x != EPSILON and (i >= len(u) or u[i] != x):
                continue
            if y != EPSILON and (j >= len(v) or v[j] != y):
                continue
            nxt = (r, ni, nj)
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return False


def inverse(t: Transducer) -> Transducer:
    """Swap the input and output label of every transition."""
    return Transducer(
        t.alphabet,
        t.num_states,
        t.initial,
        t.accepting,
        tuple((q, y, x, r) for (q, x, y, r) in t.transitions),
        t.names,
    )


def t_union(a: Transducer, b: Transducer) -> Transducer:
    _check_same_alphabet(a, b)
    off_a, off_b = 1, 1 + a.num_states
    trans = [(0, EPSILON, EPSILON, a.initial + off_a), (0, EPSILON, EPSILON, b.initial + off_b)]
    trans += [(q + off_a, x, y, r + off_a) for (q, x, y, r) in a.transitions]
    trans += [(q + off_b, x, y, r + off_b) for (q, x, y, r) in b.transitions]
    accepting = frozenset({q + off_a for q in a.accepting} | {q + off_b for q in b.accepting})
    return Transducer(a.alphabet, 1 + a.num_states + b.num_states, 0, accepting, tuple(trans))


def compose(a: Transducer, b: Transducer) -> Transducer:
    """Relational composition: pairs (u, w) with some v where a maps u to v and b maps v to w.

    Pair construction synchronizing a's output track with b's input track;
    one-sided moves let a write epsilon or b read epsilon while the other
    machine waits.
    """
    _check_same_alphabet(a, b)
    adj_a: dict[int, list[tuple[str, str, int]]] = {q: [] for q in range(a.num_states)}
    for (q, x, y, r) in a.transitions:
        adj_a[q].append((x, y, r))
    adj_b: dict[int, list[tuple[str, str, int]]] = {q: [] for q in range(b.num_states)}
    for (q, x, y, r) in b.transitions:
        adj_b[q].append((x, y, r))
    start = (a.initial, b.initial)
    ids: dict[tuple[int, int], int] = {start: 0}
    queue: deque[tuple[int, int]] = deque([start])
    trans: list[tuple[int, str, str, int]] = []
    accepting: set[int] = set()

    def visit(pair: tuple[int, int]) -> int:
        if pair not in ids:
            ids[pair] = len(ids)
            queue.append(pair)
        return ids[pair]

    while queue:
        (p, q) = queue.popleft()
        sid = ids[(p, q)]
        if p in a.accepting and q in b.accepting:
            accepting.add(sid)
        for (x, y, p2) in adj_a[p]:
            if y == EPSILON:
                trans.append((sid, x, EPSILON, visit((p2, q))))
            else:
                for (y2, z, q2) in adj_b[q]:
                    if y2 == y:
                        trans.append((sid, x, z, visit((p2, q2))))
        for (y2, z, q2) in adj_b[q]:
            if y2 == EPSILON:
                trans.append((sid, EPSILON, z, visit((p, q2))))
    return Transducer(a.alphabet, len(ids), 0, frozenset(accepting), tuple(trans))


def synchronized_product(t: Transducer, a: Nfa) -> Nfa:
    """Automaton over transducer-A state pairs whose epsilon-reduction accepts
    exactly the words related by t to some word of L(a).

    A transducer step writing a letter drives one move of `a`; a step writing
    epsilon leaves `a` in place.  The edge label is the transducer's input
    label, so the result may contain epsilon labels.  `a` must be epsilon-free.
    """
    if t.alphabet.symbols != a.alphabet.symbols:
        raise InputError("transducer and automaton are over different alphabets")
    if any(x == EPSILON for (_, x, _) in a.transitions):
        raise InputError("automaton must be epsilon-free; eliminate epsilon first")
    adj_t: dict[int, list[tuple[str, str, int]]] = {q: [] for q in range(t.num_states)}
    for (q, x, y, r) in t.transitions:
        adj_t[q].append((x, y, r))
    adj_a = _adjacency(a)
    start = (t.initial, a.initial)
    ids: dict[tuple[int, int], int] = {start: 0}
    queue: deque[tuple[int, int]] = deque([start])
    trans: list[tuple[int, str, int]] = []
    accepting: set[int] = set()

    def visit(pair: tuple[int, int]) -> int:
        if pair not in ids:
            ids[pair] = len(ids)
            queue.append(pair)
        return ids[pair]

    while queue:
        (p, q) = queue.popleft()
        sid = ids[(p, q)]
        if p in t.accepting and q in a.accepting:
            accepting.add(sid)
        for (x, y, p2) in adj_t[p]:
            if y == EPSILON:
                trans.append((sid, x, visit((p2, q))))
            else:
                for (lab, q2) in adj_a[q]:
                    if lab == y:
                        trans.append((sid, x, visit((p2, q2))))
    return Nfa(a.alphabet, len(ids), 0, frozenset(accepting), tuple(trans))


def test_relation(x: Nfa) -> Transducer:
    """Identity relation restricted to L(x): every a-transition becomes a/a."""
    _require_epsilon_free(x)
    return Transducer(
        x.alphabet,
        x.num_states,
        x.initial,
        x.accepting,
        tuple((q, lab, lab, r) for (q, lab, r) in x.transitions),
        x.names,
    )


def eraser_relation(x: Nfa) -> Transducer:
    """Pairs (u, epsilon) for u in L(x): every a-transition becomes a/epsilon."""
    return Transducer(
        x.alphabet,
        x.num_states,
        x.initial,
        x.accepting,
        tuple((q, lab, EPSILON, r) for (q, lab, r) in x.transitions),
        x.names,
    )


def identity_relation(alphabet: Alphabet) -> Transducer:
    """Pairs (v, v) for every word v."""
    return Transducer(
        alphabet, 1, 0, frozenset({0}), tuple((0, s, s, 0) for s in alphabet)
    )


def arrow_relation(x: Nfa) -> Transducer:
    """Prefix-erase relation: pairs (uv, v) with u in L(x) and v arbitrary.

    Chains the eraser for L(x) in front of the identity relation, so the
    first part of the input is consumed against no output and the remainder
    is copied.
    """
    _require_epsilon_free(x)
    return _chain(eraser_relation(x), identity_relation(x.alphabet))


def _chain(a: Transducer, b: Transducer) -> Transducer:
    """Serial composition: component-wise concatenation of the two relations."""
    _check_same_alphabet(a, b)
    off_b = a.num_states
    trans = list(a.transitions)
    trans += [(q + off_b, x, y, r + off_b) for (q, x, y, r) in b.transitions]
    trans += [(q, EPSILON, EPSILON, b.initial + off_b) for q in sorted(a.accepting)]
    accepting = frozenset(q + off_b for q in b.accepting)
    return Transducer(a.alphabet, a.num_states + b.num_states, a.initial, accepting, tuple(trans))


def difference_relation(alphabet: Alphabet) -> Transducer:
    """Pairs of distinct words.

    State 0 matches a common prefix letter by letter and is left either on a
    position where the words disagree (state 1, after which anything goes) or
    by declaring one word a proper prefix of the other (states 2 and 3, which
    only drain the longer side).
    """
    eq, neq, longer_left, longer_right = 0, 1, 2, 3
    trans: list[tuple[int, str, str, int]] = []
    for a in alphabet:
        trans.append((eq, a, a, eq))
        trans.append((eq, a, EPSILON, longer_left))
        trans.append((eq, EPSILON, a, longer_right))
        trans.append((longer_left, a, EPSILON, longer_left))
        trans.append((longer_right, EPSILON, a, longer_right))
        trans.append((neq, a, EPSILON, neq))
        trans.append((neq, EPSILON, a, neq))
        for b in alphabet:
            trans.append((neq, a, b, neq))
            if a != b:
                trans.append((eq, a, b, neq))
    return Transducer(
        alphabet, 4, eq, frozenset({neq, longer_left, longer_right}), tuple(trans)
    )


def _require_epsilon_free(x: Nfa) -> None:
    if any(lab == EPSILON for (_, lab, _) in x.transitions):
        raise InputError("automaton must be epsilon-free; eliminate epsilon first")


def _check_same_alphabet(a: Transducer, b: Transducer) -> None:
    if a.alphabet.symbols != b.alphabet.symbols:
        raise InputError("transducers are over different alphabets")
