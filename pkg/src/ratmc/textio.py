"""Line-oriented text formats for automata and transducers, plus DOT export.

Both formats share the same frame: a header line, directive lines with
whitespace-separated tokens, `#` comments, and a closing END.  Parsing is
strict; anything unknown is an error carrying the offending line number.

    AUTOMATON                TRANSDUCER
    ALPHABET 0 1             ALPHABET 0 1
    STATES q1 q2             STATES s1 s2 s3
    INITIAL q1               INITIAL s1
    ACCEPT q2                ACCEPT s3
    TRANS q1 0 q1            TRANS s1 0/0 s1
    TRANS q1 EPS q2          TRANS s1 001/1 s2
    END                      TRANS s2 EPS/000 s3
                             END

`EPS` is the reserved epsilon marker and may not be declared in ALPHABET.
Transducer labels are `<in>/<out>` where each side is a word or `EPS`;
word labels are split into letter-level steps on load.
"""

from __future__ import annotations

from pathlib import Path

from .automata import EPSILON, Alphabet, Nfa
from .errors import FormatError
from .transducers import Transducer, normalize

EPS_MARKER = "EPS"


def _logical_lines(text: str, first_line: int) -> list[tuple[int, list[str]]]:
    out = []
    for offset, raw in enumerate(text.splitlines()):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        out.append((first_line + offset, line.split()))
    return out


class _BlockReader:
    """Shared directive handling for the two machine formats."""

    def __init__(self, lines: list[tuple[int, list[str]]], source: str):
        self.lines = lines
        self.source = source
        self.alphabet: Alphabet | None = None
        self.state_ids: dict[str, int] = {}
        self.names: tuple[str, ...] = ()
        self.initial: int | None = None
        self.accepting: set[int] = set()

    def fail(self, msg: str, line: int) -> FormatError:
        return FormatError(msg, line=line, source=self.source)

    def read_alphabet(self, tokens: list[str], line: int) -> None:
        if self.alphabet is not None:
            raise self.fail("duplicate ALPHABET directive", line)
        syms = tokens[1:]
        if not syms:
            raise self.fail("ALPHABET needs at least one symbol", line)
        for s in syms:
            if s == EPS_MARKER:
                raise self.fail("EPS is reserved and cannot be an alphabet symbol", line)
            if len(s) != 1:
                raise self.fail(f"alphabet symbol {s!r} is not a single character", line)
        if len(set(syms)) != len(syms):
            raise self.fail("duplicate alphabet symbol", line)
        self.alphabet = Alphabet(tuple(syms))

    def read_states(self, tokens: list[str], line: int) -> None:
        if self.state_ids:
            raise self.fail("duplicate STATES directive", line)
        if len(tokens) < 2:
            raise self.fail("STATES needs at least one state name", line)
        names = tokens[1:]
        if len(set(names)) != len(names):
            raise self.fail("duplicate state name", line)
        self.state_ids = {name: i for i, name in enumerate(names)}
        self.names = tuple(names)

    def state(self, name: str, line: int) -> int:
        if name not in self.state_ids:
            raise self.fail(f"undeclared state {name!r}", line)
        return self.state_ids[name]

    def read_initial(self, tokens: list[str], line: int) -> None:
        if self.initial is not None:
            raise self.fail("duplicate INITIAL directive", line)
        if len(tokens) != 2:
            raise self.fail("INITIAL takes exactly one state", line)
        self.initial = self.state(tokens[1], line)

    def read_accept(self, tokens: list[str], line: int) -> None:
        for name in tokens[1:]:
            self.accepting.add(self.state(name, line))

    def check_complete(self, header: str, last_line: int) -> None:
        if self.alphabet is None:
            raise self.fail(f"{header} block has no ALPHABET", last_line)
        if not self.state_ids:
            raise self.fail(f"{header} block has no STATES", last_line)
        if self.initial is None:
            raise self.fail(f"{header} block has no INITIAL", last_line)

    def label(self, token: str, line: int) -> str:
        if token == EPS_MARKER:
            return EPSILON
        if len(token) != 1 or token not in self.alphabet:
            raise self.fail(f"label {token!r} outside ALPHABET and not EPS", line)
        return token

    def word_label(self, token: str, line: int) -> str:
        if token == EPS_MARKER:
            return EPSILON
        for ch in token:
            if ch not in self.alphabet:
                raise self.fail(f"label character {ch!r} outside ALPHABET", line)
        return token


def parse_automaton(text: str, source: str = "<string>", first_line: int = 1) -> Nfa:
    lines = _logical_lines(text, first_line)
    if not lines or lines[0][1] != ["AUTOMATON"]:
        line = lines[0][0] if lines else first_line
        raise FormatError("expected AUTOMATON header", line=line, source=source)
    reader = _BlockReader(lines, source)
    transitions: list[tuple[int, str, int]] = []
    closed = False
    for (line, tokens) in lines[1:]:
        if closed:
            raise reader.fail("content after END", line)
        directive = tokens[0]
        if directive == "ALPHABET":
            reader.read_alphabet(tokens, line)
        elif directive == "STATES":
            reader.read_states(tokens, line)
        elif directive == "INITIAL":
            reader.read_initial(tokens, line)
        elif directive == "ACCEPT":
            reader.read_accept(tokens, line)
        elif directive == "TRANS":
            if reader.alphabet is None or not reader.state_ids:
                raise reader.fail("TRANS before ALPHABET and STATES", line)
            if len(tokens) != 4:
                raise reader.fail("TRANS takes: source label target", line)
            src = reader.state(tokens[1], line)
            lab = reader.label(tokens[2], line)
            dst = reader.state(tokens[3], line)
            transitions.append((src, lab, dst))
        elif directive == "END":
            if len(tokens) != 1:
                raise reader.fail("END takes no arguments", line)
            closed = True
        else:
            raise reader.fail(f"unknown directive {directive!r}", line)
    if not closed:
        raise FormatError("missing END", line=lines[-1][0], source=source)
    reader.check_complete("AUTOMATON", lines[-1][0])
    return Nfa(
        reader.alphabet,
        len(reader.state_ids),
        reader.initial,
        frozenset(reader.accepting),
        tuple(transitions),
        reader.names,
    )


def parse_transducer(text: str, source: str = "<string>", first_line: int = 1) -> Transducer:
    lines = _logical_lines(text, first_line)
    if not lines or lines[0][1] != ["TRANSDUCER"]:
        line = lines[0][0] if lines else first_line
        raise FormatError("expected TRANSDUCER header", line=line, source=source)
    reader = _BlockReader(lines, source)
    word_transitions: list[tuple[int, str, str, int]] = []
    closed = False
    for (line, tokens) in lines[1:]:
        if closed:
            raise reader.fail("content after END", line)
        directive = tokens[0]
        if directive == "ALPHABET":
            reader.read_alphabet(tokens, line)
        elif directive == "STATES":
            reader.read_states(tokens, line)
        elif directive == "INITIAL":
            reader.read_initial(tokens, line)
        elif directive == "ACCEPT":
            reader.read_accept(tokens, line)
        elif directive == "TRANS":
            if reader.alphabet is None or not reader.state_ids:
                raise reader.fail("TRANS before ALPHABET and STATES", line)
            if len(tokens) != 4:
                raise reader.fail("TRANS takes: source in/out target", line)
            src = reader.state(tokens[1], line)
            if tokens[2].count("/") != 1:
                raise reader.fail(f"label {tokens[2]!r} is not of the form in/out", line)
            raw_in, raw_out = tokens[2].split("/")
            lab_in = reader.word_label(raw_in, line)
            lab_out = reader.word_label(raw_out, line)
            dst = reader.state(tokens[3], line)
            word_transitions.append((src, lab_in, lab_out, dst))
        elif directive == "END":
            if len(tokens) != 1:
                raise reader.fail("END takes no arguments", line)
            closed = True
        else:
            raise reader.fail(f"unknown directive {directive!r}", line)
    if not closed:
        raise FormatError("missing END", line=lines[-1][0], source=source)
    reader.check_complete("TRANSDUCER", lines[-1][0])
    return normalize(
        reader.alphabet,
        len(reader.state_ids),
        reader.initial,
        frozenset(reader.accepting),
        word_transitions,
        reader.names,
    )


def _state_names(num_states: int, names: tuple[str, ...] | None) -> tuple[str, ...]:
    if names is not None:
        return names
    return tuple(f"q{i}" for i in range(num_states))


def format_automaton(a: Nfa) -> str:
    names = _state_names(a.num_states, a.names)
    lines = ["AUTOMATON", "ALPHABET " + " ".join(a.alphabet)]
    lines.append("STATES " + " ".join(names))
    lines.append(f"INITIAL {names[a.initial]}")
    if a.accepting:
        lines.append("ACCEPT " + " ".join(names[q] for q in sorted(a.accepting)))
    for (q, x, r) in a.transitions:
        lines.append(f"TRANS {names[q]} {x if x != EPSILON else EPS_MARKER} {names[r]}")
    lines.append("END")
    return "\n".join(lines) + "\n"


def format_transducer(t: Transducer) -> str:
    names = _state_names(t.num_states, t.names)
    lines = ["TRANSDUCER", "ALPHABET " + " ".join(t.alphabet)]
    lines.append("STATES " + " ".join(names))
    lines.append(f"INITIAL {names[t.initial]}")
    if t.accepting:
        lines.append("ACCEPT " + " ".join(names[q] for q in sorted(t.accepting)))
    for (q, x, y, r) in t.transitions:
        xs = x if x != EPSILON else EPS_MARKER
        ys = y if y != EPSILON else EPS_MARKER
        lines.append(f"TRANS {names[q]} {xs}/{ys} {names[r]}")
    lines.append("END")
    return "\n".join(lines) + "\n"


def load_automaton(path: str | Path) -> Nfa:
    path = Path(path)
    return parse_automaton(path.read_text(encoding="utf-8"), source=str(path))


def load_transducer(path: str | Path) -> Transducer:
    path = Path(path)
    return parse_transducer(path.read_text(encoding="utf-8"), source=str(path))


def save_automaton(a: Nfa, path: str | Path) -> None:
    Path(path).write_text(format_automaton(a), encoding="utf-8")


def save_transducer(t: Transducer, path: str | Path) -> None:
    Path(path).write_text(format_transducer(t), encoding="utf-8")


# ---------------------------------------------------------------------------
# DOT rendering (presentational only)


def automaton_dot(a: Nfa, graph_name: str = "automaton") -> str:
    names = _state_names(a.num_states, a.names)
    lines = [f"digraph {graph_name} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for i, name in enumerate(names):
        shape = "doublecircle" if i in a.accepting else "circle"
        lines.append(f'  "{name}" [shape={shape}];')
    lines.append(f'  __start -> "{names[a.initial]}";')
    for (q, x, r) in a.transitions:
        lab = x if x != EPSILON else "eps"
        lines.append(f'  "{names[q]}" -> "{names[r]}" [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def transducer_dot(t: Transducer, graph_name: str = "transducer") -> str:
    names = _state_names(t.num_states, t.names)
    lines = [f"digraph {graph_name} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for i, name in enumerate(names):
        shape = "doublecircle" if i in t.accepting else "circle"
        lines.append(f'  "{name}" [shape={shape}];')
    lines.append(f'  __start -> "{names[t.initial]}";')
    for (q, x, y, r) in t.transitions:
        xs = x if x != EPSILON else "eps"
        ys = y if y != EPSILON else "eps"
        lines.append(f'  "{names[q]}" -> "{names[r]}" [label="{xs}/{ys}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
