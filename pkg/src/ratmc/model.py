"""Rational Kripke models: a regular state space, named rational relations,
regular valuations, and singleton nominal denotations.

Model file format (`#` comments allowed; paths resolve against the model file):

    MODEL petri
    ALPHABET 0 1
    STATES FILE states.aut        # or: STATES INLINE ... END-INLINE
    REL R FILE trans.tr
    PROP p FILE p.aut
    NOMINAL i 00100
    END

An INLINE component wraps a complete AUTOMATON or TRANSDUCER block between
the INLINE directive and a closing END-INLINE line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .automata import (
    Alphabet,
    Nfa,
    complement,
    intersection,
    is_empty,
    language_membership,
    universal,
)
from .errors import FormatError, InputError
from .textio import (
    format_automaton,
    format_transducer,
    parse_automaton,
    parse_transducer,
)
from .transducers import Transducer


@dataclass(frozen=True)
class RationalKripkeModel:
    alphabet: Alphabet
    states: Nfa
    relations: dict[str, Transducer] = field(default_factory=dict)
    valuation: dict[str, Nfa] = field(default_factory=dict)
    nominals: dict[str, str] = field(default_factory=dict)
    name: str = "model"

    def __post_init__(self):
        if self.states.alphabet.symbols != self.alphabet.symbols:
            raise InputError("state space alphabet differs from the model alphabet")
        for rel_name, t in self.relations.items():
            if t.alphabet.symbols != self.alphabet.symbols:
                raise InputError(f"relation {rel_name!r} uses a different alphabet")
        for prop, a in self.valuation.items():
            if a.alphabet.symbols != self.alphabet.symbols:
                raise InputError(f"valuation of {prop!r} uses a different alphabet")
        for nom, word in self.nominals.items():
            for ch in word:
                if ch not in self.alphabet:
                    raise InputError(
                        f"nominal {nom!r} is bound to {word!r}, outside the alphabet"
                    )


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # 'error' | 'warning'
    message: str

    def __str__(self) -> str:
        return f"{self.severity}: {self.message}"


def validate(m: RationalKripkeModel) -> list[Diagnostic]:
    """Re-check the semantic invariants; returns diagnostics instead of raising.

    A valuation reaching outside the state space is only a warning because
    extensions are intersected with the state space during evaluation.
    """
    out: list[Diagnostic] = []
    for nom, word in sorted(m.nominals.items()):
        if not language_membership(m.states, word):
            out.append(
                Diagnostic("error", f"nominal {nom!r} denotes {word!r}, which is not a state")
            )
    sigma = universal(m.alphabet)
    outside = complement(m.states, sigma)
    for prop, a in sorted(m.valuation.items()):
        if not is_empty(intersection(a, outside)):
            out.append(
                Diagnostic(
                    "warning",
                    f"valuation of {prop!r} contains words outside the state space",
                )
            )
    return out


def free_word_model(alphabet: Alphabet, name: str = "free") -> RationalKripkeModel:
    """Model whose states are all words, with no relations and no propositions."""
    return RationalKripkeModel(alphabet, universal(alphabet), {}, {}, {}, name)


def _check_component_alphabet(
    kind: str, name: str, got: Alphabet, want: Alphabet, line: int, source: str
) -> None:
    if got.symbols != want.symbols:
        raise FormatError(
            f"{kind} {name!r} is over alphabet {''.join(got)} "
            f"but the model declares {''.join(want)}",
            line=line,
            source=source,
        )


def load_model(path: str | Path) -> RationalKripkeModel:
    path = Path(path)
    source = str(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read model file: {exc}", source=source)
    raw_lines = text.splitlines()

    model_name: str | None = None
    alphabet: Alphabet | None = None
    states: Nfa | None = None
    relations: dict[str, Transducer] = {}
    valuation: dict[str, Nfa] = {}
    nominals: dict[str, str] = {}
    closed = False

    def stripped(i: int) -> list[str]:
        return raw_lines[i].split("#", 1)[0].strip().split()

    def read_component(kind: str, tokens: list[str], i: int) -> tuple[object, int]:
        """Parse `... FILE path` or `... INLINE` starting at raw line index i.

        Returns the parsed machine and the next raw line index.
        """
        mode = tokens[0]
        parse = parse_automaton if kind == "AUTOMATON" else parse_transducer
        if mode == "FILE":
            if len(tokens) != 2:
                raise FormatError("FILE takes exactly one path", line=i + 1, source=source)
            ref = path.parent / tokens[1]
            try:
                body = ref.read_text(encoding="utf-8")
            except OSError as exc:
                raise FormatError(f"cannot read {ref}: {exc}", line=i + 1, source=source)
            return parse(body, source=str(ref)), i + 1
        if mode == "INLINE":
            if len(tokens) != 1:
                raise FormatError("INLINE takes no arguments", line=i + 1, source=source)
            block: list[str] = []
            j = i + 1
            while j < len(raw_lines):
                if raw_lines[j].split("#", 1)[0].strip() == "END-INLINE":
                    machine = parse(
                        "\n".join(block), source=source, first_line=i + 2
                    )
                    return machine, j + 1
                block.append(raw_lines[j])
                j += 1
            raise FormatError("INLINE block not closed by END-INLINE", line=i + 1, source=source)
        raise FormatError(f"expected FILE or INLINE, found {mode!r}", line=i + 1, source=source)

    i = 0
    while i < len(raw_lines):
        line_no = i + 1
        tokens = stripped(i)
        if not tokens:
            i += 1
            continue
        if closed:
            raise FormatError("content after END", line=line_no, source=source)
        directive = tokens[0]
        if directive == "MODEL":
            if model_name is not None:
                raise FormatError("duplicate MODEL directive", line=line_no, source=source)
            if len(tokens) != 2:
                raise FormatError("MODEL takes exactly one name", line=line_no, source=source)
            model_name = tokens[1]
            i += 1
        elif directive == "ALPHABET":
            if alphabet is not None:
                raise FormatError("duplicate ALPHABET directive", line=line_no, source=source)
            syms = tokens[1:]
            if "EPS" in syms:
                raise FormatError(
                    "EPS is reserved and cannot be an alphabet symbol",
                    line=line_no,
                    source=source,
                )
            try:
                alphabet = Alphabet(tuple(syms))
            except InputError as exc:
                raise FormatError(str(exc), line=line_no, source=source)
            i += 1
        elif directive == "STATES":
            if states is not None:
                raise FormatError("duplicate STATES directive", line=line_no, source=source)
            if alphabet is None:
                raise FormatError("STATES before ALPHABET", line=line_no, source=source)
            machine, i = read_component("AUTOMATON", tokens[1:], i)
            states = machine
            _check_component_alphabet(
                "state space", model_name or "?", states.alphabet, alphabet, line_no, source
            )
        elif directive == "REL":
            if alphabet is None:
                raise FormatError("REL before ALPHABET", line=line_no, source=source)
            if len(tokens) < 3:
                raise FormatError("REL takes: name FILE path | name INLINE", line=line_no, source=source)
            rel_name = tokens[1]
            if rel_name in relations:
                raise FormatError(f"duplicate relation {rel_name!r}", line=line_no, source=source)
            machine, i = read_component("TRANSDUCER", tokens[2:], i)
            _check_component_alphabet("relation", rel_name, machine.alphabet, alphabet, line_no, source)
            relations[rel_name] = machine
        elif directive == "PROP":
            if alphabet is None:
                raise FormatError("PROP before ALPHABET", line=line_no, source=source)
            if len(tokens) < 3:
                raise FormatError("PROP takes: name FILE path | name INLINE", line=line_no, source=source)
            prop = tokens[1]
            if prop in valuation:
                raise FormatError(f"duplicate proposition {prop!r}", line=line_no, source=source)
            machine, i = read_component("AUTOMATON", tokens[2:], i)
            _check_component_alphabet("proposition", prop, machine.alphabet, alphabet, line_no, source)
            valuation[prop] = machine
        elif directive == "NOMINAL":
            if len(tokens) != 3:
                raise FormatError("NOMINAL takes: name word", line=line_no, source=source)
            nom, word = tokens[1], tokens[2]
            if nom in nominals:
                raise FormatError(f"duplicate nominal {nom!r}", line=line_no, source=source)
            if word == "EPS":
                word = ""
            if alphabet is None:
                raise FormatError("NOMINAL before ALPHABET", line=line_no, source=source)
            for ch in word:
                if ch not in alphabet:
                    raise FormatError(
                        f"nominal word contains {ch!r}, outside ALPHABET",
                        line=line_no,
                        source=source,
                    )
            nominals[nom] = word
            i += 1
        elif directive == "END":
            closed = True
            i += 1
        else:
            raise FormatError(f"unknown directive {directive!r}", line=line_no, source=source)
    if not closed:
        raise FormatError("missing END", line=len(raw_lines), source=source)
    if alphabet is None:
        raise FormatError("model has no ALPHABET", source=source)
    if states is None:
        raise FormatError("model has no STATES", source=source)
    model = RationalKripkeModel(
        alphabet, states, relations, valuation, nominals, model_name or "model"
    )
    problems = [d for d in validate(model) if d.severity == "error"]
    if problems:
        raise FormatError("; ".join(d.message for d in problems), source=source)
    return model


def save_model(m: RationalKripkeModel, path: str | Path) -> None:
    """Write the model as a single file with all components inline."""
    lines = [f"MODEL {m.name}", "ALPHABET " + " ".join(m.alphabet)]

    def inline(block: str) -> list[str]:
        return block.rstrip("\n").splitlines() + ["END-INLINE"]

    lines.append("STATES INLINE")
    lines += inline(format_automaton(m.states))
    for rel_name in sorted(m.relations):
        lines.append(f"REL {rel_name} INLINE")
        lines += inline(format_transducer(m.relations[rel_name]))
    for prop in sorted(m.valuation):
        lines.append(f"PROP {prop} INLINE")
        lines += inline(format_automaton(m.valuation[prop]))
    for nom in sorted(m.nominals):
        word = m.nominals[nom] or "EPS"
        lines.append(f"NOMINAL {nom} {word}")
    lines.append("END")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
