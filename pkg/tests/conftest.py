"""Shared fixtures: the machines from the illustrative models, built in code."""

from __future__ import annotations

from pathlib import Path

import pytest

from ratmc.automata import Alphabet, Nfa, concatenate, literal, universal
from ratmc.model import RationalKripkeModel
from ratmc.transducers import Transducer, normalize

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def ab() -> Alphabet:
    return Alphabet("01")


@pytest.fixture
def rewriter_automaton(ab) -> Nfa:
    """Acceptor of 1*(1+00*)."""
    return Nfa(ab, 3, 0, {1, 2}, [(0, "1", 0), (0, "0", 1), (0, "1", 2), (1, "0", 1)])


@pytest.fixture
def rewriter_transducer(ab) -> Transducer:
    return Transducer(
        ab,
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


@pytest.fixture
def rewriter_model(ab, rewriter_automaton, rewriter_transducer) -> RationalKripkeModel:
    return RationalKripkeModel(
        ab, universal(ab), {"R": rewriter_transducer}, {"x": rewriter_automaton}, {}, "rewriter"
    )


@pytest.fixture
def append_one_letter(ab) -> Transducer:
    """The child relation on words: pairs (u, u0) and (u, u1)."""
    return Transducer(
        ab, 2, 0, {1}, [(0, "0", "0", 0), (0, "1", "1", 0), (0, "", "0", 1), (0, "", "1", 1)]
    )


def zeros(ab: Alphabet) -> Nfa:
    return Nfa(ab, 1, 0, {0}, [(0, "0", 0)])


def petri_states(ab: Alphabet) -> Nfa:
    """0*10*."""
    return Nfa(ab, 2, 0, {1}, [(0, "0", 0), (0, "1", 1), (1, "0", 1)])


def petri_transducer(ab: Alphabet) -> Transducer:
    """Take two leading zeros, emit three trailing ones' worth of zeros."""
    return normalize(
        ab,
        3,
        0,
        {2},
        [(0, "0", "0", 0), (0, "001", "1", 1), (1, "0", "0", 1), (1, "", "000", 2)],
    )


@pytest.fixture
def petri_model(ab) -> RationalKripkeModel:
    v_p = concatenate(literal(ab, "001"), zeros(ab))
    v_q = concatenate(zeros(ab), literal(ab, "1000"))
    return RationalKripkeModel(
        ab,
        petri_states(ab),
        {"R": petri_transducer(ab)},
        {"p": v_p, "q": v_q},
        {"m0": "0000100000"},
        "petri",
    )


@pytest.fixture
def two_plus_zeros_then_one(ab) -> Nfa:
    """000*1, the pre-image of q under the firing relation."""
    return concatenate(concatenate(literal(ab, "00"), zeros(ab)), literal(ab, "1"))
