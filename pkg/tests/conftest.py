"""Shared helpers: known groups, seeded random words, criterion reporting."""

from __future__ import annotations

import random
from typing import List

import pytest

from z2z4q8 import CodeGroup, GroupSignature, GroupWord, word, word_from_tokens
from z2z4q8.fixtures import load_fixture

_CRITERION_LINES: List[str] = []


def record_criterion_line(line: str) -> None:
    """Collect acceptance pass lines for the terminal summary."""
    _CRITERION_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config) -> None:
    if _CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERION_LINES:
            terminalreporter.write_line(line)


def random_word(sig: GroupSignature, rng: random.Random) -> GroupWord:
    coords = [rng.randrange(2) for _ in range(sig.k1)]
    coords += [rng.randrange(4) for _ in range(sig.k2)]
    coords += [rng.randrange(8) for _ in range(sig.k3)]
    return word(sig, coords)


def random_subgroup(
    sig: GroupSignature,
    rng: random.Random,
    n_gens: int,
    max_order: int = 1 << 12,
) -> CodeGroup:
    while True:
        gens = [random_word(sig, rng) for _ in range(n_gens)]
        try:
            return CodeGroup.generate(gens, max_order=max_order)
        except Exception:
            continue


def all_words(sig: GroupSignature) -> List[GroupWord]:
    out = [word(sig, ())] if sig.l == 0 else []
    stack = [()]
    mods = [2] * sig.k1 + [4] * sig.k2 + [8] * sig.k3
    for m in mods:
        stack = [prefix + (v,) for prefix in stack for v in range(m)]
    return [word(sig, coords) for coords in stack]


@pytest.fixture(scope="session")
def pure_q8():
    return load_fixture("pure_q8_n8")


@pytest.fixture(scope="session")
def hadamard16():
    return load_fixture("hadamard16_q8")


@pytest.fixture(scope="session")
def shape5_32():
    return load_fixture("hadamard32_q8_shape5")


Q8 = GroupSignature(0, 0, 1)
Z4 = GroupSignature(0, 1, 0)


def q8_word(token: str) -> GroupWord:
    return word_from_tokens(Q8, (token,))


def z4_word(value: int) -> GroupWord:
    return word(Z4, (value,))
