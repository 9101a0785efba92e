"""Subgroup closure and the structural subgroups T, Z, C', K."""

from __future__ import annotations

import random

import pytest

from z2z4q8 import (
    CodeGroup,
    EnumerationLimit,
    GroupSignature,
    center,
    code_type,
    commutator_subgroup,
    generate,
    group_kernel,
    identity,
    standard_generators,
    torsion,
    torsion_cosets,
    word,
    word_from_tokens,
)
from z2z4q8.fixtures import load_fixture
from z2z4q8.subgroup import verify_standard

from conftest import Q8, q8_word, random_subgroup

Q8_PAIR = GroupSignature(0, 0, 2)

# the eight elements of the pure code, frozen from the source listing
PURE_ELEMENTS = {
    ("1", "1"),
    ("a", "a"),
    ("a2", "a2"),
    ("a3", "a3"),
    ("ab", "b"),
    ("a2b", "ab"),
    ("a3b", "a2b"),
    ("b", "a3b"),
}


def test_enumerate_pure_code_exact_elements(pure_q8):
    assert pure_q8.order == 8
    assert {w.tokens() for w in pure_q8.elements} == PURE_ELEMENTS


def test_enumerate_trivial():
    C = generate([identity(Q8_PAIR)])
    assert C.order == 1


def test_enumerate_hadamard16(hadamard16):
    assert hadamard16.order == 32


def test_enumerate_signature_mismatch():
    with pytest.raises(ValueError):
        generate([identity(Q8_PAIR), identity(Q8)])


def test_enumerate_max_order():
    gens = [
        word_from_tokens(Q8_PAIR, ("a", "1")),
        word_from_tokens(Q8_PAIR, ("1", "a")),
        word_from_tokens(Q8_PAIR, ("b", "b")),
    ]
    with pytest.raises(EnumerationLimit) as err:
        generate(gens, max_order=8)
    assert "max_order=8" in str(err.value)


def test_torsion_of_pure_code(pure_q8):
    T = torsion(pure_q8)
    assert {w.tokens() for w in T.elements} == {("1", "1"), ("a2", "a2")}


def test_torsion_of_a2_subgroup():
    C = generate([q8_word("a2")])
    assert torsion(C) == C


def test_torsion_of_hadamard16(hadamard16):
    assert torsion(hadamard16).order == 4


def test_center_and_commutator_subgroup(pure_q8):
    assert center(pure_q8).order == 2
    assert {w.tokens() for w in commutator_subgroup(pure_q8).elements} == {
        ("1", "1"),
        ("a2", "a2"),
    }


def test_abelian_center_is_whole_group():
    sig = GroupSignature(1, 1, 0)
    C = generate([word(sig, (1, 1))])
    assert center(C) == C
    assert commutator_subgroup(C).order == 1


def test_hadamard16_center_equals_torsion(hadamard16):
    Z = center(hadamard16)
    T = torsion(hadamard16)
    assert Z.elements == T.elements
    assert Z.order == 4
    # Z(C) = T(C) = <a^2, c^2> with the listed generators
    a = word_from_tokens(hadamard16.sig, ("a", "a", "a", "a"))
    c = word_from_tokens(hadamard16.sig, ("a2", "1", "a", "a3"))
    assert generate([a * a, c * c]) == Z


def test_code_type_values(pure_q8, hadamard16, shape5_32):
    assert code_type(pure_q8).as_tuple() == (1, 0, 2)
    assert code_type(hadamard16).as_tuple() == (2, 0, 3)
    assert code_type(shape5_32).as_tuple() == (2, 0, 4)


def test_chain_of_subgroups(pure_q8, hadamard16):
    for C in (pure_q8, hadamard16):
        Cp = commutator_subgroup(C)
        T = torsion(C)
        Z = center(C)
        K = group_kernel(C)
        assert Cp.elements <= T.elements <= Z.elements <= K.elements <= C.elements


def test_standard_generators_elementary_abelian():
    sig = GroupSignature(3, 0, 0)
    C = generate([word(sig, (1, 0, 0)), word(sig, (0, 1, 0)), word(sig, (0, 0, 1))])
    gens = standard_generators(C)
    assert len(gens.xs) == 3 and not gens.ys and not gens.zs


def test_standard_generators_pure_code(pure_q8):
    gens = standard_generators(pure_q8)
    assert len(gens.xs) == 1 and len(gens.ys) == 0 and len(gens.zs) == 2
    assert gens.xs[0].tokens() == ("a2", "a2")
    for z in gens.zs:
        assert z.order() == 4
    verify_standard(pure_q8, gens)


def test_standard_generators_hadamard16(hadamard16):
    gens = standard_generators(hadamard16)
    assert (len(gens.xs), len(gens.ys), len(gens.zs)) == (2, 0, 3)
    verify_standard(hadamard16, gens)


def test_standard_generators_random_groups():
    rng = random.Random(101)
    for _ in range(40):
        sig = rng.choice(
            [GroupSignature(0, 0, 2), GroupSignature(1, 1, 1), GroupSignature(0, 2, 1)]
        )
        C = random_subgroup(sig, rng, rng.choice((1, 2, 3)))
        verify_standard(C, standard_generators(C))


def test_torsion_cosets_form_transversal(hadamard16):
    reps = torsion_cosets(hadamard16)
    T = torsion(hadamard16)
    assert len(reps) * T.order == hadamard16.order
    seen = set()
    for rep in reps:
        coset = frozenset((rep * t).coords for t in T.elements)
        assert coset not in seen
        seen.add(coset)


def test_group_kernel_of_hadamard16(hadamard16):
    K = group_kernel(hadamard16)
    assert K.elements == torsion(hadamard16).elements
    # generator-probe route agrees with the full quadratic scan
    assert group_kernel(hadamard16, full=True).elements == K.elements


def test_group_kernel_abelian_z4():
    C = load_fixture("hadamard8_z4")
    assert group_kernel(C) == C  # all swappers already lie in the group


def test_group_kernel_pure_code(pure_q8):
    assert group_kernel(pure_q8).order == 2


def test_power_of_two_validation():
    sig = GroupSignature(2, 0, 0)
    with pytest.raises(ValueError):
        CodeGroup(sig, frozenset({identity(sig), word(sig, (1, 0)), word(sig, (0, 1))}), ())
