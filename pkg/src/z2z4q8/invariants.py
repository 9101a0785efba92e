"""Swappers, binary span, rank, kernel, linearity and structural bounds."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Tuple

from .gf2 import Gf2Basis
from .gray import BinaryVector, gray, gray_inv
from .groups import GroupWord, SignatureMismatch, commutator
from .subgroup import (
    DEFAULT_MAX_ORDER,
    CodeGroup,
    CodeType,
    _closure_set,
    code_type,
    group_kernel,
    torsion,
    torsion_cosets,
)


def swapper(x: GroupWord, y: GroupWord) -> GroupWord:
    """[x, y]: the order-<=2 defect of additivity of the Gray map.

    Gray([x,y] * x * y) = Gray(x) + Gray(y).
    """
    if x.sig != y.sig:
        raise SignatureMismatch(f"cannot combine {x.sig} with {y.sig}")
    return gray_inv(gray(x) ^ gray(y) ^ gray(x * y), x.sig)


def span_group(C: CodeGroup, max_order: int = DEFAULT_MAX_ORDER) -> CodeGroup:
    """D = <C u S(C)>, whose Gray image is the binary linear span of C.

    Swappers factor through products ([xy,z] = [x,z][y,z] and symmetric),
    so generator-pair swappers already generate <S(C)>.
    """
    if "span" not in C._cache:
        gens = list(C.generators)
        extra = []
        for x in C.generators:
            for y in C.generators:
                s = swapper(x, y)
                if not s.is_identity():
                    extra.append(s)
        elems = _closure_set(set(C.elements), extra)
        if len(elems) > max_order:
            raise RuntimeError(f"span order {len(elems)} exceeds {max_order}")
        D = CodeGroup(C.sig, frozenset(elems), tuple(gens + extra))
        # dual route: the Gray image must equal the GF(2) row space of C
        basis = Gf2Basis(gray(w).bits for w in C.elements)
        if D.log2_order != basis.rank:
            raise RuntimeError(
                f"span group order 2^{D.log2_order} != GF(2) rank {basis.rank}"
            )
        if any(not basis.contains(gray(w).bits) for w in D.elements):
            raise RuntimeError("span group escapes the GF(2) row space")
        C._cache["span"] = D
    return C._cache["span"]


def rank(C: CodeGroup) -> int:
    """Binary rank of Gray(C); span-group and elimination routes must agree."""
    return span_group(C).log2_order


def binary_kernel(C: CodeGroup, full_space: bool = False) -> frozenset:
    """K(Gray(C)) = {z : Gray(C) + z = Gray(C)}, by translation test.

    Since the zero vector is a codeword the kernel is contained in the
    code, so only codewords are tested; ``full_space`` scans all of Z2^n
    (for n <= 16).  The result is checked against Gray(K(C)).
    """
    key = ("binary_kernel", full_space)
    if key not in C._cache:
        codewords = frozenset(gray(w).bits for w in C.elements)
        n = C.sig.n
        if full_space:
            if n > 16:
                raise ValueError(f"full-space kernel scan needs n <= 16, got n={n}")
            candidates = range(1 << n)
        else:
            candidates = sorted(codewords)
        members = frozenset(
            BinaryVector(n, z)
            for z in candidates
            if all((c ^ z) in codewords for c in codewords)
        )
        group_route = frozenset(gray(w) for w in group_kernel(C).elements)
        if members != group_route:
            raise RuntimeError(
                "translation-test kernel disagrees with the swapper kernel"
            )
        C._cache[key] = members
    return C._cache[key]


def kernel_dim(C: CodeGroup) -> int:
    size = len(binary_kernel(C))
    return size.bit_length() - 1


def is_linear(C: CodeGroup) -> bool:
    """Gray(C) closed under addition, i.e. rank == log2|C|."""
    basis = Gf2Basis(gray(w).bits for w in C.elements)
    return basis.rank == C.log2_order


def is_abelian(C: CodeGroup) -> bool:
    gens = C.generators
    return all(x * y == y * x for x in gens for y in gens)


def weight_distribution(C: CodeGroup) -> Dict[int, int]:
    return dict(sorted(Counter(gray(w).weight() for w in C.elements).items()))


@dataclass(frozen=True)
class BoundCheck:
    name: str
    lhs: int
    rhs: int
    ok: bool


@dataclass(frozen=True)
class BoundReport:
    checks: Tuple[BoundCheck, ...]

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> List[BoundCheck]:
        return [c for c in self.checks if not c.ok]

    def __add__(self, other: "BoundReport") -> "BoundReport":
        return BoundReport(self.checks + other.checks)


def _le(name: str, lhs: int, rhs: int) -> BoundCheck:
    return BoundCheck(name, lhs, rhs, lhs <= rhs)


def check_bounds(C: CodeGroup) -> BoundReport:
    """Evaluate the structural inequalities valid for every code group.

    A failed check indicates an arithmetic bug, not a property of the
    input: every inequality here is a theorem.
    """
    ct = code_type(C)
    sigma, delta, rho = ct.as_tuple()
    r = rank(C)
    k = kernel_dim(C)
    m = C.log2_order
    l = C.sig.l
    linear = is_linear(C)

    checks = [
        BoundCheck(
            "nonlinear => rank >= kernel_dim + 3",
            k + 3 if not linear else r,
            r,
            linear or k + 3 <= r,
        ),
        BoundCheck(
            "nonlinear => kernel_dim <= log2|C| - 2",
            k if not linear else 0,
            m - 2 if not linear else 0,
            linear or k <= m - 2,
        ),
        _le("delta <= sigma", delta, sigma),
        _le("sigma <= kernel_dim", sigma, k),
        _le("delta + min(1, rho) <= sigma", delta + min(1, rho), sigma),
        _le("rank <= log2|C| + C(log2|C| - k, 2)", r, m + comb(m - k, 2)),
        _le(
            "rank - (sigma+delta+rho) <= min(C(delta+rho, 2), l - sigma)",
            r - ct.total,
            min(comb(delta + rho, 2), l - sigma),
        ),
    ]
    checks.extend(_pairwise_checks(C))
    return BoundReport(tuple(checks))


def _pairwise_checks(C: CodeGroup) -> List[BoundCheck]:
    """Pair facts for a, b outside T(C), checked over T-coset representatives.

    Squares and commutators are constant on T-cosets, so scanning coset
    representatives is exhaustive.
    """
    reps = [w for w in torsion_cosets(C) if not (w * w).is_identity()]
    square_weight_bad = 0
    commuting_squares_bad = 0
    T = torsion(C)
    for a in reps:
        wa = gray(a * a).weight()
        for b in reps:
            c = commutator(a, b)
            if gray(c).weight() > wa:
                square_weight_bad += 1
            if c.is_identity() and (a * b) not in T and a * a == b * b:
                commuting_squares_bad += 1
    return [
        BoundCheck(
            "commutator weight <= square weight (pairs outside T)",
            square_weight_bad,
            0,
            square_weight_bad == 0,
        ),
        BoundCheck(
            "commuting pairs outside T with product outside T have distinct squares",
            commuting_squares_bad,
            0,
            commuting_squares_bad == 0,
        ),
    ]


@dataclass(frozen=True)
class StructureReport:
    """Full invariant summary of one code group."""

    type: CodeType
    m: Optional[int]  # length exponent when n is a power of two
    rank: int
    kernel_dim: int
    h: int
    is_linear: bool
    is_abelian: bool
    is_hadamard: bool
    weight_distribution: Dict[int, int]
    bounds: BoundReport


def structure_report(C: CodeGroup) -> StructureReport:
    from .hadamard import is_hadamard  # cycle: hadamard builds on invariants

    ct = code_type(C)
    r = rank(C)
    n = C.sig.n
    m = n.bit_length() - 1 if n & (n - 1) == 0 else None
    return StructureReport(
        type=ct,
        m=m,
        rank=r,
        kernel_dim=kernel_dim(C),
        h=r - ct.total,
        is_linear=is_linear(C),
        is_abelian=is_abelian(C),
        is_hadamard=is_hadamard(C),
        weight_distribution=weight_distribution(C),
        bounds=check_bounds(C),
    )
