"""Subgroup enumeration and structural subgroups T, Z, C', K.

A ``CodeGroup`` is a fully enumerated subgroup together with the generators
it was built from.  Structural queries are cached on the instance; element
iteration order is always lexicographic on the coordinate tuples so that
every derived choice (bases, generating sets, reports) is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from typing import Iterable, List, Optional, Sequence, Tuple

from .gf2 import Gf2Basis
from .gray import gray
from .groups import GroupSignature, GroupWord, commutator, identity

DEFAULT_MAX_ORDER = 1 << 20


class EnumerationLimit(RuntimeError):
    """Raised when a closure would exceed the configured maximum order."""


@dataclass(frozen=True)
class CodeType:
    """Group-structure fingerprint (sigma, delta, rho)."""

    sigma: int
    delta: int
    rho: int

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.sigma, self.delta, self.rho)

    @property
    def total(self) -> int:
        return self.sigma + self.delta + self.rho

    def __str__(self) -> str:
        return f"({self.sigma},{self.delta},{self.rho})"


@dataclass(frozen=True)
class StandardGenSet:
    """Generators x_1..x_sigma; y_1..y_delta; z_1..z_rho.

    The x's are a GF(2) basis of T(C); the y's lift a basis of Z(C)/T(C);
    the z's lift a basis of C/Z(C).  Every element factors uniquely as
    prod(x^alpha) * prod(y^beta) * prod(z^gamma) with 0/1 exponents.
    """

    xs: Tuple[GroupWord, ...]
    ys: Tuple[GroupWord, ...]
    zs: Tuple[GroupWord, ...]

    def all(self) -> Tuple[GroupWord, ...]:
        return self.xs + self.ys + self.zs


class CodeGroup:
    """Enumerated subgroup of Z2^k1 x Z4^k2 x Q8^k3."""

    def __init__(
        self,
        sig: GroupSignature,
        elements: frozenset,
        generators: Tuple[GroupWord, ...],
    ) -> None:
        self.sig = sig
        self.elements = elements
        self.generators = generators
        order = len(elements)
        if order == 0 or order & (order - 1):
            raise ValueError(f"subgroup order {order} is not a power of 2")
        self._sorted: Optional[List[GroupWord]] = None
        self._cache: dict = {}

    @classmethod
    def generate(
        cls,
        generators: Sequence[GroupWord],
        max_order: int = DEFAULT_MAX_ORDER,
    ) -> "CodeGroup":
        """Smallest subgroup containing the generators (worklist closure)."""
        gens = tuple(generators)
        if not gens:
            raise ValueError("at least one generator is required")
        sig = gens[0].sig
        for g in gens[1:]:
            if g.sig != sig:
                raise ValueError(f"inconsistent signatures {sig} and {g.sig}")
        seen = {identity(sig)}
        frontier = [identity(sig)]
        while frontier:
            element = frontier.pop()
            for g in gens:
                nxt = element * g
                if nxt not in seen:
                    if len(seen) >= max_order:
                        raise EnumerationLimit(
                            f"subgroup order exceeds max_order={max_order}"
                        )
                    seen.add(nxt)
                    frontier.append(nxt)
        return cls(sig, frozenset(seen), gens)

    # -- basic container behaviour ------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def log2_order(self) -> int:
        return self.order.bit_length() - 1

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, w: GroupWord) -> bool:
        return w in self.elements

    def __iter__(self):
        return iter(self.sorted_elements())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CodeGroup)
            and self.sig == other.sig
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.sig, self.elements))

    def sorted_elements(self) -> List[GroupWord]:
        if self._sorted is None:
            self._sorted = sorted(self.elements, key=lambda w: w.coords)
        return self._sorted

    def subgroup(self, elements: Iterable[GroupWord]) -> "CodeGroup":
        """Wrap an already-closed subset as a CodeGroup (with greedy gens)."""
        elems = frozenset(elements)
        gens = _greedy_generators(self.sig, elems)
        return CodeGroup(self.sig, elems, gens)


def _greedy_generators(
    sig: GroupSignature, elements: frozenset
) -> Tuple[GroupWord, ...]:
    gens: List[GroupWord] = []
    have = {identity(sig)}
    for w in sorted(elements, key=lambda e: e.coords):
        if w not in have:
            gens.append(w)
            have = _closure_set(have | {w}, gens)
            if len(have) == len(elements):
                break
    return tuple(gens) if gens else (identity(sig),)


def _closure_set(seed: set, gens: Sequence[GroupWord]) -> set:
    seen = set(seed)
    frontier = list(seed)
    while frontier:
        element = frontier.pop()
        for g in gens:
            nxt = element * g
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def generate(
    generators: Sequence[GroupWord], max_order: int = DEFAULT_MAX_ORDER
) -> CodeGroup:
    return CodeGroup.generate(generators, max_order)


def torsion(C: CodeGroup) -> CodeGroup:
    """T(C) = {z in C : z^2 = e}; elementary abelian and central."""
    if "torsion" not in C._cache:
        C._cache["torsion"] = C.subgroup(w for w in C.elements if (w * w).is_identity())
    return C._cache["torsion"]


def center(C: CodeGroup) -> CodeGroup:
    """Z(C), computed by testing commutation against the generators."""
    if "center" not in C._cache:
        gens = C.generators
        C._cache["center"] = C.subgroup(
            w for w in C.elements if all(w * g == g * w for g in gens)
        )
    return C._cache["center"]


def commutator_subgroup(C: CodeGroup) -> CodeGroup:
    """C' = <(x, y) : x, y in C>.

    Commutators are central of order <= 2 and biadditive in each slot, so
    generator pairs already generate C'.
    """
    if "commutator_subgroup" not in C._cache:
        gens = C.generators
        comms = [commutator(x, y) for x in gens for y in gens]
        elems = _closure_set({identity(C.sig)}, [c for c in comms if not c.is_identity()])
        C._cache["commutator_subgroup"] = C.subgroup(elems)
    return C._cache["commutator_subgroup"]


def code_type(C: CodeGroup) -> CodeType:
    sigma = torsion(C).log2_order
    delta = center(C).log2_order - sigma
    rho = C.log2_order - center(C).log2_order
    return CodeType(sigma, delta, rho)


def standard_generators(C: CodeGroup) -> StandardGenSet:
    """Deterministic standard generating set (first-independent-wins).

    Scans elements in sorted order: x's are picked to enlarge the GF(2)
    span of Gray(T(C)), y's to enlarge <T, ys> within Z(C), z's to enlarge
    <Z, zs> within C.  The unique-product property is verified.
    """
    if "std_gens" in C._cache:
        return C._cache["std_gens"]
    T = torsion(C)
    Z = center(C)

    xs: List[GroupWord] = []
    basis = Gf2Basis()
    for w in T.sorted_elements():
        if not w.is_identity() and basis.add(gray(w).bits):
            xs.append(w)
    if len(xs) != T.log2_order:
        raise RuntimeError("torsion basis extraction failed")

    ys: List[GroupWord] = []
    have = set(T.elements)
    for w in Z.sorted_elements():
        if w not in have:
            ys.append(w)
            have = _closure_set(have, [w])
            if len(have) == Z.order:
                break
    zs: List[GroupWord] = []
    have = set(Z.elements)
    for w in C.sorted_elements():
        if w not in have:
            zs.append(w)
            have = _closure_set(have, [w])
            if len(have) == C.order:
                break

    gens = StandardGenSet(tuple(xs), tuple(ys), tuple(zs))
    verify_standard(C, gens)
    C._cache["std_gens"] = gens
    return gens


def verify_standard(C: CodeGroup, gens: StandardGenSet) -> None:
    """Check the defining invariants of a standard generating set."""
    T = torsion(C)
    Z = center(C)
    ct = code_type(C)
    if (len(gens.xs), len(gens.ys), len(gens.zs)) != ct.as_tuple():
        raise ValueError(
            f"generator counts {len(gens.xs)},{len(gens.ys)},{len(gens.zs)} "
            f"do not match type {ct}"
        )
    if ct.sigma < ct.delta:
        raise RuntimeError(f"sigma < delta in type {ct}")
    for x in gens.xs:
        if x not in T:
            raise ValueError(f"x generator {x} not in T(C)")
    for y in gens.ys:
        if y not in Z or y.order() != 4:
            raise ValueError(f"y generator {y} not an order-4 central element")
    for z in gens.zs:
        if z in Z or z.order() != 4:
            raise ValueError(f"z generator {z} not an order-4 non-central element")
    seen = {}
    e = identity(C.sig)
    for exps in iter_product((0, 1), repeat=ct.total):
        w = e
        for g, a in zip(gens.all(), exps):
            if a:
                w = w * g
        if w in seen:
            raise ValueError(f"products {seen[w]} and {exps} collide at {w}")
        seen[w] = exps
        if w not in C:
            raise ValueError(f"product {w} escapes the group")
        in_t = all(a == 0 for a in exps[ct.sigma:])
        in_z = all(a == 0 for a in exps[ct.sigma + ct.delta:])
        if (w in T) != in_t or (w in Z) != in_z:
            raise ValueError(f"membership pattern violated at exponents {exps}")
    if len(seen) != C.order:
        raise ValueError("products do not exhaust the group")


def torsion_cosets(C: CodeGroup) -> List[GroupWord]:
    """Coset representatives of T(C) in C, in exponent order.

    Representative at index v (bits little-endian over ys+zs) is the product
    of the standard y/z generators selected by v; index 0 is the identity.
    """
    gens = standard_generators(C)
    reps = [identity(C.sig)]
    for g in gens.ys + gens.zs:
        reps += [r * g for r in reps]
    return reps


def group_kernel(C: CodeGroup, full: bool = False) -> CodeGroup:
    """K(C) = {x in C : the swapper [x, y] lies in C for every y in C}.

    Swappers are homomorphisms in each slot, so testing y over the
    generators suffices; ``full`` forces the |C|^2 cross-check.
    """
    key = ("kernel", full)
    if key not in C._cache:
        from .invariants import swapper

        probes = list(C.elements) if full else list(C.generators)
        members = [
            x for x in C.elements if all(swapper(x, y) in C for y in probes)
        ]
        K = C.subgroup(members)
        if not torsion(C).elements <= K.elements:
            raise RuntimeError("T(C) escaped K(C); swapper arithmetic is broken")
        C._cache[key] = K
    return C._cache[key]
