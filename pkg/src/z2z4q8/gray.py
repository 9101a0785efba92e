"""Gray maps to Z2^n, Hamming weight/distance, and codeword permutations.

Binary vectors are packed little-endian into a Python int: coordinate 1 of
the vector is bit 0.  Printing puts coordinate 1 leftmost.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Tuple

from .groups import GroupSignature, GroupWord, u_element, word

# Gray images, packed little-endian within the coordinate block.
# Z4: 0->(0,0) 1->(0,1) 2->(1,1) 3->(1,0)
_Z4_GRAY = (0b00, 0b10, 0b11, 0b01)
# Q8: 1->(0,0,0,0) a->(0,1,0,1) a2->(1,1,1,1) a3->(1,0,1,0)
#     b->(0,1,1,0) ab->(1,1,0,0) a2b->(1,0,0,1) a3b->(0,0,1,1)
_Q8_GRAY = (0b0000, 0b1010, 0b1111, 0b0101, 0b0110, 0b0011, 0b1001, 0b1100)

_Z4_GRAY_INV = {bits: v for v, bits in enumerate(_Z4_GRAY)}
_Q8_GRAY_INV = {bits: v for v, bits in enumerate(_Q8_GRAY)}


@dataclass(frozen=True)
class BinaryVector:
    """Element of Z2^n with packed-int storage; equality is bitwise."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.bits >> self.n:
            raise ValueError(f"bits do not fit in length {self.n}")

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> "BinaryVector":
        packed = 0
        n = 0
        for v in values:
            if v not in (0, 1):
                raise ValueError(f"binary coordinate {v!r} not in {{0,1}}")
            packed |= v << n
            n += 1
        return cls(n, packed)

    @classmethod
    def from_string(cls, text: str) -> "BinaryVector":
        return cls.from_bits(int(c) for c in text.strip())

    def bit(self, index: int) -> int:
        """Coordinate value at 1-based position ``index``."""
        return (self.bits >> (index - 1)) & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def __xor__(self, other: "BinaryVector") -> "BinaryVector":
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} != {other.n}")
        return BinaryVector(self.n, self.bits ^ other.bits)

    __add__ = __xor__

    def complement(self) -> "BinaryVector":
        return BinaryVector(self.n, self.bits ^ ((1 << self.n) - 1))

    def __str__(self) -> str:
        return "".join(str((self.bits >> i) & 1) for i in range(self.n))


def weight(v: BinaryVector) -> int:
    return v.weight()


def distance(u: BinaryVector, v: BinaryVector) -> int:
    return (u ^ v).weight()


def complement(v: BinaryVector) -> BinaryVector:
    return v.complement()


@lru_cache(maxsize=None)
def _offsets(sig: GroupSignature) -> Tuple[Tuple[int, int], ...]:
    """(bit offset, bit width) of each coordinate block in the Gray image."""
    out = []
    pos = 0
    for idx in range(sig.l):
        width = {"z2": 1, "z4": 2, "q8": 4}[sig.kind(idx)]
        out.append((pos, width))
        pos += width
    return tuple(out)


def gray(w: GroupWord) -> BinaryVector:
    """Componentwise Gray map onto Z2^n."""
    sig = w.sig
    bits = 0
    for idx, ((pos, _), value) in enumerate(zip(_offsets(sig), w.coords)):
        kind = sig.kind(idx)
        if kind == "z2":
            block = value
        elif kind == "z4":
            block = _Z4_GRAY[value]
        else:
            block = _Q8_GRAY[value]
        bits |= block << pos
    return BinaryVector(sig.n, bits)


def gray_inv(v: BinaryVector, sig: GroupSignature) -> GroupWord:
    """Inverse Gray map on the image; requires v.n == sig.n.

    The map is injective but, when Q8 coordinates are present, not onto
    Z2^n; vectors outside the image are rejected.
    """
    if v.n != sig.n:
        raise ValueError(f"vector length {v.n} does not match signature n={sig.n}")
    coords = []
    for idx, (pos, width) in enumerate(_offsets(sig)):
        block = (v.bits >> pos) & ((1 << width) - 1)
        kind = sig.kind(idx)
        if kind == "z2":
            coords.append(block)
        elif kind == "z4":
            coords.append(_Z4_GRAY_INV[block])
        else:
            value = _Q8_GRAY_INV.get(block)
            if value is None:
                raise ValueError(
                    f"coordinate {idx + 1}: block {block:04b} is not a Gray "
                    f"image of a Q8 element"
                )
            coords.append(value)
    return word(sig, coords)


@dataclass(frozen=True)
class CoordinatePermutation:
    """Permutation of {1..n} stored as 0-based image array.

    Applied to a vector, the coordinate at position j moves to image[j]:
    (pi(v))_i = v_(pi^-1(i)).
    """

    image: Tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "CoordinatePermutation":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.image)

    def is_identity(self) -> bool:
        return all(i == j for j, i in enumerate(self.image))

    def apply(self, v: BinaryVector) -> BinaryVector:
        if v.n != self.n:
            raise ValueError(f"length mismatch: {v.n} != {self.n}")
        bits = 0
        rest = v.bits
        while rest:
            low = rest & -rest
            bits |= 1 << self.image[low.bit_length() - 1]
            rest ^= low
        return BinaryVector(self.n, bits)

    def compose(self, other: "CoordinatePermutation") -> "CoordinatePermutation":
        """self after other: (self.compose(other))(j) = self(other(j))."""
        if self.n != other.n:
            raise ValueError("cannot compose permutations of different lengths")
        return CoordinatePermutation(tuple(self.image[j] for j in other.image))


def pi_of(w: GroupWord) -> CoordinatePermutation:
    """The coordinate permutation associated to a word.

    Order-2 coordinates act as identity; an order-4 Z4 entry swaps its bit
    pair; an order-4 Q8 entry acts as one of three double transpositions,
    selected by which cyclic subgroup the entry generates.
    """
    sig = w.sig
    image = list(range(sig.n))
    for idx, ((pos, _), value) in enumerate(zip(_offsets(sig), w.coords)):
        kind = sig.kind(idx)
        if kind == "z4":
            if value in (1, 3):
                image[pos], image[pos + 1] = image[pos + 1], image[pos]
        elif kind == "q8":
            if value in (1, 3):  # a, a3
                pairs = ((0, 1), (2, 3))
            elif value in (4, 6):  # b, a2b
                pairs = ((0, 2), (1, 3))
            elif value in (5, 7):  # ab, a3b
                pairs = ((0, 3), (1, 2))
            else:
                continue
            for p, q in pairs:
                image[pos + p], image[pos + q] = image[pos + q], image[pos + p]
    return CoordinatePermutation(tuple(image))


def propelinear_product(w: GroupWord, v: BinaryVector) -> BinaryVector:
    """Left action of a codeword on Z2^n: Gray(w) + pi_w(v)."""
    return gray(w) ^ pi_of(w).apply(v)


def all_one(sig: GroupSignature) -> BinaryVector:
    return gray(u_element(sig))
