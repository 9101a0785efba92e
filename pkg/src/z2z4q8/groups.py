"""Exact arithmetic in direct products Z2^k1 x Z4^k2 x Q8^k3.

Words are immutable tuples of small integers, one entry per coordinate:
Z2 entries live in {0,1}, Z4 entries in {0..3}, and Q8 entries are encoded
as ``i + 4*j`` for the canonical form ``a^i b^j`` (i mod 4, j in {0,1}).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Tuple


class SignatureMismatch(ValueError):
    """Raised when two words from different ambient groups are combined."""


# ---------------------------------------------------------------------------
# Q8 arithmetic on the 8-value encoding a^i b^j  ->  i + 4*j
# ---------------------------------------------------------------------------

def _q8_mul(p: int, q: int) -> int:
    i1, j1 = p & 3, p >> 2
    i2, j2 = q & 3, q >> 2
    # (a^i1 b^j1)(a^i2 b^j2) = a^(i1 + (-1)^j1 i2 + 2 j1 j2) b^(j1+j2)
    i = (i1 + (i2 if j1 == 0 else -i2) + 2 * (j1 & j2)) % 4
    return i | ((j1 ^ j2) << 2)


Q8_MUL: Tuple[Tuple[int, ...], ...] = tuple(
    tuple(_q8_mul(p, q) for q in range(8)) for p in range(8)
)
Q8_INV: Tuple[int, ...] = tuple(
    next(q for q in range(8) if Q8_MUL[p][q] == 0) for p in range(8)
)
Q8_ORDER: Tuple[int, ...] = tuple(
    1 if p == 0 else (2 if Q8_MUL[p][p] == 0 else 4) for p in range(8)
)

_Z2_MUL = ((0, 1), (1, 0))
_Z4_MUL = tuple(tuple((x + y) % 4 for y in range(4)) for x in range(4))
_Z2_INV = (0, 1)
_Z4_INV = (0, 3, 2, 1)
_Z2_ORDER = (1, 2)
_Z4_ORDER = (1, 4, 2, 4)

Q8_TOKENS: Tuple[str, ...] = ("1", "a", "a2", "a3", "b", "ab", "a2b", "a3b")

_Q8_TOKEN_RE = re.compile(r"^(?:(?:a(?:\^?(\d+))?)?(?:b(?:\^?(\d+))?)?|1)$")


@dataclass(frozen=True)
class GroupSignature:
    """Shape of the ambient group: counts of Z2, Z4 and Q8 coordinates."""

    k1: int
    k2: int
    k3: int

    def __post_init__(self) -> None:
        if self.k1 < 0 or self.k2 < 0 or self.k3 < 0:
            raise ValueError(f"coordinate counts must be >= 0, got {self}")
        if self.l < 1:
            raise ValueError("signature must have at least one coordinate")

    @property
    def n(self) -> int:
        """Binary length of the Gray image."""
        return self.k1 + 2 * self.k2 + 4 * self.k3

    @property
    def l(self) -> int:
        """Number of coordinates."""
        return self.k1 + self.k2 + self.k3

    def kind(self, index: int) -> str:
        """Return 'z2', 'z4' or 'q8' for the 0-based coordinate index."""
        if index < self.k1:
            return "z2"
        if index < self.k1 + self.k2:
            return "z4"
        if index < self.l:
            return "q8"
        raise IndexError(f"coordinate {index} out of range for {self}")

    def doubled(self) -> "GroupSignature":
        return GroupSignature(2 * self.k1, 2 * self.k2, 2 * self.k3)

    def __str__(self) -> str:
        return f"Z2^{self.k1} x Z4^{self.k2} x Q8^{self.k3}"


@lru_cache(maxsize=None)
def _tables(sig: GroupSignature):
    """Per-coordinate (mul, inv, order, modulus) lookup tables."""
    mul = (_Z2_MUL,) * sig.k1 + (_Z4_MUL,) * sig.k2 + (Q8_MUL,) * sig.k3
    inv = (_Z2_INV,) * sig.k1 + (_Z4_INV,) * sig.k2 + (Q8_INV,) * sig.k3
    order = (_Z2_ORDER,) * sig.k1 + (_Z4_ORDER,) * sig.k2 + (Q8_ORDER,) * sig.k3
    mod = (2,) * sig.k1 + (4,) * sig.k2 + (8,) * sig.k3
    return mul, inv, order, mod


@dataclass(frozen=True, eq=True)
class GroupWord:
    """One element of Z2^k1 x Z4^k2 x Q8^k3."""

    sig: GroupSignature
    coords: Tuple[int, ...]

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        if self.sig != other.sig:
            raise SignatureMismatch(f"cannot multiply {self.sig} by {other.sig}")
        mul = _tables(self.sig)[0]
        return GroupWord(
            self.sig,
            tuple(t[x][y] for t, x, y in zip(mul, self.coords, other.coords)),
        )

    def inverse(self) -> "GroupWord":
        inv = _tables(self.sig)[1]
        return GroupWord(self.sig, tuple(t[x] for t, x in zip(inv, self.coords)))

    def __pow__(self, h: int) -> "GroupWord":
        # every coordinate group has exponent 4
        h %= 4
        result = identity(self.sig)
        for _ in range(h):
            result = result * self
        return result

    def order(self) -> int:
        orders = _tables(self.sig)[2]
        return max((t[x] for t, x in zip(orders, self.coords)), default=1)

    def is_identity(self) -> bool:
        return all(x == 0 for x in self.coords)

    def tokens(self) -> Tuple[str, ...]:
        """Canonical token per coordinate (Z2/Z4 digits, Q8 names)."""
        out = []
        for idx, value in enumerate(self.coords):
            if self.sig.kind(idx) == "q8":
                out.append(Q8_TOKENS[value])
            else:
                out.append(str(value))
        return tuple(out)

    def __str__(self) -> str:
        return "(" + " ".join(self.tokens()) + ")"


def word(sig: GroupSignature, coords: Iterable[int]) -> GroupWord:
    """Build a validated word from raw coordinate values."""
    values = tuple(coords)
    if len(values) != sig.l:
        raise ValueError(f"expected {sig.l} coordinates, got {len(values)}")
    mods = _tables(sig)[3]
    for idx, (v, m) in enumerate(zip(values, mods)):
        if not 0 <= v < m:
            raise ValueError(f"coordinate {idx + 1} value {v} out of range 0..{m - 1}")
    return GroupWord(sig, values)


def identity(sig: GroupSignature) -> GroupWord:
    return GroupWord(sig, (0,) * sig.l)


def u_element(sig: GroupSignature) -> GroupWord:
    """The unique word with the order-2 entry in every coordinate.

    Its Gray image is the all-one vector.
    """
    coords = (1,) * sig.k1 + (2,) * sig.k2 + (2,) * sig.k3
    return GroupWord(sig, coords)


def commutator(x: GroupWord, y: GroupWord) -> GroupWord:
    """(x, y) = x^-1 y^-1 x y."""
    if x.sig != y.sig:
        raise SignatureMismatch(f"cannot combine {x.sig} with {y.sig}")
    return x.inverse() * y.inverse() * x * y


def conjugate(x: GroupWord, y: GroupWord) -> GroupWord:
    """x^y = y^-1 x y."""
    if x.sig != y.sig:
        raise SignatureMismatch(f"cannot combine {x.sig} with {y.sig}")
    return y.inverse() * x * y


def parse_q8_token(token: str) -> int:
    """Parse a Q8 token, accepting non-canonical forms like 'b3' or 'a^2b'."""
    m = _Q8_TOKEN_RE.match(token)
    if m is None or token == "":
        raise ValueError(f"invalid Q8 token {token!r}")
    if token == "1":
        return 0
    has_a = token[0] == "a"
    i = int(m.group(1)) if m.group(1) else (1 if has_a else 0)
    has_b = "b" in token
    j = int(m.group(2)) if m.group(2) else (1 if has_b else 0)
    if not has_a:
        i = 0
    # b^2 = a^2 folds surplus b's into the a-exponent
    i = (i + 2 * (j // 2)) % 4
    return i | ((j % 2) << 2)


def parse_token(sig: GroupSignature, index: int, token: str) -> int:
    """Parse one coordinate token for the 0-based coordinate index."""
    kind = sig.kind(index)
    if kind == "q8":
        return parse_q8_token(token)
    if not token.isdigit():
        raise ValueError(f"invalid {kind} token {token!r}")
    value = int(token)
    limit = 2 if kind == "z2" else 4
    if value >= limit:
        raise ValueError(f"{kind} token {token!r} out of range 0..{limit - 1}")
    return value


def word_from_tokens(sig: GroupSignature, tokens: Sequence[str]) -> GroupWord:
    if len(tokens) != sig.l:
        raise ValueError(f"expected {sig.l} tokens, got {len(tokens)}")
    return GroupWord(sig, tuple(parse_token(sig, i, t) for i, t in enumerate(tokens)))
