"""Line-oriented generator files: `sig k1 k2 k3` then `gen t1 .. tl` lines."""

from __future__ import annotations

from typing import List, Optional, Tuple

from .groups import GroupSignature, GroupWord, parse_token


class ParseError(ValueError):
    """Parse failure with 1-based line and column position."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokenize(line: str) -> List[Tuple[str, int]]:
    """Tokens with their 1-based column, comments stripped."""
    if "#" in line:
        line = line[: line.index("#")]
    out = []
    col = 0
    for raw in line.split(" "):
        token = raw.strip()
        if token:
            out.append((token, col + 1))
        col += len(raw) + 1
    return out


def parse_generators(text: str) -> Tuple[GroupSignature, List[GroupWord]]:
    """Parse a generator file into its signature and generator words."""
    sig: Optional[GroupSignature] = None
    gens: List[GroupWord] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(line.replace("\t", " "))
        if not tokens:
            continue
        keyword, col0 = tokens[0]
        args = tokens[1:]
        if keyword == "sig":
            if sig is not None:
                raise ParseError("duplicate sig line", lineno, col0)
            if len(args) != 3:
                raise ParseError(
                    f"sig needs 3 counts, got {len(args)}", lineno, col0
                )
            counts = []
            for token, col in args:
                if not token.isdigit():
                    raise ParseError(f"invalid count {token!r}", lineno, col)
                counts.append(int(token))
            try:
                sig = GroupSignature(*counts)
            except ValueError as exc:
                raise ParseError(str(exc), lineno, col0) from exc
        elif keyword == "gen":
            if sig is None:
                raise ParseError("gen line before sig line", lineno, col0)
            if len(args) != sig.l:
                raise ParseError(
                    f"expected {sig.l} coordinate tokens, got {len(args)}",
                    lineno,
                    col0,
                )
            coords = []
            for index, (token, col) in enumerate(args):
                try:
                    coords.append(parse_token(sig, index, token))
                except ValueError as exc:
                    raise ParseError(str(exc), lineno, col) from exc
            gens.append(GroupWord(sig, tuple(coords)))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno, col0)
    if sig is None:
        raise ParseError("missing sig line", 1, 1)
    if not gens:
        raise ParseError("no gen lines", 1, 1)
    return sig, gens


def format_generators(
    sig: GroupSignature,
    words: List[GroupWord],
    comment: Optional[str] = None,
) -> str:
    """Render a generator file; parse(format(...)) round-trips."""
    lines = []
    if comment:
        lines.extend(f"# {line}" for line in comment.splitlines())
    lines.append(f"sig {sig.k1} {sig.k2} {sig.k3}")
    for w in words:
        if w.sig != sig:
            raise ValueError(f"word signature {w.sig} does not match {sig}")
        lines.append("gen " + " ".join(w.tokens()))
    return "\n".join(lines) + "\n"


def parse_element(text: str, sig: GroupSignature) -> GroupWord:
    """Parse one element literal: whitespace-separated coordinate tokens."""
    tokens = text.split()
    if len(tokens) != sig.l:
        raise ParseError(
            f"expected {sig.l} coordinate tokens, got {len(tokens)}", 1, 1
        )
    coords = []
    for index, token in enumerate(tokens):
        try:
            coords.append(parse_token(sig, index, token))
        except ValueError as exc:
            raise ParseError(str(exc), 1, index + 1) from exc
    return GroupWord(sig, tuple(coords))
