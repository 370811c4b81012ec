"""Text form of braid words.

Tokens are separated by whitespace, which may also appear inside the
brackets of ``a[i, j]``; ``#`` starts a comment running to the end
of the line.

    s<k>        Artin sigma_k, or the crossing sigma_k of moving strands
    a<i>        loop generator a_i (mixed words only)
    a[<i>,<j>]  pure generator a_{ij} (mixed words only)

Any token may carry ``^-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple, Union

from services.braid_core import ArtinGen, BraidWord
from services.mixed_braid import (
    CrossGen,
    LoopGen,
    MixedContext,
    MixedGen,
    MixedLetterError,
    MixedWord,
    PureGen,
    check_letter,
)

_TOKEN_RE = re.compile(r"^(?:s(?P<s>\d+)|a(?P<a>\d+)|a\[\s*(?P<i>\d+)\s*,\s*(?P<j>\d+)\s*\])(?P<suffix>\^.*)?$")
_TOKEN_SPLIT_RE = re.compile(r"a\[[^\]]*\]\S*|\S+")
_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_INVERSE_MARK = "⁻¹"


class WordParseError(ValueError):
    """Raised for malformed word text; carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    column: int


def tokenize(text: str, first_line: int = 1) -> Iterator[Token]:
    for offset, raw in enumerate(text.splitlines()):
        line = raw.split("#", 1)[0]
        for match in _TOKEN_SPLIT_RE.finditer(line):
            yield Token(match.group(0), first_line + offset, match.start() + 1)


def _parse_token(token: Token) -> Tuple[str, Tuple[int, ...], int]:
    match = _TOKEN_RE.match(token.text)
    if not match:
        if token.text.startswith("a[") or token.text.startswith("a("):
            raise WordParseError(
                f"malformed pure generator {token.text!r}, expected the form a[i,j]",
                token.line,
                token.column,
            )
        raise WordParseError(f"unknown token {token.text!r}", token.line, token.column)
    suffix = match.group("suffix")
    if suffix is not None and suffix != "^-1":
        column = token.column + token.text.index("^")
        raise WordParseError(
            f"inverse suffix must be '^-1', got {suffix!r}", token.line, column
        )
    sign = -1 if suffix else 1
    if match.group("s") is not None:
        return "s", (int(match.group("s")),), sign
    if match.group("a") is not None:
        return "a", (int(match.group("a")),), sign
    return "pure", (int(match.group("i")), int(match.group("j"))), sign


def parse_word(
    text: str,
    strands: Optional[int] = None,
    ctx: Optional[MixedContext] = None,
) -> Union[BraidWord, MixedWord]:
    """Parse ``text`` as an Artin word on ``strands`` or a mixed word in ``ctx``."""
    if (strands is None) == (ctx is None):
        raise ValueError("Give exactly one of strands or ctx")

    if strands is not None:
        letters: List[ArtinGen] = []
        for token in tokenize(text):
            kind, values, sign = _parse_token(token)
            if kind != "s":
                raise WordParseError(
                    f"{token.text!r} needs a mixed context (--m/--n)", token.line, token.column
                )
            k = values[0]
            if not 1 <= k <= strands - 1:
                raise WordParseError(
                    f"s{k} is out of range for {strands} strands", token.line, token.column
                )
            letters.append(ArtinGen(k, sign))
        return BraidWord(strands, tuple(letters))

    assert ctx is not None
    mixed: List[MixedGen] = []
    for token in tokenize(text):
        kind, values, sign = _parse_token(token)
        if kind == "s":
            letter: MixedGen = CrossGen(values[0], sign)
        elif kind == "a":
            letter = LoopGen(values[0], sign)
        else:
            letter = PureGen(values[0], values[1], sign)
        try:
            check_letter(letter, ctx)
        except MixedLetterError as exc:
            raise WordParseError(str(exc), token.line, token.column) from exc
        mixed.append(letter)
    return MixedWord(ctx, tuple(mixed))


def parse_lines(
    text: str,
    strands: Optional[int] = None,
    ctx: Optional[MixedContext] = None,
) -> List[Union[BraidWord, MixedWord]]:
    """One word per non-blank, non-comment line."""
    words = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.split("#", 1)[0].strip():
            continue
        try:
            words.append(parse_word(line, strands=strands, ctx=ctx))
        except WordParseError as exc:
            raise WordParseError(exc.message, number, exc.column) from exc
    return words


# ----------------------------------------------------------------------
# Printing
# ----------------------------------------------------------------------
def _format_letter(letter: Union[ArtinGen, MixedGen], unicode: bool) -> str:
    if isinstance(letter, ArtinGen):
        name, indices = "s", (letter.index,)
    elif isinstance(letter, CrossGen):
        name, indices = "s", (letter.k,)
    elif isinstance(letter, LoopGen):
        name, indices = "a", (letter.i,)
    else:
        name, indices = "a", (letter.i, letter.j)

    if unicode:
        glyph = "σ" if name == "s" else "a"
        body = glyph + ",".join(str(x).translate(_SUBSCRIPTS) for x in indices)
        return body + (_INVERSE_MARK if letter.sign < 0 else "")

    if len(indices) == 2:
        body = f"a[{indices[0]},{indices[1]}]"
    else:
        body = f"{name}{indices[0]}"
    return body + ("^-1" if letter.sign < 0 else "")


def format_word(word: Union[BraidWord, MixedWord], unicode: bool = False) -> str:
    return " ".join(_format_letter(g, unicode) for g in word.letters)


def format_letters(letters: Iterable[MixedGen], unicode: bool = False) -> str:
    return " ".join(_format_letter(g, unicode) for g in letters)
