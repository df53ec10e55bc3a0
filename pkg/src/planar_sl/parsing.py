"""Text format for open books, braids and instance files.

Grammar::

    openbook  := "r=" INT ";" (mletter)*
    mletter   := ("A" INT | "A{" INT "," INT "}") ("^" SINT)?
    braid     := "n=" INT ";" (bletter)*
    bletter   := ("s" INT | "r" INT) ("^" SINT)?

Letters are separated by whitespace, ``#`` starts a comment that runs to the
end of the line, and an instance file is an open book block followed by a
braid block, separated by a line holding only ``---``.

``A1^k`` is accepted and expanded on the spot (see
:func:`planar_sl.model.full_twist_expansion`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .model import (
    BoundaryTwist,
    BraidLetter,
    BraidWord,
    MonodromyLetter,
    OpenBook,
    PairTwist,
    Rho,
    Sigma,
    ValidationError,
    full_twist_expansion,
)

__all__ = [
    "ParseError",
    "Instance",
    "parse_open_book",
    "parse_braid",
    "parse_instance",
    "format_open_book",
    "format_braid",
    "format_instance",
]


class ParseError(ValueError):
    """Input that does not match the grammar."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_COMMENT = re.compile(r"#[^\n]*")
_WORD = re.compile(r"\S+")
_EXP = r"(?:\^(-?\d+))?"
_BOUNDARY = re.compile(r"A(\d+)" + _EXP)
_PAIR = re.compile(r"A\{(\d+),(\d+)\}" + _EXP)
_SIGMA = re.compile(r"s(\d+)" + _EXP)
_RHO = re.compile(r"r(\d+)" + _EXP)


class _Source:
    def __init__(self, text: str, first_line: int = 1):
        # blank out comments so offsets still map to the original text
        self.text = _COMMENT.sub(lambda m: " " * len(m.group()), text)
        self.first_line = first_line

    def position(self, offset: int) -> tuple[int, int]:
        before = self.text[:offset]
        line = before.count("\n")
        column = offset - (before.rfind("\n") + 1) + 1
        return self.first_line + line, column

    def syntax(self, message: str, offset: int) -> ParseError:
        return ParseError(message, *self.position(offset))

    def invalid(self, message: str, offset: int) -> ValidationError:
        line, column = self.position(offset)
        err = ValidationError(f"line {line}, column {column}: {message}")
        err.line, err.column = line, column
        return err

    def header(self, key: str) -> tuple[int, int]:
        """Match ``key=INT;`` and return (value, offset after the semicolon)."""
        m = re.compile(rf"\s*{key}\s*=\s*(\d+)\s*;").match(self.text)
        if not m:
            start = len(self.text) - len(self.text.lstrip())
            raise self.syntax(f"expected header '{key}=<int>;'", start)
        return int(m.group(1)), m.end()

    def words(self, start: int):
        for m in _WORD.finditer(self.text, start):
            yield m.group(), m.start()


def _exponent(src: _Source, raw: str | None, offset: int) -> int:
    if raw is None:
        return 1
    e = int(raw)
    if e == 0:
        raise src.invalid("zero exponent", offset)
    return e


def _parse_open_book(src: _Source) -> OpenBook:
    r, pos = src.header("r")
    if r < 1:
        raise src.invalid("r must be at least 1", 0)
    written: list[MonodromyLetter] = []
    for word, offset in src.words(pos):
        if m := _PAIR.fullmatch(word):
            i, j = int(m.group(1)), int(m.group(2))
            e = _exponent(src, m.group(3), offset)
            if not (2 <= i < j <= r):
                raise src.invalid(f"A{{{i},{j}}} needs 2 <= i < j <= r = {r}", offset)
            written.append(MonodromyLetter(PairTwist(i, j), e))
        elif m := _BOUNDARY.fullmatch(word):
            i = int(m.group(1))
            e = _exponent(src, m.group(2), offset)
            if i == 1:
                written.extend(full_twist_expansion(r, e))
            elif 2 <= i <= r:
                written.append(MonodromyLetter(BoundaryTwist(i), e))
            else:
                raise src.invalid(f"A{i} needs 1 <= i <= r = {r}", offset)
        else:
            raise src.syntax(f"unrecognized monodromy letter {word!r}", offset)
    return OpenBook.from_written(r, written)


def _parse_braid(src: _Source, r: int) -> BraidWord:
    n, pos = src.header("n")
    if n < 1:
        raise src.invalid("n must be at least 1", 0)
    letters: list[BraidLetter] = []
    for word, offset in src.words(pos):
        if m := _SIGMA.fullmatch(word):
            i = int(m.group(1))
            e = _exponent(src, m.group(2), offset)
            if not 1 <= i <= n - 1:
                raise src.invalid(f"s{i} needs 1 <= i <= n-1 = {n - 1}", offset)
            letters.append(BraidLetter(Sigma(i), e))
        elif m := _RHO.fullmatch(word):
            j = int(m.group(1))
            e = _exponent(src, m.group(2), offset)
            if not 2 <= j <= r:
                why = "no rho letters on the disk page" if r == 1 else f"needs 2 <= j <= r = {r}"
                raise src.invalid(f"r{j}: {why}", offset)
            letters.append(BraidLetter(Rho(j), e))
        else:
            raise src.syntax(f"unrecognized braid letter {word!r}", offset)
    return BraidWord(n, tuple(letters))


def parse_open_book(text: str) -> OpenBook:
    """Parse ``"r=3; A2^2 A{2,3}^-1"``; letters are stored in application order.

    >>> parse_open_book("r=3; A2^2 A{2,3}^-1").monodromy[0]
    MonodromyLetter(twist=PairTwist(i=2, j=3), exponent=-1)
    """
    return _parse_open_book(_Source(text))


def parse_braid(text: str, r: int) -> BraidWord:
    """Parse ``"n=2; s1^3"``; ``r`` bounds the admissible ``rho`` indices."""
    return _parse_braid(_Source(text), r)


@dataclass(frozen=True)
class Instance:
    open_book: OpenBook
    braid: BraidWord


def parse_instance(text: str) -> Instance:
    lines = text.splitlines(keepends=True)
    seps = [k for k, line in enumerate(lines) if line.strip() == "---"]
    if len(seps) != 1:
        where = seps[1] + 1 if seps else len(lines) or 1
        raise ParseError("instance needs exactly one '---' separator line", where, 1)
    k = seps[0]
    ob = _parse_open_book(_Source("".join(lines[:k])))
    braid = _parse_braid(_Source("".join(lines[k + 1:]), first_line=k + 2), ob.r)
    return Instance(ob, braid)


def format_open_book(ob: OpenBook) -> str:
    letters = " ".join(str(letter) for letter in ob.written)
    return f"r={ob.r};" + (f" {letters}" if letters else "")


def format_braid(b: BraidWord) -> str:
    letters = " ".join(str(letter) for letter in b.letters)
    return f"n={b.n};" + (f" {letters}" if letters else "")


def format_instance(inst: Instance) -> str:
    return f"{format_open_book(inst.open_book)}\n---\n{format_braid(inst.braid)}\n"
