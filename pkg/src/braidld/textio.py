"""Text formats for free words, braid words and LD terms.

Free words:   ``x1 x2^3 x1^-1``   (``1`` or empty input for the identity;
              reduced on parse)
Braid words:  ``s1 s2^-1 s1``     (``1`` or empty input for the empty word;
              never reduced, no powers other than ``^-1``)
LD terms:     ``x*(x*x)``         (``*`` associates to the left)

Parse errors carry a :class:`SourceSpan` of UTF-8 byte offsets into the input.
"""

from __future__ import annotations

import os
import re
from typing import Callable, Iterable, NamedTuple, Union

from .artin import BraidLetter, BraidWord, _word
from .freeword import FreeWord, reduce
from .ldalg import LEAF, Leaf, LDTerm, Node


class SourceSpan(NamedTuple):
    start: int
    end: int


class ParseError(ValueError):
    def __init__(self, message: str, text: str, start: int, end: int):
        # start/end arrive as character offsets
        self.span = SourceSpan(len(text[:start].encode()), len(text[:end].encode()))
        self.text = text
        self.reason = message
        super().__init__(f"{message} at bytes {self.span.start}..{self.span.end}")

    def caret(self) -> str:
        """Two-line rendering of the input with the offending span underlined."""
        raw = self.text.encode()
        pre = raw[: self.span.start].decode(errors="replace")
        bad = raw[self.span.start : self.span.end].decode(errors="replace")
        return f"{self.text}\n{' ' * len(pre)}{'^' * max(1, len(bad))}"


_TOKEN = re.compile(r"\S+")
_FREE_FACTOR = re.compile(r"x([0-9]+)(?:\^([+-]?[0-9]+))?")
_BRAID_LETTER = re.compile(r"s([0-9]+)(\^(-?[0-9]+))?")


def _is_identity(text: str) -> bool:
    s = text.strip()
    return s == "" or s == "1"


def parse_free_word(text: str) -> FreeWord:
    if _is_identity(text):
        return FreeWord()
    raw = []
    for m in _TOKEN.finditer(text):
        tok = m.group()
        f = _FREE_FACTOR.fullmatch(tok)
        if f is None:
            raise ParseError(f"malformed factor {tok!r}", text, m.start(), m.end())
        index = int(f.group(1))
        if index == 0:
            raise ParseError("generator index must be >= 1", text, m.start(), m.end())
        exponent = 1 if f.group(2) is None else int(f.group(2))
        if exponent == 0:
            raise ParseError("exponent must be nonzero", text, m.start(), m.end())
        raw.append((index, exponent))
    return reduce(raw)


def parse_braid_word(text: str) -> BraidWord:
    if _is_identity(text):
        return BraidWord()
    letters = []
    for m in _TOKEN.finditer(text):
        tok = m.group()
        f = _BRAID_LETTER.fullmatch(tok)
        if f is None:
            raise ParseError(f"malformed braid letter {tok!r}", text, m.start(), m.end())
        index = int(f.group(1))
        if index == 0:
            raise ParseError("letter index must be >= 1", text, m.start(), m.end())
        if f.group(2) is not None and f.group(3) != "-1":
            raise ParseError(
                "only ^-1 is allowed; write powers out letter by letter",
                text,
                m.start(),
                m.end(),
            )
        letters.append(BraidLetter(index, -1 if f.group(2) else 1))
    return _word(tuple(letters))


class _TermParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> LDTerm:
        t = self._term()
        if self._peek():
            raise ParseError(f"unexpected {self._peek()!r}", self.text, self.pos, self.pos + 1)
        return t

    def _term(self) -> LDTerm:
        t = self._atom()
        while self._peek() == "*":
            self.pos += 1
            t = Node(t, self._atom())
        return t

    def _atom(self) -> LDTerm:
        c = self._peek()
        if c == "x":
            self.pos += 1
            return LEAF
        if c == "(":
            open_at = self.pos
            self.pos += 1
            t = self._term()
            if self._peek() != ")":
                if self._peek():
                    raise ParseError("expected ')'", self.text, self.pos, self.pos + 1)
                raise ParseError("unbalanced '('", self.text, open_at, open_at + 1)
            self.pos += 1
            return t
        if not c:
            raise ParseError("unexpected end of input", self.text, self.pos, self.pos)
        raise ParseError(f"unexpected {c!r}", self.text, self.pos, self.pos + 1)


def parse_ld_term(text: str) -> LDTerm:
    return _TermParser(text).parse()


def print_free_word(w: FreeWord) -> str:
    if not w.syllables:
        return "1"
    return " ".join(f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in w.syllables)


def print_braid_word(b: BraidWord) -> str:
    if not b.letters:
        return "1"
    return " ".join(f"s{i}" if e == 1 else f"s{i}^-1" for i, e in b.letters)


def print_ld_term(t: LDTerm) -> str:
    if isinstance(t, Leaf):
        return "x"
    right = print_ld_term(t.right)
    if isinstance(t.right, Node):
        right = f"({right})"
    return f"{print_ld_term(t.left)}*{right}"


PARSERS: dict[str, Callable[[str], object]] = {
    "free": parse_free_word,
    "braid": parse_braid_word,
    "term": parse_ld_term,
}


def read_fixture(source: Union[str, os.PathLike, Iterable[str]], kind: str) -> list:
    """Parse one value per line; ``#`` starts a comment, blank lines are skipped.

    ``source`` is a path or an iterable of lines.  Write the identity as ``1``.
    """
    parse = PARSERS[kind]
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    else:
        lines = list(source)
    values = []
    for line in lines:
        body = line.split("#", 1)[0]
        if body.strip():
            values.append(parse(body))
    return values
