"""Words in a free group: parsing, free and cyclic reduction, projection.

A word is a plain tuple of :class:`Letter`; nothing is reduced implicitly.

>>> w = parse_word("[a,b] b", {"a", "b"})
>>> format_word(w)
'a b a^-1 b^-1 b'
>>> format_word(free_reduce(w))
'a b a^-1'
>>> format_word(cyclic_reduce(w))
'b'
"""

from __future__ import annotations

import re
from collections.abc import Collection, Iterable
from functools import lru_cache
from typing import NamedTuple

from rgood.errors import ParseError, UnknownGeneratorError

IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<int>-?\d+)|(?P<sym>[\^()\[\],]))")


class Letter(NamedTuple):
    gen: str
    sign: int

    def inverse(self) -> Letter:
        return Letter(self.gen, -self.sign)

    def __str__(self) -> str:
        return self.gen if self.sign == 1 else f"{self.gen}^-1"


Word = tuple[Letter, ...]

EMPTY: Word = ()


def is_identifier(name: str) -> bool:
    return IDENTIFIER.fullmatch(name) is not None


def letter(gen: str, sign: int = 1) -> Letter:
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return Letter(gen, sign)


def word_from(pairs: Iterable[tuple[str, int]]) -> Word:
    """Build a word from ``(generator, exponent)`` pairs, expanding powers."""
    out: list[Letter] = []
    for gen, exp in pairs:
        sign = 1 if exp > 0 else -1
        out.extend([Letter(gen, sign)] * abs(exp))
    return tuple(out)


def invert(w: Word) -> Word:
    return tuple(x.inverse() for x in reversed(w))


def power(w: Word, n: int) -> Word:
    if n < 0:
        return invert(w) * -n
    return w * n


def commutator(x: Word, y: Word) -> Word:
    """``x y x^-1 y^-1``."""
    return x + y + invert(x) + invert(y)


def free_reduce(w: Word) -> Word:
    """Cancel adjacent inverse pairs until none remain (single stack pass)."""
    stack: list[Letter] = []
    for x in w:
        if stack and stack[-1].gen == x.gen and stack[-1].sign == -x.sign:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def is_reduced(w: Word) -> bool:
    return all(not (a.gen == b.gen and a.sign == -b.sign) for a, b in zip(w, w[1:]))


def cyclic_reduce(w: Word) -> Word:
    """Freely reduce, then strip matching inverse letters from both ends."""
    r = free_reduce(w)
    i, j = 0, len(r)
    while j - i >= 2 and r[i].gen == r[j - 1].gen and r[i].sign == -r[j - 1].sign:
        i += 1
        j -= 1
    return r[i:j]


def project(w: Word, keep: Collection[str]) -> Word:
    """Delete every letter whose generator is not in ``keep`` and freely reduce."""
    return free_reduce(tuple(x for x in w if x.gen in keep))


def project_to_pair(w: Word, keep: tuple[str, str] | frozenset[str]) -> Word:
    keep = frozenset(keep)
    if len(keep) != 2:
        raise ValueError("project_to_pair needs two distinct generators")
    return project(w, keep)


def exponent_sum(w: Word, gen: str) -> int:
    return sum(x.sign for x in w if x.gen == gen)


def occurrences(w: Word, gen: str) -> int:
    return sum(1 for x in w if x.gen == gen)


def generators_of(w: Word) -> set[str]:
    return {x.gen for x in w}


def cyclic_class_key(w: Word) -> Word:
    """Canonical representative of ``w`` up to rotation and inversion.

    Only meaningful for cyclically reduced input; two cyclically reduced words
    get the same key iff one is a rotation of the other or of its inverse.
    """
    if not w:
        return w
    candidates = []
    for v in (w, invert(w)):
        candidates.extend(v[i:] + v[:i] for i in range(len(v)))
    return min(candidates, key=lambda v: [(x.gen, x.sign) for x in v])


def proper_power_root(w: Word) -> tuple[Word, int] | None:
    """If the cyclic reduction of ``w`` is ``u^m`` with ``m >= 2``, return ``(u, m)``
    with ``m`` maximal; otherwise ``None``."""
    c = cyclic_reduce(w)
    n = len(c)
    for size in range(1, n // 2 + 1):
        if n % size == 0 and c[:size] * (n // size) == c:
            return c[:size], n // size
    return None


def format_word(w: Word) -> str:
    """Render in the parser's syntax, collapsing runs into powers; ``1`` is the empty word."""
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        exp = (j - i) * w[i].sign
        parts.append(w[i].gen if exp == 1 else f"{w[i].gen}^{exp}")
        i = j
    return " ".join(parts)


# -- parsing -----------------------------------------------------------------


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r} at offset {pos}")
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


def segment_identifier(run: str, alphabet: Collection[str]) -> list[str]:
    """Split an identifier run into declared generator names.

    Prefers the longest declared name at each position and backtracks when
    that choice leaves an unsplittable remainder.
    """
    names = frozenset(alphabet)
    lengths = sorted({len(g) for g in names}, reverse=True)

    @lru_cache(maxsize=None)
    def split(start: int) -> tuple[str, ...] | None:
        if start == len(run):
            return ()
        for n in lengths:
            piece = run[start : start + n]
            if len(piece) == n and piece in names:
                rest = split(start + n)
                if rest is not None:
                    return (piece,) + rest
        return None

    result = split(0)
    if result is None:
        raise UnknownGeneratorError(f"unknown generator {run!r}")
    return list(result)


class _WordParser:
    def __init__(self, text: str, alphabet: Collection[str]):
        self.text = text
        self.tokens = _tokenize(text)
        self.alphabet = alphabet
        self.i = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def expect(self, sym: str) -> None:
        tok = self.peek()
        if tok is None or tok[0] != "sym" or tok[1] != sym:
            where = "end of input" if tok is None else f"{tok[1]!r} at offset {tok[2]}"
            raise ParseError(f"expected {sym!r} but found {where} in {self.text!r}")
        self.i += 1

    def word(self) -> Word:
        out: list[Letter] = []
        while True:
            tok = self.peek()
            if tok is None or (tok[0] == "sym" and tok[1] in ")],"):
                return tuple(out)
            out.extend(self.term())

    def term(self) -> Word:
        head, last = self.atom()
        tok = self.peek()
        if tok is not None and tok[0] == "sym" and tok[1] == "^":
            self.i += 1
            tok = self.peek()
            if tok is None or tok[0] != "int":
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            self.i += 1
            return head + power(last, int(tok[1]))
        return head + last

    def atom(self) -> tuple[Word, Word]:
        # Returns (prefix, base): an exponent binds to ``base`` only, so that
        # "ab^2" with generators a, b reads as a b b.
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of input in {self.text!r}")
        kind, value, offset = tok
        self.i += 1
        if kind == "ident":
            names = segment_identifier(value, self.alphabet)
            return tuple(Letter(g, 1) for g in names[:-1]), (Letter(names[-1], 1),)
        if kind == "int" and value == "1":
            return EMPTY, EMPTY
        if kind == "sym" and value == "(":
            inner = self.word()
            self.expect(")")
            return EMPTY, inner
        if kind == "sym" and value == "[":
            x = self.word()
            self.expect(",")
            y = self.word()
            self.expect("]")
            return EMPTY, commutator(x, y)
        raise ParseError(f"unexpected {value!r} at offset {offset} in {self.text!r}")


def parse_word(text: str, alphabet: Collection[str]) -> Word:
    """Parse ``text`` into an unreduced word over ``alphabet``.

    Supports juxtaposition, ``g^n`` (``n`` may be negative or zero),
    parentheses, commutators ``[x,y] = x y x^-1 y^-1`` and ``1`` for the
    empty word.
    """
    parser = _WordParser(text, alphabet)
    w = parser.word()
    tok = parser.peek()
    if tok is not None:
        raise ParseError(f"unexpected {tok[1]!r} at offset {tok[2]} in {text!r}")
    return w
