"""Free-group words over the standard generators x_1, ..., x_2g of a surface group.

Words are immutable tuples of letters ``(index, sign)`` with 1-based indices.
Nothing here reduces automatically; call :func:`free_reduce` explicitly.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple


class WordParseError(ValueError):
    pass


class GeneratorRangeError(WordParseError):
    pass


class Letter(NamedTuple):
    index: int
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.index, -self.sign)


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __str__(self) -> str:
        return render(self)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Word":
        return cls(tuple(Letter(i, s) for i, s in pairs))


@dataclass(frozen=True)
class SurfaceContext:
    genus: int

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError(f"genus must be at least 2, got {self.genus}")

    @property
    def generator_count(self) -> int:
        return 2 * self.genus

    @property
    def relator(self) -> Word:
        """Product of [x_{2i-1}, x_{2i}] for i = 1..g."""
        w = Word()
        for i in range(1, self.genus + 1):
            w = concat(w, commutator_word(gen(2 * i - 1), gen(2 * i)))
        return w

    def check(self, w: Word) -> None:
        for letter in w:
            if not 1 <= letter.index <= self.generator_count:
                raise GeneratorRangeError(
                    f"generator x{letter.index} out of range for genus {self.genus}"
                )


def gen(i: int, sign: int = 1) -> Word:
    return Word((Letter(i, sign),))


def concat(u: Word, v: Word) -> Word:
    return Word(u.letters + v.letters)


def invert_word(w: Word) -> Word:
    return Word(tuple(Letter(l.index, -l.sign) for l in reversed(w.letters)))


def free_reduce(w: Word) -> Word:
    out: list[Letter] = []
    for letter in w.letters:
        if out and out[-1].index == letter.index and out[-1].sign == -letter.sign:
            out.pop()
        else:
            out.append(letter)
    return Word(tuple(out))


def word_power(w: Word, k: int) -> Word:
    base = w if k >= 0 else invert_word(w)
    return Word(base.letters * abs(k))


def commutator_word(u: Word, v: Word) -> Word:
    """[u, v] = u^-1 v^-1 u v."""
    return Word(invert_word(u).letters + invert_word(v).letters + u.letters + v.letters)


def render(w: Word) -> str:
    return " ".join(f"{'x' if l.sign > 0 else 'X'}{l.index}" for l in w.letters)


@dataclass(frozen=True)
class EndomorphismTable:
    """Images of generators; generators missing from ``images`` are fixed."""

    ctx: SurfaceContext
    images: Mapping[int, Word] = field(default_factory=dict)

    def __post_init__(self):
        for i, w in self.images.items():
            if not 1 <= i <= self.ctx.generator_count:
                raise GeneratorRangeError(f"table entry for x{i} out of range")
            self.ctx.check(w)

    def image(self, i: int) -> Word:
        return self.images.get(i, gen(i))

    def __hash__(self):
        return hash((self.ctx, tuple(sorted((i, w) for i, w in self.images.items()))))


def substitute(w: Word, table: EndomorphismTable) -> Word:
    out: list[Letter] = []
    inverses: dict[int, Word] = {}
    for letter in w.letters:
        if letter.sign > 0:
            out.extend(table.image(letter.index).letters)
        else:
            inv = inverses.get(letter.index)
            if inv is None:
                inv = inverses[letter.index] = invert_word(table.image(letter.index))
            out.extend(inv.letters)
    return Word(tuple(out))


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<gen>[xX])(?P<idx>\d+)|(?P<int>-?\d+)|(?P<name>[A-Za-z_]\w*)|(?P<sym>[\[\](),^]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            raise WordParseError(f"unexpected character {text[pos:].strip()[:1]!r} at {pos}")
        pos = match.end()
        if match.group("gen"):
            tokens.append(("gen", match.group("gen") + match.group("idx")))
        elif match.group("int") is not None:
            tokens.append(("int", match.group("int")))
        elif match.group("name"):
            tokens.append(("name", match.group("name")))
        else:
            tokens.append(("sym", match.group("sym")))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: SurfaceContext, keywords: Mapping[str, Word]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.ctx = ctx
        self.keywords = keywords

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "token"
            raise WordParseError(f"expected {want!r}, got {tok[1]!r}")
        self.pos += 1
        return tok

    def word(self) -> Word:
        letters: list[Letter] = []
        while True:
            kind, value = self.peek()
            if kind in ("gen", "name") or value in ("[", "("):
                letters.extend(self.factor().letters)
            else:
                return Word(tuple(letters))

    def factor(self) -> Word:
        atom = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            _, exponent = self.take("int")
            atom = word_power(atom, int(exponent))
        return atom

    def atom(self) -> Word:
        kind, value = self.take()
        if kind == "gen":
            index = int(value[1:])
            if not 1 <= index <= self.ctx.generator_count:
                raise GeneratorRangeError(
                    f"generator {value} out of range for genus {self.ctx.genus}"
                )
            return gen(index, 1 if value[0] == "x" else -1)
        if kind == "name":
            if value not in self.keywords:
                raise WordParseError(f"unknown name {value!r}")
            return self.keywords[value]
        if value == "[":
            u = self.word()
            self.take("sym", ",")
            v = self.word()
            self.take("sym", "]")
            return commutator_word(u, v)
        if value == "(":
            u = self.word()
            self.take("sym", ")")
            return u
        raise WordParseError(f"unexpected {value!r}")


def parse_word(text: str, ctx: SurfaceContext, keywords: Mapping[str, Word] | None = None) -> Word:
    """Parse the word grammar: ``x3``, ``X3``, ``w^k``, ``[u,v]``, ``(w)``.

    ``keywords`` maps bare names (e.g. ``relator``) to words.
    """
    parser = _Parser(text, ctx, keywords or {})
    w = parser.word()
    if parser.pos != len(parser.tokens):
        raise WordParseError(f"trailing input at {parser.peek()[1]!r}")
    return w
