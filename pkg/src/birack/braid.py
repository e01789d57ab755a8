"""Braid words in generalised braid groups, and diagram-level quantities of
their closures: writhe, component count, turning number, colour.

Grammar (normative for the text form)::

    word      := { separator } { term { separator } }
    term      := atom [ "^" integer ]
    atom      := generator | "(" word ")" | "[" word "," word "]"
    generator := [ "-" ] tagletter index
    tagletter := "s" | "v" | "q"        s classical, v virtual, q singular
    index     := digits                 1-based position, crosses (i, i+1)
    integer   := [ "-" ] digits
    separator := whitespace | "·"

A ``-`` prefix on a generator is shorthand for exponent -1, and the bracket
``[A, B]`` expands to the commutator A^-1 B^-1 A B.  An exponent of zero
expands to nothing.  When the strand count is omitted it defaults to one
more than the largest generator index (so a bare word describes a knot on
the fewest strands that carry it).

Strand 1 is drawn at the bottom; the closure joins each right-hand strand
end back to the matching left-hand end.  By convention every closure strand
runs anticlockwise and counts +1 towards the turning number.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import InputError, ParseError
from .permutation import Permutation

TAG_LETTERS = ("s", "v", "q")


@dataclass(frozen=True)
class BraidGenerator:
    """One crossing: ``position`` crosses strands (position, position+1)."""

    position: int
    tag: str
    polarity: int

    def __post_init__(self):
        if self.position < 1:
            raise InputError(f"generator position must be >= 1, got {self.position}")
        if self.polarity not in (1, -1):
            raise InputError(f"polarity must be +1 or -1, got {self.polarity}")
        if not self.tag:
            raise InputError("generator tag must be non-empty")

    @property
    def inverse(self) -> BraidGenerator:
        return BraidGenerator(self.position, self.tag, -self.polarity)

    def __str__(self) -> str:
        sign = "-" if self.polarity < 0 else ""
        return f"{sign}{self.tag}{self.position}"


@dataclass(frozen=True)
class BraidWord:
    """A braid on ``strands`` strands as a fully expanded generator sequence."""

    strands: int
    gens: tuple[BraidGenerator, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise InputError(f"strand count must be >= 1, got {self.strands}")
        for g in self.gens:
            if g.position >= self.strands:
                raise InputError(
                    f"generator {g} needs strand {g.position + 1} "
                    f"but the word has only {self.strands} strands")

    @classmethod
    def parse(cls, text: str, strands: int | None = None) -> BraidWord:
        gens = _parse_word(text)
        if strands is None:
            strands = 1 + max((g.position for g in gens), default=0)
        return cls(strands, tuple(gens))

    def serialize(self) -> str:
        return " ".join(str(g) for g in self.gens)

    def __str__(self) -> str:
        return self.serialize()

    def __len__(self) -> int:
        return len(self.gens)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise InputError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.gens + other.gens)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(g.inverse for g in reversed(self.gens)))

    def conjugated_by(self, other: BraidWord) -> BraidWord:
        """other^-1 * self * other."""
        return other.inverse() * self * other

    def stabilized(self, count: int = 1, polarity: int = 1, tag: str = "s") -> BraidWord:
        """Append ``count`` stabilizations, each a new crossing on a fresh
        top strand."""
        if count < 0:
            raise InputError("stabilization count must be >= 0")
        gens = list(self.gens)
        for j in range(count):
            gens.append(BraidGenerator(self.strands + j, tag, polarity))
        return BraidWord(self.strands + count, tuple(gens))

    def tags_used(self) -> frozenset[str]:
        return frozenset(g.tag for g in self.gens)

    # -- diagram quantities of the closure ---------------------------------

    def writhe(self) -> int:
        """Signed crossing count over classical crossings only."""
        return sum(g.polarity for g in self.gens if g.tag == "s")

    @cached_property
    def strand_permutation(self) -> Permutation:
        """Sends each left-edge position to the right-edge position reached
        by the strand entering there.  Every generator contributes the
        transposition (i, i+1) regardless of tag and polarity."""
        where = list(range(self.strands + 1))  # where[i] = current position of strand entering at i
        at = list(range(self.strands + 1))     # at[p] = strand currently at position p
        for g in self.gens:
            i = g.position
            a, b = at[i], at[i + 1]
            at[i], at[i + 1] = b, a
            where[a], where[b] = i + 1, i
        return Permutation(tuple(where[1:]))

    def components(self) -> int:
        """Number of link components of the closure."""
        return self.strand_permutation.cycle_count()

    def turning_number(self, directions=None) -> int:
        """Total turning number of the closure.

        With the default all-anticlockwise closure each strand contributes
        +1.  ``directions`` may list one entry of +1/-1 per strand to close
        individual strands clockwise instead; each flip changes the result
        by two.
        """
        if directions is None:
            return self.strands
        directions = list(directions)
        if len(directions) != self.strands:
            raise InputError(
                f"direction vector has length {len(directions)}, expected {self.strands}")
        if any(d not in (1, -1) for d in directions):
            raise InputError("closure directions must be +1 or -1")
        return sum(directions)


def colour(writhe: int, turning_number: int) -> int:
    """Parity of writhe minus turning number: 0 even, 1 odd.

    For classical diagrams this equals the parity of the number of
    components of the closure.
    """
    return (writhe - turning_number) % 2


# -- parser ------------------------------------------------------------------

_SEPARATORS = " \t\r\n·"  # whitespace and the · separator


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, position=self.pos)

    def skip_separators(self):
        while self.pos < len(self.text) and self.text[self.pos] in _SEPARATORS:
            self.pos += 1

    def peek(self) -> str | None:
        self.skip_separators()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def expect(self, ch: str):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_separators()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        digits_start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_start:
            self.pos = start
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def word(self, stop: str) -> list[BraidGenerator]:
        gens: list[BraidGenerator] = []
        while True:
            ch = self.peek()
            if ch is None or ch in stop:
                return gens
            gens.extend(self.term())

    def term(self) -> list[BraidGenerator]:
        atom = self.atom()
        if self.peek() == "^":
            self.pos += 1
            exponent = self.integer()
            return _power(atom, exponent)
        return atom

    def atom(self) -> list[BraidGenerator]:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.word(stop=")")
            self.expect(")")
            return inner
        if ch == "[":
            self.pos += 1
            left = self.word(stop=",")
            self.expect(",")
            right = self.word(stop="]")
            self.expect("]")
            return _inverse(left) + _inverse(right) + left + right
        return [self.generator()]

    def generator(self) -> BraidGenerator:
        self.skip_separators()
        polarity = 1
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            polarity = -1
            self.pos += 1
        if self.pos >= len(self.text) or self.text[self.pos] not in TAG_LETTERS:
            raise self.error(f"expected a generator tag (one of {', '.join(TAG_LETTERS)})")
        tag = self.text[self.pos]
        self.pos += 1
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a generator index after the tag letter")
        index = int(self.text[start:self.pos])
        if index < 1:
            raise self.error("generator index must be >= 1")
        return BraidGenerator(index, tag, polarity)


def _inverse(gens: list[BraidGenerator]) -> list[BraidGenerator]:
    return [g.inverse for g in reversed(gens)]


def _power(gens: list[BraidGenerator], exponent: int) -> list[BraidGenerator]:
    if exponent >= 0:
        return gens * exponent
    return _inverse(gens) * (-exponent)


def _parse_word(text: str) -> list[BraidGenerator]:
    parser = _Parser(text)
    gens = parser.word(stop="")
    parser.skip_separators()
    if parser.pos < len(parser.text):
        raise parser.error(f"unexpected {parser.text[parser.pos]!r}")
    return gens


# -- built-in braid macros -----------------------------------------------------

_BIGELOW1_HALF_TWIST = "-s3 s2 s1^2 s2 s4^3 s3 s2"
_BIGELOW1_OTHER = "-s4 s3 s2 s1^-2 s2 s1^2 s2^2 s1 s4^5"
_BIGELOW2_HALF_TWIST = "s4 -s5 -s2 s1"
_BIGELOW2_OTHER = "-s4 s5^2 s2 s1^-2"

MACROS: dict[str, tuple[str, int | None]] = {
    "unknot": ("", 1),
    "trefoil": ("s1 s1 s1", 2),
    "fig8": ("s1 -s2 s1 -s2", 3),
    "unlink5": ("", 5),
    "unlink6": ("", 6),
    "bigelow1": (
        f"[({_BIGELOW1_HALF_TWIST})^-1 s4 ({_BIGELOW1_HALF_TWIST}), "
        f"({_BIGELOW1_OTHER})^-1 s4 s3 s2 s1^2 s2 s3 s4 ({_BIGELOW1_OTHER})]",
        5,
    ),
    "bigelow2": (
        f"[({_BIGELOW2_HALF_TWIST})^-1 s3 ({_BIGELOW2_HALF_TWIST}), "
        f"({_BIGELOW2_OTHER})^-1 s3 ({_BIGELOW2_OTHER})]",
        6,
    ),
}


def macro(name: str) -> BraidWord:
    """One of the built-in braid words: trefoil, fig8, unlink5, unlink6,
    bigelow1, bigelow2."""
    try:
        text, strands = MACROS[name]
    except KeyError:
        raise InputError(f"unknown braid macro {name!r} (choose from {', '.join(sorted(MACROS))})")
    return BraidWord.parse(text, strands=strands)
